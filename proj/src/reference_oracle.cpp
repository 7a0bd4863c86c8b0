#include "rswe/reference_oracle.hpp"

#include <bit>
#include <string>

#include "rswe/error.hpp"

namespace rswe::oracle {

Element naive_interpolate_eval(std::span<const std::uint32_t> points, std::span<const Element> values,
                               std::uint32_t x, const FieldTables& t) {
    if (points.size() != values.size()) throw Error(Errc::BadLength, "points and values differ in length");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw Error(Errc::DuplicatePoint, "point " + std::to_string(points[i]) + " repeated");

    Element acc = 0;
    for (std::size_t u = 0; u < points.size(); ++u) {
        Element num = values[u];
        Element den = 1;
        for (std::size_t y = 0; y < points.size(); ++y) {
            if (y == u) continue;
            num = gf::mul(num, x ^ points[y], t);
            den = gf::mul(den, points[u] ^ points[y], t);
        }
        acc ^= gf::div(num, den, t);
    }
    return acc;
}

std::vector<std::int64_t> naive_walsh(std::span<const std::int64_t> v) {
    if (v.empty() || !std::has_single_bit(v.size()))
        throw Error(Errc::LengthNotPowerOfTwo, "length " + std::to_string(v.size()) + " is not a power of two");
    std::vector<std::int64_t> out(v.size(), 0);
    for (std::size_t x = 0; x < v.size(); ++x)
        for (std::size_t y = 0; y < v.size(); ++y)
            out[x] += (std::popcount(x & y) & 1) ? -v[y] : v[y];
    return out;
}

std::vector<Element> naive_encode(std::span<const Element> coeffs, const FieldTables& t) {
    std::vector<Element> out(t.q, 0);
    for (std::uint32_t x = 0; x < t.q; ++x) {
        Element acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = gf::mul(acc, x, t) ^ *it;
        out[x] = acc;
    }
    return out;
}

}  // namespace rswe::oracle
