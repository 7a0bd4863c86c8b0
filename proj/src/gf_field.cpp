#include "rswe/gf_field.hpp"

#include <array>
#include <bit>
#include <mutex>
#include <string>

#include "rswe/error.hpp"

namespace rswe::gf {
namespace {

// Walks the alpha-orbit; returns the multiplicative order of x modulo poly.
std::uint32_t alpha_order(unsigned m, std::uint32_t poly) {
    const std::uint32_t q = 1u << m;
    std::uint32_t v = 1;
    for (std::uint32_t i = 1; i < q; ++i) {
        v <<= 1;
        if (v & q) v ^= poly;
        if (v == 1) return i;
        if (v == 0) return 0;
    }
    return 0;
}

bool is_primitive(unsigned m, std::uint32_t poly) {
    return alpha_order(m, poly) == (1u << m) - 1;
}

std::uint32_t search_polynomial(unsigned m) {
    const std::uint32_t top = (1u << m) | 1u;
    for (unsigned a = 1; a < m; ++a) {
        std::uint32_t p = top | (1u << a);
        if (is_primitive(m, p)) return p;
    }
    for (unsigned a = 1; a < m; ++a)
        for (unsigned b = a + 1; b < m; ++b)
            for (unsigned c = b + 1; c < m; ++c) {
                std::uint32_t p = top | (1u << a) | (1u << b) | (1u << c);
                if (is_primitive(m, p)) return p;
            }
    throw Error(Errc::NotPrimitive, "no primitive polynomial of weight <= 5 for m=" + std::to_string(m));
}

}  // namespace

std::uint32_t default_polynomial(unsigned m) {
    switch (m) {
        case 2: return 0x7;
        case 3: return 0xB;
        case 4: return 0x13;
        case 8: return 0x11D;
        case 16: return 0x1100B;
        case 20: return 0x100009;
        default: break;
    }
    if (m < kMinDegree || m > kMaxDegree)
        throw Error(Errc::InvalidArgument, "field degree must be in [2, 20], got " + std::to_string(m));

    static std::mutex lock;
    static std::array<std::uint32_t, kMaxDegree + 1> found{};
    std::lock_guard guard(lock);
    if (found[m] == 0) found[m] = search_polynomial(m);
    return found[m];
}

FieldTables build_field(unsigned m, std::optional<std::uint32_t> poly) {
    if (m < kMinDegree || m > kMaxDegree)
        throw Error(Errc::InvalidArgument, "field degree must be in [2, 20], got " + std::to_string(m));
    const std::uint32_t p = poly.value_or(default_polynomial(m));
    if (p == 0 || static_cast<unsigned>(std::bit_width(p)) != m + 1)
        throw Error(Errc::BadDegree, "polynomial degree differs from m=" + std::to_string(m));

    FieldTables t;
    t.m = m;
    t.q = 1u << m;
    t.poly = p;
    t.exp.resize(t.q - 1);
    t.log.assign(t.q, 0);

    Element v = 1;
    for (std::uint32_t i = 0; i < t.q - 1; ++i) {
        if (i > 0 && v == 1)
            throw Error(Errc::NotPrimitive, "alpha has order " + std::to_string(i) + " < q-1");
        t.exp[i] = v;
        t.log[v] = i;
        v <<= 1;
        if (v & t.q) v ^= p;
    }
    if (v != 1) throw Error(Errc::NotPrimitive, "polynomial is reducible");
    t.log[0] = 0;
    return t;
}

Element mul_slow(Element a, Element b, const FieldTables& t) noexcept {
    Element acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & t.q) a ^= t.poly;
    }
    return acc;
}

}  // namespace rswe::gf
