#include "rswe/walsh.hpp"

#include <bit>
#include <string>

#include "rswe/error.hpp"
#include "rswe/kernels.hpp"

namespace rswe::walsh {
namespace {

unsigned checked_order(std::size_t n) {
    if (n == 0 || !std::has_single_bit(n))
        throw Error(Errc::LengthNotPowerOfTwo, "length " + std::to_string(n) + " is not a power of two");
    return static_cast<unsigned>(std::countr_zero(n));
}

std::int64_t residue_bound(Mode mode, unsigned m) {
    switch (mode) {
        case Mode::ModQminus1: return (std::int64_t{1} << m) - 1;
        case Mode::ModPow2: return std::int64_t{1} << (m + 1);
        case Mode::Exact: break;
    }
    return 0;
}

void validate(const WalshVector& v) {
    const unsigned m = checked_order(v.data.size());
    if (m != v.m) throw Error(Errc::LengthMismatch, "length does not equal 2^m for m=" + std::to_string(v.m));
    if (v.mode == Mode::Exact) return;
    if (v.mode == Mode::ModQminus1 && m == 0)
        throw Error(Errc::InvalidArgument, "modulus 2^m - 1 needs m >= 1");
    if (m > 30) throw Error(Errc::InvalidArgument, "modular transforms support m <= 30");
    const std::int64_t bound = residue_bound(v.mode, v.m);
    for (std::int64_t x : v.data)
        if (x < 0 || x >= bound) throw Error(Errc::ValueOutOfRange, "residue " + std::to_string(x) + " out of range");
}

void fwht_exact(std::vector<std::int64_t>& d) {
    const std::size_t n = d.size();
    for (std::size_t h = 1; h < n; h <<= 1)
        for (std::size_t i = 0; i < n; i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int64_t a = d[j];
                const std::int64_t b = d[j + h];
                d[j] = a + b;
                d[j + h] = a - b;
            }
}

std::vector<std::uint32_t> to_words(const std::vector<std::int64_t>& d) {
    return {d.begin(), d.end()};
}

void from_words(const std::vector<std::uint32_t>& w, std::vector<std::int64_t>& d, std::uint32_t mask) {
    for (std::size_t i = 0; i < w.size(); ++i) d[i] = static_cast<std::int64_t>(w[i] & mask);
}

}  // namespace

std::uint32_t mersenne_modulus(unsigned m) { return (std::uint32_t{1} << m) - 1; }

WalshVector make_vector(Mode mode, std::vector<std::int64_t> data) {
    WalshVector v{mode, checked_order(data.size()), std::move(data)};
    validate(v);
    return v;
}

void fwht_in_place(WalshVector& v) {
    validate(v);
    switch (v.mode) {
        case Mode::Exact:
            fwht_exact(v.data);
            return;
        case Mode::ModQminus1: {
            auto w = to_words(v.data);
            kernels::fwht_mod(w, mersenne_modulus(v.m));
            from_words(w, v.data, ~std::uint32_t{0});
            return;
        }
        case Mode::ModPow2: {
            auto w = to_words(v.data);
            kernels::fwht_wrap(w);
            from_words(w, v.data, (std::uint32_t{2} << v.m) - 1);
            return;
        }
    }
}

WalshVector fwht(WalshVector v) {
    fwht_in_place(v);
    return v;
}

WalshVector fwht_involution_check(const WalshVector& v) {
    if (v.mode != Mode::ModQminus1) throw Error(Errc::WrongMode, "involution holds only modulo q-1");
    return fwht(fwht(v));
}

WalshVector dyadic_convolution_modq1(const WalshVector& a, const WalshVector& b) {
    if (a.mode != Mode::ModQminus1 || b.mode != Mode::ModQminus1)
        throw Error(Errc::WrongMode, "dyadic convolution expects ModQminus1 operands");
    if (a.data.size() != b.data.size() || a.m != b.m)
        throw Error(Errc::LengthMismatch, "operand lengths differ");
    validate(a);
    validate(b);

    const std::uint32_t mod = mersenne_modulus(a.m);
    auto wa = to_words(a.data);
    auto wb = to_words(b.data);
    kernels::fwht_mod(wa, mod);
    kernels::fwht_mod(wb, mod);
    mul_mod_mersenne(wa, wb, a.m);
    kernels::fwht_mod(wa, mod);

    WalshVector out{Mode::ModQminus1, a.m, std::vector<std::int64_t>(wa.size())};
    from_words(wa, out.data, ~std::uint32_t{0});
    return out;
}

void mul_mod_mersenne(std::span<std::uint32_t> a, std::span<const std::uint32_t> b, unsigned m) {
    const std::uint64_t mod = mersenne_modulus(m);
    for (std::size_t x = 0; x < a.size(); ++x) {
        std::uint64_t p = std::uint64_t{a[x]} * b[x];
        p = (p & mod) + (p >> m);
        p = (p & mod) + (p >> m);
        if (p >= mod) p -= mod;
        a[x] = static_cast<std::uint32_t>(p);
    }
}

}  // namespace rswe::walsh
