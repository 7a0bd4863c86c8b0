#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rswe::gf {

// A field element of GF(2^m), m <= 20, stored in the low m bits. Bit i is
// the coefficient of alpha^i in the polynomial basis, so ascending integer
// order is the lexicographic point order used throughout the decoder.
using Element = std::uint32_t;

inline constexpr unsigned kMinDegree = 2;
inline constexpr unsigned kMaxDegree = 20;

// Log/antilog tables for GF(2^m) with alpha = x (the residue 2).
//
// exp has q-1 entries, exp[i] = alpha^i. log has q entries with the
// extension log[0] = 0, which makes log usable directly as the image vector
// of the discrete logarithm over every point of the field.
struct FieldTables {
    unsigned m = 0;
    std::uint32_t q = 0;
    std::uint32_t poly = 0;
    std::vector<Element> exp;
    std::vector<std::uint32_t> log;

    std::uint32_t order() const noexcept { return q - 1; }
    std::span<const std::uint32_t> logL() const noexcept { return log; }

    bool same_field(const FieldTables& other) const noexcept {
        return m == other.m && poly == other.poly;
    }
};

// Default primitive polynomial for degree m. A fixed constant for the common
// degrees; for the others, the lowest-weight polynomial (trinomials first,
// then pentanomials) whose root has full multiplicative order.
std::uint32_t default_polynomial(unsigned m);

// Builds the tables by repeated multiplication by alpha. Throws
// Errc::BadDegree if poly does not have degree m, Errc::NotPrimitive if the
// alpha-orbit closes before q-1 steps, Errc::InvalidArgument if m is outside
// [2, 20].
FieldTables build_field(unsigned m, std::optional<std::uint32_t> poly = std::nullopt);

inline Element mul(Element a, Element b, const FieldTables& t) noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = t.log[a] + t.log[b];
    if (e >= t.order()) e -= t.order();
    return t.exp[e];
}

// Zero maps to zero.
inline Element inv(Element a, const FieldTables& t) noexcept {
    if (a == 0) return 0;
    std::uint32_t l = t.log[a];
    return t.exp[l == 0 ? 0 : t.order() - l];
}

inline Element div(Element a, Element b, const FieldTables& t) noexcept {
    return mul(a, inv(b, t), t);
}

// alpha^e for any non-negative exponent.
inline Element pow_alpha(std::uint64_t e, const FieldTables& t) noexcept {
    return t.exp[e % t.order()];
}

// Shift-and-add multiplication reduced by t.poly, independent of the tables.
Element mul_slow(Element a, Element b, const FieldTables& t) noexcept;

}  // namespace rswe::gf
