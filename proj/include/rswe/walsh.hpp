#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Walsh transform over the Boolean cube {0,1}^m, indexed by integers in
// [0, 2^m): out[x] = sum_y v[y] * (-1)^popcount(x & y).
//
// The butterfly network applies strides 1, 2, 4, ..., 2^(m-1) in that order
// (the hot kernels finish the low strides block by block first). The stages
// commute, so this is the same linear map as the split-on-top-coordinate
// recursion.
namespace rswe::walsh {

enum class Mode {
    // Signed 64-bit integers. No overflow when every |v[y]| < 2^(62-m).
    Exact,
    // Residues modulo 2^m - 1 in [0, 2^m - 2]. Because 2^m = 1 here, the
    // transform is its own inverse.
    ModQminus1,
    // Residues modulo 2^(m+1) in [0, 2^(m+1) - 1]. After a double transform
    // the value is 2^m times the exact one, so bit m holds its parity.
    ModPow2,
};

struct WalshVector {
    Mode mode = Mode::Exact;
    unsigned m = 0;
    std::vector<std::int64_t> data;
};

// Infers m from the length; validates the residue range for the modular
// modes. Throws LengthNotPowerOfTwo or ValueOutOfRange.
WalshVector make_vector(Mode mode, std::vector<std::int64_t> data);

void fwht_in_place(WalshVector& v);
WalshVector fwht(WalshVector v);

// Applies the transform twice; requires ModQminus1 (throws WrongMode). The
// result equals the input.
WalshVector fwht_involution_check(const WalshVector& v);

// (a * b)(x) = sum_y a[y] b[x ^ y] mod 2^m - 1, via three transforms and no
// 1/q scaling. Throws WrongMode or LengthMismatch.
WalshVector dyadic_convolution_modq1(const WalshVector& a, const WalshVector& b);

// Buffer-level helpers used by the decoder. Modular residues live in uint32.
std::uint32_t mersenne_modulus(unsigned m);

// a[x] = a[x] * b[x] mod 2^m - 1, both inputs already reduced.
void mul_mod_mersenne(std::span<std::uint32_t> a, std::span<const std::uint32_t> b, unsigned m);

}  // namespace rswe::walsh
