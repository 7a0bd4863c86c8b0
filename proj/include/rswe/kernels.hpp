#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Data-parallel inner loops of the decoder. Each kernel has a scalar
// reference version and, where the CPU allows it, a vectorized variant with
// bit-identical results. active() picks the widest variant the running CPU
// supports; the tests compare every variant against scalar().
namespace rswe::kernels {

struct KernelTable {
    const char* name;

    // In-place Walsh butterfly network on n = 2^k words, arithmetic modulo
    // 2^32 (wrapping). Strides are applied smallest first.
    void (*fwht_wrap)(std::uint32_t* data, std::size_t n);

    // Same network with residues modulo `mod`; inputs and outputs lie in
    // [0, mod). Requires 1 <= mod < 2^31.
    void (*fwht_mod)(std::uint32_t* data, std::size_t n, std::uint32_t mod);

    // For s in [0, 2m-1) and x in [0, n):
    //   acc_s[x] = sum_{i+j=s} chat_i[x] * ihat_j[x]  (mod 2^32)
    // Plane p of each operand starts at base + p * stride.
    void (*plane_products)(std::uint32_t* acc, const std::uint32_t* chat, const std::uint32_t* ihat, unsigned m,
                           std::size_t stride, std::size_t n);

    // out[x] ^= value if bit `bit` of v[x] is set
    void (*parity_select_xor)(std::uint32_t* out, const std::uint32_t* v, std::size_t n, unsigned bit,
                              std::uint32_t value);

    // plane[x] = (src[x] >> bit) & 1
    void (*bit_plane)(std::uint32_t* plane, const std::uint32_t* src, std::size_t n, unsigned bit);

    // 16-bit lanes, arithmetic modulo 2^16. Same contracts as above.
    void (*fwht_wrap16)(std::uint16_t* data, std::size_t n);
    void (*plane_products16)(std::uint16_t* acc, const std::uint16_t* chat, const std::uint16_t* ihat, unsigned m,
                             std::size_t stride, std::size_t n);
    void (*parity_select_xor16)(std::uint32_t* out, const std::uint16_t* v, std::size_t n, unsigned bit,
                                std::uint32_t value);
    void (*bit_plane16)(std::uint16_t* plane, const std::uint32_t* src, std::size_t n, unsigned bit);
};

const KernelTable& scalar() noexcept;

// nullptr when the variant is not compiled in or the CPU lacks the feature.
const KernelTable* avx2() noexcept;

const KernelTable& active() noexcept;

// Span front-ends over active().
void fwht_wrap(std::span<std::uint32_t> data);
void fwht_mod(std::span<std::uint32_t> data, std::uint32_t mod);
void plane_products(std::span<std::uint32_t> acc, std::span<const std::uint32_t> chat,
                    std::span<const std::uint32_t> ihat, unsigned m, std::size_t stride, std::size_t n);
void parity_select_xor(std::span<std::uint32_t> out, std::span<const std::uint32_t> v, unsigned bit,
                       std::uint32_t value);
void bit_plane(std::span<std::uint32_t> plane, std::span<const std::uint32_t> src, unsigned bit);

void fwht_wrap(std::span<std::uint16_t> data);
void plane_products(std::span<std::uint16_t> acc, std::span<const std::uint16_t> chat,
                    std::span<const std::uint16_t> ihat, unsigned m, std::size_t stride, std::size_t n);
void parity_select_xor(std::span<std::uint32_t> out, std::span<const std::uint16_t> v, unsigned bit,
                       std::uint32_t value);
void bit_plane(std::span<std::uint16_t> plane, std::span<const std::uint32_t> src, unsigned bit);

}  // namespace rswe::kernels
