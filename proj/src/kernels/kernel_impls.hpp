#pragma once

#include <cstddef>
#include <cstdint>

namespace rswe::kernels::detail {

void fwht_wrap_scalar(std::uint32_t* data, std::size_t n);
void fwht_mod_scalar(std::uint32_t* data, std::size_t n, std::uint32_t mod);
void plane_products_scalar(std::uint32_t* acc, const std::uint32_t* chat, const std::uint32_t* ihat, unsigned m,
                           std::size_t stride, std::size_t n);
void parity_select_xor_scalar(std::uint32_t* out, const std::uint32_t* v, std::size_t n, unsigned bit,
                              std::uint32_t value);
void bit_plane_scalar(std::uint32_t* plane, const std::uint32_t* src, std::size_t n, unsigned bit);
void fwht_wrap16_scalar(std::uint16_t* data, std::size_t n);
void plane_products16_scalar(std::uint16_t* acc, const std::uint16_t* chat, const std::uint16_t* ihat, unsigned m,
                             std::size_t stride, std::size_t n);
void parity_select_xor16_scalar(std::uint32_t* out, const std::uint16_t* v, std::size_t n, unsigned bit,
                                std::uint32_t value);
void bit_plane16_scalar(std::uint16_t* plane, const std::uint32_t* src, std::size_t n, unsigned bit);

#if defined(RSWE_HAVE_AVX2)
void fwht_wrap_avx2(std::uint32_t* data, std::size_t n);
void fwht_mod_avx2(std::uint32_t* data, std::size_t n, std::uint32_t mod);
void plane_products_avx2(std::uint32_t* acc, const std::uint32_t* chat, const std::uint32_t* ihat, unsigned m,
                         std::size_t stride, std::size_t n);
void parity_select_xor_avx2(std::uint32_t* out, const std::uint32_t* v, std::size_t n, unsigned bit,
                            std::uint32_t value);
void bit_plane_avx2(std::uint32_t* plane, const std::uint32_t* src, std::size_t n, unsigned bit);
void fwht_wrap16_avx2(std::uint16_t* data, std::size_t n);
void plane_products16_avx2(std::uint16_t* acc, const std::uint16_t* chat, const std::uint16_t* ihat, unsigned m,
                           std::size_t stride, std::size_t n);
void parity_select_xor16_avx2(std::uint32_t* out, const std::uint16_t* v, std::size_t n, unsigned bit,
                              std::uint32_t value);
void bit_plane16_avx2(std::uint16_t* plane, const std::uint32_t* src, std::size_t n, unsigned bit);
#endif

}  // namespace rswe::kernels::detail
