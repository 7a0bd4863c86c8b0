#include <cassert>

#include "kernel_impls.hpp"
#include "rswe/kernels.hpp"

namespace rswe::kernels {
namespace {

constexpr KernelTable kScalar{
    "scalar",
    detail::fwht_wrap_scalar,
    detail::fwht_mod_scalar,
    detail::plane_products_scalar,
    detail::parity_select_xor_scalar,
    detail::bit_plane_scalar,
    detail::fwht_wrap16_scalar,
    detail::plane_products16_scalar,
    detail::parity_select_xor16_scalar,
    detail::bit_plane16_scalar,
};

#if defined(RSWE_HAVE_AVX2)
constexpr KernelTable kAvx2{
    "avx2",
    detail::fwht_wrap_avx2,
    detail::fwht_mod_avx2,
    detail::plane_products_avx2,
    detail::parity_select_xor_avx2,
    detail::bit_plane_avx2,
    detail::fwht_wrap16_avx2,
    detail::plane_products16_avx2,
    detail::parity_select_xor16_avx2,
    detail::bit_plane16_avx2,
};

bool cpu_has_avx2() noexcept {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
}
#endif

}  // namespace

const KernelTable& scalar() noexcept { return kScalar; }

const KernelTable* avx2() noexcept {
#if defined(RSWE_HAVE_AVX2)
    static const bool supported = cpu_has_avx2();
    return supported ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() noexcept {
    static const KernelTable* table = avx2() ? avx2() : &kScalar;
    return *table;
}

void fwht_wrap(std::span<std::uint32_t> data) {
    assert((data.size() & (data.size() - 1)) == 0);
    active().fwht_wrap(data.data(), data.size());
}

void fwht_mod(std::span<std::uint32_t> data, std::uint32_t mod) {
    assert((data.size() & (data.size() - 1)) == 0);
    active().fwht_mod(data.data(), data.size(), mod);
}

void plane_products(std::span<std::uint32_t> acc, std::span<const std::uint32_t> chat,
                    std::span<const std::uint32_t> ihat, unsigned m, std::size_t stride, std::size_t n) {
    assert(m > 0 && n <= stride);
    assert(chat.size() >= (m - 1) * stride + n && ihat.size() >= (m - 1) * stride + n);
    assert(acc.size() >= (2 * m - 2) * stride + n);
    active().plane_products(acc.data(), chat.data(), ihat.data(), m, stride, n);
}

void parity_select_xor(std::span<std::uint32_t> out, std::span<const std::uint32_t> v, unsigned bit,
                       std::uint32_t value) {
    assert(v.size() == out.size());
    active().parity_select_xor(out.data(), v.data(), out.size(), bit, value);
}

void bit_plane(std::span<std::uint32_t> plane, std::span<const std::uint32_t> src, unsigned bit) {
    assert(plane.size() == src.size());
    active().bit_plane(plane.data(), src.data(), plane.size(), bit);
}

void fwht_wrap(std::span<std::uint16_t> data) {
    assert((data.size() & (data.size() - 1)) == 0);
    active().fwht_wrap16(data.data(), data.size());
}

void plane_products(std::span<std::uint16_t> acc, std::span<const std::uint16_t> chat,
                    std::span<const std::uint16_t> ihat, unsigned m, std::size_t stride, std::size_t n) {
    assert(m > 0 && n <= stride);
    assert(chat.size() >= (m - 1) * stride + n && ihat.size() >= (m - 1) * stride + n);
    assert(acc.size() >= (2 * m - 2) * stride + n);
    active().plane_products16(acc.data(), chat.data(), ihat.data(), m, stride, n);
}

void parity_select_xor(std::span<std::uint32_t> out, std::span<const std::uint16_t> v, unsigned bit,
                       std::uint32_t value) {
    assert(v.size() == out.size());
    active().parity_select_xor16(out.data(), v.data(), out.size(), bit, value);
}

void bit_plane(std::span<std::uint16_t> plane, std::span<const std::uint32_t> src, unsigned bit) {
    assert(plane.size() == src.size());
    active().bit_plane16(plane.data(), src.data(), plane.size(), bit);
}

}  // namespace rswe::kernels
