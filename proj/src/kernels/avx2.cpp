// Compiled with -mavx2. Only reached through the dispatch table after a CPU
// feature check; keep standard-library templates out of this translation unit.
#include <immintrin.h>

#include "kernel_impls.hpp"

namespace rswe::kernels::detail {
namespace {

constexpr std::size_t kLanes = 8;
// Lower strides are finished block by block while the block is cache resident.
constexpr std::size_t kBlockBytes = std::size_t{1} << 16;

template <class T>
inline __m256i load(const T* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
template <class T>
inline void store(T* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Strides 1, 2, 4 inside one register of 32-bit lanes.
template <class Ops>
inline __m256i butterfly_epi32(const Ops& ops, __m256i v) {
    v = ops.add(_mm256_blend_epi32(v, ops.neg(v), 0xAA), _mm256_shuffle_epi32(v, 0xB1));
    v = ops.add(_mm256_blend_epi32(v, ops.neg(v), 0xCC), _mm256_shuffle_epi32(v, 0x4E));
    v = ops.add(_mm256_blend_epi32(v, ops.neg(v), 0xF0), _mm256_permute2x128_si256(v, v, 0x01));
    return v;
}

struct WrapOps {
    using T = std::uint32_t;
    static constexpr std::size_t kLanes = 8;
    __m256i add(__m256i a, __m256i b) const { return _mm256_add_epi32(a, b); }
    __m256i sub(__m256i a, __m256i b) const { return _mm256_sub_epi32(a, b); }
    __m256i neg(__m256i a) const { return _mm256_sub_epi32(_mm256_setzero_si256(), a); }
    __m256i in_register(__m256i v) const { return butterfly_epi32(*this, v); }
};

// Residues in [0, mod). neg() may return mod itself; it only feeds add().
struct ModOps {
    using T = std::uint32_t;
    static constexpr std::size_t kLanes = 8;
    __m256i mod;

    __m256i shrink(__m256i v) const { return _mm256_min_epu32(v, _mm256_sub_epi32(v, mod)); }
    __m256i add(__m256i a, __m256i b) const { return shrink(_mm256_add_epi32(a, b)); }
    __m256i sub(__m256i a, __m256i b) const { return shrink(_mm256_add_epi32(a, _mm256_sub_epi32(mod, b))); }
    __m256i neg(__m256i a) const { return _mm256_sub_epi32(mod, a); }
    __m256i in_register(__m256i v) const { return butterfly_epi32(*this, v); }
};

struct Wrap16Ops {
    using T = std::uint16_t;
    static constexpr std::size_t kLanes = 16;
    __m256i add(__m256i a, __m256i b) const { return _mm256_add_epi16(a, b); }
    __m256i sub(__m256i a, __m256i b) const { return _mm256_sub_epi16(a, b); }
    __m256i neg(__m256i a) const { return _mm256_sub_epi16(_mm256_setzero_si256(), a); }
    // Strides 1, 2, 4, 8.
    __m256i in_register(__m256i v) const {
        const __m256i swapped = _mm256_or_si256(_mm256_slli_epi32(v, 16), _mm256_srli_epi32(v, 16));
        v = add(_mm256_blend_epi16(v, neg(v), 0xAA), swapped);
        v = add(_mm256_blend_epi16(v, neg(v), 0xCC), _mm256_shuffle_epi32(v, 0xB1));
        v = add(_mm256_blend_epi16(v, neg(v), 0xF0), _mm256_shuffle_epi32(v, 0x4E));
        v = add(_mm256_blend_epi32(v, neg(v), 0xF0), _mm256_permute2x128_si256(v, v, 0x01));
        return v;
    }
};

template <class Ops, class T>
inline void radix2_pass(const Ops& ops, T* data, std::size_t len, std::size_t h) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
        for (std::size_t j = i; j < i + h; j += Ops::kLanes) {
            const __m256i a = load(data + j);
            const __m256i b = load(data + j + h);
            store(data + j, ops.add(a, b));
            store(data + j + h, ops.sub(a, b));
        }
    }
}

// Strides h and 2h in one sweep.
template <class Ops, class T>
inline void radix4_pass(const Ops& ops, T* data, std::size_t len, std::size_t h) {
    for (std::size_t i = 0; i < len; i += 4 * h) {
        for (std::size_t j = i; j < i + h; j += Ops::kLanes) {
            const __m256i a0 = load(data + j);
            const __m256i a1 = load(data + j + h);
            const __m256i a2 = load(data + j + 2 * h);
            const __m256i a3 = load(data + j + 3 * h);
            const __m256i b0 = ops.add(a0, a1);
            const __m256i b1 = ops.sub(a0, a1);
            const __m256i b2 = ops.add(a2, a3);
            const __m256i b3 = ops.sub(a2, a3);
            store(data + j, ops.add(b0, b2));
            store(data + j + h, ops.add(b1, b3));
            store(data + j + 2 * h, ops.sub(b0, b2));
            store(data + j + 3 * h, ops.sub(b1, b3));
        }
    }
}

// Applies strides h_begin, 2*h_begin, ... below h_end to data[0, len).
template <class Ops, class T>
inline void stride_range(const Ops& ops, T* data, std::size_t len, std::size_t h_begin, std::size_t h_end) {
    std::size_t h = h_begin;
    while (h < h_end) {
        if (4 * h <= h_end) {
            radix4_pass(ops, data, len, h);
            h *= 4;
        } else {
            radix2_pass(ops, data, len, h);
            h *= 2;
        }
    }
}

template <class Ops>
void fwht_vector(const Ops& ops, typename Ops::T* data, std::size_t n) {
    constexpr std::size_t kBlock = kBlockBytes / sizeof(typename Ops::T);
    const std::size_t block = n < kBlock ? n : kBlock;
    for (std::size_t base = 0; base < n; base += block) {
        auto* blk = data + base;
        for (std::size_t x = 0; x < block; x += Ops::kLanes) store(blk + x, ops.in_register(load(blk + x)));
        stride_range(ops, blk, block, Ops::kLanes, block);
    }
    stride_range(ops, data, n, block, n);
}

template <class T, class Mul, class Add>
inline void plane_products_vector(T* acc, const T* chat, const T* ihat, unsigned m, std::size_t stride, std::size_t n,
                                  std::size_t lanes, Mul mul, Add add) {
    const std::size_t body = n - n % lanes;
    constexpr std::size_t line = 64 / sizeof(T);
    constexpr std::size_t ahead_by = 4 * line;
    for (std::size_t x = 0; x < body; x += lanes) {
        // Too many concurrent streams for the hardware prefetcher; fetch the
        // next lines of every plane explicitly.
        if (x % line == 0 && x + ahead_by < n) {
            const std::size_t ahead = x + ahead_by;
            for (unsigned p = 0; p < m; ++p) {
                _mm_prefetch(reinterpret_cast<const char*>(chat + p * stride + ahead), _MM_HINT_T0);
                _mm_prefetch(reinterpret_cast<const char*>(ihat + p * stride + ahead), _MM_HINT_T0);
            }
            for (unsigned p = 0; p + 1 < 2 * m; ++p)
                _mm_prefetch(reinterpret_cast<const char*>(acc + p * stride + ahead), _MM_HINT_T0);
        }
        for (unsigned s = 0; s + 1 < 2 * m; ++s) {
            const unsigned lo = s < m ? 0 : s - m + 1;
            const unsigned hi = s < m ? s : m - 1;
            __m256i sum = _mm256_setzero_si256();
            for (unsigned i = lo; i <= hi; ++i)
                sum = add(sum, mul(load(chat + i * stride + x), load(ihat + (s - i) * stride + x)));
            store(acc + s * stride + x, sum);
        }
    }
}

}  // namespace

void fwht_wrap_avx2(std::uint32_t* data, std::size_t n) {
    if (n < kLanes) {
        fwht_wrap_scalar(data, n);
        return;
    }
    fwht_vector(WrapOps{}, data, n);
}

void fwht_mod_avx2(std::uint32_t* data, std::size_t n, std::uint32_t mod) {
    if (n < kLanes) {
        fwht_mod_scalar(data, n, mod);
        return;
    }
    fwht_vector(ModOps{_mm256_set1_epi32(static_cast<int>(mod))}, data, n);
}

// One column of lanes at a time: every plane of the column is loaded from L1
// and each output is stored once.
void plane_products_avx2(std::uint32_t* acc, const std::uint32_t* chat, const std::uint32_t* ihat, unsigned m,
                         std::size_t stride, std::size_t n) {
    plane_products_vector(
        acc, chat, ihat, m, stride, n, kLanes, [](__m256i a, __m256i b) { return _mm256_mullo_epi32(a, b); },
        [](__m256i a, __m256i b) { return _mm256_add_epi32(a, b); });
    const std::size_t body = n - n % kLanes;
    if (body < n) plane_products_scalar(acc + body, chat + body, ihat + body, m, stride, n - body);
}

void plane_products16_avx2(std::uint16_t* acc, const std::uint16_t* chat, const std::uint16_t* ihat, unsigned m,
                           std::size_t stride, std::size_t n) {
    plane_products_vector(
        acc, chat, ihat, m, stride, n, Wrap16Ops::kLanes,
        [](__m256i a, __m256i b) { return _mm256_mullo_epi16(a, b); },
        [](__m256i a, __m256i b) { return _mm256_add_epi16(a, b); });
    const std::size_t body = n - n % Wrap16Ops::kLanes;
    if (body < n) plane_products16_scalar(acc + body, chat + body, ihat + body, m, stride, n - body);
}

void fwht_wrap16_avx2(std::uint16_t* data, std::size_t n) {
    if (n < Wrap16Ops::kLanes) {
        fwht_wrap16_scalar(data, n);
        return;
    }
    fwht_vector(Wrap16Ops{}, data, n);
}

void parity_select_xor_avx2(std::uint32_t* out, const std::uint32_t* v, std::size_t n, unsigned bit,
                            std::uint32_t value) {
    const __m128i shift = _mm_cvtsi32_si128(static_cast<int>(bit));
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i val = _mm256_set1_epi32(static_cast<int>(value));
    std::size_t x = 0;
    for (; x + kLanes <= n; x += kLanes) {
        const __m256i b = _mm256_and_si256(_mm256_srl_epi32(load(v + x), shift), one);
        const __m256i mask = _mm256_sub_epi32(_mm256_setzero_si256(), b);
        store(out + x, _mm256_xor_si256(load(out + x), _mm256_and_si256(mask, val)));
    }
    for (; x < n; ++x)
        if ((v[x] >> bit) & 1u) out[x] ^= value;
}

void bit_plane_avx2(std::uint32_t* plane, const std::uint32_t* src, std::size_t n, unsigned bit) {
    const __m128i shift = _mm_cvtsi32_si128(static_cast<int>(bit));
    const __m256i one = _mm256_set1_epi32(1);
    std::size_t x = 0;
    for (; x + kLanes <= n; x += kLanes) store(plane + x, _mm256_and_si256(_mm256_srl_epi32(load(src + x), shift), one));
    for (; x < n; ++x) plane[x] = (src[x] >> bit) & 1u;
}

void parity_select_xor16_avx2(std::uint32_t* out, const std::uint16_t* v, std::size_t n, unsigned bit,
                              std::uint32_t value) {
    const __m128i shift = _mm_cvtsi32_si128(static_cast<int>(bit));
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i val = _mm256_set1_epi32(static_cast<int>(value));
    std::size_t x = 0;
    for (; x + kLanes <= n; x += kLanes) {
        const __m256i w = _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(v + x)));
        const __m256i mask = _mm256_sub_epi32(_mm256_setzero_si256(), _mm256_and_si256(_mm256_srl_epi32(w, shift), one));
        store(out + x, _mm256_xor_si256(load(out + x), _mm256_and_si256(mask, val)));
    }
    for (; x < n; ++x)
        if ((v[x] >> bit) & 1u) out[x] ^= value;
}

void bit_plane16_avx2(std::uint16_t* plane, const std::uint32_t* src, std::size_t n, unsigned bit) {
    const __m128i shift = _mm_cvtsi32_si128(static_cast<int>(bit));
    const __m256i one = _mm256_set1_epi32(1);
    std::size_t x = 0;
    for (; x + 2 * kLanes <= n; x += 2 * kLanes) {
        const __m256i a = _mm256_and_si256(_mm256_srl_epi32(load(src + x), shift), one);
        const __m256i b = _mm256_and_si256(_mm256_srl_epi32(load(src + x + kLanes), shift), one);
        // packus interleaves 128-bit halves; restore the order.
        store(plane + x, _mm256_permute4x64_epi64(_mm256_packus_epi32(a, b), 0xD8));
    }
    for (; x < n; ++x) plane[x] = static_cast<std::uint16_t>((src[x] >> bit) & 1u);
}

}  // namespace rswe::kernels::detail
