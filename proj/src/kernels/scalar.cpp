#include "kernel_impls.hpp"

namespace rswe::kernels::detail {

void fwht_wrap_scalar(std::uint32_t* data, std::size_t n) {
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const std::uint32_t a = data[j];
                const std::uint32_t b = data[j + h];
                data[j] = a + b;
                data[j + h] = a - b;
            }
        }
    }
}

void fwht_mod_scalar(std::uint32_t* data, std::size_t n, std::uint32_t mod) {
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const std::uint32_t a = data[j];
                const std::uint32_t b = data[j + h];
                std::uint32_t s = a + b;
                if (s >= mod) s -= mod;
                std::uint32_t d = a + mod - b;
                if (d >= mod) d -= mod;
                data[j] = s;
                data[j + h] = d;
            }
        }
    }
}

void plane_products_scalar(std::uint32_t* acc, const std::uint32_t* chat, const std::uint32_t* ihat, unsigned m,
                           std::size_t stride, std::size_t n) {
    for (unsigned s = 0; s + 1 < 2 * m; ++s) {
        const unsigned lo = s < m ? 0 : s - m + 1;
        const unsigned hi = s < m ? s : m - 1;
        std::uint32_t* out = acc + s * stride;
        for (std::size_t x = 0; x < n; ++x) {
            std::uint32_t sum = 0;
            for (unsigned i = lo; i <= hi; ++i) sum += chat[i * stride + x] * ihat[(s - i) * stride + x];
            out[x] = sum;
        }
    }
}

void parity_select_xor_scalar(std::uint32_t* out, const std::uint32_t* v, std::size_t n, unsigned bit,
                              std::uint32_t value) {
    for (std::size_t x = 0; x < n; ++x)
        if ((v[x] >> bit) & 1u) out[x] ^= value;
}

void bit_plane_scalar(std::uint32_t* plane, const std::uint32_t* src, std::size_t n, unsigned bit) {
    for (std::size_t x = 0; x < n; ++x) plane[x] = (src[x] >> bit) & 1u;
}

void fwht_wrap16_scalar(std::uint16_t* data, std::size_t n) {
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const std::uint16_t a = data[j];
                const std::uint16_t b = data[j + h];
                data[j] = static_cast<std::uint16_t>(a + b);
                data[j + h] = static_cast<std::uint16_t>(a - b);
            }
        }
    }
}

void plane_products16_scalar(std::uint16_t* acc, const std::uint16_t* chat, const std::uint16_t* ihat, unsigned m,
                             std::size_t stride, std::size_t n) {
    for (unsigned s = 0; s + 1 < 2 * m; ++s) {
        const unsigned lo = s < m ? 0 : s - m + 1;
        const unsigned hi = s < m ? s : m - 1;
        std::uint16_t* out = acc + s * stride;
        for (std::size_t x = 0; x < n; ++x) {
            std::uint32_t sum = 0;
            for (unsigned i = lo; i <= hi; ++i)
                sum += std::uint32_t{chat[i * stride + x]} * ihat[(s - i) * stride + x];
            out[x] = static_cast<std::uint16_t>(sum);
        }
    }
}

void parity_select_xor16_scalar(std::uint32_t* out, const std::uint16_t* v, std::size_t n, unsigned bit,
                                std::uint32_t value) {
    for (std::size_t x = 0; x < n; ++x)
        if ((v[x] >> bit) & 1u) out[x] ^= value;
}

void bit_plane16_scalar(std::uint16_t* plane, const std::uint32_t* src, std::size_t n, unsigned bit) {
    for (std::size_t x = 0; x < n; ++x) plane[x] = static_cast<std::uint16_t>((src[x] >> bit) & 1u);
}

}  // namespace rswe::kernels::detail
