#include "rswe/shard_format.hpp"

#include <algorithm>
#include <string>

#include "rswe/error.hpp"

namespace rswe::shard {
namespace {

template <class T>
void put_le(std::uint8_t* out, T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

template <class T>
T get_le(const std::uint8_t* in) {
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(in[i]) << (8 * i);
    return v;
}

// Empty string when the header is consistent.
std::string invariant_violation(const ShardHeader& h) {
    if (h.m != 8 && h.m != 16) return "m must be 8 or 16, got " + std::to_string(h.m);
    const std::uint64_t q = std::uint64_t{1} << h.m;
    if (h.k < 1 || h.k > h.n || h.n > q) return "need 1 <= k <= n <= 2^m";
    if (h.index >= h.n) return "index " + std::to_string(h.index) + " >= n";
    if (h.stripe_count != stripe_count_for(h.file_len, h.k, h.m)) return "stripe_count disagrees with file_len";
    return {};
}

}  // namespace

std::uint32_t stripe_count_for(std::uint64_t file_len, std::uint32_t k, unsigned m) {
    const std::uint64_t stripe_bytes = std::uint64_t{k} * symbol_bytes(m);
    if (stripe_bytes == 0) return 0;
    const std::uint64_t count = file_len / stripe_bytes + (file_len % stripe_bytes != 0);
    if (count > UINT32_MAX) throw Error(Errc::BadParams, "file needs more than 2^32-1 stripes");
    return static_cast<std::uint32_t>(count);
}

std::uint64_t payload_size(const ShardHeader& h) noexcept {
    return std::uint64_t{h.stripe_count} * symbol_bytes(h.m);
}

std::array<std::uint8_t, kHeaderSize> serialize(const ShardHeader& h) {
    if (h.version != kVersion) throw Error(Errc::BadParams, "unsupported version " + std::to_string(h.version));
    if (auto why = invariant_violation(h); !why.empty()) throw Error(Errc::BadParams, why);
    std::array<std::uint8_t, kHeaderSize> out{};
    std::copy(kMagic.begin(), kMagic.end(), out.begin());
    out[4] = h.version;
    out[5] = h.m;
    put_le<std::uint32_t>(&out[6], h.k);
    put_le<std::uint32_t>(&out[10], h.n);
    put_le<std::uint32_t>(&out[14], h.index);
    put_le<std::uint64_t>(&out[18], h.file_len);
    put_le<std::uint32_t>(&out[26], h.stripe_count);
    return out;
}

ShardHeader parse_header(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kHeaderSize) throw Error(Errc::CorruptHeader, "shard shorter than its header");
    if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) throw Error(Errc::CorruptHeader, "bad magic");
    ShardHeader h;
    h.version = bytes[4];
    if (h.version != kVersion) throw Error(Errc::CorruptHeader, "unsupported version " + std::to_string(h.version));
    h.m = bytes[5];
    h.k = get_le<std::uint32_t>(&bytes[6]);
    h.n = get_le<std::uint32_t>(&bytes[10]);
    h.index = get_le<std::uint32_t>(&bytes[14]);
    h.file_len = get_le<std::uint64_t>(&bytes[18]);
    h.stripe_count = get_le<std::uint32_t>(&bytes[26]);
    if (h.m == 8 || h.m == 16) {
        // stripe_count_for() throws BadParams on absurd lengths; report it as corruption.
        const std::uint64_t stripe_bytes = std::uint64_t{h.k} * symbol_bytes(h.m);
        if (stripe_bytes != 0 && h.file_len / stripe_bytes >= UINT32_MAX)
            throw Error(Errc::CorruptHeader, "file_len too large");
    }
    if (auto why = invariant_violation(h); !why.empty()) throw Error(Errc::CorruptHeader, why);
    return h;
}

bool same_stripe_set(const ShardHeader& a, const ShardHeader& b) noexcept {
    return a.version == b.version && a.m == b.m && a.k == b.k && a.n == b.n && a.file_len == b.file_len &&
           a.stripe_count == b.stripe_count;
}

}  // namespace rswe::shard
