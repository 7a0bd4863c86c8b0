#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

// On-disk shard layout, all integers little-endian:
//
//   offset size field
//        0    4 magic "RSWE"
//        4    1 version (1)
//        5    1 m (8 or 16)
//        6    4 k
//       10    4 n
//       14    4 index (codeword coordinate held by this shard)
//       18    8 file_len (original byte length)
//       26    4 stripe_count
//       30      payload: stripe_count symbols of m/8 bytes each
namespace rswe::shard {

inline constexpr std::array<std::uint8_t, 4> kMagic{'R', 'S', 'W', 'E'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kHeaderSize = 30;

struct ShardHeader {
    std::uint8_t version = kVersion;
    std::uint8_t m = 8;
    std::uint32_t k = 1;
    std::uint32_t n = 1;
    std::uint32_t index = 0;
    std::uint64_t file_len = 0;
    std::uint32_t stripe_count = 0;

    friend bool operator==(const ShardHeader&, const ShardHeader&) = default;
};

inline constexpr std::size_t symbol_bytes(unsigned m) noexcept { return m / 8; }

// ceil(file_len / (k * m/8))
std::uint32_t stripe_count_for(std::uint64_t file_len, std::uint32_t k, unsigned m);

std::uint64_t payload_size(const ShardHeader& h) noexcept;

// Throws BadParams if the header violates its invariants.
std::array<std::uint8_t, kHeaderSize> serialize(const ShardHeader& h);

// Throws CorruptHeader on short input, bad magic or version, or fields that
// violate the invariants.
ShardHeader parse_header(std::span<const std::uint8_t> bytes);

// Every field except index agrees.
bool same_stripe_set(const ShardHeader& a, const ShardHeader& b) noexcept;

}  // namespace rswe::shard
