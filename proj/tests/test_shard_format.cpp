#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "rswe/error.hpp"
#include "rswe/shard_format.hpp"

using namespace rswe;
using namespace rswe::shard;

namespace {

template <class F>
Errc code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::InvalidArgument;
}

ShardHeader sample() {
    ShardHeader h;
    h.m = 16;
    h.k = 1024;
    h.n = 1536;
    h.index = 1535;
    h.file_len = 1u << 20;
    h.stripe_count = stripe_count_for(h.file_len, h.k, h.m);
    return h;
}

}  // namespace

TEST_CASE("stripe_count is a ceiling division") {
    CHECK(stripe_count_for(0, 4, 8) == 0);
    CHECK(stripe_count_for(1, 4, 8) == 1);
    CHECK(stripe_count_for(4, 4, 8) == 1);
    CHECK(stripe_count_for(5, 4, 8) == 2);
    CHECK(stripe_count_for(8, 4, 16) == 1);
    CHECK(stripe_count_for(9, 4, 16) == 2);
    CHECK(stripe_count_for(1u << 20, 1024, 16) == 512);
    CHECK(code_of([] { stripe_count_for(std::uint64_t{1} << 40, 1, 8); }) == Errc::BadParams);
}

TEST_CASE("bit-exact layout") {
    ShardHeader h;
    h.m = 16;
    h.k = 4;
    h.n = 0x0105;
    h.index = 0x0102;
    h.file_len = 0x0203;  // 515 bytes, 8 per stripe
    h.stripe_count = stripe_count_for(h.file_len, h.k, h.m);
    REQUIRE(h.stripe_count == 65);
    const auto b = serialize(h);
    const std::vector<std::uint8_t> expect{
        'R', 'S', 'W', 'E', 1, 16,
        0x04, 0x00, 0x00, 0x00,                          // k
        0x05, 0x01, 0x00, 0x00,                          // n
        0x02, 0x01, 0x00, 0x00,                          // index
        0x03, 0x02, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,  // file_len
        0x41, 0x00, 0x00, 0x00};                         // stripe_count
    CHECK(std::vector<std::uint8_t>(b.begin(), b.end()) == expect);
}

TEST_CASE("header round-trip") {
    std::mt19937_64 rng(3);
    CHECK(parse_header(serialize(sample())) == sample());
    for (int trial = 0; trial < 500; ++trial) {
        ShardHeader h;
        h.m = rng() & 1 ? 8 : 16;
        const std::uint32_t q = 1u << h.m;
        h.n = 1 + static_cast<std::uint32_t>(rng() % q);
        h.k = 1 + static_cast<std::uint32_t>(rng() % h.n);
        h.index = static_cast<std::uint32_t>(rng() % h.n);
        h.file_len = rng() % (std::uint64_t{1} << (rng() & 1 ? 34 : 20));
        if (h.file_len / (std::uint64_t{h.k} * symbol_bytes(h.m)) >= UINT32_MAX) continue;
        h.stripe_count = stripe_count_for(h.file_len, h.k, h.m);
        const auto bytes = serialize(h);
        REQUIRE(parse_header(bytes) == h);
    }
}

TEST_CASE("parse ignores trailing payload") {
    const auto h = sample();
    const auto head = serialize(h);
    std::vector<std::uint8_t> file(head.begin(), head.end());
    file.resize(file.size() + payload_size(h), 0xAB);
    CHECK(parse_header(file) == h);
    CHECK(payload_size(h) == 1024);
}

TEST_CASE("corrupt headers are rejected") {
    const auto good = serialize(sample());
    auto mutate = [&](std::size_t at, std::uint8_t v) {
        auto b = good;
        b[at] = v;
        return b;
    };
    CHECK(code_of([&] { parse_header(std::span(good).first(kHeaderSize - 1)); }) == Errc::CorruptHeader);
    CHECK(code_of([&] { parse_header(mutate(0, 'X')); }) == Errc::CorruptHeader);
    CHECK(code_of([&] { parse_header(mutate(3, 'e')); }) == Errc::CorruptHeader);
    CHECK(code_of([&] { parse_header(mutate(4, 2)); }) == Errc::CorruptHeader);
    CHECK(code_of([&] { parse_header(mutate(4, 0)); }) == Errc::CorruptHeader);
    CHECK(code_of([&] { parse_header(mutate(5, 12)); }) == Errc::CorruptHeader);
    CHECK(code_of([&] { parse_header(mutate(17, 0x7F)); }) == Errc::CorruptHeader);  // index >= n
    CHECK(code_of([&] { parse_header(mutate(26, 0x99)); }) == Errc::CorruptHeader);  // stripe_count
    CHECK(code_of([&] { parse_header(mutate(25, 0xFF)); }) == Errc::CorruptHeader);  // huge file_len
    CHECK(code_of([&] { parse_header(mutate(9, 1)); }) == Errc::CorruptHeader);      // k > n
}

TEST_CASE("serialize refuses inconsistent headers") {
    auto h = sample();
    h.index = h.n;
    CHECK(code_of([&] { serialize(h); }) == Errc::BadParams);
    h = sample();
    h.m = 12;
    CHECK(code_of([&] { serialize(h); }) == Errc::BadParams);
    h = sample();
    h.n = 300;
    h.m = 8;
    h.index = 0;
    CHECK(code_of([&] { serialize(h); }) == Errc::BadParams);
    h = sample();
    h.stripe_count += 1;
    CHECK(code_of([&] { serialize(h); }) == Errc::BadParams);
    h = sample();
    h.version = 2;
    CHECK(code_of([&] { serialize(h); }) == Errc::BadParams);
}

TEST_CASE("same_stripe_set ignores only the index") {
    const auto a = sample();
    auto b = a;
    b.index = 3;
    CHECK(same_stripe_set(a, b));
    b.file_len -= 1;
    CHECK_FALSE(same_stripe_set(a, b));
    b = a;
    b.n -= 1;
    CHECK_FALSE(same_stripe_set(a, b));
    b = a;
    b.k += 1;
    CHECK_FALSE(same_stripe_set(a, b));
}
