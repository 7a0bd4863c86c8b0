#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rswe/erasure_core.hpp"
#include "rswe/error.hpp"
#include "rswe/kernels.hpp"
#include "rswe/reference_oracle.hpp"
#include "rswe/walsh.hpp"
#include "test_support.hpp"

using namespace rswe;
using namespace rswe::erasure;
using gf::Element;

namespace {

struct Decoded {
    LogPiVector logpi;
    CoeffVector coeffs;
    std::vector<Element> all;
};

ReceivedSet received_from(const std::vector<Element>& word, const std::vector<std::uint32_t>& pts,
                          const gf::FieldTables& t) {
    std::vector<Element> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = word[pts[i]];
    return ReceivedSet::from_points(t, pts, vals);
}

Decoded run(const ReceivedSet& r, TransformStack& stack, const gf::FieldTables& t) {
    Decoded d;
    d.logpi = compute_log_pi(r, t, stack);
    d.coeffs = lagrange_coefficients(r, d.logpi, t);
    d.all = evaluate_all(d.coeffs, d.logpi, r, stack, t);
    return d;
}

std::vector<std::uint32_t> complement(const ReceivedSet& r) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < r.indicator.size(); ++x)
        if (!r.contains(x)) out.push_back(x);
    return out;
}

Element direct_pi(std::uint32_t x, const std::vector<std::uint32_t>& pts, const gf::FieldTables& t) {
    Element p = 1;
    for (auto y : pts)
        if (y != x) p = gf::mul_slow(p, x ^ y, t);
    return p;
}

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

}  // namespace

TEST_CASE("received set construction") {
    const auto t = gf::build_field(3);
    const std::vector<std::pair<std::uint32_t, Element>> pairs{{5, 1}, {2, 7}};
    const auto r = ReceivedSet::from_pairs(t, pairs);
    CHECK(r.positions == std::vector<std::uint32_t>{2, 5});
    CHECK(r.values == std::vector<Element>{7, 1});
    CHECK(r.indicator == std::vector<std::uint8_t>{0, 0, 1, 0, 0, 1, 0, 0});

    const std::vector<std::pair<std::uint32_t, Element>> dup{{1, 1}, {1, 2}};
    CHECK(code_of([&] { ReceivedSet::from_pairs(t, dup); }) == Errc::DuplicatePosition);
    const std::vector<std::pair<std::uint32_t, Element>> far{{8, 1}};
    CHECK(code_of([&] { ReceivedSet::from_pairs(t, far); }) == Errc::PositionOutOfRange);
    const std::vector<std::pair<std::uint32_t, Element>> big{{1, 8}};
    CHECK(code_of([&] { ReceivedSet::from_pairs(t, big); }) == Errc::SymbolOutOfRange);
}

TEST_CASE("log Pi examples") {
    const auto t4 = gf::build_field(2);
    const std::vector<Element> none{0, 0};
    const std::vector<std::uint32_t> r01{0, 1};
    CHECK(compute_log_pi(ReceivedSet::from_points(t4, r01, none), t4).logpi == std::vector<std::uint32_t>{0, 0, 0, 0});

    for (std::uint32_t u = 0; u < 4; ++u) {
        const std::vector<std::uint32_t> single{u};
        const std::vector<Element> zero{0};
        const auto lp = compute_log_pi(ReceivedSet::from_points(t4, single, zero), t4).logpi;
        for (std::uint32_t x = 0; x < 4; ++x) CHECK(lp[x] == (x == u ? 0 : t4.log[x ^ u]));
    }

    const auto t8 = gf::build_field(3);
    std::vector<std::uint32_t> all(8);
    for (std::uint32_t i = 0; i < 8; ++i) all[i] = i;
    const std::vector<Element> zeros(8, 0);
    CHECK(compute_log_pi(ReceivedSet::from_points(t8, all, zeros), t8).logpi == std::vector<std::uint32_t>(8, 0));

    ReceivedSet empty;
    empty.indicator.assign(8, 0);
    CHECK(code_of([&] { compute_log_pi(empty, t8); }) == Errc::EmptyReceivedSet);
}

TEST_CASE("log Pi matches the direct product for every received set, m <= 4") {
    for (unsigned m = 2; m <= 4; ++m) {
        const auto t = gf::build_field(m);
        auto stack = precompute_inverse_stack(t);
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << t.q); ++mask) {
            std::vector<std::uint32_t> pts;
            for (std::uint32_t x = 0; x < t.q; ++x)
                if (mask >> x & 1u) pts.push_back(x);
            const std::vector<Element> vals(pts.size(), 0);
            const auto lp = compute_log_pi(ReceivedSet::from_points(t, pts, vals), t, stack).logpi;
            for (std::uint32_t x = 0; x < t.q; ++x) {
                REQUIRE(lp[x] < t.order());
                REQUIRE(t.exp[lp[x]] == direct_pi(x, pts, t));
            }
        }
    }
}

TEST_CASE("Lagrange coefficient examples") {
    const auto t = gf::build_field(2);
    {
        const std::vector<std::uint32_t> pts{0, 1};
        const std::vector<Element> vals{1, 3};
        const auto r = ReceivedSet::from_points(t, pts, vals);
        const auto c = lagrange_coefficients(r, compute_log_pi(r, t), t);
        CHECK(c.coeffs == std::vector<Element>{1, 3, 0, 0});
        CHECK(c.positions == pts);
    }
    {
        const std::vector<std::uint32_t> pts{2, 3};
        const std::vector<Element> vals{1, 1};
        const auto r = ReceivedSet::from_points(t, pts, vals);
        CHECK(lagrange_coefficients(r, compute_log_pi(r, t), t).coeffs == std::vector<Element>{0, 0, 1, 1});
    }
    {
        const auto t16 = gf::build_field(4);
        const std::vector<std::uint32_t> pts{1, 4, 9, 13};
        const std::vector<Element> vals(4, 0);
        const auto r = ReceivedSet::from_points(t16, pts, vals);
        CHECK(lagrange_coefficients(r, compute_log_pi(r, t16), t16).coeffs == std::vector<Element>(16, 0));
    }
}

TEST_CASE("inverse stack for GF(4)") {
    const auto t = gf::build_field(2);
    const auto stack = precompute_inverse_stack(t);
    CHECK(stack.basis().size() == 2);
    CHECK(stack.basis()[0] == 1);
    CHECK(stack.basis()[1] == 2);

    // [I] = [0, 1, 3, 2]; plane 0 = [0, 1, 1, 0], plane 1 = [0, 0, 1, 1].
    const std::vector<std::vector<std::int64_t>> planes{{0, 1, 1, 0}, {0, 0, 1, 1}};
    for (unsigned j = 0; j < 2; ++j) {
        const auto expect = walsh::fwht(walsh::make_vector(walsh::Mode::ModPow2, planes[j])).data;
        const auto got = stack.ihat(j);
        REQUIRE(got.size() == 4);
        for (std::size_t x = 0; x < 4; ++x) CHECK(static_cast<std::int64_t>(got[x]) == expect[x]);
    }
}

TEST_CASE("inverse stack planes rebuild the inversion table") {
    for (unsigned m : {3u, 6u, 9u}) {
        const auto t = gf::build_field(m);
        const auto stack = precompute_inverse_stack(t);
        std::vector<Element> rebuilt(t.q, 0);
        for (unsigned j = 0; j < m; ++j) {
            // Undo the transform exactly: fwht twice is q times the plane, modulo 2^(m+1).
            std::vector<std::uint32_t> plane(stack.ihat(j).begin(), stack.ihat(j).end());
            kernels::fwht_wrap(plane);
            for (std::uint32_t x = 0; x < t.q; ++x) {
                const std::uint32_t scaled = plane[x] & ((2u << m) - 1);
                REQUIRE((scaled == 0 || scaled == t.q));
                if (scaled) rebuilt[x] ^= stack.basis()[j];
            }
        }
        for (std::uint32_t x = 0; x < t.q; ++x) REQUIRE(rebuilt[x] == gf::inv(x, t));
    }
}

TEST_CASE("evaluation examples") {
    const auto t = gf::build_field(2);
    auto stack = precompute_inverse_stack(t);
    {
        const std::vector<std::uint32_t> pts{0, 1};
        const std::vector<Element> vals{1, 3};
        const auto r = ReceivedSet::from_points(t, pts, vals);
        const auto d = run(r, stack, t);
        CHECK(d.all == std::vector<Element>{1, 3, 2, 0});
        CHECK(evaluate_all_low_memory(d.coeffs, d.logpi, r, t) == d.all);
        const std::vector<std::uint32_t> p2{2}, p3{3}, none{};
        CHECK(evaluate_at_points(d.coeffs, d.logpi, p2, t) == std::vector<Element>{2});
        CHECK(evaluate_at_points(d.coeffs, d.logpi, p3, t) == std::vector<Element>{0});
        CHECK(evaluate_at_points(d.coeffs, d.logpi, none, t).empty());
        const std::vector<std::uint32_t> inside{1};
        CHECK(code_of([&] { evaluate_at_points(d.coeffs, d.logpi, inside, t); }) == Errc::PointInReceivedSet);
    }
    {
        const std::vector<std::uint32_t> pts{2, 3};
        const std::vector<Element> vals{1, 1};
        const auto r = ReceivedSet::from_points(t, pts, vals);
        const auto d = run(r, stack, t);
        CHECK(d.all == std::vector<Element>{1, 1, 1, 1});
        CHECK(evaluate_all_low_memory(d.coeffs, d.logpi, r, t) == d.all);
    }
    {
        const std::vector<std::uint32_t> pts{1, 2};
        const std::vector<Element> vals{0, 0};
        const auto r = ReceivedSet::from_points(t, pts, vals);
        const auto d = run(r, stack, t);
        CHECK(d.all == std::vector<Element>{0, 0, 0, 0});
        CHECK(evaluate_all_low_memory(d.coeffs, d.logpi, r, t) == d.all);
    }
}

TEST_CASE("fully received input is returned verbatim") {
    std::mt19937_64 rng(43);
    const auto t = gf::build_field(5);
    auto stack = precompute_inverse_stack(t);
    const auto word = testing::random_vector(rng, t.q, t.q);  // not a low-degree codeword
    std::vector<std::uint32_t> all(t.q);
    for (std::uint32_t i = 0; i < t.q; ++i) all[i] = i;
    const auto r = received_from(word, all, t);
    const auto d = run(r, stack, t);
    CHECK(d.all == word);
    CHECK(evaluate_all_low_memory(d.coeffs, d.logpi, r, t) == word);
}

TEST_CASE("stack from another field is rejected") {
    const auto t3 = gf::build_field(3);
    const auto t4 = gf::build_field(4);
    auto stack = precompute_inverse_stack(t4);
    const std::vector<std::uint32_t> pts{0, 1};
    const std::vector<Element> vals{1, 3};
    const auto r = ReceivedSet::from_points(t3, pts, vals);
    const auto lp = compute_log_pi(r, t3);
    const auto c = lagrange_coefficients(r, lp, t3);
    CHECK(code_of([&] { evaluate_all(c, lp, r, stack, t3); }) == Errc::StackFieldMismatch);
    CHECK(code_of([&] { compute_log_pi(r, t3, stack); }) == Errc::StackFieldMismatch);
}

TEST_CASE("exhaustive end-to-end for GF(4)") {
    const auto t = gf::build_field(2);
    auto stack = precompute_inverse_stack(t);
    for (std::uint32_t k = 1; k <= 4; ++k) {
        const std::uint32_t polys = 1u << (2 * k);
        for (std::uint32_t code = 0; code < polys; ++code) {
            std::vector<Element> coeffs(k);
            for (std::uint32_t i = 0; i < k; ++i) coeffs[i] = (code >> (2 * i)) & 3u;
            const auto word = oracle::naive_encode(coeffs, t);
            for (std::uint32_t mask = 1; mask < 16; ++mask) {
                std::vector<std::uint32_t> pts;
                for (std::uint32_t x = 0; x < 4; ++x)
                    if (mask >> x & 1u) pts.push_back(x);
                if (pts.size() < k) continue;
                const auto r = received_from(word, pts, t);
                const auto d = run(r, stack, t);
                REQUIRE(d.all == word);
                REQUIRE(evaluate_all_low_memory(d.coeffs, d.logpi, r, t) == word);
            }
        }
    }
}

TEST_CASE("randomized end-to-end against the oracle") {
    std::mt19937_64 rng(47);
    for (unsigned m : {3u, 4u, 5u, 8u, 11u, 16u}) {
        CAPTURE(m);
        const auto t = gf::build_field(m);
        auto stack = precompute_inverse_stack(t);
        const int trials = m >= 16 ? 4 : (m >= 11 ? 10 : 60);
        for (int trial = 0; trial < trials; ++trial) {
            const std::uint32_t kmax = m >= 11 ? 300 : t.q;
            const std::uint32_t k = 1 + testing::uniform(rng, kmax);
            const std::uint32_t size = k + testing::uniform(rng, t.q - k + 1);
            const auto coeffs = testing::random_vector(rng, k, t.q);
            const auto word = oracle::naive_encode(coeffs, t);
            const auto r = received_from(word, testing::random_subset(rng, t.q, size), t);
            const auto d = run(r, stack, t);
            REQUIRE(d.all == word);
        }
    }
}

TEST_CASE("the three evaluation routes agree") {
    std::mt19937_64 rng(53);
    for (unsigned m : {3u, 6u, 8u, 10u}) {
        CAPTURE(m);
        const auto t = gf::build_field(m);
        auto stack = precompute_inverse_stack(t);
        for (int trial = 0; trial < 15; ++trial) {
            const std::uint32_t k = 1 + testing::uniform(rng, t.q - 1);
            const std::uint32_t size = k + testing::uniform(rng, t.q - k);
            const auto word = oracle::naive_encode(testing::random_vector(rng, k, t.q), t);
            const auto r = received_from(word, testing::random_subset(rng, t.q, size), t);
            const auto d = run(r, stack, t);
            REQUIRE(evaluate_all_low_memory(d.coeffs, d.logpi, r, t) == d.all);
            const auto erased = complement(r);
            const auto direct = evaluate_at_points(d.coeffs, d.logpi, erased, t);
            for (std::size_t i = 0; i < erased.size(); ++i) REQUIRE(direct[i] == d.all[erased[i]]);
        }
    }
}

TEST_CASE("GF(8): degree-3 polynomial from four points, both full evaluators") {
    std::mt19937_64 rng(59);
    const auto t = gf::build_field(3);
    auto stack = precompute_inverse_stack(t);
    for (int trial = 0; trial < 50; ++trial) {
        const auto word = oracle::naive_encode(testing::random_vector(rng, 4, 8), t);
        const auto r = received_from(word, testing::random_subset(rng, 8, 4), t);
        const auto d = run(r, stack, t);
        REQUIRE(d.all == word);
        REQUIRE(evaluate_all_low_memory(d.coeffs, d.logpi, r, t) == d.all);
    }
}

TEST_CASE("extra received points do not change the result") {
    std::mt19937_64 rng(61);
    const auto t = gf::build_field(7);
    auto stack = precompute_inverse_stack(t);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t k = 1 + testing::uniform(rng, 100);
        const auto word = oracle::naive_encode(testing::random_vector(rng, k, t.q), t);
        const auto big = testing::random_subset(rng, t.q, k + 9);
        std::vector<std::uint32_t> small(big.begin(), big.end());
        std::shuffle(small.begin(), small.end(), rng);
        small.resize(k);
        std::sort(small.begin(), small.end());
        REQUIRE(run(received_from(word, big, t), stack, t).all == run(received_from(word, small, t), stack, t).all);
    }
}

TEST_CASE("bit m of the wrapped double transform is the exact convolution parity") {
    std::mt19937_64 rng(67);
    for (unsigned m = 1; m <= 8; ++m) {
        const std::size_t q = std::size_t{1} << m;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::int64_t> a(q), b(q);
            for (auto& x : a) x = rng() & 1;
            for (auto& x : b) x = rng() & 1;

            auto ea = walsh::fwht(walsh::make_vector(walsh::Mode::Exact, a));
            const auto eb = walsh::fwht(walsh::make_vector(walsh::Mode::Exact, b));
            for (std::size_t x = 0; x < q; ++x) ea.data[x] *= eb.data[x];
            const auto exact = walsh::fwht(ea);

            std::vector<std::uint32_t> wa(a.begin(), a.end()), wb(b.begin(), b.end());
            kernels::fwht_wrap(wa);
            kernels::fwht_wrap(wb);
            for (std::size_t x = 0; x < q; ++x) wa[x] *= wb[x];
            kernels::fwht_wrap(wa);

            for (std::size_t x = 0; x < q; ++x) {
                REQUIRE(exact.data[x] % static_cast<std::int64_t>(q) == 0);
                const std::int64_t parity = (exact.data[x] / static_cast<std::int64_t>(q)) & 1;
                REQUIRE(((wa[x] >> m) & 1u) == static_cast<std::uint32_t>(parity));
            }
        }
    }
}

TEST_CASE("halved inversion planes") {
    for (unsigned m : {2u, 7u, 16u}) {
        const auto t = gf::build_field(m);
        const auto f = precompute_field_transforms(t);
        REQUIRE(f->narrow());
        const std::uint32_t mask = (2u << m) - 1;
        for (unsigned j = 0; j < m; ++j) {
            const auto full = f->ihat_plane(j);
            const std::uint16_t* half = f->ihat_half.data() + j * f->narrow_stride;
            for (std::uint32_t x = 0; x < t.q; ++x) {
                // Doubling the halved value recovers the residue modulo 2^(m+1).
                REQUIRE((full[x] & 1u) == 0);
                REQUIRE(((std::uint32_t{half[x]} * 2) & mask) == full[x]);
            }
        }
    }
    CHECK_FALSE(precompute_field_transforms(gf::build_field(17))->narrow());
}

TEST_CASE("wide evaluation path above m = 16") {
    std::mt19937_64 rng(1717);
    for (unsigned m : {17u, 18u}) {
        const auto t = gf::build_field(m);
        auto stack = precompute_inverse_stack(t);
        const std::uint32_t k = 300;
        const auto coeffs = testing::random_vector(rng, k, t.q);
        const auto pts = testing::random_subset(rng, t.q, t.q / 2);
        // Ground truth on a sample of erased points, by Horner.
        auto horner = [&](std::uint32_t x) {
            Element v = 0;
            for (std::size_t i = k; i-- > 0;) v = gf::mul(v, x, t) ^ coeffs[i];
            return v;
        };
        std::vector<Element> vals(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = horner(pts[i]);
        const auto r = ReceivedSet::from_points(t, pts, vals);
        const auto d = run(r, stack, t);
        CHECK(stack.chat_half(0).empty());
        CHECK(stack.chat(0).size() == t.q);
        int checked = 0;
        for (std::uint32_t x = 0; x < t.q && checked < 200; x += 997)
            if (!r.contains(x)) {
                REQUIRE(d.all[x] == horner(x));
                ++checked;
            }
        CHECK(checked > 50);
    }
}
