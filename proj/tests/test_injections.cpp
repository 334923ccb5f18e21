#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "posetlab/error.hpp"
#include "posetlab/injections.hpp"

using namespace posetlab;

TEST_CASE("tau swaps only incomparable neighbours") {
    const std::vector<Relation> rel{{0, 1}};
    const Poset p = Poset::build(3, rel);
    CHECK(tau(p, {0, 2, 1}, 1) == Word{2, 0, 1});
    CHECK(tau(p, {0, 1, 2}, 1) == Word{0, 1, 2});
    CHECK_THROWS_AS(tau(p, {0, 1, 2}, 3), Error);
}

TEST_CASE("stanley shift is inverted by its inverse") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const Poset p = oracle::random_poset(rng, n, 0.3);
        const auto ext = enumerate_extensions(p);
        for (int a = 0; a < n; ++a) {
            for (const auto& e : ext) {
                const int k = e.position(a);
                if (k == 1 || std::popcount(p.below(a)) == k - 1) continue;
                const auto img = stanley_shift(p, a, e.word);
                CHECK(LinearExtension{img.word}.position(a) == k - 1);
                CHECK(stanley_shift_inverse(p, a, img.word, img.payload.front()) == e.word);
            }
        }
    }
}

TEST_CASE("every injection certifies on random posets") {
    std::mt19937_64 rng(32);
    int certified = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const Poset p = oracle::random_poset(rng, n, 0.1 + 0.1 * static_cast<double>(rng() % 4));
        MarkedTriple z;
        if (!oracle::random_chain_triple(rng, p, z)) continue;
        const auto ext = enumerate_extensions(p);
        const FTable F = f_table(p, z);
        for (auto kind : {InjectionKind::gap_transfer, InjectionKind::gap_transfer_dual, InjectionKind::gap_shrink,
                          InjectionKind::gap_grow}) {
            for (auto [k, l] : applicable_windows(kind, F)) {
                const auto c = certify(kind, p, z, k, l, ext, IntervalConvention::widened);
                CHECK(c.ok());
                CHECK(Count(c.domain_size) <= c.codomain_bound);
                const Window w = window(kind, k, l);
                CHECK(Count(c.domain_size) == F(w.domain.first, w.domain.second));
                ++certified;
            }
        }
        for (int a = 0; a < n; ++a) {
            const NVector N = n_vector(p, a);
            for (int k = 2; k <= n; ++k) {
                if (N(k - 1) == 0) continue;
                CHECK(certify_stanley(p, a, k, ext).ok());
            }
        }
    }
    CHECK(certified > 100);
}

TEST_CASE("the b(z1,z2)-2 payload bound is too small for the transfer map") {
    const std::vector<Relation> rel{{0, 5}, {2, 1}, {2, 5}, {3, 0}, {3, 2}, {4, 0}, {4, 1}};
    const Poset p = Poset::build(6, rel);
    const MarkedTriple z{4, 0, 5};
    const auto ext = enumerate_extensions(p);
    const auto stated = certify(InjectionKind::gap_transfer, p, z, 1, 1, ext, IntervalConvention::as_stated);
    CHECK(stated.injective());
    CHECK(stated.payload_violations == 1);
    CHECK(stated.domain_size == 2);
    CHECK(stated.codomain_bound == 1);
    const auto widened = certify(InjectionKind::gap_transfer, p, z, 1, 1, ext, IntervalConvention::widened);
    CHECK(widened.ok());
}

TEST_CASE("certify refuses an empty target") {
    const Poset p = Poset::chain(4);
    const auto ext = enumerate_extensions(p);
    try {
        certify(InjectionKind::gap_shrink, p, {0, 1, 3}, 1, 1, ext);
        FAIL("expected HypothesesNotMet");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::hypotheses_not_met);
    }
}

TEST_CASE("declared intervals") {
    const Poset p = Poset::antichain(5);
    const Poset q = normalize(p, {0, 1, 2});
    const auto b = declared_intervals(InjectionKind::gap_shrink, q, {0, 1, 2}, 1, 1);
    CHECK(!b.cases.empty());
    Count sum = 0;
    for (const auto& c : b.cases) sum += c.size();
    CHECK(sum == b.total());
    CHECK_THROWS_AS(declared_intervals(InjectionKind::stanley_shift, q, {0, 1, 2}, 1, 1), Error);
}
