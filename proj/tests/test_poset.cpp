#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "posetlab/error.hpp"
#include "posetlab/poset.hpp"

using namespace posetlab;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::bad_params;
}

}  // namespace

TEST_CASE("build closes relations transitively") {
    const std::vector<Relation> rel{{0, 1}, {1, 2}, {3, 2}};
    const Poset p = Poset::build(4, rel);
    CHECK(p.less(0, 2));
    CHECK(p.less(3, 2));
    CHECK(p.incomparable(0, 3));
    CHECK(p.below(2) == (bit(0) | bit(1) | bit(3)));
    CHECK(p.covers() == std::vector<Relation>{{0, 1}, {1, 2}, {3, 2}});
    CHECK(p.relations().size() == 4);
}

TEST_CASE("build rejects cycles and bad ids") {
    const std::vector<Relation> cycle{{0, 1}, {1, 2}, {2, 0}};
    CHECK(kind_of([&] { Poset::build(3, cycle); }) == ErrorKind::cycle_detected);
    const std::vector<Relation> loop{{1, 1}};
    CHECK(kind_of([&] { Poset::build(3, loop); }) == ErrorKind::cycle_detected);
    const std::vector<Relation> out{{0, 3}};
    CHECK(kind_of([&] { Poset::build(3, out); }) == ErrorKind::index_out_of_range);
    CHECK(kind_of([&] { Poset::build(65, {}); }) == ErrorKind::too_large);
}

TEST_CASE("triples") {
    const Poset p = Poset::antichain(4);
    CHECK(kind_of([&] { check_triple(p, {0, 0, 1}); }) == ErrorKind::bad_triple);
    CHECK(!is_chain_triple(p, {0, 1, 2}));
    const Poset q = normalize(p, {2, 0, 3});
    CHECK(is_chain_triple(q, {2, 0, 3}));
    CHECK(q.less(2, 3));
    CHECK(q.incomparable(1, 2));
    const Poset c = Poset::chain(3);
    CHECK(kind_of([&] { normalize(c, {2, 1, 0}); }) == ErrorKind::cycle_detected);
}

TEST_CASE("dual reverses the order") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const Poset p = oracle::random_poset(rng, 7, 0.3);
        const Poset d = p.dual();
        for (int x = 0; x < 7; ++x) {
            for (int y = 0; y < 7; ++y) CHECK(p.less(x, y) == d.less(y, x));
        }
        CHECK(d.dual() == p);
    }
}

TEST_CASE("width and height agree with subset enumeration") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const double density = 0.05 + 0.1 * static_cast<double>(rng() % 6);
        const Poset p = oracle::random_poset(rng, n, density);
        CHECK(width(p) == oracle::width(p));
        CHECK(height(p) == oracle::height(p));
    }
    CHECK(width(Poset::antichain(64)) == 64);
    CHECK(height(Poset::chain(64)) == 64);
}

TEST_CASE("parameters follow their definitions") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Poset p = oracle::random_poset(rng, n, 0.3);
        const auto q = params(p);
        const auto qd = params(p.dual());
        for (int x = 0; x < n; ++x) {
            CHECK(q.b[x] == std::popcount(p.below(x) | bit(x)));
            CHECK(q.b_star[x] == std::popcount(p.above(x) | bit(x)));
            CHECK(q.t[x] == oracle::t_lower(p, x));
            CHECK(q.t_star[x] == oracle::t_upper(p, x));
            CHECK(q.t_star[x] == qd.t[x]);
            CHECK(q.b_star[x] == qd.b[x]);
            for (int y = 0; y < n; ++y) {
                int count = 0;
                for (int z = 0; z < n; ++z) count += p.leq(x, z) && p.leq(z, y);
                CHECK(q.interval(x, y) == count);
            }
        }
        CHECK(q.width == width(p));
        CHECK(q.height == height(p));
    }
}

TEST_CASE("thin and flat thresholds are tight") {
    std::mt19937_64 rng(4);
    int seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Poset p = oracle::random_poset(rng, 7, 0.35);
        MarkedTriple z;
        if (!oracle::random_chain_triple(rng, p, z)) continue;
        ++seen;
        const int t = min_thin_t(p, z);
        CHECK(is_thin(p, z, t));
        if (t > 1) CHECK(!is_thin(p, z, t - 1));
        const int f = min_flat_t(p, z);
        CHECK(is_flat(p, z, f));
        if (f > 1) CHECK(!is_flat(p, z, f - 1));
    }
    CHECK(seen > 50);
}

TEST_CASE("canonical key is a complete isomorphism invariant up to nine elements") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Poset p = oracle::random_poset(rng, n, 0.3);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Poset q = p.relabeled(perm);
        CHECK(canonical_key(p) == canonical_key(q));
        CHECK(canonical_key(p).exact);
        CHECK(canonical_form(p) == canonical_form(q));
        CHECK(canonical_key(canonical_form(p)) == canonical_key(p));
    }
    CHECK(canonical_key(Poset::chain(5)) != canonical_key(Poset::antichain(5)));
    const std::vector<Relation> v{{0, 1}, {0, 2}};
    const std::vector<Relation> wedge{{1, 0}, {2, 0}};
    CHECK(canonical_key(Poset::build(3, v)) != canonical_key(Poset::build(3, wedge)));
    CHECK(!canonical_key(Poset::chain(10)).exact);
}
