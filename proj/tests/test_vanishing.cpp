#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "posetlab/error.hpp"
#include "posetlab/search.hpp"
#include "posetlab/vanishing.hpp"

using namespace posetlab;

namespace {

std::vector<MarkedTriple> chain_triples(const Poset& p) {
    std::vector<MarkedTriple> out;
    for (int a = 0; a < p.size(); ++a) {
        for (int b = 0; b < p.size(); ++b) {
            for (int c = 0; c < p.size(); ++c) {
                if (p.less(a, b) && p.less(b, c)) out.push_back({a, b, c});
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("support region of a chain") {
    const Poset p = Poset::chain(5);
    const auto r = support(p, {0, 2, 4});
    CHECK(points(r) == PointSet{{2, 2}});
    CHECK(r.contains(2, 2));
    CHECK(!r.contains(1, 3));
}

TEST_CASE("support equals the nonzero cells on every small poset") {
    for (int n = 3; n <= 5; ++n) {
        for (const auto& p : enumerate_posets(n)) {
            for (const auto& z : chain_triples(p)) {
                const FTable F = f_table(p, z);
                const auto r = support(p, z);
                CHECK(points(r) == brute_support(F));
                CHECK(hexagon_closure_check(brute_support(F)));
                CHECK(hexagon_closure_check(r));
            }
        }
    }
}

TEST_CASE("support equals the nonzero cells on random posets") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 4);
        const Poset p = oracle::random_poset(rng, n, 0.1 + 0.1 * static_cast<double>(rng() % 4));
        MarkedTriple z;
        if (!oracle::random_chain_triple(rng, p, z)) continue;
        CHECK(points(support(p, z)) == brute_support(f_table(p, z)));
        CHECK(support(p, z).k_lo == support(params(p), z).k_lo);
    }
}

TEST_CASE("hexagon closure rejects a gap") {
    CHECK(hexagon_closure_check(PointSet{{1, 1}, {1, 2}, {2, 1}}));
    CHECK(!hexagon_closure_check(PointSet{{1, 1}, {2, 2}}));
    CHECK(hexagon_closure_check(PointSet{{1, 1}, {1, 3}}));
    CHECK(!hexagon_closure_check(PointSet{{1, 2}, {2, 1}, {1, 1}, {2, 2}, {3, 3}}));
}

TEST_CASE("position feasibility agrees with brute force") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const Poset p = oracle::random_poset(rng, n, 0.35);
        // A chain picked greedily from a random start.
        std::vector<int> zs;
        int x = static_cast<int>(rng() % n);
        zs.push_back(x);
        for (int y = 0; y < n && zs.size() < 4; ++y) {
            if (p.less(zs.back(), y)) zs.push_back(y);
        }
        std::vector<int> pos(zs.size());
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<int> all(n);
            for (int i = 0; i < n; ++i) all[i] = i + 1;
            std::shuffle(all.begin(), all.end(), rng);
            std::copy_n(all.begin(), zs.size(), pos.begin());
            std::sort(pos.begin(), pos.end());
            CHECK(exists_extension_at(p, zs, pos) == oracle::exists_at(p, zs, pos));
        }
    }
}

TEST_CASE("equality case") {
    std::mt19937_64 rng(23);
    int applicable = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const Poset p = oracle::random_poset(rng, n, 0.3 + 0.1 * static_cast<double>(rng() % 3));
        MarkedTriple z;
        if (!oracle::random_chain_triple(rng, p, z)) continue;
        const FTable F = f_table(p, z);
        for (int k = 1; k < n; ++k) {
            for (int l = 1; k + l < n; ++l) {
                const bool hyp = F(k, l + 2) == 0 && F(k + 2, l) == 0 && F(k, l) * F(k + 1, l + 1) > 0;
                if (!hyp) {
                    CHECK_THROWS_AS(equality_case_check(p, z, F, k, l), Error);
                    continue;
                }
                ++applicable;
                const auto v = equality_case_check(p, z, F, k, l);
                CHECK(v.products_equal);
                CHECK(v.holds());
            }
        }
    }
    CHECK(applicable > 0);
}
