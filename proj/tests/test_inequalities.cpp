#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "posetlab/families.hpp"
#include "posetlab/inequalities.hpp"

using namespace posetlab;

namespace {

FTable table_of(int n, std::map<Cell, Count> cells) { return FTable(n, {0, 1, 2}, std::move(cells)); }

}  // namespace

TEST_CASE("verdicts on a hand-made table") {
    // A=F(2,1)=3, B=F(1,2)=4, C=F(1,1)=2, D=F(2,2)=5.
    const FTable F = table_of(9, {{{1, 1}, 2}, {{1, 2}, 4}, {{2, 1}, 3}, {{2, 2}, 5}});
    const auto r = check_cpc(F, 1, 1);
    CHECK(r.lhs == 10);
    CHECK(r.rhs == 12);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.slack() == 2);
    CHECK(*r.ratio() == Rational(6, 5));

    const auto v = check_cpc(F, 3, 3);
    CHECK(v.verdict == Verdict::vacuous);
    CHECK(!v.ratio());

    const FTable G = table_of(9, {{{1, 1}, 3}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 1}});
    CHECK(check_cpc(G, 1, 1).verdict == Verdict::fails);
}

TEST_CASE("which ids are theorems") {
    for (const char* id : {"cpc", "cpc1", "cpc2", "gcpc", "gcpc-signed"}) CHECK(!is_proved(id));
    for (const char* id : {"two-of-three", "logc1", "half", "main", "thin", "converse", "cpc-eps", "stanley-ratio"}) {
        CHECK(is_proved(id));
    }
}

TEST_CASE("cpc2 fails on its counterexample family with ratio l/(l+1)") {
    for (int k = 1; k <= 3; ++k) {
        for (int l = 2; l <= 5; ++l) {
            const auto fam = build_prop71(k, l);
            const auto r = check_cpc2(f_table(fam.poset, fam.triple), k, l);
            CHECK(r.verdict == Verdict::fails);
            CHECK(*r.ratio() == Rational(l, l + 1));
        }
    }
}

TEST_CASE("proved inequalities hold on random posets") {
    std::mt19937_64 rng(41);
    int nonvacuous = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6);
        const Poset raw = oracle::random_poset(rng, n, 0.1 + 0.1 * static_cast<double>(rng() % 4));
        MarkedTriple z;
        if (!oracle::random_chain_triple(rng, raw, z)) continue;
        const Poset p = normalize(raw, z);
        const FTable F = f_table(p, z);
        for (const auto& id : window_ids()) {
            if (!is_proved(id)) continue;
            for (int k = 1; k < n; ++k) {
                for (int l = 1; k + l < n; ++l) {
                    const auto r = check_by_id(id, F, p, k, l);
                    CHECK_MESSAGE(r.verdict != Verdict::fails, id << " at (" << k << "," << l << ")");
                    nonvacuous += r.verdict == Verdict::holds;
                }
            }
        }
        for (int a = 0; a < n; ++a) {
            const NVector N = n_vector(p, a);
            for (int k = 1; k <= n; ++k) {
                for (const auto& r : check_stanley_bounds(N, k)) CHECK(r.verdict != Verdict::fails);
            }
        }
    }
    CHECK(nonvacuous > 1000);
}

TEST_CASE("two-of-three on a single failing cpc") {
    const auto fam = build_prop71(1, 2);
    const FTable F = f_table(fam.poset, fam.triple);
    const auto r = check_two_of_three(F, 1, 2);
    CHECK(r.verdict == Verdict::holds);
}

TEST_CASE("gcpc reduces to cpc on adjacent cells") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const Poset raw = oracle::random_poset(rng, 7, 0.3);
        MarkedTriple z;
        if (!oracle::random_chain_triple(rng, raw, z)) continue;
        const FTable F = f_table(normalize(raw, z), z);
        for (int k = 1; k < 6; ++k) {
            for (int l = 1; k + l < 7; ++l) {
                const auto g = check_gcpc(F, k, l, k + 1, l + 1);
                const auto c = check_cpc(F, k, l);
                CHECK(g.lhs == c.lhs);
                CHECK(g.rhs == c.rhs);
            }
        }
    }
}

TEST_CASE("a cpc2 failure yields the signed gcpc instance") {
    const auto fam = build_prop71(1, 2);
    const MarkedTriple swapped{fam.triple.z2, fam.triple.z1, fam.triple.z3};
    const FTable S = signed_gap_table(fam.poset, swapped);
    const auto r = check_gcpc_from_cpc2(S, 1, 2);
    CHECK(r.id == "gcpc-signed");
    CHECK(r.verdict == Verdict::fails);
    CHECK(*r.p == -1);
    CHECK(*r.q == 5);
}

TEST_CASE("cpc1 can fail on a width-two poset") {
    // 3 < 1 < 0 < 4, 5 < 1, 5 < 2 < 0; marked (5,1,0). F(3,1)=2, F(1,2)=F(2,1)=F(2,2)=1.
    const std::vector<Relation> rel{{0, 4}, {1, 0}, {2, 0}, {3, 1}, {5, 1}, {5, 2}};
    const Poset p = Poset::build(6, rel);
    CHECK(width(p) == 2);
    const MarkedTriple z{5, 1, 0};
    CHECK(oracle::f_table(p, z) == std::map<Cell, Count>{{{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 1}, 2}});
    const FTable F = f_table(p, z);
    const auto r = check_cpc1(F, 1, 1);
    CHECK(r.verdict == Verdict::fails);
    CHECK(r.lhs == 2);
    CHECK(r.rhs == 1);
    // Every positive-index instance of gcpc holds on this poset.
    for (const auto& [a, va] : F.entries()) {
        for (const auto& [b, vb] : F.entries()) {
            if (a.first <= b.first && a.second <= b.second) {
                CHECK(check_gcpc(F, a.first, a.second, b.first, b.second).verdict != Verdict::fails);
            }
        }
    }
}
