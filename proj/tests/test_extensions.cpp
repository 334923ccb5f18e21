#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "posetlab/error.hpp"
#include "posetlab/extensions.hpp"

using namespace posetlab;

TEST_CASE("small closed forms") {
    CHECK(count_extensions(Poset::chain(30)) == 1);
    CHECK(count_extensions(Poset::antichain(6)) == 720);
    CHECK(count_extensions(Poset::antichain(12)) == factorial(12));
    CHECK(count_extensions(Poset::antichain(0)) == 1);
    // A 22-chain plus two free points exceeds the 64-bit path.
    std::vector<Relation> rel;
    for (int i = 0; i + 1 < 22; ++i) rel.emplace_back(i, i + 1);
    CHECK(count_extensions(Poset::build(24, rel)) == 24 * 23);
}

TEST_CASE("counts exceeding 64 bits") {
    const Poset p = Poset::antichain(22);
    CHECK(count_extensions(p) == factorial(22));
}

TEST_CASE("state budget") {
    DpOptions tight;
    tight.max_states = 1000;
    try {
        count_extensions(Poset::antichain(20), tight);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::too_large);
    }
}

TEST_CASE("enumeration is lexicographic and complete") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Poset p = oracle::random_poset(rng, n, 0.3);
        const auto brute = oracle::extensions(p);
        const auto ours = enumerate_extensions(p);
        REQUIRE(ours.size() == brute.size());
        for (std::size_t i = 0; i < ours.size(); ++i) {
            CHECK(ours[i].word == brute[i]);
            CHECK(is_linear_extension(p, ours[i].word));
        }
        CHECK(count_extensions(p) == static_cast<unsigned long>(brute.size()));
    }
}

TEST_CASE("tables match brute force") {
    std::mt19937_64 rng(12);
    int seen = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Poset p = oracle::random_poset(rng, n, 0.1 + 0.1 * static_cast<double>(rng() % 4));
        MarkedTriple z;
        if (!oracle::random_chain_triple(rng, p, z)) continue;
        ++seen;
        const FTable F = f_table(p, z);
        CHECK(F.entries() == oracle::f_table(p, z));
        CHECK(F.total() == count_extensions(p));

        // Unordered triple in the original poset.
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        std::shuffle(ids.begin(), ids.end(), rng);
        const MarkedTriple free{ids[0], ids[1], ids[2]};
        CHECK(signed_gap_table(p, free).entries() == oracle::f_table(p, free));

        const int a = ids[3 % n];
        const NVector N = n_vector(p, a);
        const auto brute = oracle::n_vector(p, a);
        for (int k = 1; k <= n; ++k) {
            const auto it = brute.find(k);
            CHECK(N(k) == (it == brute.end() ? Count(0) : it->second));
        }
    }
    CHECK(seen > 40);
}

TEST_CASE("duality swaps the gaps") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 80; ++trial) {
        const Poset p = oracle::random_poset(rng, 8, 0.3);
        MarkedTriple z;
        if (!oracle::random_chain_triple(rng, p, z)) continue;
        const FTable F = f_table(p, z);
        const FTable G = f_table(p.dual(), z.reversed());
        for (const auto& [cell, c] : F.entries()) CHECK(G(cell.second, cell.first) == c);
        CHECK(F.total() == G.total());
    }
}

TEST_CASE("marginals of the table are pair gap counts") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 80; ++trial) {
        const Poset p = oracle::random_poset(rng, 9, 0.25);
        MarkedTriple z;
        if (!oracle::random_chain_triple(rng, p, z)) continue;
        const FTable F = f_table(p, z);
        std::map<int, Count> by_k, by_l, by_sum;
        for (const auto& [cell, c] : F.entries()) {
            by_k[cell.first] += c;
            by_l[cell.second] += c;
            by_sum[cell.first + cell.second] += c;
        }
        CHECK(by_k == gap_counts(p, z.z1, z.z2));
        CHECK(by_l == gap_counts(p, z.z2, z.z3));
        CHECK(by_sum == gap_counts(p, z.z1, z.z3));
    }
}

TEST_CASE("position counts") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        const Poset p = oracle::random_poset(rng, 7, 0.25);
        const std::vector<int> marked{4, 1, 6, 2};
        std::map<std::vector<int>, Count> brute;
        for (const auto& w : oracle::extensions(p)) {
            std::vector<int> pos(4);
            for (int i = 0; i < 7; ++i) {
                for (int j = 0; j < 4; ++j) {
                    if (w[i] == marked[j]) pos[j] = i + 1;
                }
            }
            brute[pos] += 1;
        }
        CHECK(position_counts(p, marked) == brute);
    }
}

TEST_CASE("f_table wants a chain triple") {
    try {
        f_table(Poset::antichain(4), {0, 1, 2});
        FAIL("expected BadTriple");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::bad_triple);
    }
}
