#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "posetlab/error.hpp"
#include "posetlab/geometry.hpp"

using namespace posetlab;

TEST_CASE("slice volume of a three-chain") {
    const FTable F = f_table(Poset::chain(3), {0, 1, 2});
    CHECK(volume_formula(F, Rational(1, 3), Rational(1, 3)) == Rational(1, 3));
    CHECK(volume_formula(F, Rational(1, 5), Rational(1, 2)) == Rational(3, 10));
}

TEST_CASE("interpolation recovers the table from exact volumes") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const Poset raw = oracle::random_poset(rng, n, 0.3);
        MarkedTriple z;
        if (!oracle::random_chain_triple(rng, raw, z)) continue;
        const FTable F = f_table(normalize(raw, z), z);
        const auto cells = interpolate_f_table(n, [&](const Rational& s, const Rational& t) {
            return volume_formula(F, s, t);
        });
        CHECK(cells == F.entries());
    }
}

TEST_CASE("monte carlo agrees with the formula") {
    const std::vector<Relation> rel{{0, 1}, {1, 2}, {3, 2}};
    const Poset p = Poset::build(4, rel);
    const MarkedTriple z{0, 1, 2};
    const Rational s(1, 5), t(1, 4);
    const auto est = volume_mc(p, z, s, t, 200000, 9, 1);
    const double exact = volume_formula(f_table(p, z), s, t).get_d();
    CHECK(std::abs(est.mean - exact) <= 4 * est.std_error);
    const auto again = volume_mc(p, z, s, t, 200000, 9, 4);
    CHECK(again.hits == est.hits);
    CHECK(again.mean == est.mean);
}

TEST_CASE("degenerate slices") {
    const Poset p = Poset::chain(4);
    auto kind = [&](const Rational& s, const Rational& t) {
        try {
            volume_mc(p, {0, 1, 2}, s, t, 10000, 1);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::bad_params;
    };
    CHECK(kind(Rational(0), Rational(1, 2)) == ErrorKind::degenerate_slice);
    CHECK(kind(Rational(1, 2), Rational(1, 2)) == ErrorKind::degenerate_slice);
    CHECK(kind(Rational(3, 2), Rational(1, 4)) == ErrorKind::degenerate_slice);
    try {
        volume_mc(p, {2, 1, 0}, Rational(1, 4), Rational(1, 4), 10000, 1);
        FAIL("expected DegenerateSlice");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::degenerate_slice);
    }
}
