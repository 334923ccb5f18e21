#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "posetlab/bigint.hpp"
#include "posetlab/extensions.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

// Exact (n-2)-volume of the slice {v(z2)-v(z1) = s, v(z3)-v(z2) = t} of the order polytope,
// measured in the coordinates other than z2, z3.
Rational volume_formula(const FTable& F, const Rational& s, const Rational& t);

struct McEstimate {
    double mean = 0;
    double std_error = 0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

inline constexpr std::uint64_t min_mc_samples = 10000;

// Hit-or-miss estimate. Sub-streams are fixed per chunk, so the result does not depend on
// `threads`. Throws DegenerateSlice for s, t outside (0,1), s + t >= 1, or an empty slice.
McEstimate volume_mc(const Poset& p, const MarkedTriple& z, const Rational& s, const Rational& t,
                     std::uint64_t samples, std::uint64_t seed, int threads = 1);

// Recovers F from any evaluator of the slice volume by exact interpolation on a triangular grid.
std::map<Cell, Count> interpolate_f_table(int n, const std::function<Rational(const Rational&, const Rational&)>& volume);

}  // namespace posetlab
