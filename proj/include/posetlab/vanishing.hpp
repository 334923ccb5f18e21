#pragma once

#include <set>
#include <span>

#include "posetlab/extensions.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

struct SupportRegion {
    int k_lo = 0, k_hi = 0;
    int l_lo = 0, l_hi = 0;
    int s_lo = 0, s_hi = 0;  // bounds on k + l

    bool contains(int k, int l) const {
        return k_lo <= k && k <= k_hi && l_lo <= l && l <= l_hi && s_lo <= k + l && k + l <= s_hi;
    }
};

using PointSet = std::set<Cell>;

SupportRegion support(const Poset& p, const MarkedTriple& z);
SupportRegion support(const PosetParams& q, const MarkedTriple& z);

PointSet points(const SupportRegion& region);
PointSet brute_support(const FTable& F);

// zs must form a chain in the given order; positions strictly increasing in [1,n].
bool exists_extension_at(const Poset& p, std::span<const int> zs, std::span<const int> positions);

bool hexagon_closure_check(const PointSet& cells);
bool hexagon_closure_check(const SupportRegion& region);

struct EqualityVerdict {
    Count lhs;  // F(k+1,l) F(k,l+1)
    Count rhs;  // F(k,l) F(k+1,l+1)
    bool products_equal = false;
    bool z2_comparable_to_all = false;
    bool holds() const { return products_equal && z2_comparable_to_all; }
};

// Needs F(k,l+2) = F(k+2,l) = 0 and F(k,l) F(k+1,l+1) > 0, else HypothesesNotMet.
EqualityVerdict equality_case_check(const Poset& p, const MarkedTriple& z, const FTable& F, int k, int l);

}  // namespace posetlab
