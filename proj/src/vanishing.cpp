#include "posetlab/vanishing.hpp"

#include <string>

#include "posetlab/error.hpp"

namespace posetlab {

SupportRegion support(const PosetParams& q, const MarkedTriple& z) {
    const int n = q.n;
    SupportRegion r;
    r.k_lo = q.interval(z.z1, z.z2) - 1;
    r.k_hi = n + 1 - q.b[z.z1] - q.b_star[z.z2];
    r.l_lo = q.interval(z.z2, z.z3) - 1;
    r.l_hi = n + 1 - q.b_star[z.z3] - q.b[z.z2];
    r.s_lo = q.interval(z.z1, z.z3) - 1;
    r.s_hi = n + 1 - q.b_star[z.z3] - q.b[z.z1];
    return r;
}

SupportRegion support(const Poset& p, const MarkedTriple& z) {
    check_triple(p, z);
    if (!is_chain_triple(p, z)) throw Error(ErrorKind::bad_triple, "support needs z1 < z2 < z3");
    return support(params(p), z);
}

PointSet points(const SupportRegion& region) {
    PointSet out;
    for (int k = std::max(region.k_lo, 1); k <= region.k_hi; ++k) {
        for (int l = std::max(region.l_lo, 1); l <= region.l_hi; ++l) {
            if (region.contains(k, l)) out.insert({k, l});
        }
    }
    return out;
}

PointSet brute_support(const FTable& F) {
    PointSet out;
    for (const auto& [cell, c] : F.entries()) out.insert(cell);
    return out;
}

bool exists_extension_at(const Poset& p, std::span<const int> zs, std::span<const int> positions) {
    const int n = p.size();
    if (zs.size() != positions.size()) throw Error(ErrorKind::bad_params, "one position per element");
    for (int x : zs) {
        if (x < 0 || x >= n) throw Error(ErrorKind::index_out_of_range, "element out of range");
    }
    for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
        if (!p.less(zs[i], zs[i + 1])) {
            throw Error(ErrorKind::bad_chain, "elements " + std::to_string(zs[i]) + " and " +
                                                  std::to_string(zs[i + 1]) + " are not increasing");
        }
        if (positions[i] >= positions[i + 1]) throw Error(ErrorKind::bad_params, "positions must increase");
    }
    for (int a : positions) {
        if (a < 1 || a > n) throw Error(ErrorKind::bad_params, "position outside [1,n]");
    }
    const auto q = params(p);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (q.b[zs[i]] > positions[i]) return false;
        if (q.b_star[zs[i]] > n - positions[i] + 1) return false;
        for (std::size_t j = i + 1; j < zs.size(); ++j) {
            if (positions[j] - positions[i] < q.interval(zs[i], zs[j]) - 1) return false;
        }
    }
    return true;
}

bool hexagon_closure_check(const PointSet& cells) {
    if (cells.empty()) return true;
    int k_min = cells.begin()->first, k_max = k_min;
    int l_min = cells.begin()->second, l_max = l_min;
    for (auto [k, l] : cells) {
        k_min = std::min(k_min, k);
        k_max = std::max(k_max, k);
        l_min = std::min(l_min, l);
        l_max = std::max(l_max, l);
    }
    for (int k = k_min; k <= k_max; ++k) {
        for (int l = l_min; l <= l_max; ++l) {
            if (cells.count({k, l}) && cells.count({k + 1, l + 1}) &&
                !(cells.count({k + 1, l}) && cells.count({k, l + 1}))) {
                return false;
            }
        }
    }
    return true;
}

bool hexagon_closure_check(const SupportRegion& region) { return hexagon_closure_check(points(region)); }

EqualityVerdict equality_case_check(const Poset& p, const MarkedTriple& z, const FTable& F, int k, int l) {
    check_triple(p, z);
    if (F(k, l + 2) != 0 || F(k + 2, l) != 0) {
        throw Error(ErrorKind::hypotheses_not_met, "needs F(k,l+2) = F(k+2,l) = 0");
    }
    if (F(k, l) == 0 || F(k + 1, l + 1) == 0) {
        throw Error(ErrorKind::hypotheses_not_met, "needs F(k,l) F(k+1,l+1) > 0");
    }
    EqualityVerdict v;
    v.lhs = F(k + 1, l) * F(k, l + 1);
    v.rhs = F(k, l) * F(k + 1, l + 1);
    v.products_equal = v.lhs == v.rhs;
    v.z2_comparable_to_all = p.incomparable_to(z.z2) == 0;
    return v;
}

}  // namespace posetlab
