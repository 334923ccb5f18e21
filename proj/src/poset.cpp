#include "posetlab/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

#include "posetlab/error.hpp"

namespace posetlab {

namespace {

int popcount(Mask m) { return std::popcount(m); }

void check_index(int n, int x) {
    if (x < 0 || x >= n) {
        throw Error(ErrorKind::index_out_of_range,
                    "element " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
    }
}

}  // namespace

Poset Poset::build(int n, std::span<const Relation> relations) {
    if (n < 0 || n > max_elements) {
        throw Error(ErrorKind::too_large, "poset size " + std::to_string(n) + " exceeds 64");
    }
    Poset p;
    p.n_ = n;
    p.above_.assign(n, 0);
    p.below_.assign(n, 0);
    for (auto [x, y] : relations) {
        check_index(n, x);
        check_index(n, y);
        if (x == y) throw Error(ErrorKind::cycle_detected, "reflexive pair " + std::to_string(x));
        p.above_[x] |= bit(y);
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if ((p.above_[i] >> k) & 1U) p.above_[i] |= p.above_[k];
        }
    }
    for (int x = 0; x < n; ++x) {
        if ((p.above_[x] >> x) & 1U) {
            throw Error(ErrorKind::cycle_detected, "element " + std::to_string(x) + " lies on a cycle");
        }
        for (Mask m = p.above_[x]; m != 0; m &= m - 1) p.below_[std::countr_zero(m)] |= bit(x);
    }
    return p;
}

Poset Poset::chain(int n) {
    std::vector<Relation> rel;
    for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    return build(n, rel);
}

Poset Poset::antichain(int n) { return build(n, {}); }

std::vector<Relation> Poset::covers() const {
    std::vector<Relation> out;
    for (int x = 0; x < n_; ++x) {
        Mask strictly_between = 0;
        for (Mask m = above_[x]; m != 0; m &= m - 1) strictly_between |= above_[std::countr_zero(m)];
        for (Mask m = above_[x] & ~strictly_between; m != 0; m &= m - 1) {
            out.emplace_back(x, std::countr_zero(m));
        }
    }
    return out;
}

std::vector<Relation> Poset::relations() const {
    std::vector<Relation> out;
    for (int x = 0; x < n_; ++x) {
        for (Mask m = above_[x]; m != 0; m &= m - 1) out.emplace_back(x, std::countr_zero(m));
    }
    return out;
}

Poset Poset::dual() const {
    Poset d = *this;
    std::swap(d.above_, d.below_);
    return d;
}

Poset Poset::with_relations(std::span<const Relation> extra) const {
    auto rel = relations();
    rel.insert(rel.end(), extra.begin(), extra.end());
    return build(n_, rel);
}

Poset Poset::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw Error(ErrorKind::bad_params, "relabeling has wrong length");
    }
    std::vector<Relation> rel;
    for (auto [x, y] : relations()) rel.emplace_back(perm[x], perm[y]);
    return build(n_, rel);
}

void check_triple(const Poset& p, const MarkedTriple& z) {
    for (int x : z.as_array()) check_index(p.size(), x);
    if (z.z1 == z.z2 || z.z2 == z.z3 || z.z1 == z.z3) {
        throw Error(ErrorKind::bad_triple, "marked elements must be distinct");
    }
}

bool is_chain_triple(const Poset& p, const MarkedTriple& z) {
    return p.less(z.z1, z.z2) && p.less(z.z2, z.z3);
}

Poset normalize(const Poset& p, const MarkedTriple& z) {
    check_triple(p, z);
    const Relation extra[] = {{z.z1, z.z2}, {z.z2, z.z3}};
    return p.with_relations(extra);
}

int u_lower(const Poset& p, int x, int y) {
    return popcount(p.incomparable_to(y) & (p.below(x) | bit(x)));
}

int u_upper(const Poset& p, int x, int y) {
    return popcount(p.incomparable_to(y) & (p.above(x) | bit(x)));
}

PosetParams params(const Poset& p) {
    const int n = p.size();
    PosetParams q;
    q.n = n;
    q.b.resize(n);
    q.b_star.resize(n);
    q.t.assign(n, 1);
    q.t_star.assign(n, 1);
    q.b_interval.assign(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) {
        q.b[x] = popcount(p.below(x)) + 1;
        q.b_star[x] = popcount(p.above(x)) + 1;
        for (int y = 0; y < n; ++y) {
            int size = 0;
            if (x == y) size = 1;
            else if (p.less(x, y)) size = popcount(p.above(x) & p.below(y)) + 2;
            q.b_interval[static_cast<std::size_t>(x) * n + y] = size;
        }
        int t = 0;
        int t_star = 0;
        for (Mask m = p.incomparable_to(x); m != 0; m &= m - 1) {
            const int y = std::countr_zero(m);
            t = std::max(t, u_lower(p, x, y));
            t_star = std::max(t_star, u_upper(p, x, y));
        }
        if (t > 0) q.t[x] = t;
        if (t_star > 0) q.t_star[x] = t_star;
    }
    q.width = width(p);
    q.height = height(p);
    return q;
}

int width(const Poset& p) {
    const int n = p.size();
    std::vector<int> match_right(n, -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int x) {
        for (Mask m = p.above(x); m != 0; m &= m - 1) {
            const int y = std::countr_zero(m);
            if (seen[y]) continue;
            seen[y] = 1;
            if (match_right[y] < 0 || augment(match_right[y])) {
                match_right[y] = x;
                return true;
            }
        }
        return false;
    };
    int matching = 0;
    for (int x = 0; x < n; ++x) {
        seen.assign(n, 0);
        if (augment(x)) ++matching;
    }
    return n - matching;
}

int height(const Poset& p) {
    const int n = p.size();
    // Longest chain ending at x depends only on elements with fewer predecessors.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return popcount(p.below(a)) < popcount(p.below(b)); });
    std::vector<int> longest(n, 1);
    int best = 0;
    for (int x : order) {
        for (Mask m = p.below(x); m != 0; m &= m - 1) {
            longest[x] = std::max(longest[x], longest[std::countr_zero(m)] + 1);
        }
        best = std::max(best, longest[x]);
    }
    return best;
}

namespace {

Mask triple_mask(const MarkedTriple& z) { return bit(z.z1) | bit(z.z2) | bit(z.z3); }

int thin_excess(const Poset& p, const MarkedTriple& z) {
    int worst = 0;
    for (int u = 0; u < p.size(); ++u) {
        if (triple_mask(z) & bit(u)) continue;
        worst = std::max(worst, p.size() - popcount(p.below(u)) - popcount(p.above(u)) - 2);
    }
    return worst;
}

int flat_excess(const Poset& p, const MarkedTriple& z) {
    int worst = 0;
    for (int u : z.as_array()) worst = std::max(worst, popcount(p.below(u)) + popcount(p.above(u)) + 2);
    return worst;
}

}  // namespace

bool is_thin(const Poset& p, const MarkedTriple& z, int t) {
    check_triple(p, z);
    return thin_excess(p, z) <= t - 1;
}

bool is_flat(const Poset& p, const MarkedTriple& z, int t) {
    check_triple(p, z);
    return flat_excess(p, z) <= t + 1;
}

int min_thin_t(const Poset& p, const MarkedTriple& z) {
    check_triple(p, z);
    return std::max(1, thin_excess(p, z) + 1);
}

int min_flat_t(const Poset& p, const MarkedTriple& z) {
    check_triple(p, z);
    return std::max(1, flat_excess(p, z) - 1);
}

namespace {

using Code = std::array<std::uint64_t, 2>;

Code adjacency_code(const Poset& p, const std::vector<int>& order) {
    Code code{};
    const int n = p.size();
    int pos = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j, ++pos) {
            if (p.less(order[i], order[j])) code[pos / 64] |= std::uint64_t{1} << (63 - pos % 64);
        }
    }
    return code;
}

struct Invariant {
    int below;
    int above;
    auto operator<=>(const Invariant&) const = default;
};

// Slot i of the best order holds the old element placed at new position i.
std::pair<Code, std::vector<int>> best_order(const Poset& p) {
    const int n = p.size();
    std::vector<Invariant> inv(n);
    for (int x = 0; x < n; ++x) inv[x] = {popcount(p.below(x)), popcount(p.above(x))};
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });

    std::vector<std::pair<int, int>> groups;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && inv[order[j]] == inv[order[i]]) ++j;
        groups.emplace_back(i, j);
        i = j;
    }

    Code best{~std::uint64_t{0}, ~std::uint64_t{0}};
    std::vector<int> best_perm = order;
    std::function<void(std::size_t)> visit = [&](std::size_t g) {
        if (g == groups.size()) {
            const Code c = adjacency_code(p, order);
            if (c < best) {
                best = c;
                best_perm = order;
            }
            return;
        }
        auto first = order.begin() + groups[g].first;
        auto last = order.begin() + groups[g].second;
        std::sort(first, last);
        do {
            visit(g + 1);
        } while (std::next_permutation(first, last));
    };
    visit(0);
    return {best, best_perm};
}

}  // namespace

CanonicalKey canonical_key(const Poset& p) {
    CanonicalKey key;
    key.n = p.size();
    if (p.size() <= canonical_limit) {
        key.bits = best_order(p).first;
        return key;
    }
    key.exact = false;
    std::vector<Invariant> inv(p.size());
    for (int x = 0; x < p.size(); ++x) inv[x] = {popcount(p.below(x)), popcount(p.above(x))};
    std::sort(inv.begin(), inv.end());
    std::uint64_t h = 1469598103934665603ULL;
    for (auto [lo, hi] : inv) {
        h = (h ^ static_cast<std::uint64_t>(lo)) * 1099511628211ULL;
        h = (h ^ static_cast<std::uint64_t>(hi)) * 1099511628211ULL;
    }
    key.bits = {h, static_cast<std::uint64_t>(p.relations().size())};
    return key;
}

Poset canonical_form(const Poset& p) {
    if (p.size() > canonical_limit) {
        throw Error(ErrorKind::too_large, "canonical form is only defined up to n=9");
    }
    const auto order = best_order(p).second;
    std::vector<int> perm(p.size());
    for (int i = 0; i < p.size(); ++i) perm[order[i]] = i;
    return p.relabeled(perm);
}

}  // namespace posetlab
