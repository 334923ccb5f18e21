#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace posetlab {

using Mask = std::uint64_t;
using Relation = std::pair<int, int>;

inline constexpr int max_elements = 64;

constexpr Mask bit(int x) { return Mask{1} << x; }

struct MarkedTriple {
    int z1 = 0;
    int z2 = 1;
    int z3 = 2;

    std::array<int, 3> as_array() const { return {z1, z2, z3}; }
    MarkedTriple reversed() const { return {z3, z2, z1}; }
    auto operator<=>(const MarkedTriple&) const = default;
};

// Strict partial order on 0..n-1, stored as transitively closed bitmask rows.
class Poset {
public:
    Poset() = default;

    // Closes `relations` transitively. Throws CycleDetected or IndexOutOfRange.
    static Poset build(int n, std::span<const Relation> relations);
    static Poset chain(int n);
    static Poset antichain(int n);

    int size() const noexcept { return n_; }
    Mask all() const noexcept { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

    bool less(int x, int y) const { return (above_[x] >> y) & 1U; }
    bool leq(int x, int y) const { return x == y || less(x, y); }
    bool comparable(int x, int y) const { return x == y || less(x, y) || less(y, x); }
    bool incomparable(int x, int y) const { return !comparable(x, y); }

    // Strict down-set / up-set of x.
    Mask below(int x) const { return below_[x]; }
    Mask above(int x) const { return above_[x]; }
    Mask incomparable_to(int x) const { return all() & ~(below_[x] | above_[x] | bit(x)); }

    std::vector<Relation> covers() const;
    std::vector<Relation> relations() const;

    Poset dual() const;
    Poset with_relations(std::span<const Relation> extra) const;
    // Element x of this poset becomes element perm[x].
    Poset relabeled(std::span<const int> perm) const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    int n_ = 0;
    std::vector<Mask> below_;
    std::vector<Mask> above_;
};

void check_triple(const Poset& p, const MarkedTriple& z);
bool is_chain_triple(const Poset& p, const MarkedTriple& z);
// Adds z1 < z2 < z3 and recloses. Throws CycleDetected if the order is inconsistent.
Poset normalize(const Poset& p, const MarkedTriple& z);

struct PosetParams {
    int n = 0;
    std::vector<int> b;
    std::vector<int> b_star;
    std::vector<int> t;
    std::vector<int> t_star;
    int width = 0;
    int height = 0;

    // |{z : x <= z <= y}|, zero unless x <= y.
    int interval(int x, int y) const { return b_interval[static_cast<std::size_t>(x) * n + y]; }

    std::vector<int> b_interval;
};

PosetParams params(const Poset& p);

// u(x,y) = |{z : z || y, z <= x}| and u*(x,y) = |{z : z || y, z >= x}|.
int u_lower(const Poset& p, int x, int y);
int u_upper(const Poset& p, int x, int y);

// Dilworth: n minus a maximum matching in the comparability bigraph.
int width(const Poset& p);
int height(const Poset& p);

bool is_thin(const Poset& p, const MarkedTriple& z, int t);
bool is_flat(const Poset& p, const MarkedTriple& z, int t);
int min_thin_t(const Poset& p, const MarkedTriple& z);
int min_flat_t(const Poset& p, const MarkedTriple& z);

struct CanonicalKey {
    bool exact = true;  // false above canonical_limit: an invariant hash only
    int n = 0;
    std::array<std::uint64_t, 2> bits{};
    auto operator<=>(const CanonicalKey&) const = default;
};

inline constexpr int canonical_limit = 9;

CanonicalKey canonical_key(const Poset& p);
Poset canonical_form(const Poset& p);

}  // namespace posetlab
