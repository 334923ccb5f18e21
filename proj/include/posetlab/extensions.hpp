#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "posetlab/bigint.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

using Word = std::vector<int>;

struct LinearExtension {
    Word word;

    // 1-based position of x.
    int position(int x) const;
    friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
    friend auto operator<=>(const LinearExtension&, const LinearExtension&) = default;
};

bool is_linear_extension(const Poset& p, std::span<const int> word);

inline constexpr int enumerate_limit = 14;

// Depth-first, smallest available element first: words come out in lexicographic order.
void for_each_extension(const Poset& p, const std::function<void(const LinearExtension&)>& visit);
std::vector<LinearExtension> enumerate_extensions(const Poset& p);

struct DpOptions {
    std::size_t max_states = std::size_t{1} << 26;
};

Count count_extensions(const Poset& p, const DpOptions& options = {});

// Map from the 1-based positions of `marked` (in the given order) to the number of extensions.
std::map<std::vector<int>, Count> position_counts(const Poset& p, std::span<const int> marked,
                                                  const DpOptions& options = {});

using Cell = std::pair<int, int>;

// Gap table keyed by (L(z2)-L(z1), L(z3)-L(z2)); only nonzero cells are stored.
class FTable {
public:
    FTable() = default;
    FTable(int n, MarkedTriple z, std::map<Cell, Count> entries);

    int n() const { return n_; }
    const MarkedTriple& triple() const { return z_; }
    const Count& operator()(int k, int l) const;
    const std::map<Cell, Count>& entries() const { return entries_; }
    Count total() const;

    friend bool operator==(const FTable&, const FTable&) = default;

private:
    int n_ = 0;
    MarkedTriple z_;
    std::map<Cell, Count> entries_;
};

// Requires z1 < z2 < z3 in p; throws BadTriple otherwise.
FTable f_table(const Poset& p, const MarkedTriple& z, const DpOptions& options = {});
// Same statistic without assuming any order among the marked elements; gaps may be <= 0.
FTable signed_gap_table(const Poset& p, const MarkedTriple& z, const DpOptions& options = {});
// Counts by L(y) - L(x).
std::map<int, Count> gap_counts(const Poset& p, int x, int y, const DpOptions& options = {});

class NVector {
public:
    NVector() = default;
    NVector(int element, std::vector<Count> counts);

    int element() const { return element_; }
    int n() const { return static_cast<int>(counts_.size()) - 1; }
    // N_k for k in 1..n; zero outside.
    const Count& operator()(int k) const;

private:
    int element_ = 0;
    std::vector<Count> counts_;
};

NVector n_vector(const Poset& p, int a, const DpOptions& options = {});

}  // namespace posetlab
