#include "posetlab/extensions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "posetlab/error.hpp"

namespace posetlab {

int LinearExtension::position(int x) const {
    const auto it = std::find(word.begin(), word.end(), x);
    if (it == word.end()) throw Error(ErrorKind::index_out_of_range, "element not in word");
    return static_cast<int>(it - word.begin()) + 1;
}

bool is_linear_extension(const Poset& p, std::span<const int> word) {
    if (static_cast<int>(word.size()) != p.size()) return false;
    Mask placed = 0;
    for (int x : word) {
        if (x < 0 || x >= p.size() || (placed & bit(x))) return false;
        if ((p.below(x) & ~placed) != 0) return false;
        placed |= bit(x);
    }
    return true;
}

void for_each_extension(const Poset& p, const std::function<void(const LinearExtension&)>& visit) {
    const int n = p.size();
    if (n > enumerate_limit) {
        throw Error(ErrorKind::too_large, "enumeration is capped at n=" + std::to_string(enumerate_limit));
    }
    std::vector<int> pending(n);
    for (int x = 0; x < n; ++x) pending[x] = std::popcount(p.below(x));
    LinearExtension current;
    current.word.reserve(n);
    std::vector<char> used(n, 0);

    std::function<void()> descend = [&] {
        if (static_cast<int>(current.word.size()) == n) {
            visit(current);
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (used[x] || pending[x] != 0) continue;
            used[x] = 1;
            current.word.push_back(x);
            for (Mask m = p.above(x); m != 0; m &= m - 1) --pending[std::countr_zero(m)];
            descend();
            for (Mask m = p.above(x); m != 0; m &= m - 1) ++pending[std::countr_zero(m)];
            current.word.pop_back();
            used[x] = 0;
        }
    };
    descend();
}

std::vector<LinearExtension> enumerate_extensions(const Poset& p) {
    std::vector<LinearExtension> out;
    for_each_extension(p, [&](const LinearExtension& e) { out.push_back(e); });
    return out;
}

namespace {

inline constexpr std::size_t max_marked = 4;

Mask available(const Poset& p, Mask ideal) {
    Mask out = 0;
    for (Mask rest = p.all() & ~ideal; rest != 0; rest &= rest - 1) {
        const int x = std::countr_zero(rest);
        if ((p.below(x) & ~ideal) == 0) out |= bit(x);
    }
    return out;
}

template <class C>
class Completions {
public:
    Completions(const Poset& p, std::size_t max_states) : p_(p), max_states_(max_states) {}

    // Number of ways to finish a linear extension whose first |ideal| entries are `ideal`.
    const C& operator()(Mask ideal) {
        if (auto it = memo_.find(ideal); it != memo_.end()) return it->second;
        C total = 0;
        if (ideal == p_.all()) {
            total = 1;
        } else {
            for (Mask m = available(p_, ideal); m != 0; m &= m - 1) {
                total += (*this)(ideal | bit(std::countr_zero(m)));
            }
        }
        if (memo_.size() >= max_states_) {
            throw Error(ErrorKind::too_large, "down-set lattice exceeds the configured state budget");
        }
        return memo_.emplace(ideal, std::move(total)).first->second;
    }

private:
    const Poset& p_;
    std::size_t max_states_;
    std::unordered_map<Mask, C> memo_;
};

struct StateKey {
    Mask ideal;
    std::uint32_t positions;
    bool operator==(const StateKey&) const = default;
};

struct StateHash {
    std::size_t operator()(const StateKey& k) const {
        std::uint64_t h = k.ideal * 0x9E3779B97F4A7C15ULL;
        h ^= (static_cast<std::uint64_t>(k.positions) + 0x632BE59BD9B4E019ULL) + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Positions are packed 8 bits per marked element.
template <class C>
std::map<std::vector<int>, C> marked_dp(const Poset& p, std::span<const int> marked, std::size_t max_states) {
    const int n = p.size();
    Completions<C> completions(p, max_states);
    std::map<std::vector<int>, C> out;
    if (marked.empty()) {
        out.emplace(std::vector<int>{}, completions(0));
        return out;
    }
    std::vector<int> slot(n, -1);
    Mask marked_mask = 0;
    for (std::size_t j = 0; j < marked.size(); ++j) {
        slot[marked[j]] = static_cast<int>(j);
        marked_mask |= bit(marked[j]);
    }

    std::unordered_map<std::uint32_t, C> finished;
    std::unordered_map<StateKey, C, StateHash> layer{{StateKey{0, 0}, C(1)}};
    for (int size = 0; size < n && !layer.empty(); ++size) {
        std::unordered_map<StateKey, C, StateHash> next;
        for (const auto& [key, count] : layer) {
            for (Mask m = available(p, key.ideal); m != 0; m &= m - 1) {
                const int x = std::countr_zero(m);
                std::uint32_t positions = key.positions;
                if (slot[x] >= 0) positions |= static_cast<std::uint32_t>(size + 1) << (8 * slot[x]);
                const Mask ideal = key.ideal | bit(x);
                if ((ideal & marked_mask) == marked_mask) {
                    finished[positions] += count * completions(ideal);
                } else {
                    next[StateKey{ideal, positions}] += count;
                }
            }
        }
        if (next.size() > max_states) {
            throw Error(ErrorKind::too_large, "position DP exceeds the configured state budget");
        }
        layer = std::move(next);
    }
    for (auto& [packed, count] : finished) {
        std::vector<int> pos(marked.size());
        for (std::size_t j = 0; j < marked.size(); ++j) pos[j] = static_cast<int>((packed >> (8 * j)) & 0xFFU);
        out.emplace(std::move(pos), std::move(count));
    }
    return out;
}

}  // namespace

std::map<std::vector<int>, Count> position_counts(const Poset& p, std::span<const int> marked,
                                                  const DpOptions& options) {
    if (marked.size() > max_marked) throw Error(ErrorKind::bad_params, "at most 4 marked elements");
    Mask seen = 0;
    for (int x : marked) {
        if (x < 0 || x >= p.size()) throw Error(ErrorKind::index_out_of_range, "marked element out of range");
        if (seen & bit(x)) throw Error(ErrorKind::bad_params, "marked elements must be distinct");
        seen |= bit(x);
    }
    // n! < 2^63 up to n = 20, so machine words are exact there.
    if (p.size() <= 20) {
        std::map<std::vector<int>, Count> out;
        for (auto& [pos, c] : marked_dp<std::uint64_t>(p, marked, options.max_states)) {
            out.emplace(pos, from_u64(c));
        }
        return out;
    }
    return marked_dp<Count>(p, marked, options.max_states);
}

Count count_extensions(const Poset& p, const DpOptions& options) {
    return position_counts(p, {}, options).begin()->second;
}

FTable::FTable(int n, MarkedTriple z, std::map<Cell, Count> entries) : n_(n), z_(z) {
    for (auto& [cell, c] : entries) {
        if (c != 0) entries_.emplace(cell, std::move(c));
    }
}

const Count& FTable::operator()(int k, int l) const {
    static const Count zero = 0;
    const auto it = entries_.find({k, l});
    return it == entries_.end() ? zero : it->second;
}

Count FTable::total() const {
    Count sum = 0;
    for (const auto& [cell, c] : entries_) sum += c;
    return sum;
}

namespace {

FTable gap_table(const Poset& p, const MarkedTriple& z, const DpOptions& options) {
    const auto arr = z.as_array();
    std::map<Cell, Count> cells;
    for (auto& [pos, c] : position_counts(p, arr, options)) {
        cells[{pos[1] - pos[0], pos[2] - pos[1]}] += c;
    }
    return FTable(p.size(), z, std::move(cells));
}

}  // namespace

FTable f_table(const Poset& p, const MarkedTriple& z, const DpOptions& options) {
    check_triple(p, z);
    if (!is_chain_triple(p, z)) {
        throw Error(ErrorKind::bad_triple, "f_table needs z1 < z2 < z3; normalize the triple first");
    }
    return gap_table(p, z, options);
}

FTable signed_gap_table(const Poset& p, const MarkedTriple& z, const DpOptions& options) {
    check_triple(p, z);
    return gap_table(p, z, options);
}

std::map<int, Count> gap_counts(const Poset& p, int x, int y, const DpOptions& options) {
    const int marked[] = {x, y};
    std::map<int, Count> out;
    for (auto& [pos, c] : position_counts(p, marked, options)) out[pos[1] - pos[0]] += c;
    return out;
}

NVector::NVector(int element, std::vector<Count> counts) : element_(element), counts_(std::move(counts)) {}

const Count& NVector::operator()(int k) const {
    static const Count zero = 0;
    if (k < 1 || k >= static_cast<int>(counts_.size())) return zero;
    return counts_[k];
}

NVector n_vector(const Poset& p, int a, const DpOptions& options) {
    const int marked[] = {a};
    std::vector<Count> counts(p.size() + 1, 0);
    for (auto& [pos, c] : position_counts(p, marked, options)) counts[pos[0]] = c;
    return NVector(a, std::move(counts));
}

}  // namespace posetlab
