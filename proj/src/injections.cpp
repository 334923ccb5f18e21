#include "posetlab/injections.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "posetlab/error.hpp"

namespace posetlab {

Word tau(const Poset& p, Word word, int i) {
    const int n = static_cast<int>(word.size());
    if (i < 1 || i > n - 1) {
        throw Error(ErrorKind::index_out_of_range, "tau index " + std::to_string(i) + " outside [1," +
                                                       std::to_string(n - 1) + "]");
    }
    if (p.incomparable(word[i - 1], word[i])) std::swap(word[i - 1], word[i]);
    return word;
}

namespace {

// Positions are 1-based throughout, as in the case analysis.
class Rewriter {
public:
    Rewriter(const Poset& p, Word word) : p_(p), w_(std::move(word)) {
        if (!is_linear_extension(p_, w_)) throw Error(ErrorKind::bad_params, "input is not a linear extension");
    }

    int size() const { return static_cast<int>(w_.size()); }
    int at(int pos) const { return w_[pos - 1]; }
    int find(int x) const { return static_cast<int>(std::find(w_.begin(), w_.end(), x) - w_.begin()) + 1; }
    bool less(int x, int y) const { return p_.less(x, y); }
    bool incomparable(int x, int y) const { return p_.incomparable(x, y); }

    // Carries the entry at `from` to `to` through tau moves; every move must be a swap.
    void slide(int from, int to) {
        if (from < to) {
            for (int i = from; i < to; ++i) swap_at(i);
        } else {
            for (int i = from - 1; i >= to; --i) swap_at(i);
        }
    }

    Word take() { return std::move(w_); }

private:
    void swap_at(int i) {
        if (!p_.incomparable(w_[i - 1], w_[i])) {
            throw Error(ErrorKind::case_exhaustion, "tau_" + std::to_string(i) + " would not swap");
        }
        w_ = tau(p_, std::move(w_), i);
    }

    const Poset& p_;
    Word w_;
};

void expect_gaps(const Rewriter& w, const MarkedTriple& z, int first, int second, const char* where,
                 ErrorKind kind = ErrorKind::bad_params) {
    const int i = w.find(z.z1);
    if (w.find(z.z2) != i + first || w.find(z.z3) != i + first + second) {
        throw Error(kind, std::string(where) + ": word has the wrong gaps");
    }
}

void check_window(int k, int l, int k_min) {
    if (k < k_min || l < 1) throw Error(ErrorKind::bad_params, "window indices out of range");
}

}  // namespace

InjectionImage stanley_shift(const Poset& p, int a, const Word& word) {
    Rewriter w(p, word);
    const int k = w.find(a);
    int i = k - 1;
    while (i >= 1 && w.less(w.at(i), a)) --i;
    if (i < 1) throw Error(ErrorKind::no_pivot, "every earlier element lies below the marked element");
    w.slide(i, k);
    return {"1", {k - i}, w.take()};
}

std::optional<Word> stanley_shift_inverse(const Poset& p, int a, const Word& word, int r) {
    if (!is_linear_extension(p, word)) return std::nullopt;
    const auto pos = static_cast<int>(std::find(word.begin(), word.end(), a) - word.begin()) + 1;
    const int k = pos + 1;
    const int n = static_cast<int>(word.size());
    if (k > n || r < 1 || r > k - 1) return std::nullopt;
    Word w = word;
    for (int i = k - 1; i >= k - r; --i) {
        if (!p.incomparable(w[i - 1], w[i])) return std::nullopt;
        std::swap(w[i - 1], w[i]);
    }
    return w;
}

InjectionImage gap_transfer(const Poset& p, const MarkedTriple& z, int k, int l, const Word& word) {
    check_window(k, l, 1);
    Rewriter w(p, word);
    expect_gaps(w, z, k + 1, l + 1, "gap_transfer");
    const int i = w.find(z.z1);
    const int z3_pos = i + k + l + 2;

    for (int j = i + k; j >= i + 1; --j) {
        if (!w.less(w.at(j), z.z2)) {
            w.slide(j, i + k + 1);
            return {"1", {i + k + 1 - j}, w.take()};
        }
    }

    int j = i + 1;
    while (j <= i + k && w.less(z.z1, w.at(j))) ++j;
    if (j > i + k) throw Error(ErrorKind::case_exhaustion, "gap_transfer: first gap lies inside (z1,z2)");
    w.slide(j, i);
    expect_gaps(w, z, k, l + 1, "gap_transfer intermediate", ErrorKind::case_exhaustion);

    for (int r = z3_pos + 1; r <= w.size(); ++r) {
        if (!w.less(z.z3, w.at(r))) {
            w.slide(r, z3_pos);
            return {"2.1", {j - i, r - z3_pos}, w.take()};
        }
    }
    int s = i + k;
    while (s >= 1 && w.less(w.at(s), z.z2)) --s;
    if (s < 1) throw Error(ErrorKind::case_exhaustion, "gap_transfer: no element to lift past z2");
    if (s >= i) throw Error(ErrorKind::case_exhaustion, "gap_transfer: lifted element inside the first gap");
    w.slide(s, i + k + 1);
    return {"2.2", {j - i, i - s}, w.take()};
}

InjectionImage gap_transfer_dual(const Poset& p, const MarkedTriple& z, int k, int l, const Word& word) {
    const Word reversed(word.rbegin(), word.rend());
    auto image = gap_transfer(p.dual(), z.reversed(), l, k, reversed);
    std::reverse(image.word.begin(), image.word.end());
    return image;
}

InjectionImage gap_shrink(const Poset& p, const MarkedTriple& z, int k, int l, const Word& word) {
    check_window(k, l, 1);
    Rewriter w(p, word);
    expect_gaps(w, z, k + 1, l, "gap_shrink");
    const int i = w.find(z.z1);

    for (int j = i + 1; j <= i + k; ++j) {
        if (w.incomparable(w.at(j), z.z1)) {
            w.slide(j, i);
            return {"1", {j - i}, w.take()};
        }
    }

    bool second_gap_inside = true;
    for (int r = i + k + 2; r <= i + k + l; ++r) {
        if (!(w.less(z.z1, w.at(r)) && w.less(w.at(r), z.z3))) second_gap_inside = false;
    }
    if (second_gap_inside) {
        int j = i + k;
        while (j >= i + 1 && !w.incomparable(w.at(j), z.z3)) --j;
        if (j < i + 1) throw Error(ErrorKind::case_exhaustion, "gap_shrink: no element incomparable to z3");
        w.slide(j, i + k + l + 1);
        return {"2", {i + k + 1 - j}, w.take()};
    }

    int j = i + k;
    while (j >= i + 1 && !w.incomparable(w.at(j), z.z2)) --j;
    if (j < i + 1) throw Error(ErrorKind::case_exhaustion, "gap_shrink: no element incomparable to z2");
    w.slide(j, i + k + 1);
    const int s = i + k + 1 - j;
    expect_gaps(w, z, k, l + 1, "gap_shrink intermediate", ErrorKind::case_exhaustion);

    for (int r = i + k + l; r >= i + k + 2; --r) {
        if (w.incomparable(w.at(r), z.z3)) {
            w.slide(r, i + k + l + 1);
            return {"3.1", {s, i + k + l + 1 - r}, w.take()};
        }
    }
    for (int r = i + k + 2; r <= i + k + l; ++r) {
        if (w.incomparable(w.at(r), z.z1)) {
            w.slide(r, i);
            return {"3.2", {s, r - i - k - 1}, w.take()};
        }
    }
    throw Error(ErrorKind::case_exhaustion, "gap_shrink: second gap has no movable element");
}

InjectionImage gap_grow(const Poset& p, const MarkedTriple& z, int k, int l, const Word& word) {
    check_window(k, l, 0);
    Rewriter w(p, word);
    expect_gaps(w, z, k + 1, l, "gap_grow");
    const int i = w.find(z.z1);

    for (int j = i - 1; j >= 1; --j) {
        if (w.incomparable(w.at(j), z.z1)) {
            w.slide(j, i);
            return {"1", {i - j}, w.take()};
        }
    }

    int j = i + k + 2;
    while (j <= w.size() && !w.incomparable(w.at(j), z.z2)) ++j;
    if (j > w.size()) throw Error(ErrorKind::case_exhaustion, "gap_grow: no element incomparable to z2");
    w.slide(j, i + k + 1);
    if (j >= i + k + l + 2) return {"2.1", {j - i - k - l - 1}, w.take()};

    expect_gaps(w, z, k + 2, l - 1, "gap_grow intermediate", ErrorKind::case_exhaustion);
    for (int r = i + k + l + 2; r <= w.size(); ++r) {
        if (w.incomparable(w.at(r), z.z3)) {
            w.slide(r, i + k + l + 1);
            return {"2.2", {j - i - k - 1, r - i - k - l - 1}, w.take()};
        }
    }
    throw Error(ErrorKind::case_exhaustion, "gap_grow: no element incomparable to z3 after z3");
}

const char* to_string(InjectionKind kind) {
    switch (kind) {
        case InjectionKind::stanley_shift: return "stanley";
        case InjectionKind::gap_transfer: return "gap-transfer";
        case InjectionKind::gap_transfer_dual: return "gap-transfer-dual";
        case InjectionKind::gap_shrink: return "gap-shrink";
        case InjectionKind::gap_grow: return "gap-grow";
    }
    return "unknown";
}

Window window(InjectionKind kind, int k, int l) {
    switch (kind) {
        case InjectionKind::gap_transfer: return {k, l, {k + 1, l + 1}, {k, l + 2}};
        case InjectionKind::gap_transfer_dual: return {k, l, {k + 1, l + 1}, {k + 2, l}};
        case InjectionKind::gap_shrink: return {k, l, {k + 1, l}, {k, l}};
        case InjectionKind::gap_grow: return {k, l, {k + 1, l}, {k + 2, l}};
        case InjectionKind::stanley_shift: break;
    }
    throw Error(ErrorKind::bad_params, "stanley_shift has no gap window");
}

Count CaseInterval::size() const {
    Count total = 1;
    for (int e : extents) total *= std::max(e, 0);
    return total;
}

bool CaseInterval::contains(std::span<const int> payload) const {
    if (payload.size() != extents.size()) return false;
    for (std::size_t j = 0; j < payload.size(); ++j) {
        if (payload[j] < 1 || payload[j] > extents[j]) return false;
    }
    return true;
}

Count InjectionBounds::total() const {
    Count sum = 0;
    for (const auto& c : cases) sum += c.size();
    return sum;
}

const CaseInterval* InjectionBounds::find(const std::string& tag) const {
    for (const auto& c : cases) {
        if (c.tag == tag) return &c;
    }
    return nullptr;
}

InjectionBounds declared_intervals(InjectionKind kind, const Poset& p, const MarkedTriple& z, int k, int l,
                                   IntervalConvention convention) {
    if (kind == InjectionKind::gap_transfer_dual) {
        return declared_intervals(InjectionKind::gap_transfer, p.dual(), z.reversed(), l, k, convention);
    }
    const auto q = params(p);
    const int z1 = z.z1, z2 = z.z2, z3 = z.z3;
    const int b12 = q.interval(z1, z2);
    InjectionBounds out;
    switch (kind) {
        case InjectionKind::gap_transfer: {
            const int slack = convention == IntervalConvention::as_stated ? 2 : 1;
            const int m = std::min(b12 - slack, q.t_star[z1]);
            out.cases = {{"1", {std::min(q.t[z2], k)}}, {"2.1", {m, q.t_star[z3]}}, {"2.2", {m, q.t[z2]}}};
            break;
        }
        case InjectionKind::gap_shrink: {
            const int m = std::min(b12 - 1, q.t[z2]);
            out.cases = {{"1", {std::min(k, q.t_star[z1])}},
                         {"2", {std::min(k, q.t[z3] - 1)}},
                         {"3.1", {m, std::min(l - 1, q.t[z3])}},
                         {"3.2", {m, std::min(l - 1, q.t_star[z1] - 1)}}};
            break;
        }
        case InjectionKind::gap_grow:
            out.cases = {{"1", {q.t[z1]}},
                         {"2.1", {q.t_star[z2] - 1}},
                         {"2.2", {std::min(l - 1, q.t_star[z2]), q.t_star[z3]}}};
            break;
        default: throw Error(ErrorKind::bad_params, "use stanley_intervals");
    }
    return out;
}

InjectionBounds stanley_intervals(const Poset& p, int a) {
    const auto q = params(p);
    return {{{"1", {q.t[a]}}}};
}

namespace {

std::string image_key(const InjectionImage& img) {
    std::string key = img.tag + "|";
    for (int v : img.payload) key += std::to_string(v) + ",";
    key += "|";
    for (int x : img.word) key += std::to_string(x) + ",";
    return key;
}

Cell gaps_of(const LinearExtension& e, const MarkedTriple& z) {
    const int a = e.position(z.z1), b = e.position(z.z2), c = e.position(z.z3);
    return {b - a, c - b};
}

// Shared bookkeeping for one certification run.
class Ledger {
public:
    explicit Ledger(bool hashed) : hashed_(hashed) {}

    void record(const Word& source, InjectionImage image, InjectionCertificate& cert) {
        const std::string key = image_key(image);
        if (hashed_) {
            if (!hashes_.insert(std::hash<std::string>{}(key)).second) ++cert.collision_count;
            return;
        }
        auto [it, fresh] = seen_.emplace(key, source);
        if (!fresh) {
            ++cert.collision_count;
            cert.collisions.push_back({it->second, source, std::move(image)});
        }
    }

    std::size_t distinct() const { return hashed_ ? hashes_.size() : seen_.size(); }

private:
    bool hashed_;
    std::map<std::string, Word> seen_;
    std::unordered_set<std::size_t> hashes_;
};

}  // namespace

InjectionCertificate certify(InjectionKind kind, const Poset& p, const MarkedTriple& z, int k, int l,
                             std::span<const LinearExtension> extensions, IntervalConvention convention) {
    check_triple(p, z);
    if (!is_chain_triple(p, z)) throw Error(ErrorKind::bad_triple, "certify needs z1 < z2 < z3");
    const Window win = window(kind, k, l);
    InjectionCertificate cert;
    cert.name = to_string(kind);
    cert.k = k;
    cert.l = l;

    std::vector<const LinearExtension*> domain;
    Count target = 0;
    for (const auto& e : extensions) {
        const Cell g = gaps_of(e, z);
        if (g == win.domain) domain.push_back(&e);
        if (g == win.target) ++target;
    }
    if (target == 0) throw Error(ErrorKind::hypotheses_not_met, "target cell is empty");

    const auto bounds = declared_intervals(kind, p, z, k, l, convention);
    cert.domain_size = domain.size();
    cert.target_size = target;
    cert.interval_total = bounds.total();
    cert.codomain_bound = cert.interval_total * target;
    cert.hashed = domain.size() > full_collision_limit;

    Ledger ledger(cert.hashed);
    for (const auto* e : domain) {
        InjectionImage img;
        switch (kind) {
            case InjectionKind::gap_transfer: img = gap_transfer(p, z, k, l, e->word); break;
            case InjectionKind::gap_transfer_dual: img = gap_transfer_dual(p, z, k, l, e->word); break;
            case InjectionKind::gap_shrink: img = gap_shrink(p, z, k, l, e->word); break;
            case InjectionKind::gap_grow: img = gap_grow(p, z, k, l, e->word); break;
            case InjectionKind::stanley_shift: throw Error(ErrorKind::bad_params, "use certify_stanley");
        }
        if (!is_linear_extension(p, img.word) || gaps_of(LinearExtension{img.word}, z) != win.target) {
            ++cert.codomain_violations;
        }
        const auto* interval = bounds.find(img.tag);
        if (interval == nullptr || !interval->contains(img.payload)) ++cert.payload_violations;
        ledger.record(e->word, std::move(img), cert);
    }
    cert.image_size = ledger.distinct();
    return cert;
}

InjectionCertificate certify_stanley(const Poset& p, int a, int k, std::span<const LinearExtension> extensions) {
    if (a < 0 || a >= p.size()) throw Error(ErrorKind::index_out_of_range, "marked element out of range");
    InjectionCertificate cert;
    cert.name = to_string(InjectionKind::stanley_shift);
    cert.k = k;
    cert.element = a;

    std::vector<const LinearExtension*> domain;
    Count target = 0;
    for (const auto& e : extensions) {
        const int pos = e.position(a);
        if (pos == k) domain.push_back(&e);
        if (pos == k - 1) ++target;
    }
    if (target == 0) throw Error(ErrorKind::hypotheses_not_met, "N_{k-1} is zero");

    const auto bounds = stanley_intervals(p, a);
    cert.domain_size = domain.size();
    cert.target_size = target;
    cert.interval_total = bounds.total();
    cert.codomain_bound = cert.interval_total * target;
    cert.hashed = domain.size() > full_collision_limit;

    Ledger ledger(cert.hashed);
    for (const auto* e : domain) {
        auto img = stanley_shift(p, a, e->word);
        if (!is_linear_extension(p, img.word) || LinearExtension{img.word}.position(a) != k - 1) {
            ++cert.codomain_violations;
        }
        if (!bounds.cases.front().contains(img.payload)) ++cert.payload_violations;
        const auto back = stanley_shift_inverse(p, a, img.word, img.payload.front());
        if (!back || *back != e->word) ++cert.roundtrip_failures;
        ledger.record(e->word, std::move(img), cert);
    }
    cert.image_size = ledger.distinct();
    return cert;
}

std::vector<Cell> applicable_windows(InjectionKind kind, const FTable& F) {
    std::vector<Cell> out;
    const int n = F.n();
    const int k_min = kind == InjectionKind::gap_grow ? 0 : 1;
    for (int k = k_min; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
            const Window w = window(kind, k, l);
            if (F(w.target.first, w.target.second) != 0) out.emplace_back(k, l);
        }
    }
    return out;
}

}  // namespace posetlab
