#include "posetlab/families.hpp"

#include <string>

#include "posetlab/error.hpp"

namespace posetlab {

namespace {

class Builder {
public:
    int add(const std::string& label) {
        labels_.push_back(label);
        return static_cast<int>(labels_.size()) - 1;
    }

    std::vector<int> add_chain(const std::string& prefix, int count) {
        std::vector<int> ids;
        for (int i = 1; i <= count; ++i) ids.push_back(add(prefix + std::to_string(i)));
        return ids;
    }

    void less(int x, int y) { relations_.emplace_back(x, y); }

    void chain(const std::vector<int>& ids) {
        for (std::size_t i = 0; i + 1 < ids.size(); ++i) less(ids[i], ids[i + 1]);
    }

    void finish(FamilyInstance& out) {
        out.poset = Poset::build(static_cast<int>(labels_.size()), relations_);
        out.labels = labels_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Relation> relations_;
};

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::bad_params, what);
}

}  // namespace

FamilyInstance build_example44(int k, int l) {
    require(k >= 1 && l >= 1, "example44 needs k, l >= 1");
    FamilyInstance out;
    out.spec = {"example44", k + l + 2, k, l};
    Builder b;
    const int z1 = b.add("z1"), z2 = b.add("z2"), z3 = b.add("z3");
    auto middle = b.add_chain("x", k + l - 1);
    middle.push_back(z2);
    for (int x : middle) {
        b.less(z1, x);
        b.less(x, z3);
    }
    b.finish(out);
    out.triple = {z1, z2, z3};
    // With the middle an antichain every split of it is equally likely: (k+l-1)! each.
    const Count arrangements = factorial(k + l - 1);
    out.expected_cells = {{{k, l + 1}, arrangements}, {{k + 1, l}, arrangements},
                          {{k, l}, 0},                {{k + 1, l + 1}, 0},
                          {{k, l + 2}, 0},            {{k + 2, l}, 0}};
    return out;
}

FamilyInstance build_prop71(int k, int l) {
    require(k >= 1 && l >= 2, "prop71 needs k >= 1, l >= 2");
    FamilyInstance out;
    out.spec = {"prop71", k + l + 3, k, l};
    Builder b;
    const int z1 = b.add("z1"), z2 = b.add("z2"), z3 = b.add("z3");
    const auto xs = b.add_chain("x", k - 1);
    const auto ys = b.add_chain("y", l - 2);
    const int u = b.add("u"), v = b.add("v"), w = b.add("w");
    b.chain(concat({{z1}, xs, {z2}, ys, {z3}}));
    // Empty chains: x_{k-1} falls back to z1, y_1 to z3.
    b.less(xs.empty() ? z1 : xs.back(), u);
    b.less(u, ys.empty() ? z3 : ys.front());
    b.less(z2, v);
    b.less(z2, w);
    b.finish(out);
    out.triple = {z1, z2, z3};
    out.expected_cells = {{{k, l + 2}, Count((l + 1) * l)},
                          {{k + 1, l}, Count(2 * (l - 1))},
                          {{k, l + 1}, Count(2 * l)},
                          {{k + 1, l + 1}, Count(l * (l - 1))}};
    return out;
}

FamilyInstance build_stanley_pk(int n, int k) {
    require(k >= 2 && k <= n - 2, "stanley_pk needs 2 <= k <= n-2");
    FamilyInstance out;
    out.spec = {"stanley_pk", n, k, 0};
    Builder b;
    const int a = b.add("a"), v = b.add("v"), w = b.add("w");
    const auto xs = b.add_chain("x", k - 2);
    const auto ys = b.add_chain("y", n - k - 1);
    b.chain(concat({xs, {a}, ys}));
    b.less(v, ys.front());
    b.less(v, w);
    // w sits above the top of the x-chain; with no x-chain (k = 2) only v lies below it.
    if (!xs.empty()) b.less(xs.back(), w);
    b.finish(out);
    out.element = a;
    out.triple = {a, v, w};
    out.expected_n = {{k - 1, Count(n - k)}, {k, Count((k - 1) * (n - k))}, {k + 1, Count(k - 1)}};
    return out;
}

FamilyInstance build_converse_pkl(int n, int k, int l) {
    const int m = n - k - l - 3;
    require(k >= 2 && l >= 1 && m >= 1, "converse_pkl needs k >= 2, l >= 1, n >= k+l+4");
    FamilyInstance out;
    out.spec = {"converse_pkl", n, k, l};
    Builder b;
    const int z1 = b.add("z1"), z2 = b.add("z2"), z3 = b.add("z3");
    const auto as = b.add_chain("a", k - 2);
    const auto bs = b.add_chain("b", l - 1);
    const auto cs = b.add_chain("c", m);
    const int u = b.add("u"), v = b.add("v"), w = b.add("w");
    b.chain(concat({{z1}, as, {z2}, bs, {z3}, cs}));
    b.less(u, z2);
    b.less(v, z3);
    b.less(as.empty() ? z1 : as.back(), v);
    b.less(bs.empty() ? z2 : bs.back(), w);
    b.less(u, v);
    b.less(v, w);
    b.finish(out);
    out.triple = {z1, z2, z3};
    const long M = n - k - l - 2;
    out.expected_cells = {{{k, l}, Count(M)},
                          {{k + 1, l}, Count((k - 1) * M)},
                          {{k, l + 1}, Count(1 + (k - 1) * l * M)},
                          {{k + 1, l + 1}, Count(k - 1)}};
    return out;
}

FamilyInstance build_family(const FamilySpec& spec) {
    if (spec.id == "example44") return build_example44(spec.k, spec.l);
    if (spec.id == "prop71") return build_prop71(spec.k, spec.l);
    if (spec.id == "stanley_pk") return build_stanley_pk(spec.n, spec.k);
    if (spec.id == "converse_pkl") return build_converse_pkl(spec.n, spec.k, spec.l);
    throw Error(ErrorKind::bad_params, "unknown family '" + spec.id + "'");
}

Rational converse_cross_ratio(int n, int k, int l) {
    const long M = n - k - l - 2;
    return Rational(Count(1 + (k - 1) * l * M));
}

}  // namespace posetlab
