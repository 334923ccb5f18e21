#include "posetlab/inequalities.hpp"

#include <algorithm>

#include "posetlab/error.hpp"

namespace posetlab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::vacuous: return "vacuous";
    }
    return "unknown";
}

std::optional<Rational> CheckReport::ratio() const {
    if (lhs == 0) return std::nullopt;
    return Rational(rhs / lhs);
}

bool is_proved(const std::string& id) {
    static const std::vector<std::string> conjectural = {"cpc", "cpc1", "cpc2", "gcpc", "gcpc-signed"};
    return std::find(conjectural.begin(), conjectural.end(), id) == conjectural.end();
}

namespace {

CheckReport make(const std::string& id, int k, int l) {
    CheckReport r;
    r.id = id;
    r.k = k;
    r.l = l;
    return r;
}

CheckReport compare(CheckReport r, Rational lhs, Rational rhs, bool applicable) {
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.lhs.canonicalize();
    r.rhs.canonicalize();
    if (!applicable) r.verdict = Verdict::vacuous;
    else r.verdict = r.lhs <= r.rhs ? Verdict::holds : Verdict::fails;
    return r;
}

// Products of table cells; the zero-product side makes the inequality trivial.
CheckReport product_check(const std::string& id, int k, int l, const Count& lhs, const Count& rhs) {
    return compare(make(id, k, l), Rational(lhs), Rational(rhs), lhs != 0);
}

Rational unit_fraction(long den) { return Rational(Count(1), Count(den)); }

struct Window {
    Count A, B, C, D, E2, E3;  // F(k+1,l), F(k,l+1), F(k,l), F(k+1,l+1), F(k,l+2), F(k+2,l)
};

Window window_cells(const FTable& F, int k, int l) {
    return {F(k + 1, l), F(k, l + 1), F(k, l), F(k + 1, l + 1), F(k, l + 2), F(k + 2, l)};
}

// (1/2 + c) CD <= AB as an exact rational comparison.
CheckReport factor_check(const std::string& id, int k, int l, const Window& w, const Rational& c) {
    const Rational factor = Rational(1, 2) + c;
    return compare(make(id, k, l), factor * Rational(w.C * w.D), Rational(w.A * w.B), w.C * w.D != 0);
}

}  // namespace

CheckReport check_cpc(const FTable& F, int k, int l) {
    const auto w = window_cells(F, k, l);
    return product_check("cpc", k, l, w.C * w.D, w.A * w.B);
}

CheckReport check_cpc1(const FTable& F, int k, int l) {
    const auto w = window_cells(F, k, l);
    return product_check("cpc1", k, l, w.E3 * w.B, w.A * w.D);
}

CheckReport check_cpc2(const FTable& F, int k, int l) {
    const auto w = window_cells(F, k, l);
    return product_check("cpc2", k, l, w.E2 * w.A, w.B * w.D);
}

CheckReport check_two_of_three(const FTable& F, int k, int l) {
    const CheckReport parts[] = {check_cpc(F, k, l), check_cpc1(F, k, l), check_cpc2(F, k, l)};
    int failures = 0;
    int vacuous = 0;
    std::string note;
    for (const auto& part : parts) {
        if (part.verdict == Verdict::fails) {
            ++failures;
            note += (note.empty() ? "" : ",") + part.id;
        }
        if (part.verdict == Verdict::vacuous) ++vacuous;
    }
    auto r = compare(make("two-of-three", k, l), Rational(failures), Rational(1), vacuous < 3);
    r.note = note.empty() ? "no failures" : "fails: " + note;
    return r;
}

CheckReport check_logc(const FTable& F, int k, int l, int which) {
    const auto w = window_cells(F, k, l);
    switch (which) {
        case 1: return product_check("logc1", k, l, w.E3 * w.E2, w.D * w.D);
        case 2: return product_check("logc2", k, l, w.C * w.E2, w.B * w.B);
        case 3: return product_check("logc3", k, l, w.C * w.E3, w.A * w.A);
        default: throw Error(ErrorKind::bad_params, "log-concavity index must be 1, 2 or 3");
    }
}

CheckReport check_half_cpc(const FTable& F, int k, int l) {
    const auto w = window_cells(F, k, l);
    return product_check("half", k, l, w.C * w.D, 2 * w.A * w.B);
}

CheckReport check_half_cpc1(const FTable& F, int k, int l) {
    const auto w = window_cells(F, k, l);
    return product_check("half1", k, l, w.E3 * w.B, 2 * w.A * w.D);
}

CheckReport check_half_cpc2(const FTable& F, int k, int l) {
    const auto w = window_cells(F, k, l);
    return product_check("half2", k, l, w.E2 * w.A, 2 * w.B * w.D);
}

CheckReport check_logconcave_product(const FTable& F, int k, int l) {
    const auto w = window_cells(F, k, l);
    // AB/(CD) >= E2 E3 / D^2, multiplied through by C D^2 and divided by D.
    return compare(make("logc-product", k, l), Rational(w.C * w.E2 * w.E3), Rational(w.A * w.B * w.D),
                   w.C * w.D != 0);
}

CheckReport check_cpc_eps_lower(const FTable& F, int k, int l) {
    const auto w = window_cells(F, k, l);
    // 2AB - CD >= C sqrt(E2 E3), squared with the sign of the left side kept.
    auto r = compare(make("cpc-eps", k, l), Rational(w.C * w.C * w.E2 * w.E3),
                     signed_square(Rational(2 * w.A * w.B - w.C * w.D)), w.C * w.D != 0);
    r.form = "squared";
    return r;
}

CheckReport check_cpc_eps_zero(const FTable& F, int k, int l) {
    const auto w = window_cells(F, k, l);
    const bool applicable = w.C * w.D != 0 && w.E2 == 0;
    // B sqrt(A^2 - C E3) >= CD - AB.
    const Count radicand = w.A * w.A - w.C * w.E3;
    CheckReport r = make("cpc-eps0", k, l);
    r.form = "squared";
    if (applicable && radicand < 0) {
        r.lhs = 1;
        r.rhs = 0;
        r.verdict = Verdict::fails;
        r.note = "negative radicand";
        return r;
    }
    r = compare(std::move(r), signed_square(Rational(w.C * w.D - w.A * w.B)), Rational(w.B * w.B * radicand),
                applicable);
    return r;
}

CheckReport check_main_theorem(const FTable& F, int k, int l) {
    const auto w = window_cells(F, k, l);
    const int n = F.n();
    CheckReport r = make("main", k, l);
    if (w.C * w.D == 0) {
        r.branch = "vacuous";
        return compare(std::move(r), Rational(w.C * w.D), Rational(w.A * w.B), false);
    }
    if (w.E2 != 0 && w.E3 != 0) {
        // (2AB - CD) * 2n sqrt(kl) >= CD, squared.
        r.branch = "nonvanishing";
        r.form = "squared";
        const Rational cd = Rational(w.C * w.D);
        const Rational left = signed_square(Rational(2 * w.A * w.B - w.C * w.D)) * 4 * n * n * k * l;
        return compare(std::move(r), cd * cd, left, true);
    }
    if (w.E2 == 0 && w.E3 != 0) {
        auto out = factor_check("main", k, l, w, unit_fraction(16L * n * k * l * l));
        out.branch = "left-vanishing";
        return out;
    }
    if (w.E3 == 0 && w.E2 != 0) {
        auto out = factor_check("main", k, l, w, unit_fraction(16L * n * k * k * l));
        out.branch = "right-vanishing";
        return out;
    }
    r.branch = "equality";
    r = compare(std::move(r), Rational(w.C * w.D), Rational(w.A * w.B), true);
    if (r.lhs != r.rhs) r.verdict = Verdict::fails;
    return r;
}

CheckReport check_thin_flat(const FTable& F, const Poset& p, int t, int k, int l) {
    const auto& z = F.triple();
    const auto w = window_cells(F, k, l);
    bool hypothesis = true;
    if (t <= 0) {
        t = std::min(min_thin_t(p, z), min_flat_t(p, z));
    } else {
        hypothesis = is_thin(p, z, t) || is_flat(p, z, t);
    }
    const long tt = t;
    auto r = factor_check("thin", k, l, w, unit_fraction(16L * tt * (tt + 1) * (tt + 1) * (tt + 1)));
    if (!hypothesis) r.verdict = Verdict::vacuous;
    r.branch = "t=" + std::to_string(t);
    r.note = is_thin(p, z, t) ? "thin" : (is_flat(p, z, t) ? "flat" : "neither thin nor flat");
    return r;
}

CheckReport check_converse(const FTable& F, int k, int l) {
    const auto w = window_cells(F, k, l);
    const long factor = 2L * k * l * (std::min(k, l) + 1) * F.n();
    return compare(make("converse", k, l), Rational(w.A * w.B), Rational(factor * (w.C * w.D)),
                   w.C * w.D != 0);
}

CheckReport check_gcpc(const FTable& F, int k, int l, int p, int q) {
    if (k > p || l > q) throw Error(ErrorKind::bad_params, "gcpc needs k <= p and l <= q");
    auto r = product_check("gcpc", k, l, F(k, l) * F(p, q), F(p, l) * F(k, q));
    r.p = p;
    r.q = q;
    return r;
}

CheckReport check_gcpc_from_cpc2(const FTable& signed_table, int k, int l) {
    const int a = -k - 1;
    const int b = l + k + 1;
    auto r = check_gcpc(signed_table, a, b, a + 1, b + 1);
    r.id = "gcpc-signed";
    r.note = "from cpc2 at (" + std::to_string(k) + "," + std::to_string(l) + ")";
    return r;
}

std::vector<CheckReport> check_stanley_bounds(const NVector& N, int k) {
    const int n = N.n();
    const Count& prev = N(k - 1);
    const Count& mid = N(k);
    const Count& next = N(k + 1);
    std::vector<CheckReport> out;
    // Vacuous exactly when a denominator of the ratio form vanishes.
    out.push_back(compare(make("stanley-down", k, 0), Rational(mid), Rational(Count(k - 1) * prev), prev != 0));
    out.push_back(compare(make("stanley-up", k, 0), Rational(mid), Rational(Count(n - k) * next), next != 0));
    out.push_back(compare(make("stanley-ratio", k, 0), Rational(mid * mid),
                          Rational(Count(k - 1) * (n - k) * prev * next), prev * next != 0));
    return out;
}

std::vector<std::string> window_ids() {
    return {"cpc",  "cpc1",  "cpc2",         "two-of-three", "logc1",    "logc2",    "logc3", "half",
            "half1", "half2", "logc-product", "cpc-eps",      "cpc-eps0", "main",     "thin",  "converse"};
}

CheckReport check_by_id(const std::string& id, const FTable& F, const Poset& p, int k, int l, int t) {
    if (id == "cpc") return check_cpc(F, k, l);
    if (id == "cpc1") return check_cpc1(F, k, l);
    if (id == "cpc2") return check_cpc2(F, k, l);
    if (id == "two-of-three") return check_two_of_three(F, k, l);
    if (id == "logc1") return check_logc(F, k, l, 1);
    if (id == "logc2") return check_logc(F, k, l, 2);
    if (id == "logc3") return check_logc(F, k, l, 3);
    if (id == "half") return check_half_cpc(F, k, l);
    if (id == "half1") return check_half_cpc1(F, k, l);
    if (id == "half2") return check_half_cpc2(F, k, l);
    if (id == "logc-product") return check_logconcave_product(F, k, l);
    if (id == "cpc-eps") return check_cpc_eps_lower(F, k, l);
    if (id == "cpc-eps0") return check_cpc_eps_zero(F, k, l);
    if (id == "main") return check_main_theorem(F, k, l);
    if (id == "thin") return check_thin_flat(F, p, t, k, l);
    if (id == "converse") return check_converse(F, k, l);
    throw Error(ErrorKind::bad_params, "unknown inequality '" + id + "'");
}

}  // namespace posetlab
