#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "posetlab/error.hpp"
#include "posetlab/extensions.hpp"
#include "posetlab/families.hpp"
#include "posetlab/geometry.hpp"
#include "posetlab/inequalities.hpp"
#include "posetlab/injections.hpp"
#include "posetlab/json_io.hpp"
#include "posetlab/parallel.hpp"
#include "posetlab/poset.hpp"
#include "posetlab/search.hpp"
#include "posetlab/vanishing.hpp"

using namespace posetlab;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;

struct Globals {
    bool human = false;
    int threads = 0;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

PosetDocument load(const std::string& path) {
    if (path == "-") return read_poset(std::cin);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io_error, "cannot read '" + path + "'");
    return read_poset(in);
}

// The marked triple is forced into a chain; this leaves every F(k,l) with k,l >= 1 unchanged.
std::pair<Poset, MarkedTriple> load_marked(const std::string& path) {
    auto doc = load(path);
    if (!doc.triple) throw UsageError("poset JSON has no \"z\" triple");
    return {normalize(doc.poset, *doc.triple), *doc.triple};
}

void emit(const Json& j) { std::cout << json_line(j) << '\n'; }

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void print_table_human(const FTable& F) {
    int k_min = 0, k_max = 0, l_min = 0, l_max = 0;
    bool first = true;
    std::size_t width = 1;
    for (const auto& [cell, c] : F.entries()) {
        if (first) {
            k_min = k_max = cell.first;
            l_min = l_max = cell.second;
            first = false;
        }
        k_min = std::min(k_min, cell.first);
        k_max = std::max(k_max, cell.first);
        l_min = std::min(l_min, cell.second);
        l_max = std::max(l_max, cell.second);
        width = std::max(width, to_decimal(c).size());
    }
    std::cout << "n=" << F.n() << " z=(" << F.triple().z1 << "," << F.triple().z2 << "," << F.triple().z3
              << ") total=" << to_decimal(F.total()) << "\n";
    if (first) return;
    width = std::max<std::size_t>(width, 3);
    std::cout << pad("k\\l", 5);
    for (int l = l_min; l <= l_max; ++l) std::cout << ' ' << pad(std::to_string(l), width);
    std::cout << '\n';
    for (int k = k_min; k <= k_max; ++k) {
        std::cout << pad(std::to_string(k), 5);
        for (int l = l_min; l <= l_max; ++l) std::cout << ' ' << pad(to_decimal(F(k, l)), width);
        std::cout << '\n';
    }
}

void print_reports_human(const std::vector<CheckReport>& reports) {
    std::cout << std::left << std::setw(14) << "ineq" << std::setw(12) << "window" << std::setw(9) << "verdict"
              << std::setw(18) << "ratio" << "note\n";
    for (const auto& r : reports) {
        std::string window = "(" + std::to_string(r.k) + "," + std::to_string(r.l);
        if (r.p) window += "," + std::to_string(*r.p) + "," + std::to_string(*r.q);
        window += ")";
        const auto ratio = r.ratio();
        std::string note = r.branch;
        if (!r.note.empty()) note += (note.empty() ? "" : " ") + r.note;
        std::cout << std::setw(14) << r.id << std::setw(12) << window << std::setw(9) << to_string(r.verdict)
                  << std::setw(18) << (ratio ? to_fraction(*ratio) : "-") << note << '\n';
    }
    std::cout << std::right;
}

int cmd_table(const Globals& g, const std::string& path, bool signed_gaps) {
    auto doc = load(path);
    if (!doc.triple) throw UsageError("poset JSON has no \"z\" triple");
    const FTable F = signed_gaps ? signed_gap_table(doc.poset, *doc.triple)
                                 : f_table(normalize(doc.poset, *doc.triple), *doc.triple);
    if (g.human) print_table_human(F);
    else {
        Json j;
        j["kind"] = signed_gaps ? "signed-table" : "table";
        const Json body = ftable_to_json(F);
        for (const auto& [key, value] : body.items()) j[key] = value;
        emit(j);
    }
    return exit_ok;
}

struct CheckArgs {
    std::string path = "-";
    std::string ineq;
    int k = 0, l = 0, p = 0, q = 0, t = 0, a = -1;
    bool all = false;
};

int cmd_check(const Globals& g, const CheckArgs& args) {
    std::vector<CheckReport> reports;
    const auto ids = window_ids();
    if (args.ineq == "stanley") {
        auto doc = load(args.path);
        int a = args.a;
        if (a < 0) {
            if (!doc.triple) throw UsageError("stanley needs --a or a \"z\" triple");
            a = doc.triple->z2;
        }
        const NVector N = n_vector(doc.poset, a);
        std::vector<int> ks;
        if (args.all) {
            for (int k = 1; k <= doc.poset.size(); ++k) ks.push_back(k);
        } else {
            if (args.k < 1) throw UsageError("give --k or --all");
            ks.push_back(args.k);
        }
        for (int k : ks) {
            for (auto& r : check_stanley_bounds(N, k)) reports.push_back(std::move(r));
        }
    } else if (args.ineq == "gcpc") {
        const auto [p, z] = load_marked(args.path);
        const FTable F = f_table(p, z);
        if (args.all) {
            for (const auto& [c1, v1] : F.entries()) {
                for (const auto& [c2, v2] : F.entries()) {
                    if (c1.first <= c2.first && c1.second <= c2.second) {
                        reports.push_back(check_gcpc(F, c1.first, c1.second, c2.first, c2.second));
                    }
                }
            }
        } else {
            if (args.k < 1 || args.l < 1 || args.p < 1 || args.q < 1) throw UsageError("gcpc needs --k --l --p --q");
            reports.push_back(check_gcpc(F, args.k, args.l, args.p, args.q));
        }
    } else if (std::find(ids.begin(), ids.end(), args.ineq) != ids.end()) {
        const auto [p, z] = load_marked(args.path);
        const FTable F = f_table(p, z);
        const int n = p.size();
        if (args.all) {
            for (int k = 1; k < n; ++k) {
                for (int l = 1; k + l <= n - 1; ++l) reports.push_back(check_by_id(args.ineq, F, p, k, l, args.t));
            }
        } else {
            if (args.k < 1 || args.l < 1) throw UsageError("give --k and --l, or --all");
            reports.push_back(check_by_id(args.ineq, F, p, args.k, args.l, args.t));
        }
    } else {
        throw UsageError("unknown inequality '" + args.ineq + "'");
    }

    bool failed = false;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::fails && is_proved(r.id)) failed = true;
    }
    if (g.human) print_reports_human(reports);
    else {
        for (const auto& r : reports) emit(report_to_json(r));
    }
    return failed ? exit_verification : exit_ok;
}

int cmd_vanish(const Globals& g, const std::string& path, int k, int l) {
    const auto [p, z] = load_marked(path);
    const auto region = support(p, z);
    Json j;
    j["kind"] = "vanish";
    j["z"] = {z.z1, z.z2, z.z3};
    j["region"] = region_to_json(region);
    if (k > 0 && l > 0) {
        j["k"] = k;
        j["l"] = l;
        j["member"] = region.contains(k, l);
    }
    Json cells = Json::array();
    for (auto [a, b] : points(region)) cells.push_back({a, b});
    j["support"] = cells;
    j["hexagon_closed"] = hexagon_closure_check(region);
    if (g.human) {
        std::cout << "k in [" << region.k_lo << "," << region.k_hi << "]  l in [" << region.l_lo << ","
                  << region.l_hi << "]  k+l in [" << region.s_lo << "," << region.s_hi << "]\n";
        if (k > 0 && l > 0) std::cout << "F(" << k << "," << l << ") > 0: " << (region.contains(k, l) ? "yes" : "no") << '\n';
    } else {
        emit(j);
    }
    return exit_ok;
}

int cmd_family(const Globals& g, const FamilySpec& spec, const std::string& out_path) {
    const auto fam = build_family(spec);
    const std::string line = json_line(family_to_json(fam));
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw Error(ErrorKind::io_error, "cannot write '" + out_path + "'");
        out << line << '\n';
        if (g.human) std::cout << "wrote " << spec.id << " (n=" << fam.poset.size() << ") to " << out_path << '\n';
        return exit_ok;
    }
    std::cout << line << '\n';
    return exit_ok;
}

struct InjectionArgs {
    std::string path = "-";
    std::string lemma = "all";
    std::string intervals = "stated";
    int k = 0, l = 0, a = -1;
};

int cmd_verify_injections(const Globals& g, const InjectionArgs& args) {
    const auto doc = load(args.path);
    const auto convention = args.intervals == "widened" ? IntervalConvention::widened : IntervalConvention::as_stated;
    if (args.intervals != "stated" && args.intervals != "widened") throw UsageError("--intervals is stated|widened");
    const bool all = args.lemma == "all";
    const std::vector<std::string> known = {"all", "51", "61", "62", "stanley"};
    if (std::find(known.begin(), known.end(), args.lemma) == known.end()) {
        throw UsageError("--lemma is 51|61|62|stanley|all");
    }
    std::vector<InjectionCertificate> certs;
    Poset p = doc.poset;
    std::optional<MarkedTriple> z = doc.triple;
    if (z) p = normalize(p, *z);
    const auto extensions = enumerate_extensions(p);

    if (all || args.lemma == "stanley") {
        std::vector<int> elements;
        if (args.a >= 0) elements.push_back(args.a);
        else {
            for (int x = 0; x < p.size(); ++x) elements.push_back(x);
        }
        for (int a : elements) {
            const NVector N = n_vector(p, a);
            for (int k = 2; k <= p.size(); ++k) {
                if (args.k > 0 && k != args.k) continue;
                if (N(k - 1) == 0) continue;
                certs.push_back(certify_stanley(p, a, k, extensions));
            }
        }
    }
    std::vector<InjectionKind> kinds;
    if (all || args.lemma == "51") {
        kinds.push_back(InjectionKind::gap_transfer);
        kinds.push_back(InjectionKind::gap_transfer_dual);
    }
    if (all || args.lemma == "61") kinds.push_back(InjectionKind::gap_shrink);
    if (all || args.lemma == "62") kinds.push_back(InjectionKind::gap_grow);
    if (!kinds.empty()) {
        if (!z) throw UsageError("gap injections need a \"z\" triple");
        const FTable F = f_table(p, *z);
        for (auto kind : kinds) {
            for (auto [k, l] : applicable_windows(kind, F)) {
                if (args.k > 0 && (k != args.k || l != args.l)) continue;
                certs.push_back(certify(kind, p, *z, k, l, extensions, convention));
            }
        }
    }
    bool failed = false;
    for (const auto& c : certs) failed = failed || !c.ok();
    if (g.human) {
        std::cout << std::left << std::setw(19) << "injection" << std::setw(10) << "window" << std::setw(8) << "domain"
                  << std::setw(8) << "image" << std::setw(12) << "bound" << "status\n";
        for (const auto& c : certs) {
            const std::string window = c.element >= 0 ? "a=" + std::to_string(c.element) + ",k=" + std::to_string(c.k)
                                                      : "(" + std::to_string(c.k) + "," + std::to_string(c.l) + ")";
            std::cout << std::setw(19) << c.name << std::setw(10) << window << std::setw(8) << c.domain_size
                      << std::setw(8) << c.image_size << std::setw(12) << to_decimal(c.codomain_bound)
                      << (c.ok() ? "ok" : "FAILED") << '\n';
        }
        std::cout << std::right;
    } else {
        for (const auto& c : certs) emit(certificate_to_json(c));
    }
    return failed ? exit_verification : exit_ok;
}

int cmd_search(const Globals& g, SearchJob job, const std::string& target) {
    job.target = parse_target(target);
    job.threads = g.threads;
    const bool to_stdout = job.out_path.empty();
    const auto summary = run_search(job, [&](const Certificate& c) {
        if (to_stdout && !g.human) emit(certificate_to_json(c));
    });
    if (g.human) {
        std::cout << "instances " << summary.instances << "  holds " << summary.holds << "  fails " << summary.fails
                  << "  vacuous " << summary.vacuous << "  certificates " << summary.certificates << "  critical "
                  << summary.critical << '\n';
        if (summary.min_ratio) std::cout << "min ratio " << to_fraction(*summary.min_ratio) << '\n';
    } else {
        emit(summary_to_json(summary, job));
    }
    return summary.critical > 0 ? exit_verification : exit_ok;
}

int cmd_volume_mc(const Globals& g, const std::string& path, const std::string& s_text, const std::string& t_text,
                  std::uint64_t samples, std::uint64_t seed) {
    const auto [p, z] = load_marked(path);
    const Rational s = parse_rational(s_text);
    const Rational t = parse_rational(t_text);
    const auto est = volume_mc(p, z, s, t, samples, seed, g.threads);
    const Rational exact = volume_formula(f_table(p, z), s, t);
    const double diff = est.mean - exact.get_d();
    Json j;
    j["kind"] = "volume-mc";
    j["s"] = to_fraction(s);
    j["t"] = to_fraction(t);
    j["samples"] = est.samples;
    j["hits"] = est.hits;
    j["estimate"] = est.mean;
    j["stderr"] = est.std_error;
    j["formula"] = to_fraction(exact);
    j["formula_value"] = exact.get_d();
    j["z_score"] = est.std_error > 0 ? diff / est.std_error : 0.0;
    if (g.human) {
        std::cout << "estimate " << est.mean << " +- " << est.std_error << "  formula " << to_fraction(exact) << " ("
                  << exact.get_d() << ")\n";
    } else {
        emit(j);
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact two-gap linear-extension statistics on finite posets", "posetlab"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--human", g.human, "Render aligned tables instead of JSON lines");
    app.add_option("--threads", g.threads, "Worker threads (default: POSETLAB_THREADS or all cores)")
        ->check(CLI::PositiveNumber);

    std::string table_path = "-";
    bool table_signed = false;
    auto* table = app.add_subcommand("table", "Print the F(k,l) table");
    table->add_option("--poset", table_path, "Poset JSON file ('-' for stdin)");
    table->add_flag("--signed", table_signed, "Signed gaps, no order assumed among z1,z2,z3");

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Evaluate an inequality");
    check->add_option("--poset", check_args.path, "Poset JSON file ('-' for stdin)");
    check->add_option("--ineq", check_args.ineq, "Inequality id")->required();
    check->add_option("--k", check_args.k);
    check->add_option("--l", check_args.l);
    check->add_option("--p", check_args.p);
    check->add_option("--q", check_args.q);
    check->add_option("--t", check_args.t, "Thin/flat parameter (default: least admissible)");
    check->add_option("--a", check_args.a, "Marked element for stanley (default: z2)");
    check->add_flag("--all", check_args.all, "Every window");

    std::string vanish_path = "-";
    int vanish_k = 0, vanish_l = 0;
    auto* vanish = app.add_subcommand("vanish", "Support region of F");
    vanish->add_option("--poset", vanish_path, "Poset JSON file ('-' for stdin)");
    vanish->add_option("--k", vanish_k);
    vanish->add_option("--l", vanish_l);

    FamilySpec spec;
    std::string family_out;
    auto* family = app.add_subcommand("family", "Build a named poset family");
    family->add_option("--id", spec.id, "example44|prop71|stanley_pk|converse_pkl")
        ->required()
        ->check(CLI::IsMember({"example44", "prop71", "stanley_pk", "converse_pkl"}));
    family->add_option("--n", spec.n);
    family->add_option("--k", spec.k);
    family->add_option("--l", spec.l);
    family->add_option("--out", family_out, "Write to file instead of stdout");

    InjectionArgs inj_args;
    auto* inject = app.add_subcommand("verify-injections", "Certify the word injections exhaustively");
    inject->add_option("--poset", inj_args.path, "Poset JSON file ('-' for stdin)");
    inject->add_option("--lemma", inj_args.lemma, "51|61|62|stanley|all");
    inject->add_option("--intervals", inj_args.intervals, "stated|widened payload intervals");
    inject->add_option("--k", inj_args.k);
    inject->add_option("--l", inj_args.l);
    inject->add_option("--a", inj_args.a);

    SearchJob job;
    std::string target = "cpc2";
    auto* search = app.add_subcommand("search", "Random search for inequality violations");
    search->add_option("--target", target, "cpc|cpc1|cpc2|gcpc");
    search->add_option("--n-min", job.n_min);
    search->add_option("--n-max", job.n_max);
    search->add_option("--width-max", job.width_max);
    search->add_option("--seed", job.seed);
    search->add_option("--budget", job.budget);
    search->add_option("--out", job.out_path, "Append certificates (JSON lines) to this file");

    std::string mc_path = "-", mc_s = "1/5", mc_t = "1/5";
    std::uint64_t mc_samples = 1000000, mc_seed = 7;
    auto* mc = app.add_subcommand("volume-mc", "Monte Carlo slice volume against the exact formula");
    mc->add_option("--poset", mc_path, "Poset JSON file ('-' for stdin)");
    mc->add_option("--s", mc_s);
    mc->add_option("--t", mc_t);
    mc->add_option("--samples", mc_samples);
    mc->add_option("--seed", mc_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    if (g.threads <= 0) g.threads = default_threads();

    try {
        if (*table) return cmd_table(g, table_path, table_signed);
        if (*check) return cmd_check(g, check_args);
        if (*vanish) return cmd_vanish(g, vanish_path, vanish_k, vanish_l);
        if (*family) return cmd_family(g, spec, family_out);
        if (*inject) return cmd_verify_injections(g, inj_args);
        if (*search) return cmd_search(g, job, target);
        if (*mc) return cmd_volume_mc(g, mc_path, mc_s, mc_t, mc_samples, mc_seed);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        const bool verification = e.kind() == ErrorKind::case_exhaustion || e.kind() == ErrorKind::no_pivot;
        return verification ? exit_verification : exit_usage;
    }
    return exit_usage;
}
