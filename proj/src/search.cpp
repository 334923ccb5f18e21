#include "posetlab/search.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <map>
#include <random>

#include "posetlab/error.hpp"
#include "posetlab/extensions.hpp"
#include "posetlab/parallel.hpp"

namespace posetlab {

SearchTarget parse_target(const std::string& name) {
    if (name == "cpc") return SearchTarget::cpc;
    if (name == "cpc1") return SearchTarget::cpc1;
    if (name == "cpc2") return SearchTarget::cpc2;
    if (name == "gcpc") return SearchTarget::gcpc;
    throw Error(ErrorKind::bad_params, "unknown search target '" + name + "'");
}

const char* to_string(SearchTarget t) {
    switch (t) {
        case SearchTarget::cpc: return "cpc";
        case SearchTarget::cpc1: return "cpc1";
        case SearchTarget::cpc2: return "cpc2";
        case SearchTarget::gcpc: return "gcpc";
    }
    return "unknown";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr int max_attempts = 10000;

}  // namespace

RandomInstance random_instance(std::uint64_t seed, std::uint64_t index, int n_min, int n_max, int width_max) {
    if (n_min < 3 || n_max < n_min || n_max > max_elements) {
        throw Error(ErrorKind::bad_params, "need 3 <= n_min <= n_max <= 64");
    }
    if (width_max < 1) throw Error(ErrorKind::bad_params, "width cap must be positive");
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
    std::uniform_int_distribution<int> size_dist(n_min, n_max);
    std::uniform_int_distribution<int> density_dist(1, 5);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const int n = size_dist(rng);
        const double density = density_dist(rng) / 10.0;
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<Relation> pairs;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (coin(rng) < density) pairs.emplace_back(order[i], order[j]);
            }
        }
        Poset p = Poset::build(n, pairs);
        if (width(p) > width_max) continue;
        std::vector<MarkedTriple> chains;
        for (int b = 0; b < n; ++b) {
            for (Mask lo = p.below(b); lo != 0; lo &= lo - 1) {
                for (Mask hi = p.above(b); hi != 0; hi &= hi - 1) {
                    chains.push_back({std::countr_zero(lo), b, std::countr_zero(hi)});
                }
            }
        }
        if (chains.empty()) continue;
        std::sort(chains.begin(), chains.end());
        std::uniform_int_distribution<std::size_t> pick(0, chains.size() - 1);
        return {std::move(p), chains[pick(rng)], density};
    }
    throw Error(ErrorKind::bad_params, "no admissible poset found; width cap too tight");
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["kind"] = "certificate";
    j["inequality"] = c.inequality;
    j["instance"] = c.instance;
    j["seed"] = c.seed;
    j["poset"] = poset_to_json(c.poset, c.triple);
    j["k"] = c.k;
    j["l"] = c.l;
    if (c.p) j["p"] = *c.p;
    if (c.q) j["q"] = *c.q;
    j["lhs"] = to_fraction(c.lhs);
    j["rhs"] = to_fraction(c.rhs);
    j["verdict"] = to_string(c.verdict);
    return j;
}

Certificate certificate_from_json(const Json& j) {
    try {
        Certificate c;
        c.inequality = j.at("inequality").get<std::string>();
        c.instance = j.at("instance").get<std::uint64_t>();
        c.seed = j.at("seed").get<std::uint64_t>();
        auto doc = poset_from_json(j.at("poset"));
        if (!doc.triple) throw Error(ErrorKind::parse_error, "certificate poset lacks a triple");
        c.poset = std::move(doc.poset);
        c.triple = *doc.triple;
        c.k = j.at("k").get<int>();
        c.l = j.at("l").get<int>();
        if (j.contains("p")) c.p = j.at("p").get<int>();
        if (j.contains("q")) c.q = j.at("q").get<int>();
        c.lhs = parse_rational(j.at("lhs").get<std::string>());
        c.rhs = parse_rational(j.at("rhs").get<std::string>());
        const auto verdict = j.at("verdict").get<std::string>();
        if (verdict == "holds") c.verdict = Verdict::holds;
        else if (verdict == "fails") c.verdict = Verdict::fails;
        else if (verdict == "vacuous") c.verdict = Verdict::vacuous;
        else throw Error(ErrorKind::parse_error, "unknown verdict '" + verdict + "'");
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse_error, e.what());
    }
}

CheckReport recheck(const Certificate& c) {
    if (c.inequality == "gcpc-signed" || c.inequality == "gcpc") {
        if (!c.p || !c.q) throw Error(ErrorKind::parse_error, "gcpc certificate lacks p, q");
        const FTable T =
            c.inequality == "gcpc" ? f_table(c.poset, c.triple) : signed_gap_table(c.poset, c.triple);
        auto r = check_gcpc(T, c.k, c.l, *c.p, *c.q);
        r.id = c.inequality;
        return r;
    }
    return check_by_id(c.inequality, f_table(c.poset, c.triple), c.poset, c.k, c.l);
}

bool reverifies(const Certificate& c) {
    const auto r = recheck(c);
    return r.verdict == c.verdict && r.lhs == c.lhs && r.rhs == c.rhs;
}

namespace {

struct InstanceResult {
    std::uint64_t holds = 0, fails = 0, vacuous = 0, critical = 0;
    std::vector<Certificate> certificates;
    std::optional<Certificate> tightest;
};

Certificate make_certificate(const CheckReport& r, const RandomInstance& inst, const MarkedTriple& triple,
                             std::uint64_t index, std::uint64_t seed) {
    Certificate c;
    c.inequality = r.id;
    c.instance = index;
    c.seed = seed;
    c.poset = inst.poset;
    c.triple = triple;
    c.k = r.k;
    c.l = r.l;
    c.p = r.p;
    c.q = r.q;
    c.lhs = r.lhs;
    c.rhs = r.rhs;
    c.verdict = r.verdict;
    return c;
}

void tally(InstanceResult& out, const CheckReport& r) {
    switch (r.verdict) {
        case Verdict::holds: ++out.holds; break;
        case Verdict::fails: ++out.fails; break;
        case Verdict::vacuous: ++out.vacuous; break;
    }
}

InstanceResult evaluate(const SearchJob& job, std::uint64_t index) {
    InstanceResult out;
    const auto inst = random_instance(job.seed, index, job.n_min, job.n_max, job.width_max);
    const auto& z = inst.triple;
    const FTable F = f_table(inst.poset, z);
    const int n = inst.poset.size();
    std::optional<FTable> swapped;

    for (int k = 1; k < n; ++k) {
        for (int l = 1; k + l <= n - 1; ++l) {
            const auto two = check_two_of_three(F, k, l);
            if (two.verdict == Verdict::fails) {
                ++out.critical;
                out.certificates.push_back(make_certificate(two, inst, z, index, job.seed));
            }
            if (job.target == SearchTarget::gcpc) {
                const auto cpc2 = check_cpc2(F, k, l);
                if (cpc2.verdict != Verdict::fails) continue;
                const MarkedTriple zs{z.z2, z.z1, z.z3};
                if (!swapped) swapped = signed_gap_table(inst.poset, zs);
                const auto r = check_gcpc_from_cpc2(*swapped, k, l);
                tally(out, r);
                if (r.verdict == Verdict::fails) out.certificates.push_back(make_certificate(r, inst, zs, index, job.seed));
                continue;
            }
            const auto r = check_by_id(to_string(job.target), F, inst.poset, k, l);
            tally(out, r);
            if (r.verdict == Verdict::fails) {
                out.certificates.push_back(make_certificate(r, inst, z, index, job.seed));
            } else if (r.verdict == Verdict::holds && job.target == SearchTarget::cpc) {
                auto c = make_certificate(r, inst, z, index, job.seed);
                if (!out.tightest || *r.ratio() < out.tightest->rhs / out.tightest->lhs) out.tightest = std::move(c);
            }
        }
    }

    if (job.target == SearchTarget::gcpc) {
        const auto& cells = F.entries();
        for (auto a = cells.begin(); a != cells.end(); ++a) {
            for (auto b = cells.begin(); b != cells.end(); ++b) {
                const auto [k, l] = a->first;
                const auto [p, q] = b->first;
                if (k > p || l > q || a == b) continue;
                const auto r = check_gcpc(F, k, l, p, q);
                tally(out, r);
                if (r.verdict == Verdict::fails) out.certificates.push_back(make_certificate(r, inst, z, index, job.seed));
            }
        }
    }
    return out;
}

constexpr std::uint64_t block_size = 4096;
constexpr std::size_t leaderboard_size = 10;

}  // namespace

Json summary_to_json(const SearchSummary& s, const SearchJob& job) {
    Json j;
    j["kind"] = "summary";
    j["target"] = to_string(job.target);
    j["seed"] = job.seed;
    j["n_min"] = job.n_min;
    j["n_max"] = job.n_max;
    j["width_max"] = job.width_max;
    j["instances"] = s.instances;
    j["holds"] = s.holds;
    j["fails"] = s.fails;
    j["vacuous"] = s.vacuous;
    j["certificates"] = s.certificates;
    j["critical"] = s.critical;
    j["min_ratio"] = s.min_ratio ? Json(to_fraction(*s.min_ratio)) : Json(nullptr);
    Json board = Json::array();
    for (const auto& c : s.leaderboard) board.push_back(certificate_to_json(c));
    j["leaderboard"] = board;
    return j;
}

SearchSummary run_search(const SearchJob& job, const std::function<void(const Certificate&)>& sink) {
    std::ofstream file;
    if (!job.out_path.empty()) {
        file.open(job.out_path, std::ios::app);
        if (!file) throw Error(ErrorKind::io_error, "cannot open '" + job.out_path + "' for appending");
    }
    SearchSummary summary;
    for (std::uint64_t start = 0; start < job.budget; start += block_size) {
        const std::uint64_t count = std::min(block_size, job.budget - start);
        std::vector<InstanceResult> results(count);
        parallel_for(count, job.threads, [&](std::size_t i) { results[i] = evaluate(job, start + i); });
        for (auto& r : results) {
            ++summary.instances;
            summary.holds += r.holds;
            summary.fails += r.fails;
            summary.vacuous += r.vacuous;
            summary.critical += r.critical;
            for (const auto& c : r.certificates) {
                if (c.inequality == "two-of-three") {
                    std::cerr << "CRITICAL: two-of-three violated at instance " << c.instance << " (k=" << c.k
                              << ", l=" << c.l << ")\n";
                }
                ++summary.certificates;
                if (file.is_open()) {
                    file << json_line(certificate_to_json(c)) << '\n';
                    if (!file) throw Error(ErrorKind::io_error, "write to '" + job.out_path + "' failed");
                }
                if (sink) sink(c);
            }
            if (r.tightest) {
                const Rational ratio = r.tightest->rhs / r.tightest->lhs;
                if (!summary.min_ratio || ratio < *summary.min_ratio) summary.min_ratio = ratio;
                summary.leaderboard.push_back(std::move(*r.tightest));
                std::stable_sort(summary.leaderboard.begin(), summary.leaderboard.end(),
                                 [](const Certificate& a, const Certificate& b) {
                                     return Rational(a.rhs / a.lhs) < Rational(b.rhs / b.lhs);
                                 });
                if (summary.leaderboard.size() > leaderboard_size) summary.leaderboard.pop_back();
            }
        }
    }
    if (file) file.flush();
    return summary;
}

std::vector<Poset> enumerate_posets(int n) {
    if (n < 1) throw Error(ErrorKind::bad_params, "n must be positive");
    if (n > 6) throw Error(ErrorKind::too_large, "isomorphism-class enumeration is capped at n=6");
    std::vector<Relation> slots;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    std::map<CanonicalKey, Poset> classes;
    // Every poset has a natural labelling, so upper-triangular closed relations cover all classes.
    for (std::uint32_t subset = 0; subset < (1U << slots.size()); ++subset) {
        std::vector<Mask> above(n, 0);
        std::vector<Relation> pairs;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if ((subset >> s) & 1U) {
                above[slots[s].first] |= bit(slots[s].second);
                pairs.push_back(slots[s]);
            }
        }
        bool closed = true;
        for (int x = 0; x < n && closed; ++x) {
            for (Mask m = above[x]; m != 0; m &= m - 1) {
                if ((above[std::countr_zero(m)] & ~above[x]) != 0) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) continue;
        Poset p = Poset::build(n, pairs);
        const auto key = canonical_key(p);
        if (!classes.count(key)) classes.emplace(key, canonical_form(p));
    }
    std::vector<Poset> out;
    for (auto& [key, p] : classes) out.push_back(std::move(p));
    return out;
}

}  // namespace posetlab
