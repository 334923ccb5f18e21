#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posetlab/bigint.hpp"
#include "posetlab/inequalities.hpp"
#include "posetlab/json_io.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

enum class SearchTarget { cpc, cpc1, cpc2, gcpc };

SearchTarget parse_target(const std::string& name);
const char* to_string(SearchTarget t);

struct SearchJob {
    int n_min = 3;
    int n_max = 8;
    int width_max = 3;
    SearchTarget target = SearchTarget::cpc2;
    std::uint64_t seed = 0;
    std::uint64_t budget = 1000;
    std::string out_path;  // empty: no file
    int threads = 1;
};

struct RandomInstance {
    Poset poset;
    MarkedTriple triple;
    double density = 0;
};

// Deterministic in (seed, index): random linear order, each compatible pair kept with a
// density drawn from {0.1,...,0.5}, closed; resampled until width <= width_max and a chain
// triple exists.
RandomInstance random_instance(std::uint64_t seed, std::uint64_t index, int n_min, int n_max, int width_max);

struct Certificate {
    std::string inequality;
    std::uint64_t instance = 0;
    std::uint64_t seed = 0;
    Poset poset;
    MarkedTriple triple;
    int k = 0;
    int l = 0;
    std::optional<int> p;
    std::optional<int> q;
    Rational lhs;
    Rational rhs;
    Verdict verdict = Verdict::fails;
};

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);
// Recomputes the table from the embedded poset and re-runs the checker.
CheckReport recheck(const Certificate& c);
bool reverifies(const Certificate& c);

struct SearchSummary {
    std::uint64_t instances = 0;
    std::uint64_t holds = 0;
    std::uint64_t fails = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t certificates = 0;
    std::uint64_t critical = 0;       // two-of-three violations
    std::optional<Rational> min_ratio;  // smallest rhs/lhs among holding target checks
    std::vector<Certificate> leaderboard;  // tightest holding instances, cpc target only
};

Json summary_to_json(const SearchSummary& s, const SearchJob& job);

// Certificates reach `sink` in instance order; appended to job.out_path when set.
SearchSummary run_search(const SearchJob& job, const std::function<void(const Certificate&)>& sink = {});

// One representative per isomorphism class, n <= 6.
std::vector<Poset> enumerate_posets(int n);

}  // namespace posetlab
