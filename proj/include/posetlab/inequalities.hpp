#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetlab/bigint.hpp"
#include "posetlab/extensions.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

enum class Verdict { holds, fails, vacuous };

const char* to_string(Verdict v);

// Every inequality is stored as lhs <= rhs. When a side involves a square root the
// report carries the squared form (form == "squared").
struct CheckReport {
    std::string id;
    int k = 0;
    int l = 0;
    std::optional<int> p;
    std::optional<int> q;
    Rational lhs;
    Rational rhs;
    Verdict verdict = Verdict::vacuous;
    std::string branch;
    std::string form = "linear";
    std::string note;

    Rational slack() const { return rhs - lhs; }
    // rhs / lhs; absent when lhs is zero.
    std::optional<Rational> ratio() const;
};

// Theorem-backed ids: a failure of one of these is a verification failure.
bool is_proved(const std::string& id);

CheckReport check_cpc(const FTable& F, int k, int l);
CheckReport check_cpc1(const FTable& F, int k, int l);
CheckReport check_cpc2(const FTable& F, int k, int l);
CheckReport check_two_of_three(const FTable& F, int k, int l);
CheckReport check_logc(const FTable& F, int k, int l, int which);
CheckReport check_half_cpc(const FTable& F, int k, int l);
CheckReport check_half_cpc1(const FTable& F, int k, int l);
CheckReport check_half_cpc2(const FTable& F, int k, int l);
CheckReport check_logconcave_product(const FTable& F, int k, int l);
CheckReport check_cpc_eps_lower(const FTable& F, int k, int l);
CheckReport check_cpc_eps_zero(const FTable& F, int k, int l);
CheckReport check_main_theorem(const FTable& F, int k, int l);
// t <= 0 picks the least t for which p is t-thin or t-flat with respect to the triple.
CheckReport check_thin_flat(const FTable& F, const Poset& p, int t, int k, int l);
CheckReport check_converse(const FTable& F, int k, int l);
CheckReport check_gcpc(const FTable& F, int k, int l, int p, int q);
std::vector<CheckReport> check_stanley_bounds(const NVector& N, int k);

// The signed-table GCPC instance that a CPC2 failure at (k,l) forces, with z1 and z2 swapped.
CheckReport check_gcpc_from_cpc2(const FTable& signed_table, int k, int l);

// Ids accepted by check_by_id: cpc cpc1 cpc2 two-of-three logc1 logc2 logc3 half half1 half2
// logc-product cpc-eps cpc-eps0 main thin converse.
std::vector<std::string> window_ids();
CheckReport check_by_id(const std::string& id, const FTable& F, const Poset& p, int k, int l, int t = 0);

}  // namespace posetlab
