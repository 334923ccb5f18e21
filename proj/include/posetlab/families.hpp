#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posetlab/bigint.hpp"
#include "posetlab/extensions.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

struct FamilySpec {
    std::string id;  // example44 | prop71 | stanley_pk | converse_pkl
    int n = 0;
    int k = 0;
    int l = 0;
};

struct FamilyInstance {
    FamilySpec spec;
    Poset poset;
    MarkedTriple triple;            // meaningful unless `element` is set
    std::optional<int> element;     // stanley_pk marks a single element
    std::vector<std::string> labels;
    std::map<Cell, Count> expected_cells;  // F(k,l) cells
    std::map<int, Count> expected_n;       // N_k cells
};

// Element ids: marked elements first, then chains in order, then pendants.
FamilyInstance build_example44(int k, int l);
FamilyInstance build_prop71(int k, int l);
FamilyInstance build_stanley_pk(int n, int k);
FamilyInstance build_converse_pkl(int n, int k, int l);
FamilyInstance build_family(const FamilySpec& spec);

// Cross-ratio F(k+1,l) F(k,l+1) / (F(k,l) F(k+1,l+1)) predicted for converse_pkl.
Rational converse_cross_ratio(int n, int k, int l);

}  // namespace posetlab
