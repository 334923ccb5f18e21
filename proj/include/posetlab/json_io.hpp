#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "posetlab/extensions.hpp"
#include "posetlab/families.hpp"
#include "posetlab/inequalities.hpp"
#include "posetlab/injections.hpp"
#include "posetlab/poset.hpp"
#include "posetlab/vanishing.hpp"

namespace posetlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "posetlab/1";

struct PosetDocument {
    Poset poset;
    std::optional<MarkedTriple> triple;
};

Json poset_to_json(const Poset& p, const std::optional<MarkedTriple>& z = std::nullopt);
// Accepts any acyclic pair list in "covers"; extra keys are ignored.
PosetDocument poset_from_json(const Json& j);
PosetDocument read_poset(std::istream& in);

Json ftable_to_json(const FTable& F);
FTable ftable_from_json(const Json& j);

Json nvector_to_json(const NVector& N);
Json region_to_json(const SupportRegion& r);
Json report_to_json(const CheckReport& r);
Json certificate_to_json(const InjectionCertificate& c);
Json family_to_json(const FamilyInstance& f);

// Single-line dump with the schema tag first.
std::string json_line(Json j);

}  // namespace posetlab
