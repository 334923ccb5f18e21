#include "posetlab/json_io.hpp"

#include <istream>
#include <iterator>

#include "posetlab/error.hpp"

namespace posetlab {

Json poset_to_json(const Poset& p, const std::optional<MarkedTriple>& z) {
    Json j;
    j["n"] = p.size();
    Json covers = Json::array();
    for (auto [x, y] : p.covers()) covers.push_back({x, y});
    j["covers"] = covers;
    if (z) j["z"] = {z->z1, z->z2, z->z3};
    return j;
}

PosetDocument poset_from_json(const Json& j) {
    try {
        PosetDocument doc;
        const int n = j.at("n").get<int>();
        std::vector<Relation> pairs;
        if (j.contains("covers")) {
            for (const auto& pair : j.at("covers")) {
                if (!pair.is_array() || pair.size() != 2) {
                    throw Error(ErrorKind::parse_error, "each cover must be a pair [i,j]");
                }
                pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
            }
        }
        doc.poset = Poset::build(n, pairs);
        if (j.contains("z") && !j.at("z").is_null()) {
            const auto& z = j.at("z");
            if (!z.is_array() || z.size() != 3) throw Error(ErrorKind::parse_error, "\"z\" must list three ids");
            doc.triple = MarkedTriple{z[0].get<int>(), z[1].get<int>(), z[2].get<int>()};
            check_triple(doc.poset, *doc.triple);
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse_error, e.what());
    }
}

PosetDocument read_poset(std::istream& in) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse_error, e.what());
    }
    return poset_from_json(j);
}

Json ftable_to_json(const FTable& F) {
    Json j;
    j["n"] = F.n();
    j["z"] = {F.triple().z1, F.triple().z2, F.triple().z3};
    Json cells = Json::array();
    for (const auto& [cell, c] : F.entries()) cells.push_back({cell.first, cell.second, to_decimal(c)});
    j["F"] = cells;
    return j;
}

FTable ftable_from_json(const Json& j) {
    try {
        const auto& z = j.at("z");
        std::map<Cell, Count> cells;
        for (const auto& row : j.at("F")) {
            cells[{row.at(0).get<int>(), row.at(1).get<int>()}] = parse_count(row.at(2).get<std::string>());
        }
        return FTable(j.at("n").get<int>(), {z[0].get<int>(), z[1].get<int>(), z[2].get<int>()}, std::move(cells));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse_error, e.what());
    }
}

Json nvector_to_json(const NVector& N) {
    Json j;
    j["a"] = N.element();
    Json counts = Json::array();
    for (int k = 1; k <= N.n(); ++k) {
        if (N(k) != 0) counts.push_back({k, to_decimal(N(k))});
    }
    j["N"] = counts;
    return j;
}

Json region_to_json(const SupportRegion& r) {
    return Json{{"k_lo", r.k_lo}, {"k_hi", r.k_hi}, {"l_lo", r.l_lo},
                {"l_hi", r.l_hi}, {"s_lo", r.s_lo}, {"s_hi", r.s_hi}};
}

Json report_to_json(const CheckReport& r) {
    Json j;
    j["kind"] = "report";
    j["ineq"] = r.id;
    j["k"] = r.k;
    j["l"] = r.l;
    if (r.p) j["p"] = *r.p;
    if (r.q) j["q"] = *r.q;
    j["lhs"] = to_fraction(r.lhs);
    j["rhs"] = to_fraction(r.rhs);
    j["slack"] = to_fraction(r.slack());
    const auto ratio = r.ratio();
    j["ratio"] = ratio ? Json(to_fraction(*ratio)) : Json(nullptr);
    j["verdict"] = to_string(r.verdict);
    j["form"] = r.form;
    if (!r.branch.empty()) j["branch"] = r.branch;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json certificate_to_json(const InjectionCertificate& c) {
    Json j;
    j["kind"] = "injection";
    j["name"] = c.name;
    if (c.element >= 0) {
        j["a"] = c.element;
        j["k"] = c.k;
    } else {
        j["k"] = c.k;
        j["l"] = c.l;
    }
    j["domain_size"] = c.domain_size;
    j["image_size"] = c.image_size;
    j["target_size"] = to_decimal(c.target_size);
    j["interval_total"] = to_decimal(c.interval_total);
    j["codomain_bound"] = to_decimal(c.codomain_bound);
    j["collisions"] = c.collision_count;
    j["payload_violations"] = c.payload_violations;
    j["codomain_violations"] = c.codomain_violations;
    if (c.element >= 0) j["roundtrip_failures"] = c.roundtrip_failures;
    j["hashed"] = c.hashed;
    j["ok"] = c.ok();
    return j;
}

Json family_to_json(const FamilyInstance& f) {
    Json j = poset_to_json(f.poset, f.element ? std::nullopt : std::optional<MarkedTriple>(f.triple));
    j["family"] = {{"id", f.spec.id}, {"n", f.spec.n}, {"k", f.spec.k}, {"l", f.spec.l}};
    j["labels"] = f.labels;
    Json expected;
    if (f.element) {
        expected["a"] = *f.element;
        Json cells = Json::array();
        for (const auto& [k, c] : f.expected_n) cells.push_back({k, to_decimal(c)});
        expected["N"] = cells;
    } else {
        Json cells = Json::array();
        for (const auto& [cell, c] : f.expected_cells) cells.push_back({cell.first, cell.second, to_decimal(c)});
        expected["F"] = cells;
    }
    j["expected"] = expected;
    return j;
}

std::string json_line(Json j) {
    Json out;
    out["schema"] = schema_version;
    for (auto& [key, value] : j.items()) {
        if (key != "schema") out[key] = value;
    }
    return out.dump();
}

}  // namespace posetlab
