#pragma once

#include <string>

#include <json.hpp>

#include "freelab/families.hpp"
#include "freelab/freeness.hpp"

namespace freelab {

struct InputDescription {
    std::string poly;
    std::string field;  // "q" or "fp"
    std::uint64_t prime = 0;  // meaningful for fp only
};

/// Versioned classification document; every number is an exact integer.
inline nlohmann::json report_to_json(const CurveReport& rep, const InputDescription& input) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["input"]["poly"] = input.poly;
    doc["input"]["field"] = input.field;
    if (input.field == "fp") doc["input"]["prime"] = input.prime;
    doc["degree"] = rep.degree;
    doc["mdr"] = rep.mdr;
    doc["tau"] = rep.tau;
    doc["class"] = curve_class_name(rep.cls);
    doc["exponents"] = rep.exponents;
    auto profile = nlohmann::json::array();
    for (const auto& [m, n] : rep.n_profile) profile.push_back({m, n});
    doc["n_profile"] = profile;
    if (rep.rigid) doc["rigid"] = *rep.rigid;
    if (rep.relation_multidegree)
        doc["relation_multidegree"] = {(*rep.relation_multidegree)[0], (*rep.relation_multidegree)[1],
                                       (*rep.relation_multidegree)[2]};
    if (rep.b) doc["b"] = *rep.b;
    doc["timings"]["route_a_ms"] = rep.route_a_ms;
    doc["timings"]["route_b_ms"] = rep.route_b_ms;
    doc["timings"]["route_c_ms"] = rep.route_c_ms;
    return doc;
}

template <class F>
nlohmann::json kummer_to_json(const FamilyDescriptor<F>& fam, int k, const PullbackGenus& genus,
                              const std::vector<SingularityPrediction>& preds) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["family"] = family_name_str(fam.name);
    doc["k"] = k;
    auto pts = nlohmann::json::array();
    for (std::size_t i = 0; i < fam.base_points.size(); ++i) {
        const auto& s = fam.base_points[i];
        nlohmann::json p;
        p["label"] = s.label;
        p["type"] = s.location.ptype;
        p["mu_base"] = s.mu;
        auto mults = nlohmann::json::array();
        for (const auto& [ax, mult] : s.axis_mults) mults.push_back({axis_name(ax), mult});
        p["axis_mults"] = mults;
        p["mu_pullback"] = preds[i].mu;
        p["branches"] = preds[i].branches;
        p["delta"] = preds[i].delta;
        p["preimage_points"] = preds[i].preimage_points;
        pts.push_back(p);
    }
    doc["points"] = pts;
    doc["components"] = genus.components;
    doc["genus_per_component"] = genus.genus_per_component;
    doc["euler_characteristic"] = genus.euler_characteristic;
    doc["delta_total"] = genus.delta_total;
    return doc;
}

}  // namespace freelab
