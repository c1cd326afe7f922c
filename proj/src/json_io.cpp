#include "segre/json_io.hpp"

namespace segre::io {

json to_json(const Rat& q) { return json{{"num", q.num()}, {"den", q.den()}}; }

Rat rat_from_json(const json& j) {
    return Rat(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

json to_json(const core::StratumDescriptor& row) {
    return json{{"g", row.g},       {"r", row.r},
                {"d", row.d},       {"k", row.k},
                {"s", row.s},       {"eps", row.eps},
                {"d1", row.d1},     {"dim", row.dim},
                {"codim", row.codim}, {"locus_dim", row.locus_dim},
                {"is_generic", row.is_generic}};
}

json to_json(const core::NestedBounds& nb) {
    json j{{"nu", nb.nu}};
    j["sub_bound"] = nb.sub_bound ? to_json(*nb.sub_bound) : json(nullptr);
    j["quot_bound"] = nb.quot_bound ? to_json(*nb.quot_bound) : json(nullptr);
    j["sub_bound_int"] = nb.sub_bound_int ? json(*nb.sub_bound_int) : json(nullptr);
    j["quot_bound_int"] = nb.quot_bound_int ? json(*nb.quot_bound_int) : json(nullptr);
    return j;
}

const char* step_type_name(transform::StepType t) {
    return t == transform::StepType::I ? "I" : "II";
}

transform::StepType step_type_from_name(const std::string& name) {
    if (name == "I") return transform::StepType::I;
    if (name == "II") return transform::StepType::II;
    throw domain_error("step type must be I or II: got '" + name + "'");
}

json to_json(const transform::SegreProfile& p) {
    return json{{"g", p.g}, {"r", p.r}, {"d", p.d}, {"s", p.s}};
}

transform::SegreProfile profile_from_json(const json& j) {
    return transform::make_profile(j.at("g").get<std::int64_t>(), j.at("r").get<std::int64_t>(),
                                   j.at("d").get<std::int64_t>(),
                                   j.at("s").get<std::vector<std::int64_t>>());
}

json to_json(const transform::TransformStep& t) {
    json types = json::array();
    for (auto ty : t.types) types.push_back(step_type_name(ty));
    return json{{"types", types}};
}

transform::TransformStep step_from_json(const json& j) {
    transform::TransformStep t{{}};
    for (const auto& name : j.at("types")) t.types.push_back(step_type_from_name(name));
    return t;
}

json to_json(const construct::ConstructionCertificate& cert) {
    json per_i = json::array();
    for (const auto& line : cert.per_i) {
        per_i.push_back(json{
            {"i", line.i},
            {"reduction", line.reduction == construct::Reduction::Direct ? "direct" : "dual"},
            {"s_i_max", line.s_i_max},
            {"worst_case_lb", line.worst_case_lb},
            {"chain", json::array({to_json(line.chain.first), to_json(line.chain.second)})},
            {"chain_ok", line.chain.ok},
            {"sharp_ok", line.sharp_ok}});
    }
    return json{{"g", cert.g},
                {"r", cert.r},
                {"d", cert.d},
                {"k", cert.k},
                {"s", cert.s},
                {"n_k", cert.n_k},
                {"d_tilde", cert.d_tilde},
                {"window", json::array({cert.window_lo, cert.window_hi})},
                {"per_i", per_i},
                {"sharp_ok", cert.sharp_ok},
                {"paper_ok", cert.paper_ok},
                {"verdict", construct::verdict_name(cert.verdict)},
                {"genus_requirement", to_json(construct::genus_requirement(cert.r, cert.k))},
                {"notes", cert.notes}};
}

json to_json(const construct::GenusRequirement& req) {
    return json{{"r", req.r},
                {"k", req.k},
                {"n", req.n},
                {"general_bound", to_json(req.general_bound)},
                {"refined_bound", to_json(req.refined_bound)}};
}

json to_json(const oracle::FuzzReport& rep) {
    return json{{"seed", rep.seed},
                {"trials", rep.trials},
                {"congruence_checks", rep.congruence_checks},
                {"duality_checks", rep.duality_checks},
                {"cap_checks", rep.cap_checks},
                {"failures", rep.failures},
                {"passed", rep.passed()}};
}

}  // namespace segre::io
