#include "ybalg/json_io.hpp"

namespace ybalg {

Json presentation_json(const QuadPresentation& p) {
    Json j;
    Json gens = Json::array();
    for (const auto& g : p.gens) {
        std::string s = g.to_string();
        gens.push_back(p.dual_labels ? s + "*" : s);
    }
    j["generators"] = std::move(gens);
    Json rels = Json::array();
    int d = p.dim();
    for (const auto& row : p.relations.basis()) {
        Json rel = Json::array();
        for (const auto& [col, c] : row.terms) {
            int a = static_cast<int>(col / d), b = static_cast<int>(col % d);
            Json term = Json::array();
            term.push_back(c.to_string());
            Json pair = Json::array();
            pair.push_back(p.gens[a].to_string());
            pair.push_back(p.gens[b].to_string());
            term.push_back(std::move(pair));
            rel.push_back(std::move(term));
        }
        rels.push_back(std::move(rel));
    }
    j["relations"] = std::move(rels);
    j["provenance"] = p.provenance;
    j["convention"] = p.convention == Pairing::Straight ? "straight" : "reversed";
    return j;
}

Json report_json(const VerificationReport& r) {
    Json j;
    j["spec"] = r.spec.to_string();
    Json conv;
    conv["pairing"] = r.pairing;
    conv["lambda_r_square"] = r.lambda_r_square;
    Json backends;
    for (const auto& [k, v] : r.backends) backends[k] = v;
    conv["backends"] = std::move(backends);
    j["conventions"] = std::move(conv);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json rec;
        rec["id"] = c.id;
        rec["anchor"] = c.anchor;
        rec["computed"] = c.computed;
        if (!c.printed.empty()) rec["printed"] = c.printed;
        rec["status"] = c.status;
        checks.push_back(std::move(rec));
    }
    j["checks"] = std::move(checks);
    Json summary;
    summary["pass"] = r.passes();
    summary["mismatch"] = r.mismatches();
    summary["unprinted"] = r.unprinted();
    j["summary"] = std::move(summary);
    return j;
}

Json hilbert_json(const GroupSpec& spec,
                  const std::vector<std::pair<std::string, std::string>>& dims) {
    Json j;
    j["spec"] = spec.to_string();
    Json series = Json::array();
    Json tags = Json::array();
    for (const auto& [v, tag] : dims) {
        series.push_back(v);
        tags.push_back(tag);
    }
    j["series"] = std::move(series);
    j["tags"] = std::move(tags);
    return j;
}

Json morphism_json(const GeneratorMap& m, const MorphismCheck& chk) {
    Json j;
    j["kind"] = m.kind;
    j["source"] = m.source.to_string();
    j["target"] = m.target.to_string();
    Json map = Json::object();
    for (size_t k = 0; k < m.source_gens.size(); ++k)
        map[m.source_gens[k].to_string()] = m.target_of[k].to_string();
    j["generator_map"] = std::move(map);
    j["coaction_compatible"] = chk.coaction_compatible;
    j["relations_preserved"] = chk.relations_preserved;
    Json fails = Json::array();
    for (const auto& f : chk.failing_relations) fails.push_back(f);
    j["failing_relations"] = std::move(fails);
    j["perfect_subquotient_deg2"] = chk.perfect_subquotient_deg2;
    return j;
}

}  // namespace ybalg
