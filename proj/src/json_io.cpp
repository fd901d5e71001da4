#include "bei/json_io.hpp"

namespace bei {

using nlohmann::json;

json to_json(const VertexSet& s) {
    json arr = json::array();
    for (int v : s.elements()) arr.push_back(v);
    return arr;
}

json to_json(const GbgCertificate& c) {
    json j;
    j["verdict"] = to_string(c.verdict);
    if (c.facet_triple)
        j["witness_facet_triple"] = {(*c.facet_triple)[0], (*c.facet_triple)[1],
                                     (*c.facet_triple)[2]};
    if (!c.chordless_cycle.empty()) j["witness_chordless_cycle"] = c.chordless_cycle;
    return j;
}

json to_json(const InvariantReport& r) {
    json j;
    j["n"] = r.n;
    j["c"] = r.c;
    j["omega"] = r.omega;
    j["cl"] = r.cl;
    json a = json::array();
    for (const auto& [size, count] : r.a) a.push_back({size, count});
    j["a"] = a;
    j["m"] = r.m;
    j["p"] = r.p ? json(*r.p) : json(nullptr);
    j["f"] = r.f;
    j["iv"] = r.iv;
    j["pv"] = r.pv;
    j["alpha_type1"] = r.alpha_type1;
    j["k_pdeg"] = r.k_pdeg;
    j["ell"] = r.ell ? json(*r.ell) : json(nullptr);
    j["cdeg"] = std::vector<int>(r.cdeg.begin() + 1, r.cdeg.end());
    j["pdeg"] = std::vector<int>(r.pdeg.begin() + 1, r.pdeg.end());
    j["deg"] = std::vector<int>(r.deg.begin() + 1, r.deg.end());
    j["is_star"] = r.is_star;
    j["classification"] = to_json(r.certificate);
    return j;
}

json to_json(const Bound& b) {
    json j;
    j["value"] = b.value ? json(*b.value) : json(nullptr);
    j["applicable"] = b.applicable;
    if (!b.reason.empty()) j["reason"] = b.reason;
    return j;
}

json to_json(const BoundsReport& b) {
    json j;
    j["lower_mm"] = to_json(b.lower_mm);
    j["lower_gbg"] = to_json(b.lower_gbg);
    j["upper_general"] = to_json(b.upper_general);
    j["upper_cl"] = to_json(b.upper_cl);
    j["upper_improved"] = to_json(b.upper_improved);
    j["exact_reg"] = to_json(b.exact_reg);
    return j;
}

json to_json(const ExtremalPrediction& p) {
    json j;
    j["applicable"] = p.applicable;
    if (!p.applicable) {
        j["reason"] = p.reason;
        return j;
    }
    j["position"] = {p.position.first, p.position.second};
    j["value"] = p.value ? json(*p.value) : json(nullptr);
    j["unique"] = p.unique;
    return j;
}

json to_json(const FlowerWitness& w) {
    json j;
    j["hub"] = w.hub;
    j["h"] = w.h;
    j["k"] = w.k;
    json petals = json::array();
    for (const VertexSet& p : w.petals) petals.push_back(to_json(p));
    j["petals"] = petals;
    return j;
}

json to_json(const Decomposition& d) {
    json j;
    json comps = json::array();
    for (const VertexSet& c : d.component_vertex_sets) comps.push_back(to_json(c));
    j["components"] = comps;
    j["glue_vertices"] = d.glue_vertices;
    return j;
}

json to_json(const MinimalPrimeDescription& d) {
    json j;
    json vars = json::array();
    for (int i : d.t.elements()) {
        vars.push_back("x" + std::to_string(i));
        vars.push_back("y" + std::to_string(i));
    }
    j["variables"] = vars;
    json comps = json::array();
    for (const VertexSet& c : d.component_vertex_sets) comps.push_back(to_json(c));
    j["components"] = comps;
    return j;
}

json to_json(const BettiTable& t) {
    json rows = json::array();
    for (const auto& [ij, v] : t.entries) rows.push_back({ij.first, ij.second, v});
    return rows;
}

json to_json(const OracleSummary& s) {
    json j;
    j["betti"] = to_json(s.table);
    j["reg"] = s.reg;
    j["pd"] = s.pd;
    json ext = json::array();
    for (const auto& [i, jj, v] : s.extremal) ext.push_back({i, jj, v});
    j["extremal"] = ext;
    return j;
}

}  // namespace bei
