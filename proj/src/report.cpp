#include "sgs/report.hpp"

namespace sgs {

using nlohmann::json;

namespace {

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

}  // namespace

json to_json(const IntPolynomial& p) { return p.coefficient_strings(); }

json to_json(const VertexPermutation& p) { return std::vector<int>(p.image().begin(), p.image().end()); }

json to_json(const SymmetryVerdict& v) {
    json out;
    out["spectrally_symmetric"] = v.spectrally_symmetric;
    out["sign_symmetric"] = optional_bool(v.sign_symmetric);
    out["odd_exchangeable"] = optional_bool(v.odd_exchangeable);
    out["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
    out["switching_witness"] = v.switching_witness ? to_json(*v.switching_witness) : json(nullptr);
    out["automorphism_count"] = v.automorphism_count ? json(*v.automorphism_count) : json(nullptr);
    out["findings"] = v.findings;
    return out;
}

json to_json(const Spectrum& s) {
    json out;
    out["values"] = s.values;
    out["pairing_tolerance"] = s.pairing_tolerance;
    out["numerically_symmetric"] = numeric_symmetry_check(s);
    return out;
}

json graph_json(const SignedGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.sign > 0 ? "+" : "-"});
    return {{"n", g.order()}, {"m", g.size()}, {"edges", std::move(edges)}};
}

json to_json(const CensusReport& r) {
    json out;
    out["underlying"] = graph_json(r.underlying);
    out["k"] = r.k;
    json cotree = json::array();
    for (EdgeId e : r.tree.cotree_edges) cotree.push_back({r.underlying.edge(e).u, r.underlying.edge(e).v});
    out["cotree_edges"] = std::move(cotree);
    out["undecided"] = r.undecided;
    json classes = json::array();
    for (const auto& c : r.classes) {
        classes.push_back({{"mask", c.mask},
                           {"cotree_signs", c.cotree_signs},
                           {"negative_cycles", c.negative_cycles},
                           {"verdict", to_json(c.verdict)}});
    }
    out["classes"] = std::move(classes);
    out["strata"] = r.strata;
    json summary = json::array();
    for (const auto& [key, count] : r.summary)
        summary.push_back({{"spectrally_symmetric", key.first}, {"sign_symmetric", optional_bool(key.second)}, {"count", count}});
    out["summary"] = std::move(summary);
    return out;
}

json to_json(const SuiteReport& r) {
    json out;
    out["suite"] = r.name;
    out["scope"] = r.scope;
    out["passed"] = r.passed;
    out["cases"] = r.cases;
    out["seconds"] = r.seconds;
    out["notes"] = r.notes;
    if (!r.passed) {
        out["failure"] = r.detail;
        out["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
    }
    return out;
}

json certificate_json(const Construction& c) {
    return {{"construction", c.name},
            {"parameters", c.parameters},
            {"witness_permutation", c.witness ? to_json(*c.witness) : json(nullptr)}};
}

}  // namespace sgs
