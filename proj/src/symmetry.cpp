#include "sgs/symmetry.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sgs/error.hpp"
#include "sgs/polynomials.hpp"

namespace sgs {

namespace {

// Degree plus the sorted degrees of the neighbors; automorphisms preserve it.
std::vector<int> vertex_classes(const SignedGraph& g) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> out(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<int> key{g.degree(v)};
        for (Vertex w : g.neighbors(v)) key.push_back(g.degree(w));
        std::sort(key.begin() + 1, key.end());
        auto [it, inserted] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
        out[static_cast<std::size_t>(v)] = it->second;
    }
    return out;
}

class AutomorphismSearch {
public:
    AutomorphismSearch(const SignedGraph& g, const std::function<bool(const VertexPermutation&)>& visit)
        : g_(g), n_(g.order()), visit_(visit), classes_(vertex_classes(g)) {
        image_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), 0);
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (const auto& e : g.edges()) {
            adj_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
            adj_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
        }
    }

    std::uint64_t run() {
        extend(0);
        return count_;
    }

private:
    bool adjacent(Vertex a, Vertex b) const { return (adj_[static_cast<std::size_t>(a)] >> b) & 1u; }

    void extend(Vertex v) {
        if (stopped_) return;
        if (v == n_) {
            ++count_;
            if (!visit_(VertexPermutation(image_))) stopped_ = true;
            return;
        }
        for (Vertex w = 0; w < n_ && !stopped_; ++w) {
            if (used_[static_cast<std::size_t>(w)] || classes_[static_cast<std::size_t>(w)] != classes_[static_cast<std::size_t>(v)])
                continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                ok = adjacent(u, v) == adjacent(image_[static_cast<std::size_t>(u)], w);
            if (!ok) continue;
            image_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = 1;
            extend(v + 1);
            used_[static_cast<std::size_t>(w)] = 0;
        }
        image_[static_cast<std::size_t>(v)] = -1;
    }

    const SignedGraph& g_;
    int n_;
    const std::function<bool(const VertexPermutation&)>& visit_;
    std::vector<int> classes_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t count_ = 0;
    bool stopped_ = false;
};

void check_order(const SignedGraph& g) {
    if (g.order() > kMaxAutomorphismOrder)
        throw ResourceLimitError("automorphism search supports at most " + std::to_string(kMaxAutomorphismOrder) +
                                 " vertices, got " + std::to_string(g.order()));
}

std::vector<std::vector<EdgeId>> fundamental_edge_lists(const SignedGraph& g, const SpanningTree& t) {
    std::vector<std::vector<EdgeId>> out;
    for (auto& c : fundamental_cycles(g, t)) out.push_back(std::move(c.edges));
    return out;
}

bool sign_symmetric_under(const SignedGraph& g, const std::vector<std::vector<EdgeId>>& fundamental,
                          std::span<const EdgeId> edge_map, std::vector<EdgeId>& inverse) {
    inverse.assign(edge_map.size(), -1);
    for (std::size_t e = 0; e < edge_map.size(); ++e) inverse[static_cast<std::size_t>(edge_map[e])] = static_cast<EdgeId>(e);
    for (const auto& cycle : fundamental) {
        int original = 1;
        int permuted = 1;
        for (EdgeId e : cycle) {
            original *= g.edge(e).sign;
            permuted *= g.edge(inverse[static_cast<std::size_t>(e)]).sign;
        }
        // Sign of the cycle in -g.
        const int negated = cycle.size() % 2 == 1 ? -original : original;
        if (permuted != negated) return false;
    }
    return true;
}

}  // namespace

std::uint64_t for_each_automorphism(const SignedGraph& g,
                                    const std::function<bool(const VertexPermutation&)>& visit) {
    check_order(g);
    return AutomorphismSearch(g, visit).run();
}

std::vector<VertexPermutation> automorphisms(const SignedGraph& g) {
    std::vector<VertexPermutation> out;
    for_each_automorphism(g, [&](const VertexPermutation& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

SymmetryContext::SymmetryContext(const SignedGraph& g) : underlying_(g.underlying()) {
    check_order(g);
    tree_ = spanning_forest(underlying_);
    catalog_ = enumerate_two_regular(underlying_, tree_);
    fundamental_edges_ = fundamental_edge_lists(underlying_, tree_);
    automorphisms_ = sgs::automorphisms(underlying_);
    edge_maps_.reserve(automorphisms_.size());
    for (const auto& p : automorphisms_) edge_maps_.push_back(induced_edge_map(underlying_, p));
}

std::vector<EdgeId> induced_edge_map(const SignedGraph& g, const VertexPermutation& p) {
    if (p.size() != g.order()) throw InputError("permutation size does not match vertex count");
    std::vector<EdgeId> map(static_cast<std::size_t>(g.size()));
    for (EdgeId e = 0; e < g.size(); ++e) {
        auto image = g.edge_id(p(g.edge(e).u), p(g.edge(e).v));
        if (!image) throw InputError("permutation is not an automorphism of the underlying graph");
        map[static_cast<std::size_t>(e)] = *image;
    }
    return map;
}

bool is_weak_automorphism(const SignedGraph&, const TwoRegularCatalog& catalog, std::span<const EdgeId> edge_map) {
    if (catalog.odd_positive.size() != catalog.odd_negative.size()) return false;
    std::vector<EdgeId> image;
    for (std::size_t idx : catalog.odd_positive) {
        const auto& member = catalog.all[idx];
        image.clear();
        for (EdgeId e : member.edges) image.push_back(edge_map[static_cast<std::size_t>(e)]);
        // A 2-regular subgraph is determined by the cotree edges it contains.
        const auto* target = catalog.find(catalog.coordinates_of(image));
        if (target == nullptr || !target->odd() || target->sign > 0) return false;
    }
    return true;
}

bool is_weak_automorphism(const SignedGraph& g, const VertexPermutation& p) {
    const auto edge_map = induced_edge_map(g, p);
    const auto catalog = enumerate_two_regular(g, spanning_forest(g));
    return is_weak_automorphism(g, catalog, edge_map);
}

bool spanning_cycle_criterion(const SignedGraph& g, const std::vector<std::vector<EdgeId>>& fundamental_edges,
                              std::span<const EdgeId> edge_map) {
    for (const auto& cycle : fundamental_edges) {
        int before = 1;
        int after = 1;
        for (EdgeId e : cycle) {
            before *= g.edge(e).sign;
            after *= g.edge(edge_map[static_cast<std::size_t>(e)]).sign;
        }
        const bool odd = cycle.size() % 2 == 1;
        if (after != (odd ? -before : before)) return false;
    }
    return true;
}

bool spanning_cycle_criterion(const SignedGraph& g, const VertexPermutation& p) {
    const auto edge_map = induced_edge_map(g, p);
    return spanning_cycle_criterion(g, fundamental_edge_lists(g, spanning_forest(g)), edge_map);
}

std::optional<VertexPermutation> is_sign_symmetric(const SymmetryContext& ctx, const SignedGraph& g) {
    if (!g.same_underlying(ctx.underlying())) throw InputError("graph does not match the symmetry context");
    std::vector<EdgeId> inverse;
    for (std::size_t a = 0; a < ctx.automorphisms().size(); ++a) {
        if (sign_symmetric_under(g, ctx.fundamental_edges(), ctx.edge_maps()[a], inverse))
            return ctx.automorphisms()[a];
    }
    return std::nullopt;
}

std::optional<VertexPermutation> is_sign_symmetric(const SignedGraph& g) {
    check_order(g);
    const SignedGraph base = g.underlying();
    const auto fundamental = fundamental_edge_lists(base, spanning_forest(base));
    std::optional<VertexPermutation> witness;
    std::vector<EdgeId> inverse;
    for_each_automorphism(base, [&](const VertexPermutation& p) {
        if (sign_symmetric_under(g, fundamental, induced_edge_map(base, p), inverse)) {
            witness = p;
            return false;
        }
        return true;
    });
    return witness;
}

SymmetryVerdict classify(const SymmetryContext& ctx, const SignedGraph& g) {
    if (!g.same_underlying(ctx.underlying())) throw InputError("graph does not match the symmetry context");
    SymmetryVerdict v;
    v.spectrally_symmetric = is_spectrally_symmetric(g);
    v.automorphism_count = ctx.automorphisms().size();

    const auto catalog = resign(ctx.catalog(), g);
    for (std::size_t a = 0; a < ctx.automorphisms().size(); ++a) {
        if (is_weak_automorphism(g, catalog, ctx.edge_maps()[a])) {
            v.witness = ctx.automorphisms()[a];
            if (!spanning_cycle_criterion(g, ctx.fundamental_edges(), ctx.edge_maps()[a]))
                v.findings.push_back("weak automorphism " + v.witness->to_cycle_string() +
                                     " fails the spanning-cycle criterion");
            break;
        }
    }
    v.odd_exchangeable = v.witness.has_value();
    v.switching_witness = is_sign_symmetric(ctx, g);
    v.sign_symmetric = v.switching_witness.has_value();

    if (*v.sign_symmetric != *v.odd_exchangeable)
        v.findings.push_back(std::string("odd-exchangeable = ") + (*v.odd_exchangeable ? "true" : "false") +
                             " but sign-symmetric = " + (*v.sign_symmetric ? "true" : "false"));
    if (*v.sign_symmetric && !v.spectrally_symmetric)
        v.findings.push_back("sign-symmetric but the spectrum is not symmetric");
    if (*v.odd_exchangeable && !v.spectrally_symmetric)
        v.findings.push_back("odd-exchangeable but the spectrum is not symmetric");
    return v;
}

SymmetryVerdict classify(const SignedGraph& g, bool allow_undecided) {
    std::optional<SymmetryContext> ctx;
    try {
        ctx.emplace(g);
    } catch (const ResourceLimitError&) {
        if (!allow_undecided) throw;
        SymmetryVerdict v;
        v.spectrally_symmetric = is_spectrally_symmetric(g);
        return v;
    }
    return classify(*ctx, g);
}

}  // namespace sgs
