#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgs/cycle_space.hpp"
#include "sgs/signed_graph.hpp"

namespace sgs {

/// Largest order for which Aut(G) is searched.
inline constexpr int kMaxAutomorphismOrder = 16;

/// All automorphisms of the underlying graph (signs ignored), in
/// lexicographic order of their image arrays. Throws ResourceLimitError
/// above kMaxAutomorphismOrder vertices.
std::vector<VertexPermutation> automorphisms(const SignedGraph& g);

/// Streams automorphisms in the same order; stop early by returning false
/// from `visit`. Returns how many were visited.
std::uint64_t for_each_automorphism(const SignedGraph& g,
                                    const std::function<bool(const VertexPermutation&)>& visit);

/// Per-underlying-graph data shared by every signature on it: spanning
/// forest, fundamental cycles, the 2-regular catalog, and Aut(G) with the
/// induced action on edge ids.
class SymmetryContext {
public:
    /// Throws ResourceLimitError when the cyclomatic number or order exceeds
    /// the caps.
    explicit SymmetryContext(const SignedGraph& g);

    const SignedGraph& underlying() const { return underlying_; }
    const SpanningTree& tree() const { return tree_; }
    const TwoRegularCatalog& catalog() const { return catalog_; }
    const std::vector<std::vector<EdgeId>>& fundamental_edges() const { return fundamental_edges_; }
    const std::vector<VertexPermutation>& automorphisms() const { return automorphisms_; }
    /// edge_maps()[a][e] = id of the image of edge e under automorphism a.
    const std::vector<std::vector<EdgeId>>& edge_maps() const { return edge_maps_; }

private:
    SignedGraph underlying_;
    SpanningTree tree_;
    TwoRegularCatalog catalog_;
    std::vector<std::vector<EdgeId>> fundamental_edges_;
    std::vector<VertexPermutation> automorphisms_;
    std::vector<std::vector<EdgeId>> edge_maps_;
};

/// Throws InputError unless p preserves adjacency of g's underlying graph.
std::vector<EdgeId> induced_edge_map(const SignedGraph& g, const VertexPermutation& p);

/// p maps the positive odd 2-regular subgraphs of g onto the negative ones.
/// Throws InputError if p is not an automorphism of the underlying graph.
bool is_weak_automorphism(const SignedGraph& g, const VertexPermutation& p);
bool is_weak_automorphism(const SignedGraph& g, const TwoRegularCatalog& catalog, std::span<const EdgeId> edge_map);

/// The same property checked on the fundamental cycles only: odd ones must
/// change sign under p and even ones must keep it.
bool spanning_cycle_criterion(const SignedGraph& g, const VertexPermutation& p);
bool spanning_cycle_criterion(const SignedGraph& g, const std::vector<std::vector<EdgeId>>& fundamental_edges,
                              std::span<const EdgeId> edge_map);

/// First automorphism p (lexicographic) such that p applied to g is
/// switching equivalent to -g, decided by comparing cycle sign vectors.
std::optional<VertexPermutation> is_sign_symmetric(const SignedGraph& g);
std::optional<VertexPermutation> is_sign_symmetric(const SymmetryContext& ctx, const SignedGraph& g);

struct SymmetryVerdict {
    bool spectrally_symmetric = false;
    std::optional<bool> sign_symmetric;    // nullopt when undecided (caps)
    std::optional<bool> odd_exchangeable;  // nullopt when undecided (caps)
    std::optional<VertexPermutation> witness;  // first weak automorphism
    std::optional<VertexPermutation> switching_witness;  // first p with g^p ~ -g
    std::optional<std::uint64_t> automorphism_count;
    /// Violations of the implications between the three tests. Empty on
    /// every input seen so far.
    std::vector<std::string> findings;
};

/// Runs the exact coefficient test, the odd-exchangeability search and the
/// switching-isomorphism search independently, then cross-checks them.
/// With allow_undecided, exceeding a cap leaves the affected fields empty
/// instead of throwing.
SymmetryVerdict classify(const SignedGraph& g, bool allow_undecided = false);
SymmetryVerdict classify(const SymmetryContext& ctx, const SignedGraph& g);

}  // namespace sgs
