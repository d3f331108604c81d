#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sgs/signed_graph.hpp"

namespace sgs {

/// Largest cyclomatic number for which the 2^k cycle-space walk is attempted.
inline constexpr int kMaxCyclomaticNumber = 20;

using Gf2Vector = std::vector<bool>;

/// A rooted spanning tree (or forest, one root per component).
///
/// Cotree edges are listed in edge-id order, which is lexicographic (u, v)
/// order because SignedGraph keeps its edges sorted.
struct SpanningTree {
    std::vector<Vertex> parent;        // -1 at roots
    std::vector<EdgeId> parent_edge;   // -1 at roots
    std::vector<int> depth;
    std::vector<EdgeId> tree_edges;    // ascending ids
    std::vector<EdgeId> cotree_edges;  // ascending ids
    std::vector<int> cotree_index;     // per edge id: position in cotree_edges, or -1

    int cyclomatic_number() const { return static_cast<int>(cotree_edges.size()); }
    bool contains(EdgeId e) const { return cotree_index[static_cast<std::size_t>(e)] < 0; }
    /// Edge ids on the tree path between a and b (same component required).
    std::vector<EdgeId> path(Vertex a, Vertex b) const;
};

struct FundamentalCycle {
    EdgeId cotree_edge = -1;
    std::vector<EdgeId> edges;  // ascending ids
    int length = 0;
    int sign = 1;

    bool odd() const { return length % 2 == 1; }
};

struct TwoRegularSubgraph {
    std::uint32_t coordinates = 0;  // bit i set iff fundamental cycle i participates
    std::vector<EdgeId> edges;      // ascending ids
    std::vector<Vertex> vertices;   // ascending
    /// Each component cycle as a closed walk starting at its smallest vertex;
    /// components ordered by smallest vertex.
    std::vector<std::vector<Vertex>> component_cycles;
    int sign = 1;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int cycle_count() const { return static_cast<int>(component_cycles.size()); }
    bool odd() const { return vertex_count() % 2 == 1; }
};

/// All 2-regular subgraphs, ordered by coordinate mask, plus the four
/// parity/sign classes as indices into `all`.
struct TwoRegularCatalog {
    std::vector<TwoRegularSubgraph> all;
    std::vector<std::size_t> even_positive;
    std::vector<std::size_t> even_negative;
    std::vector<std::size_t> odd_positive;
    std::vector<std::size_t> odd_negative;
    /// Per edge id: bit position of the cotree edge in `coordinates`, or -1.
    std::vector<int> cotree_index;

    /// Coordinates of an arbitrary even subgraph given by edge ids.
    std::uint32_t coordinates_of(std::span<const EdgeId> edges) const;
    /// Member with the given coordinates, if it is 2-regular.
    const TwoRegularSubgraph* find(std::uint32_t coordinates) const;
};

/// Breadth-first spanning forest: each component rooted at its smallest
/// vertex, neighbors visited in ascending order.
SpanningTree spanning_forest(const SignedGraph& g);
/// As spanning_forest, but throws InputError unless g is connected.
SpanningTree spanning_tree(const SignedGraph& g);
/// Spanning forest from a caller-chosen edge set; throws InputError if the
/// edges contain a cycle or fail to span every component of g.
SpanningTree spanning_tree_from_edges(const SignedGraph& g, std::span<const EdgeId> tree_edges);

/// One cycle per cotree edge: the tree path between its ends plus the edge.
std::vector<FundamentalCycle> fundamental_cycles(const SignedGraph& g, const SpanningTree& t);

/// Walk all nonempty GF(2) combinations of the fundamental cycles and keep
/// the ones in which every touched vertex has degree exactly two.
/// Throws ResourceLimitError when the cyclomatic number exceeds `max_k`.
TwoRegularCatalog enumerate_two_regular(const SignedGraph& g, const SpanningTree& t,
                                        int max_k = kMaxCyclomaticNumber);

/// Re-read member signs and partitions from `g`, which must share the
/// underlying graph the catalog was built on.
TwoRegularCatalog resign(const TwoRegularCatalog& catalog, const SignedGraph& g);

/// Component i is 1 iff fundamental cycle i is negative.
Gf2Vector cycle_sign_vector(const SignedGraph& g, const SpanningTree& t);

/// Product of edge signs over a set of edge ids.
int edge_set_sign(const SignedGraph& g, std::span<const EdgeId> edges);

}  // namespace sgs
