#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgs {

using Vertex = int;
using EdgeId = int;

/// Undirected edge with u < v and sign +1 or -1.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    int sign = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A simple undirected graph on vertices 0..n-1 with a +1/-1 signature.
///
/// Edges are kept sorted by (u, v) so that equality and serialization are
/// canonical. Edge ids index into that sorted list and are stable for the
/// lifetime of the value. The adjacency matrix is a derived view.
class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(int n);
    /// Throws InputError on loops, out-of-range endpoints, parallel edges or
    /// signs outside {+1, -1}. Endpoint order within an edge is normalized.
    SignedGraph(int n, std::vector<Edge> edges);

    /// All-positive graph from an unsigned edge list.
    static SignedGraph from_pairs(int n, std::span<const std::pair<Vertex, Vertex>> pairs);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    /// Id of edge {u, v}, if present.
    std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }
    /// Sign of {u, v}; 0 when the vertices are not adjacent.
    int sign(Vertex u, Vertex v) const;

    /// Neighbors in ascending order.
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool is_connected() const;
    /// Connected components as ascending vertex lists, ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const;
    bool is_bipartite() const;

    /// Same underlying graph with every edge positive.
    SignedGraph underlying() const;
    /// Same underlying graph with signs replaced (indexed by edge id).
    SignedGraph with_signs(std::span<const int> signs) const;
    /// Subgraph induced by the vertices not in `removed`, relabeled in ascending order.
    SignedGraph remove_vertices(std::span<const Vertex> removed) const;

    std::vector<std::vector<int>> adjacency_matrix() const;

    bool same_underlying(const SignedGraph& other) const;

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void index();

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<EdgeId> id_table_;  // n * n, -1 where absent
};

/// Vertex subset U used for switching.
class SwitchSet {
public:
    SwitchSet() = default;
    explicit SwitchSet(std::vector<Vertex> members);

    std::span<const Vertex> members() const { return members_; }
    bool contains(Vertex v) const;

private:
    std::vector<Vertex> members_;  // sorted, unique
};

/// A bijection on {0..n-1}.
class VertexPermutation {
public:
    VertexPermutation() = default;
    /// Throws InputError unless `image` is a permutation.
    explicit VertexPermutation(std::vector<Vertex> image);

    static VertexPermutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    Vertex operator()(Vertex v) const { return image_[static_cast<std::size_t>(v)]; }
    std::span<const Vertex> image() const { return image_; }

    VertexPermutation inverse() const;
    /// (this * other)(v) = this(other(v)).
    VertexPermutation compose(const VertexPermutation& other) const;
    bool is_identity() const;
    bool is_involution() const;

    /// Cycle notation, e.g. "(0 4)(1 3)(2)".
    std::string to_cycle_string() const;

    friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
    friend auto operator<=>(const VertexPermutation&, const VertexPermutation&) = default;

private:
    std::vector<Vertex> image_;
};

/// Flip the sign of every edge in the cut [U, V \ U].
SignedGraph switching(const SignedGraph& g, const SwitchSet& u);
/// Multiply every sign by -1.
SignedGraph negate(const SignedGraph& g);
/// Edge {u,v} with sign s becomes {p(u), p(v)} with sign s.
SignedGraph apply_permutation(const SignedGraph& g, const VertexPermutation& p);

/// Parse the edge-list text format: "n m" then m lines "u v s", s in {+,-}.
SignedGraph parse_signed_graph(std::string_view text);
/// Inverse of parse_signed_graph; edges in (u, v) order, LF endings.
std::string serialize(const SignedGraph& g);

}  // namespace sgs
