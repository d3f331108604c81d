#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sgs/signed_graph.hpp"

namespace sgs {

/// Output of a generator: the graph plus why it is spectrally symmetric.
/// `witness`, when present, is a weak automorphism of `graph`.
struct Construction {
    SignedGraph graph;
    std::string name;
    nlohmann::json parameters = nlohmann::json::object();
    std::optional<VertexPermutation> witness;
};

// --- base bicyclic graphs -------------------------------------------------

enum class BicyclicKind { theta, infinity, bowtie };

/// theta(u,v; l1,l2,l3): three u-v paths with l1, l2, l3 edges.
/// infinity(u; l1,l2): cycles of lengths l1 and l2 sharing u.
/// bowtie(u,v; l, l1,l2): cycles of lengths l1 (at u) and l2 (at v) joined
/// by a u-v path with l edges.
/// `negative[i]` puts one negative edge on part i (its first edge).
struct BaseBicyclicSpec {
    BicyclicKind kind = BicyclicKind::theta;
    std::vector<int> lengths;
    std::vector<bool> negative;
};

/// Labels u = 0; theta puts v = 1 and then the interior vertices of each
/// path in order; infinity lists each cycle from u; bowtie lists the path
/// interior, then v, then the cycle at u, then the cycle at v.
SignedGraph base_bicyclic(const BaseBicyclicSpec& spec);

/// Parts of a recognized base bicyclic graph. `signs[i]` is the product of
/// edge signs along part i. Lengths are given in the same order as for
/// BaseBicyclicSpec.
struct BaseBicyclicShape {
    BicyclicKind kind = BicyclicKind::theta;
    std::vector<int> lengths;
    std::vector<int> signs;
};

/// Throws InputError unless g is connected with m = n + 1 and minimum degree 2.
BaseBicyclicShape recognize_base_bicyclic(const SignedGraph& g);

/// True iff g is switching isomorphic to theta(u,v; l1, l2^-, l2) with l1, l2
/// of opposite parity, bowtie(u,v; l, (2i+1)^-, 2i+1) or
/// infinity(u; (2i+1)^-, 2i+1).
bool bicyclic_family_membership(const SignedGraph& g);

std::string to_string(BicyclicKind kind);

// --- cited constructions ---------------------------------------------------

/// Signed K_2h: V1 carries `half`, V2 its complement; edges of both are
/// negative, all others positive.
Construction complete_split(const SignedGraph& half);

/// Graph with adjacency [[B, C], [C, -B]]. Both blocks must be symmetric
/// with zero diagonal and entries in {0, 1, -1}. The half swap is returned
/// as the witness.
Construction block_construction(const std::vector<std::vector<int>>& b, const std::vector<std::vector<int>>& c);

/// Vertex (x, y) gets label x * |b| + y; edges inherit the factor edge sign.
Construction cartesian_product(const SignedGraph& a, const SignedGraph& b);

/// Adds pendant vertex n + v to every vertex v by a positive edge.
Construction corona_k1(const SignedGraph& g);

// --- constructions from weak automorphisms --------------------------------

/// Copies of g (vertices 0..n-1) and -g (n..2n-1) whose two copies of u are
/// joined by a path with path_signs.size() edges. The copy swap is the witness.
Construction link(const SignedGraph& g, Vertex u, std::span<const int> path_signs);

struct AttachStep {
    enum class Kind { exchangeable_pair, fixed_vertex };
    Kind kind = Kind::exchangeable_pair;
    Vertex u = 0;        // vertex of the growing graph
    Vertex u_prime = 0;  // partner of u (pairs only)
    SignedGraph part;    // Gamma' for pairs, H for fixed vertices
    Vertex part_vertex = 0;
    /// Weak automorphism of H fixing part_vertex; searched for when absent.
    std::optional<VertexPermutation> part_witness;
};

/// Glue parts onto g one step at a time. A pair step identifies part_vertex
/// of a copy of Gamma' with u and of a copy of -Gamma' with u_prime; a fixed
/// step identifies part_vertex of H with u. New vertices are appended.
Construction attach(const SignedGraph& g, const VertexPermutation& witness, std::span<const AttachStep> plan);

/// Add v_i v_j and phi(v_i) phi(v_j). The second sign is chosen so that the
/// fundamental cycles of the two new edges relate like phi requires: opposite
/// sign for odd cycles, equal sign for even ones.
///
/// `tree` defaults to the breadth-first spanning tree of g and must be
/// mapped onto itself by the witness.
Construction extend(const SignedGraph& g, const VertexPermutation& witness, Vertex vi, Vertex vj,
                    int sign_choice = 1,
                    std::optional<std::vector<std::pair<Vertex, Vertex>>> tree = std::nullopt);

/// Two odd cycles of length `cycle_length` joined by a bridge v1 v1', with
/// sigma(v2 v3) = -1. Rooted tree i (root = its vertex 0; order 0 means
/// absent) is attached once at v_i and once at v'_{i-1}, indices mod the
/// cycle length.
Construction construction_one(std::span<const SignedGraph, 3> trees, int cycle_length = 3);

}  // namespace sgs
