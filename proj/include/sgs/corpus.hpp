#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sgs/signed_graph.hpp"

namespace sgs {

/// Visits every connected labeled graph on n vertices (all edges positive),
/// in increasing order of the adjacency bitmask over pairs (0,1), (0,2), ...
/// n is limited to 8.
void for_each_labeled_connected_graph(int n, const std::function<void(const SignedGraph&)>& visit);
std::vector<SignedGraph> labeled_connected_graphs(int n);

/// One representative per isomorphism class of connected graphs on n
/// vertices (n <= 8), sorted by edge count and then canonical code.
std::vector<SignedGraph> connected_graph_classes(int n);

/// Canonical adjacency code of the underlying graph: equal codes iff the
/// graphs are isomorphic. n <= 8.
std::uint64_t canonical_code(const SignedGraph& g);

}  // namespace sgs
