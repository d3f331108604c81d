#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgs/cycle_space.hpp"
#include "sgs/signed_graph.hpp"
#include "sgs/symmetry.hpp"

namespace sgs {

/// Largest cyclomatic number the census walks by default.
inline constexpr int kDefaultCensusMaxK = 16;

/// One representative per switching class of the underlying graph of g:
/// tree edges positive, cotree edge i negative iff bit i of the index is set.
/// Throws InputError if g is disconnected, ResourceLimitError if k > max_k.
std::vector<SignedGraph> enumerate_signatures(const SignedGraph& g, int max_k = kDefaultCensusMaxK);

struct CensusClass {
    std::uint32_t mask = 0;
    std::string cotree_signs;  // '+' or '-' per cotree edge
    int negative_cycles = 0;
    SignedGraph graph;
    SymmetryVerdict verdict;
};

struct CensusReport {
    SignedGraph underlying;
    SpanningTree tree;
    int k = 0;
    std::vector<CensusClass> classes;
    /// strata[t] = number of classes with t negative fundamental cycles.
    std::vector<std::uint64_t> strata;
    /// Keyed by (spectrally_symmetric, sign_symmetric); nullopt = undecided.
    std::map<std::pair<bool, std::optional<bool>>, std::uint64_t> summary;
    /// Automorphism-dependent fields are left empty above the automorphism cap.
    bool undecided = false;
};

/// Classifies every switching class of g's underlying graph (signs of g are
/// ignored). Errors as enumerate_signatures.
CensusReport census(const SignedGraph& g, int max_k = kDefaultCensusMaxK);

}  // namespace sgs
