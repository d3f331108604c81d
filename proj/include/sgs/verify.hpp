#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sgs/constructions.hpp"
#include "sgs/signed_graph.hpp"

namespace sgs {

struct SuiteReport {
    std::string name;
    std::string scope;
    bool passed = true;
    std::uint64_t cases = 0;
    std::string detail;                        // first failure
    std::optional<std::string> counterexample;  // serialized graph
    double seconds = 0;
    /// Observations that are not failures, e.g. the census example below.
    std::vector<std::string> notes;
};

/// How signatures are drawn for each underlying graph of a corpus.
struct SignatureSampling {
    enum class Mode { exhaustive, random, switching_classes };
    Mode mode = Mode::switching_classes;
    int count = 0;  // random only; the all-positive signature is always included
    std::uint64_t seed = 1;
};

/// Signatures of g's underlying graph per the sampling policy. One generator
/// seeded from `s.seed` is shared across a corpus so runs are reproducible.
std::vector<SignedGraph> sample_signatures(const SignedGraph& g, const SignatureSampling& s, std::mt19937_64& rng);

// Each check stops at the first counterexample.

/// char_poly coefficients against the basic-figure sums.
SuiteReport check_sachs(const std::vector<SignedGraph>& corpus, const SignatureSampling& s);
/// char_poly == M(G) + sum over 2-regular C of sigma(C)(-2)^p(C) M(G - V(C)).
SuiteReport check_decomposition(const std::vector<SignedGraph>& corpus, const SignatureSampling& s);
/// Exact symmetric-spectrum test against odd_part == 0, and against the
/// numeric pairing test.
SuiteReport check_odd_part(const std::vector<SignedGraph>& corpus, const SignatureSampling& s);
/// Over every switching class: odd-exchangeable iff sign-symmetric, and
/// sign-symmetric implies a symmetric spectrum. With per_automorphism, also
/// compares the weak-automorphism test with the spanning-cycle criterion for
/// every automorphism and checks that weak automorphisms keep positive even
/// 2-regular subgraphs positive.
SuiteReport check_sign_symmetry(const std::vector<SignedGraph>& corpus, bool per_automorphism);
/// Unicyclic labeled graphs on 3..max_n vertices, both classes: symmetric
/// spectrum iff the cycle is even.
SuiteReport check_unicyclic(int max_n);
/// Non-bipartite base bicyclic graphs on at most max_n vertices: exactly the
/// family members are spectrally symmetric, and those are sign-symmetric.
SuiteReport check_bicyclic(int max_n);
/// 2^k classes, C(k,t) strata and pairwise distinct sign vectors. With
/// all_signatures, every one of the 2^m signatures is mapped to its sign
/// vector and exactly 2^k vectors must occur.
SuiteReport check_counts(const std::vector<SignedGraph>& corpus, bool all_signatures);

/// Signed complete graphs from every labeled graph on 1..max_half vertices.
SuiteReport check_complete_split(int max_half);
/// Random block pairs of dimension 1..max_dim; all must classify spectrally
/// symmetric and sign-symmetric.
SuiteReport check_block_construction(int count, int max_dim, std::uint64_t seed);
/// Products with the positive K2 and K1-coronas of certified_corpus().
SuiteReport check_closure();
/// link, attach, extend and construction_one outputs, with their witnesses.
SuiteReport check_weak_constructions();

/// Twenty spectrally symmetric graphs built by the generators.
std::vector<Construction> certified_corpus();

/// Base bicyclic specs on at most max_n vertices, all signs positive.
std::vector<BaseBicyclicSpec> base_bicyclic_specs(int max_n);

std::vector<std::string> suite_names();
/// Runs a named suite at its built-in scope. Throws InputError for unknown
/// names.
SuiteReport verify_suite(std::string_view name);

}  // namespace sgs
