#pragma once

#include <vector>

#include "sgs/signed_graph.hpp"

namespace sgs {

inline constexpr double kDefaultPairingTolerance = 1e-6;

/// Eigenvalues of A(g), sorted descending.
struct Spectrum {
    std::vector<double> values;
    double pairing_tolerance = kDefaultPairingTolerance;
};

/// Cyclic Jacobi rotations on the signed adjacency matrix until the
/// off-diagonal Frobenius norm drops below 1e-12 * n.
Spectrum eigenvalues(const SignedGraph& g);

/// Symmetric eigenvalues of a dense row-major matrix; the input must be
/// symmetric. Exposed for tests.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

/// values[i] + values[n-1-i] within pairing_tolerance of zero for every i.
bool numeric_symmetry_check(const Spectrum& s);

}  // namespace sgs
