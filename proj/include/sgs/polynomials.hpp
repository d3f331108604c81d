#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "sgs/cycle_space.hpp"
#include "sgs/int_polynomial.hpp"
#include "sgs/signed_graph.hpp"

namespace sgs {

/// Largest order accepted by the basic-figure enumeration.
inline constexpr int kMaxSachsOrder = 10;
/// Matching polynomials are memoized on 64-bit vertex masks.
inline constexpr int kMaxMatchingOrder = 64;

/// det(xI - A(g)), exact. Computed per connected component and multiplied.
IntPolynomial char_poly(const SignedGraph& g);

/// M(G, x) = sum_i (-1)^i m_i(G) x^(n - 2i); depends only on the underlying graph.
IntPolynomial matching_poly(const SignedGraph& g);

/// Memoized matching polynomials of the vertex-deleted subgraphs G - S.
///
/// Uses the recurrence M(G) = x M(G - v) - sum_{u ~ v} M(G - v - u) on the
/// lowest remaining vertex v, keyed by the mask of remaining vertices.
class MatchingPolynomials {
public:
    explicit MatchingPolynomials(const SignedGraph& g);

    const IntPolynomial& whole() { return of_mask(full_mask()); }
    /// M(G - V(removed), x); M of the empty graph is 1.
    const IntPolynomial& without(std::span<const Vertex> removed);
    const IntPolynomial& of_mask(std::uint64_t remaining);

private:
    std::uint64_t full_mask() const;

    int n_ = 0;
    std::vector<std::uint64_t> nbr_;
    std::unordered_map<std::uint64_t, IntPolynomial> memo_;
};

/// Characteristic-polynomial coefficient a_i (phi = sum a_i x^(n-i)) summed
/// over basic figures on i vertices: (-1)^p(B) 2^|C(B)| sigma(B).
/// Throws ResourceLimitError for order above kMaxSachsOrder.
mpz_class sachs_coefficient(const SignedGraph& g, int i);
/// All of a_0..a_n from a single basic-figure enumeration.
std::vector<mpz_class> sachs_coefficients(const SignedGraph& g);

/// sum over odd 2-regular C of sigma(C) (-2)^p(C) M(G - V(C), x).
IntPolynomial odd_part(const SignedGraph& g);
IntPolynomial odd_part(const TwoRegularCatalog& catalog, MatchingPolynomials& matchings);

/// M(G, x) + sum over every 2-regular C of sigma(C) (-2)^p(C) M(G - V(C), x).
IntPolynomial two_regular_expansion(const SignedGraph& g);
IntPolynomial two_regular_expansion(const TwoRegularCatalog& catalog, MatchingPolynomials& matchings);

/// True iff every coefficient a_i with odd i vanishes.
bool is_spectrally_symmetric(const SignedGraph& g);
/// Same test on a precomputed degree-n characteristic polynomial.
bool has_symmetric_spectrum(const IntPolynomial& phi);

}  // namespace sgs
