#include <doctest.h>

#include <array>

#include "sgs/constructions.hpp"
#include "sgs/corpus.hpp"
#include "sgs/error.hpp"
#include "sgs/polynomials.hpp"
#include "sgs/spectral.hpp"
#include "support.hpp"

using namespace sgs;
using namespace sgs::test;

namespace {

void check_against_sachs(const SignedGraph& g) {
    const auto phi = char_poly(g);
    const auto a = sachs_coefficients(g);
    const int n = g.order();
    for (int i = 0; i <= n; ++i) CHECK(phi.coeff(n - i) == a[static_cast<std::size_t>(i)]);
}

bool cycle_is_even(const SignedGraph& unicyclic) {
    const auto t = spanning_tree(unicyclic);
    return fundamental_cycles(unicyclic, t).front().length % 2 == 0;
}

}  // namespace

TEST_SUITE("polynomials") {

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly(path(2)) == IntPolynomial({-1, 0, 1}));
    CHECK(char_poly(cycle(3)) == IntPolynomial({-2, -3, 0, 1}));
    CHECK(char_poly(cycle(3, 1)) == IntPolynomial({2, -3, 0, 1}));
    CHECK(char_poly(SignedGraph(0)) == IntPolynomial({1}));
    CHECK(char_poly(SignedGraph(2)) == IntPolynomial({0, 0, 1}));
    CHECK(char_poly(cycle(3)).to_string() == "x^3 - 3x - 2");
}

TEST_CASE("matching polynomials") {
    CHECK(matching_poly(path(3)) == IntPolynomial({0, -2, 0, 1}));
    CHECK(matching_poly(cycle(3)) == IntPolynomial({0, -3, 0, 1}));
    CHECK(matching_poly(SignedGraph(1)) == IntPolynomial({0, 1}));
    CHECK(matching_poly(cycle(4, 1)) == matching_poly(cycle(4)));

    MatchingPolynomials m(cycle(4));
    CHECK(m.without(std::vector<Vertex>{0, 1, 2, 3}) == IntPolynomial({1}));
    CHECK(m.without(std::vector<Vertex>{0}) == matching_poly(path(3)));
}

TEST_CASE("basic-figure coefficients") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_graph(6, 0.5, rng);
        CHECK(sachs_coefficient(g, 0) == 1);
        CHECK(sachs_coefficient(g, 2) == -g.size());
    }
    CHECK(sachs_coefficient(cycle(3), 3) == -2);
    CHECK(sachs_coefficient(cycle(3, 1), 3) == 2);
    CHECK(sachs_coefficient(path(2).with_signs(std::vector<int>{-1}), 2) == -1);
    CHECK_THROWS_AS(sachs_coefficient(complete(11), 2), ResourceLimitError);
}

TEST_CASE("odd parts") {
    CHECK(odd_part(cycle(6, 1)).is_zero());
    CHECK(odd_part(complete(4).with_signs(std::vector<int>{1, -1, 1, 1, -1, 1}).underlying()) ==
          odd_part(complete(4)));
    CHECK(odd_part(cycle(3)) == IntPolynomial({-2}));

    // Three equal pendant trees on the bowtie core.
    const std::array<SignedGraph, 3> trees{path(2), path(2), path(2)};
    const auto g = construction_one(trees).graph;
    CHECK(odd_part(g).is_zero());
    CHECK(is_spectrally_symmetric(g));
}

TEST_CASE("symmetric spectrum test") {
    CHECK(is_spectrally_symmetric(cycle(4)));
    CHECK_FALSE(is_spectrally_symmetric(cycle(3)));
    CHECK(is_spectrally_symmetric(base_bicyclic({BicyclicKind::infinity, {3, 3}, {true, false}})));
    CHECK_FALSE(is_spectrally_symmetric(base_bicyclic({BicyclicKind::infinity, {3, 3}, {false, false}})));
}

TEST_CASE("characteristic polynomial equals the basic-figure sums") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graph_classes(n)) check_against_sachs(g);
    std::mt19937_64 rng(59);
    for (const auto& g : connected_graph_classes(7)) check_against_sachs(random_signature(g, rng));
    for (int trial = 0; trial < 40; ++trial) check_against_sachs(random_graph(8, 0.5, rng));
    check_against_sachs(random_signature(complete(8), rng));
}

TEST_CASE("decomposition over two-regular subgraphs") {
    std::mt19937_64 rng(61);
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graph_classes(n))
            for (int s = 0; s < 3; ++s) {
                const auto h = random_signature(g, rng);
                CHECK(char_poly(h) == two_regular_expansion(h));
            }
    for (int trial = 0; trial < 60; ++trial) {
        const auto h = random_graph(8, 0.45, rng);
        CHECK(char_poly(h) == two_regular_expansion(h));
    }
}

TEST_CASE("symmetric spectrum iff the odd part vanishes") {
    std::mt19937_64 rng(67);
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graph_classes(n))
            for (int s = 0; s < 4; ++s) {
                const auto h = random_signature(g, rng);
                const bool sym = is_spectrally_symmetric(h);
                CHECK(sym == odd_part(h).is_zero());
                CHECK(sym == numeric_symmetry_check(eigenvalues(h)));
            }
}

TEST_CASE("switching and negation") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 7;
        const auto g = random_graph(n, 0.5, rng);
        const auto phi = char_poly(g);
        CHECK(char_poly(switching(g, random_switch_set(n, rng))) == phi);
        auto expected = phi.reflect();
        if (n % 2 == 1) expected *= -1;
        CHECK(char_poly(negate(g)) == expected);
    }
}

TEST_CASE("unicyclic graphs: symmetric iff the cycle is even") {
    for (int n = 3; n <= 7; ++n)
        for (const auto& g : connected_graph_classes(n)) {
            if (g.size() != n) continue;
            const auto t = spanning_tree(g);
            std::vector<int> signs(static_cast<std::size_t>(g.size()), 1);
            const bool even = cycle_is_even(g);
            CHECK(is_spectrally_symmetric(g) == even);
            signs[static_cast<std::size_t>(t.cotree_edges[0])] = -1;
            CHECK(is_spectrally_symmetric(g.with_signs(signs)) == even);
        }
}

TEST_CASE("polynomial arithmetic") {
    const IntPolynomial p{1, 2};
    const IntPolynomial q{-1, 0, 3};
    CHECK(p * q == IntPolynomial({-1, -2, 3, 6}));
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(q.reflect() == q);
    CHECK(p.reflect() == IntPolynomial({1, -2}));
    CHECK(q.coefficient_strings() == std::vector<std::string>{"-1", "0", "3"});
    mpz_class big("123456789012345678901234567890");
    CHECK(IntPolynomial::monomial(big, 2).coefficient_strings().back() == "123456789012345678901234567890");
}

}
