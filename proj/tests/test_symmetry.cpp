#include <doctest.h>

#include "sgs/census.hpp"
#include "sgs/constructions.hpp"
#include "sgs/corpus.hpp"
#include "sgs/error.hpp"
#include "sgs/polynomials.hpp"
#include "sgs/symmetry.hpp"
#include "support.hpp"

using namespace sgs;
using namespace sgs::test;

namespace {

SignedGraph infinity33(bool negative) { return base_bicyclic({BicyclicKind::infinity, {3, 3}, {negative, false}}); }

// v3 = 0; v1, v2 on the first triangle; v4, v5 on the second.
const VertexPermutation kPhi({0, 4, 3, 2, 1});

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("automorphism groups") {
    CHECK(automorphisms(cycle(3)).size() == 6);
    CHECK(automorphisms(path(3)).size() == 2);
    CHECK(automorphisms(cycle(5)).size() == 10);
    CHECK(automorphisms(complete(5)).size() == 120);
    CHECK(automorphisms(SignedGraph(3)).size() == 6);

    const auto all = automorphisms(cycle(5, 2));
    CHECK(all.front().is_identity());
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& p : all) CHECK(apply_permutation(cycle(5), p) == cycle(5));

    CHECK_THROWS_AS(automorphisms(path(17)), ResourceLimitError);
    CHECK_THROWS_AS(is_weak_automorphism(path(3), VertexPermutation({1, 0, 2})), InputError);
}

TEST_CASE("weak automorphisms and the spanning-cycle criterion") {
    const auto g = infinity33(true);
    CHECK(is_weak_automorphism(g, kPhi));
    CHECK(spanning_cycle_criterion(g, kPhi));

    CHECK_FALSE(is_weak_automorphism(cycle(3), VertexPermutation::identity(3)));
    CHECK_FALSE(spanning_cycle_criterion(cycle(3), VertexPermutation::identity(3)));

    const auto c6 = cycle(6, 1);
    for (const auto& p : automorphisms(c6)) {
        CHECK(is_weak_automorphism(c6, p));
        CHECK(spanning_cycle_criterion(c6, p));
    }

    const auto theta = base_bicyclic({BicyclicKind::theta, {1, 2, 2}, {false, true, false}});
    const VertexPermutation swap_triangles({0, 1, 3, 2});
    CHECK(spanning_cycle_criterion(theta, swap_triangles));
    CHECK(is_weak_automorphism(theta, swap_triangles));

    const VertexPermutation swap_loops({0, 3, 4, 1, 2});
    CHECK_FALSE(spanning_cycle_criterion(infinity33(false), swap_loops));
    CHECK_FALSE(is_weak_automorphism(infinity33(false), swap_loops));
}

TEST_CASE("bipartite graphs: the criterion is stricter than the weak test") {
    // Every automorphism of a bipartite graph is vacuously weak, but (3 4)
    // maps the positive 4-cycle 0-1-3-2 onto the negative one 0-1-4-2, and
    // the criterion demands that even fundamental cycles keep their sign.
    const auto g = parse_signed_graph("5 6\n0 1 +\n0 2 +\n1 3 +\n1 4 +\n2 3 -\n2 4 +\n");
    const VertexPermutation p({0, 1, 2, 4, 3});
    CHECK(g.is_bipartite());
    CHECK(is_weak_automorphism(g, p));
    CHECK_FALSE(spanning_cycle_criterion(g, p));
    CHECK(classify(g).odd_exchangeable == true);
}

TEST_CASE("the criterion matches the weak test on non-bipartite graphs") {
    std::uint64_t pairs = 0;
    for (int n = 3; n <= 6; ++n)
        for (const auto& u : connected_graph_classes(n)) {
            if (u.is_bipartite()) continue;
            const SymmetryContext ctx(u);
            for (const auto& g : enumerate_signatures(u)) {
                const auto catalog = resign(ctx.catalog(), g);
                const auto& maps = ctx.edge_maps();
                for (std::size_t a = 0; a < maps.size(); ++a) {
                    const bool weak = is_weak_automorphism(g, catalog, maps[a]);
                    CHECK(weak == is_weak_automorphism(g, ctx.automorphisms()[a]));
                    CHECK(weak == spanning_cycle_criterion(g, ctx.fundamental_edges(), maps[a]));
                    ++pairs;
                }
            }
        }
    CHECK(pairs > 0);
}

TEST_CASE("sign symmetry") {
    CHECK(is_sign_symmetric(cycle(6, 1)).has_value());
    CHECK_FALSE(is_sign_symmetric(complete(4)).has_value());
    CHECK_FALSE(is_sign_symmetric(cycle(3)).has_value());
    const auto w = is_sign_symmetric(infinity33(true));
    REQUIRE(w.has_value());
    CHECK(apply_permutation(infinity33(true), *w).same_underlying(infinity33(true)));

    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_graph(6, 0.5, rng);
        if (!g.is_connected() || !g.is_bipartite()) continue;
        CHECK(is_sign_symmetric(g).has_value());
    }
}

TEST_CASE("verdicts") {
    const auto v = classify(infinity33(true));
    CHECK(v.spectrally_symmetric);
    CHECK(v.sign_symmetric == true);
    CHECK(v.odd_exchangeable == true);
    CHECK(v.automorphism_count == 8);
    CHECK(v.findings.empty());

    const auto t = classify(cycle(3));
    CHECK_FALSE(t.spectrally_symmetric);
    CHECK(t.sign_symmetric == false);
    CHECK(t.odd_exchangeable == false);
    CHECK_FALSE(t.witness.has_value());

    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        const auto c = classify(random_signature(cycle(6), rng));
        CHECK(c.spectrally_symmetric);
        CHECK(c.sign_symmetric == true);
        CHECK(c.odd_exchangeable == true);
    }

    const auto big = classify(path(18), true);
    CHECK(big.spectrally_symmetric);
    CHECK_FALSE(big.sign_symmetric.has_value());
    CHECK_THROWS_AS(classify(path(18)), ResourceLimitError);
}

TEST_CASE("odd-exchangeable iff sign-symmetric, with the implications") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& u : connected_graph_classes(n)) {
            const SymmetryContext ctx(u);
            for (const auto& g : enumerate_signatures(u)) {
                const auto v = classify(ctx, g);
                CHECK(v.findings.empty());
                CHECK(v.odd_exchangeable == v.sign_symmetric);
                if (*v.sign_symmetric) CHECK(v.spectrally_symmetric);
                if (v.witness) {
                    CHECK(is_weak_automorphism(g, *v.witness));
                    // Positive even 2-regular subgraphs stay positive.
                    const auto map = induced_edge_map(g, *v.witness);
                    if (!g.is_bipartite())
                        for (const auto& c : ctx.catalog().all) {
                            if (c.odd() || edge_set_sign(g, c.edges) < 0) continue;
                            std::vector<EdgeId> image;
                            for (EdgeId e : c.edges) image.push_back(map[static_cast<std::size_t>(e)]);
                            CHECK(edge_set_sign(g, image) == 1);
                        }
                }
            }
        }
}

}
