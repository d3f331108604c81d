#include <doctest.h>

#include "sgs/constructions.hpp"
#include "sgs/corpus.hpp"
#include "sgs/cycle_space.hpp"
#include "sgs/error.hpp"
#include "support.hpp"

using namespace sgs;
using namespace sgs::test;

namespace {

std::pair<Vertex, Vertex> ends(const SignedGraph& g, EdgeId e) { return {g.edge(e).u, g.edge(e).v}; }

std::vector<std::pair<Vertex, Vertex>> ends(const SignedGraph& g, const std::vector<EdgeId>& ids) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (EdgeId e : ids) out.push_back(ends(g, e));
    return out;
}

void check_catalog_against_dfs(const SignedGraph& g) {
    const auto t = spanning_forest(g);
    const auto catalog = enumerate_two_regular(g, t);
    std::set<std::vector<EdgeId>> single;
    for (const auto& c : catalog.all)
        if (c.cycle_count() == 1) single.insert(c.edges);
    CHECK(single == simple_cycles_by_dfs(g));
}

}  // namespace

TEST_SUITE("cycle_space") {

TEST_CASE("spanning trees") {
    const auto tri = cycle(3);
    const auto t = spanning_tree(tri);
    CHECK(ends(tri, t.tree_edges) == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}});
    CHECK(ends(tri, t.cotree_edges) == std::vector<std::pair<Vertex, Vertex>>{{1, 2}});

    CHECK(spanning_tree(path(4)).cotree_edges.empty());
    CHECK(spanning_tree(complete(4)).cyclomatic_number() == 3);
    CHECK_THROWS_AS(spanning_tree(graph(3, {{0, 1, 1}})), InputError);
    CHECK(spanning_forest(graph(3, {{0, 1, 1}})).tree_edges.size() == 1);
}

TEST_CASE("fundamental cycles") {
    const auto tri = cycle(3);
    const auto fc = fundamental_cycles(tri, spanning_tree(tri));
    REQUIRE(fc.size() == 1);
    CHECK(fc[0].length == 3);

    // theta(u,v;1,2,2): u = 0, v = 1, interior vertices 2 and 3.
    const auto theta = base_bicyclic({BicyclicKind::theta, {1, 2, 2}, {false, false, false}});
    const auto t = spanning_tree(theta);
    CHECK(t.contains(*theta.edge_id(0, 1)));
    const auto fct = fundamental_cycles(theta, t);
    REQUIRE(fct.size() == 2);
    CHECK(fct[0].length == 3);
    CHECK(fct[1].length == 3);

    const auto c6 = cycle(6);
    const auto f6 = fundamental_cycles(c6, spanning_tree(c6));
    REQUIRE(f6.size() == 1);
    CHECK(f6[0].length == 6);
    CHECK(f6[0].sign == 1);
    CHECK_FALSE(f6[0].odd());
}

TEST_CASE("two-regular catalogs") {
    const auto tri = cycle(3);
    CHECK(enumerate_two_regular(tri, spanning_tree(tri)).all.size() == 1);

    const auto k4 = complete(4);
    const auto cat = enumerate_two_regular(k4, spanning_tree(k4));
    CHECK(cat.all.size() == 7);
    int triangles = 0, quads = 0;
    for (const auto& c : cat.all) {
        CHECK(c.cycle_count() == 1);
        triangles += c.vertex_count() == 3;
        quads += c.vertex_count() == 4;
    }
    CHECK(triangles == 4);
    CHECK(quads == 3);

    const auto bowtie = base_bicyclic({BicyclicKind::bowtie, {1, 3, 3}, {false, false, false}});
    const auto cb = enumerate_two_regular(bowtie, spanning_tree(bowtie));
    bool found = false;
    for (const auto& c : cb.all)
        if (c.cycle_count() == 2) {
            found = true;
            CHECK_FALSE(c.odd());
        }
    CHECK(found);

    const auto k7 = complete(7);
    CHECK_THROWS_AS(enumerate_two_regular(k7, spanning_tree(k7), 14), ResourceLimitError);
}

TEST_CASE("cycle sign vectors") {
    const auto k4 = complete(4);
    const auto t = spanning_tree(k4);
    CHECK(cycle_sign_vector(k4, t) == Gf2Vector(3, false));

    const auto theta = base_bicyclic({BicyclicKind::theta, {1, 2, 2}, {false, false, false}});
    const auto tt = spanning_tree(theta);
    std::vector<int> signs(static_cast<std::size_t>(theta.size()), 1);
    signs[static_cast<std::size_t>(tt.cotree_edges[0])] = -1;
    const auto v = cycle_sign_vector(theta.with_signs(signs), tt);
    CHECK(std::count(v.begin(), v.end(), true) == 1);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_graph(7, 0.5, rng);
        const auto f = spanning_forest(g);
        CHECK(cycle_sign_vector(switching(g, random_switch_set(7, rng)), f) == cycle_sign_vector(g, f));
    }
}

TEST_CASE("members agree with their coordinates") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_graph(7, 0.55, rng);
        const auto t = spanning_forest(g);
        const auto fc = fundamental_cycles(g, t);
        for (const auto& c : enumerate_two_regular(g, t).all) {
            int sign = 1;
            for (std::size_t i = 0; i < fc.size(); ++i)
                if (c.coordinates >> i & 1u) sign *= fc[i].sign;
            CHECK(sign == c.sign);
            CHECK(c.sign == edge_set_sign(g, c.edges));
            CHECK(c.odd() == (c.vertex_count() % 2 == 1));
            CHECK(c.edges.size() == c.vertices.size());
        }
    }
}

TEST_CASE("single cycles match depth-first enumeration") {
    for (int n = 3; n <= 6; ++n)
        for (const auto& g : connected_graph_classes(n)) check_catalog_against_dfs(g);
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) check_catalog_against_dfs(random_graph(7 + trial % 2, 0.45, rng));
    check_catalog_against_dfs(complete(7));
}

TEST_CASE("2^k distinct sign vectors over all signatures") {
    for (const auto& g : {cycle(5), complete(4), base_bicyclic({BicyclicKind::theta, {1, 2, 2}, {false, false, false}}),
                          base_bicyclic({BicyclicKind::infinity, {3, 3}, {false, false}})}) {
        const auto t = spanning_tree(g);
        std::set<Gf2Vector> seen;
        for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
            std::vector<int> signs;
            for (int e = 0; e < g.size(); ++e) signs.push_back(mask >> e & 1u ? -1 : 1);
            seen.insert(cycle_sign_vector(g.with_signs(signs), t));
        }
        CHECK(seen.size() == (std::size_t{1} << t.cyclomatic_number()));
    }
}

}
