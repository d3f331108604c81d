#include <doctest.h>

#include "sgs/census.hpp"
#include "sgs/constructions.hpp"
#include "sgs/corpus.hpp"
#include "sgs/error.hpp"
#include "sgs/report.hpp"
#include "sgs/verify.hpp"
#include "support.hpp"

using namespace sgs;
using namespace sgs::test;

namespace {

std::uint64_t binomial(int k, int t) {
    std::uint64_t r = 1;
    for (int i = 1; i <= t; ++i) r = r * static_cast<std::uint64_t>(k - t + i) / static_cast<std::uint64_t>(i);
    return r;
}

void check_counts(const SignedGraph& g) {
    const auto r = census(g);
    CHECK(r.classes.size() == (std::size_t{1} << r.k));
    REQUIRE(r.strata.size() == static_cast<std::size_t>(r.k + 1));
    for (int t = 0; t <= r.k; ++t) CHECK(r.strata[static_cast<std::size_t>(t)] == binomial(r.k, t));
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("representatives") {
    CHECK(enumerate_signatures(path(5)).size() == 1);
    CHECK(enumerate_signatures(cycle(5)).size() == 2);
    const auto theta = base_bicyclic({BicyclicKind::theta, {1, 2, 2}, {false, false, false}});
    const auto reps = enumerate_signatures(theta);
    CHECK(reps.size() == 4);
    const auto t = spanning_tree(theta);
    for (const auto& r : reps)
        for (EdgeId e : t.tree_edges) CHECK(r.edge(e).sign == 1);

    CHECK_THROWS_AS(enumerate_signatures(graph(3, {{0, 1, 1}})), InputError);
    CHECK_THROWS_AS(enumerate_signatures(complete(6), 8), ResourceLimitError);
}

TEST_CASE("class verdicts") {
    const auto c5 = census(cycle(5));
    REQUIRE(c5.classes.size() == 2);
    for (const auto& c : c5.classes) CHECK_FALSE(c.verdict.spectrally_symmetric);

    const auto c6 = census(cycle(6));
    REQUIRE(c6.classes.size() == 2);
    for (const auto& c : c6.classes) {
        CHECK(c.verdict.spectrally_symmetric);
        CHECK(c.verdict.sign_symmetric == true);
    }

    // Exactly the classes with one negative triangle are symmetric. There
    // are two of them, exchanged by swapping the triangles, so a single
    // class up to switching isomorphism.
    const auto inf = census(base_bicyclic({BicyclicKind::infinity, {3, 3}, {false, false}}));
    REQUIRE(inf.classes.size() == 4);
    std::vector<SignedGraph> symmetric;
    for (const auto& c : inf.classes) {
        if (c.verdict.spectrally_symmetric) symmetric.push_back(c.graph);
        CHECK(c.verdict.spectrally_symmetric == (c.negative_cycles == 1));
        CHECK(bicyclic_family_membership(c.graph) == c.verdict.spectrally_symmetric);
    }
    REQUIRE(symmetric.size() == 2);
    const auto swapped = apply_permutation(symmetric[0], VertexPermutation({0, 3, 4, 1, 2}));
    CHECK(cycle_sign_vector(swapped, inf.tree) == cycle_sign_vector(symmetric[1], inf.tree));
}

TEST_CASE("class counts on the named corpus") {
    const std::vector<std::pair<SignedGraph, std::size_t>> corpus{
        {path(4), 1},
        {cycle(5), 2},
        {base_bicyclic({BicyclicKind::theta, {1, 2, 2}, {false, false, false}}), 4},
        {base_bicyclic({BicyclicKind::infinity, {3, 3}, {false, false}}), 4},
        {base_bicyclic({BicyclicKind::bowtie, {1, 3, 3}, {false, false, false}}), 4},
        {complete(4), 8},
    };
    for (const auto& [g, expected] : corpus) {
        CHECK(census(g).classes.size() == expected);
        check_counts(g);
    }
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graph_classes(n)) check_counts(g);
}

TEST_CASE("graph corpora") {
    const std::vector<std::size_t> classes{1, 1, 2, 6, 21, 112};
    const std::vector<std::size_t> labeled{1, 1, 4, 38, 728};
    for (int n = 1; n <= 6; ++n) CHECK(connected_graph_classes(n).size() == classes[static_cast<std::size_t>(n - 1)]);
    for (int n = 1; n <= 5; ++n) CHECK(labeled_connected_graphs(n).size() == labeled[static_cast<std::size_t>(n - 1)]);

    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = random_graph(7, 0.5, rng);
        CHECK(canonical_code(g) == canonical_code(apply_permutation(g, random_permutation(7, rng))));
    }
    CHECK(canonical_code(path(4)) != canonical_code(graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}})));
}

TEST_CASE("reports are deterministic") {
    const auto g = complete(5);
    const auto a = to_json(census(g)).dump();
    const auto b = to_json(census(g)).dump();
    CHECK(a == b);
}

TEST_CASE("a symmetric class without sign symmetry") {
    // The smallest classes where the two notions split.
    std::uint64_t split = 0;
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : connected_graph_classes(n))
            for (const auto& c : census(g).classes)
                split += c.verdict.spectrally_symmetric && c.verdict.sign_symmetric == false;
    CHECK(split > 0);
}

TEST_CASE("suites") {
    const auto names = suite_names();
    CHECK(std::find(names.begin(), names.end(), "counts") != names.end());
    const auto r = verify_suite("counts");
    CHECK(r.passed);
    CHECK(r.cases > 0);
    CHECK_THROWS_AS(verify_suite("nope"), InputError);
}

}
