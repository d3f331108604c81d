#include <doctest.h>

#include <array>
#include <fstream>
#include <sstream>

#include "sgs/cli.hpp"
#include "sgs/constructions.hpp"
#include "sgs/error.hpp"
#include "sgs/polynomials.hpp"
#include "sgs/spectral.hpp"
#include "sgs/symmetry.hpp"
#include "sgs/verify.hpp"
#include "support.hpp"

using namespace sgs;
using namespace sgs::test;

namespace {

int negatives(const SignedGraph& g) {
    int count = 0;
    for (const auto& e : g.edges()) count += e.sign < 0;
    return count;
}

void check_certified(const Construction& c) {
    CHECK(is_spectrally_symmetric(c.graph));
    if (c.witness) CHECK(is_weak_automorphism(c.graph, *c.witness));
}

SignedGraph infinity33(bool negative) { return base_bicyclic({BicyclicKind::infinity, {3, 3}, {negative, false}}); }

const VertexPermutation kPhi({0, 4, 3, 2, 1});

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("base bicyclic graphs") {
    const auto inf = infinity33(true);
    CHECK(inf.order() == 5);
    CHECK(inf.size() == 6);
    CHECK(negatives(inf) == 1);

    const auto theta = base_bicyclic({BicyclicKind::theta, {1, 2, 2}, {false, false, false}});
    CHECK(theta.order() == 4);
    CHECK(theta.size() == 5);

    // Two triangles joined by one edge: 6 vertices and 7 edges.
    const auto bowtie = base_bicyclic({BicyclicKind::bowtie, {1, 3, 3}, {false, false, false}});
    CHECK(bowtie.order() == 6);
    CHECK(bowtie.size() == 7);

    CHECK_THROWS_AS(base_bicyclic({BicyclicKind::theta, {1, 1, 2}, {false, false, false}}), InputError);
    CHECK_THROWS_AS(base_bicyclic({BicyclicKind::infinity, {2, 3}, {false, false}}), InputError);
    CHECK_THROWS_AS(base_bicyclic({BicyclicKind::bowtie, {0, 3, 3}, {false, false, false}}), InputError);
}

TEST_CASE("shape recognition survives relabeling") {
    std::mt19937_64 rng(101);
    for (const auto& spec : base_bicyclic_specs(9)) {
        const auto g = base_bicyclic(spec);
        const auto shape = recognize_base_bicyclic(apply_permutation(g, random_permutation(g.order(), rng)));
        CHECK(shape.kind == spec.kind);
        auto got = shape.lengths, want = spec.lengths;
        if (spec.kind != BicyclicKind::bowtie) {
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
        } else {
            std::sort(got.begin() + 1, got.end());
            std::sort(want.begin() + 1, want.end());
        }
        CHECK(got == want);
    }
    CHECK_THROWS_AS(recognize_base_bicyclic(cycle(5)), InputError);
}

TEST_CASE("family membership") {
    CHECK(bicyclic_family_membership(infinity33(true)));
    CHECK_FALSE(bicyclic_family_membership(infinity33(false)));
    CHECK(bicyclic_family_membership(base_bicyclic({BicyclicKind::theta, {1, 2, 2}, {false, true, false}})));
    CHECK_FALSE(bicyclic_family_membership(base_bicyclic({BicyclicKind::theta, {1, 2, 2}, {false, false, false}})));
    CHECK(bicyclic_family_membership(base_bicyclic({BicyclicKind::bowtie, {2, 5, 5}, {false, false, true}})));
    CHECK_FALSE(bicyclic_family_membership(base_bicyclic({BicyclicKind::bowtie, {2, 3, 5}, {false, false, true}})));

    // Moving the negative edge along its part is a switching.
    const auto g = infinity33(true);
    const auto moved = switching(g, SwitchSet({1}));
    CHECK(bicyclic_family_membership(moved));
    CHECK(char_poly(moved) == char_poly(g));
}

TEST_CASE("complete split") {
    const auto k2 = complete_split(SignedGraph(1));
    CHECK(k2.graph == path(2));

    const auto k4 = complete_split(path(2));
    CHECK(k4.graph.order() == 4);
    CHECK(k4.graph.size() == 6);
    CHECK(negatives(k4.graph) == 1);

    const auto k6 = complete_split(path(3));
    CHECK(k6.graph.size() == 15);
    CHECK(negatives(k6.graph) == 3);
    CHECK(is_spectrally_symmetric(k6.graph));
}

TEST_CASE("block construction") {
    const auto empty = block_construction({{0}}, {{0}});
    CHECK(empty.graph == SignedGraph(2));

    const auto two = block_construction({{0, 1}, {1, 0}}, {{0, 0}, {0, 0}});
    CHECK(two.graph.size() == 2);
    CHECK(two.graph.sign(0, 1) == 1);
    CHECK(two.graph.sign(2, 3) == -1);

    const std::vector<std::vector<int>> tri{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    const auto c = block_construction(tri, tri);
    CHECK(classify(c.graph).sign_symmetric == true);
    REQUIRE(c.witness.has_value());
    CHECK(is_weak_automorphism(c.graph, *c.witness));

    CHECK_THROWS_AS(block_construction({{1}}, {{0}}), InputError);
    CHECK_THROWS_AS(block_construction({{0, 1}, {0, 0}}, {{0, 0}, {0, 0}}), InputError);
    CHECK_THROWS_AS(block_construction({{0}}, {{0, 0}, {0, 0}}), InputError);
    CHECK_THROWS_AS(block_construction({{0, 2}, {2, 0}}, {{0, 0}, {0, 0}}), InputError);
    CHECK_THROWS_AS(block_construction({{0}}, {{1}}), InputError);
}

TEST_CASE("products and coronas") {
    const auto g = infinity33(true);
    CHECK(cartesian_product(SignedGraph(1), g).graph == g);
    CHECK(cartesian_product(path(2), path(2)).graph == apply_permutation(cycle(4), VertexPermutation({0, 1, 3, 2})));
    CHECK(is_spectrally_symmetric(cartesian_product(g, path(2)).graph));

    CHECK(corona_k1(SignedGraph(1)).graph == path(2));
    const auto net = corona_k1(cycle(3)).graph;
    CHECK(net.order() == 6);
    CHECK_FALSE(numeric_symmetry_check(eigenvalues(net)));
    CHECK(is_spectrally_symmetric(corona_k1(g).graph));
}

TEST_CASE("link") {
    const std::vector<int> plus{1}, minus{-1};
    CHECK(link(SignedGraph(1), 0, plus).graph == path(2));
    CHECK(link(SignedGraph(1), 0, minus).graph.sign(0, 1) == -1);

    const auto c = link(cycle(3), 1, plus);
    CHECK(c.graph.order() == 6);
    CHECK(classify(c.graph).odd_exchangeable == true);
    check_certified(c);

    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_graph(4, 0.7, rng);
        const std::vector<int> signs{1, -1, 1};
        check_certified(link(g, trial % 4, signs));
    }
    CHECK_THROWS_AS(link(cycle(3), 0, std::vector<int>{}), InputError);
}

TEST_CASE("attach") {
    const auto g = infinity33(true);
    const auto same = attach(g, kPhi, {});
    CHECK(same.graph == g);

    AttachStep pair;
    pair.kind = AttachStep::Kind::exchangeable_pair;
    pair.u = 1;
    pair.u_prime = 4;
    pair.part = path(2);
    const auto one = attach(g, kPhi, std::vector<AttachStep>{pair});
    CHECK(one.graph.order() == 7);
    CHECK(classify(one.graph).odd_exchangeable == true);
    check_certified(one);

    AttachStep fixed;
    fixed.kind = AttachStep::Kind::fixed_vertex;
    fixed.u = 0;
    fixed.part = cycle(4);
    const auto two = attach(g, kPhi, std::vector<AttachStep>{pair, fixed});
    CHECK(two.graph.order() == 10);
    CHECK(classify(two.graph).odd_exchangeable == true);
    check_certified(two);

    AttachStep bad = pair;
    bad.u_prime = 3;
    CHECK_THROWS_AS(attach(g, kPhi, std::vector<AttachStep>{bad}), InputError);
    AttachStep moved = fixed;
    moved.u = 1;
    CHECK_THROWS_AS(attach(g, kPhi, std::vector<AttachStep>{moved}), InputError);
    AttachStep odd = fixed;
    odd.part = cycle(3);
    CHECK_THROWS_AS(attach(g, kPhi, std::vector<AttachStep>{odd}), InputError);
}

TEST_CASE("extend") {
    const auto g = infinity33(true);
    const auto c = extend(g, kPhi, 1, 3);
    CHECK(c.graph.size() == 8);
    CHECK(c.graph.sign(1, 3) == c.graph.sign(2, 4));
    check_certified(c);
    CHECK(build_construction("extend-infinity-33", {}).graph == c.graph);

    CHECK_THROWS_AS(extend(g, kPhi, 1, 2), InputError);  // already adjacent
    CHECK_THROWS_AS(extend(g, kPhi, 1, 4), InputError);  // the pair is its own image

    // Grow a path on 7 vertices by pairs of chords exchanged by its reversal.
    SignedGraph t = path(7);
    const VertexPermutation reversal({6, 5, 4, 3, 2, 1, 0});
    std::vector<std::pair<Vertex, Vertex>> spine;
    for (Vertex v = 0; v + 1 < 7; ++v) spine.emplace_back(v, v + 1);
    const std::vector<std::pair<Vertex, Vertex>> chords{{0, 2}, {1, 4}, {0, 3}};
    for (auto [a, b] : chords) {
        const auto next = extend(t, reversal, a, b, 1, spine);
        check_certified(next);
        CHECK(classify(next.graph).odd_exchangeable == true);
        t = next.graph;
    }
}

TEST_CASE("construction one") {
    const std::array<SignedGraph, 3> k1{SignedGraph(1), SignedGraph(1), SignedGraph(1)};
    const auto all = construction_one(k1);
    CHECK(all.graph.order() == 12);
    CHECK(odd_part(all.graph).is_zero());

    const std::array<SignedGraph, 3> mixed{SignedGraph(1), path(2), SignedGraph(1)};
    const auto m = construction_one(mixed);
    CHECK(m.graph.order() == 14);
    CHECK(is_spectrally_symmetric(m.graph));
    const auto v = classify(m.graph);
    CHECK(v.findings.empty());
    CHECK(v.sign_symmetric == false);
    CHECK(v.odd_exchangeable == false);

    const std::array<SignedGraph, 3> none{SignedGraph(0), SignedGraph(0), SignedGraph(0)};
    const auto c5 = construction_one(none, 5);
    CHECK(c5.graph.order() == 10);
    CHECK(odd_part(c5.graph).is_zero());
    CHECK_THROWS_AS(construction_one(none, 4), InputError);
}

TEST_CASE("the archived example is the construction-one separation") {
    const std::array<SignedGraph, 3> mixed{SignedGraph(1), path(2), SignedGraph(1)};
    const auto g = construction_one(mixed).graph;
    const std::string text = read_file(std::string(SGS_DATA_DIR) + "/symmetric_not_sign_symmetric.sg");
    CHECK(text == serialize(g));
}

TEST_CASE("certified corpus") {
    const auto corpus = certified_corpus();
    CHECK(corpus.size() == 20);
    for (const auto& c : corpus) check_certified(c);
}

}
