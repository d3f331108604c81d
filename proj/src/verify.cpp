#include "sgs/verify.hpp"

#include <chrono>
#include <functional>
#include <set>

#include "sgs/census.hpp"
#include "sgs/corpus.hpp"
#include "sgs/cycle_space.hpp"
#include "sgs/error.hpp"
#include "sgs/polynomials.hpp"
#include "sgs/spectral.hpp"
#include "sgs/symmetry.hpp"

namespace sgs {

namespace {

constexpr int kMaxExhaustiveEdges = 20;

class Suite {
public:
    Suite(std::string name, std::string scope) : start_(std::chrono::steady_clock::now()) {
        report_.name = std::move(name);
        report_.scope = std::move(scope);
    }

    bool ok() const { return report_.passed; }
    void count(std::uint64_t n = 1) { report_.cases += n; }
    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    /// Records the first failure only; returns false so callers can bail out.
    bool fail(std::string detail, const SignedGraph& g) {
        if (report_.passed) {
            report_.passed = false;
            report_.detail = std::move(detail);
            report_.counterexample = serialize(g);
        }
        return false;
    }
    SuiteReport stop(std::string detail, const SignedGraph& g) {
        fail(std::move(detail), g);
        return finish();
    }
    bool expect(bool condition, const std::string& detail, const SignedGraph& g) {
        return condition || fail(detail, g);
    }

    /// Folds another report into this one.
    void absorb(const SuiteReport& other) {
        report_.cases += other.cases;
        for (const auto& n : other.notes) report_.notes.push_back(other.name + ": " + n);
        if (!other.passed && report_.passed) {
            report_.passed = false;
            report_.detail = other.name + ": " + other.detail;
            report_.counterexample = other.counterexample;
        }
    }

    SuiteReport finish() {
        report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(report_);
    }

private:
    SuiteReport report_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<SignedGraph> labeled_up_to(int max_n) {
    std::vector<SignedGraph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : labeled_connected_graphs(n)) out.push_back(std::move(g));
    return out;
}

std::vector<SignedGraph> classes_up_to(int max_n) {
    std::vector<SignedGraph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : connected_graph_classes(n)) out.push_back(std::move(g));
    return out;
}

std::vector<SignedGraph> classes_of_order(int n) { return connected_graph_classes(n); }

SignedGraph positive_path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
    return SignedGraph(n, std::move(edges));
}

SignedGraph positive_cycle(int n) {
    const auto path = positive_path(n);
    std::vector<Edge> out(path.edges().begin(), path.edges().end());
    out.push_back({0, n - 1, 1});
    return SignedGraph(n, std::move(out));
}

SignedGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
    return SignedGraph(n, std::move(edges));
}

std::string bits(const Gf2Vector& v) {
    std::string out;
    for (bool b : v) out += b ? '1' : '0';
    return out;
}

std::uint64_t binomial(int k, int t) {
    std::uint64_t r = 1;
    for (int i = 1; i <= t; ++i) r = r * static_cast<std::uint64_t>(k - t + i) / static_cast<std::uint64_t>(i);
    return r;
}

/// Switching set taking a to b, if they are switching equivalent. Built from
/// the tree-path sign products and then checked edge by edge.
std::optional<SwitchSet> switching_between(const SignedGraph& a, const SignedGraph& b) {
    if (!a.same_underlying(b)) return std::nullopt;
    const auto t = spanning_forest(a);
    std::vector<int> side(static_cast<std::size_t>(a.order()), 1);
    std::vector<Vertex> order(static_cast<std::size_t>(a.order()));
    for (Vertex v = 0; v < a.order(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return t.depth[static_cast<std::size_t>(x)] < t.depth[static_cast<std::size_t>(y)]; });
    for (Vertex v : order) {
        const EdgeId e = t.parent_edge[static_cast<std::size_t>(v)];
        if (e < 0) continue;
        side[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(v)])] * a.edge(e).sign * b.edge(e).sign;
    }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < a.order(); ++v)
        if (side[static_cast<std::size_t>(v)] < 0) members.push_back(v);
    SwitchSet u(std::move(members));
    if (!(switching(a, u) == b)) return std::nullopt;
    return u;
}

/// Checks one classified switching class; false on the first problem.
bool check_verdict(Suite& suite, const SignedGraph& h, const SymmetryVerdict& v) {
    if (!v.findings.empty()) return suite.fail("classify finding: " + v.findings.front(), h);
    if (!v.sign_symmetric || !v.odd_exchangeable) return suite.fail("verdict undecided", h);
    if (*v.odd_exchangeable != *v.sign_symmetric)
        return suite.fail("odd-exchangeable and sign-symmetric disagree", h);
    if (*v.sign_symmetric && !v.spectrally_symmetric)
        return suite.fail("sign-symmetric graph with an asymmetric spectrum", h);
    if (v.witness && !is_weak_automorphism(h, *v.witness))
        return suite.fail("reported witness is not a weak automorphism", h);
    if (v.switching_witness && !switching_between(apply_permutation(h, *v.switching_witness), negate(h)))
        return suite.fail("no switching takes the permuted graph to its negation", h);
    return true;
}

}  // namespace

std::vector<SignedGraph> sample_signatures(const SignedGraph& g, const SignatureSampling& s, std::mt19937_64& rng) {
    const SignedGraph base = g.underlying();
    std::vector<SignedGraph> out;
    switch (s.mode) {
        case SignatureSampling::Mode::switching_classes:
            return enumerate_signatures(base);
        case SignatureSampling::Mode::exhaustive: {
            if (base.size() > kMaxExhaustiveEdges) throw ResourceLimitError("too many edges for exhaustive signatures");
            std::vector<int> signs(static_cast<std::size_t>(base.size()));
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << base.size()); ++mask) {
                for (std::size_t e = 0; e < signs.size(); ++e) signs[e] = (mask >> e) & 1u ? -1 : 1;
                out.push_back(base.with_signs(signs));
            }
            return out;
        }
        case SignatureSampling::Mode::random: {
            out.push_back(base);
            std::bernoulli_distribution coin(0.5);
            std::vector<int> signs(static_cast<std::size_t>(base.size()));
            for (int i = 0; i < s.count; ++i) {
                for (auto& x : signs) x = coin(rng) ? -1 : 1;
                out.push_back(base.with_signs(signs));
            }
            return out;
        }
    }
    return out;
}

SuiteReport check_sachs(const std::vector<SignedGraph>& corpus, const SignatureSampling& s) {
    Suite suite("sachs", "char_poly coefficients equal basic-figure sums");
    std::mt19937_64 rng(s.seed);
    for (const auto& g : corpus) {
        for (const auto& h : sample_signatures(g, s, rng)) {
            const auto phi = char_poly(h);
            const auto a = sachs_coefficients(h);
            for (int i = 0; i <= h.order(); ++i) {
                if (phi.coeff(h.order() - i) != a[static_cast<std::size_t>(i)])
                    return suite.stop("a_" + std::to_string(i) + ": char_poly gives " + phi.coeff(h.order() - i).get_str() +
                                          ", basic figures give " + a[static_cast<std::size_t>(i)].get_str(),
                                      h);
            }
            suite.count();
        }
    }
    return suite.finish();
}

SuiteReport check_decomposition(const std::vector<SignedGraph>& corpus, const SignatureSampling& s) {
    Suite suite("decomposition", "char_poly equals the 2-regular expansion over matching polynomials");
    std::mt19937_64 rng(s.seed);
    for (const auto& g : corpus) {
        const SignedGraph base = g.underlying();
        const auto catalog = enumerate_two_regular(base, spanning_forest(base));
        MatchingPolynomials matchings(base);
        for (const auto& h : sample_signatures(g, s, rng)) {
            const auto expected = char_poly(h);
            const auto expansion = two_regular_expansion(resign(catalog, h), matchings);
            if (!(expected == expansion))
                return suite.stop("char_poly " + expected.to_string() + " but expansion " + expansion.to_string(), h);
            suite.count();
        }
    }
    return suite.finish();
}

SuiteReport check_odd_part(const std::vector<SignedGraph>& corpus, const SignatureSampling& s) {
    Suite suite("odd_part", "symmetric spectrum iff the odd part vanishes; numeric pairing agrees");
    std::mt19937_64 rng(s.seed);
    for (const auto& g : corpus) {
        const SignedGraph base = g.underlying();
        const auto catalog = enumerate_two_regular(base, spanning_forest(base));
        MatchingPolynomials matchings(base);
        for (const auto& h : sample_signatures(g, s, rng)) {
            const bool exact = is_spectrally_symmetric(h);
            const bool zero = odd_part(resign(catalog, h), matchings).is_zero();
            if (exact != zero)
                return suite.stop(std::string("symmetric spectrum = ") + (exact ? "true" : "false") +
                                      " but odd part is " + (zero ? "zero" : "nonzero"),
                                  h);
            if (numeric_symmetry_check(eigenvalues(h)) != exact)
                return suite.stop("numeric pairing test disagrees with the exact test", h);
            suite.count();
        }
    }
    return suite.finish();
}

SuiteReport check_sign_symmetry(const std::vector<SignedGraph>& corpus, bool per_automorphism) {
    Suite suite("sign_symmetry_equiv", "odd-exchangeable iff sign-symmetric over every switching class");
    std::uint64_t symmetric_only = 0;
    std::uint64_t classes = 0;
    std::uint64_t automorphism_checks = 0;
    std::uint64_t bipartite_disagreements = 0;
    std::string first_bipartite;
    for (const auto& g : corpus) {
        const auto report = census(g);
        for (const auto& c : report.classes) {
            if (!check_verdict(suite, c.graph, c.verdict)) return suite.finish();
            if (c.verdict.spectrally_symmetric && !*c.verdict.sign_symmetric) ++symmetric_only;
            ++classes;
            suite.count();
        }
        if (!per_automorphism) continue;
        // On bipartite graphs every automorphism is vacuously weak, while the
        // fundamental-cycle criterion still demands that even cycles keep
        // their sign. Those disagreements are tallied, not failed.
        const bool bipartite = report.underlying.is_bipartite();
        const SymmetryContext ctx(report.underlying);
        for (const auto& c : report.classes) {
            const auto catalog = resign(ctx.catalog(), c.graph);
            std::vector<EdgeId> image;
            for (std::size_t a = 0; a < ctx.automorphisms().size(); ++a) {
                const auto& map = ctx.edge_maps()[a];
                const bool weak = is_weak_automorphism(c.graph, catalog, map);
                if (weak != spanning_cycle_criterion(c.graph, ctx.fundamental_edges(), map)) {
                    if (!bipartite)
                        return suite.stop("spanning-cycle criterion disagrees for " +
                                              ctx.automorphisms()[a].to_cycle_string(),
                                          c.graph);
                    if (bipartite_disagreements++ == 0)
                        first_bipartite = serialize(c.graph) + "under " + ctx.automorphisms()[a].to_cycle_string();
                }
                if (bipartite) continue;
                ++automorphism_checks;
                if (!weak) continue;
                for (std::size_t idx : catalog.even_positive) {
                    image.clear();
                    for (EdgeId e : catalog.all[idx].edges) image.push_back(map[static_cast<std::size_t>(e)]);
                    const auto* target = catalog.find(catalog.coordinates_of(image));
                    if (target == nullptr || target->odd() || target->sign < 0)
                        return suite.stop("weak automorphism " + ctx.automorphisms()[a].to_cycle_string() +
                                              " does not keep a positive even subgraph positive",
                                          c.graph);
                }
            }
        }
    }
    if (per_automorphism) {
        suite.note(std::to_string(automorphism_checks) +
                   " (class, automorphism) pairs on non-bipartite graphs: criterion and weak test agree");
        if (bipartite_disagreements > 0)
            suite.note(std::to_string(bipartite_disagreements) +
                       " bipartite (class, automorphism) pairs where a vacuously weak automorphism fails the "
                       "spanning-cycle criterion; first:\n" + first_bipartite);
    }
    suite.note(std::to_string(symmetric_only) + " of " + std::to_string(classes) +
               " switching classes are spectrally symmetric but not sign-symmetric");
    return suite.finish();
}

SuiteReport check_unicyclic(int max_n) {
    Suite suite("unicyclic", "unicyclic graphs: symmetric spectrum iff the cycle is even");
    for (int n = 3; n <= max_n && suite.ok(); ++n) {
        for_each_labeled_connected_graph(n, [&](const SignedGraph& g) {
            if (g.size() != n || !suite.ok()) return;
            const auto t = spanning_tree(g);
            const bool even = fundamental_cycles(g, t).front().length % 2 == 0;
            for (const auto& h : enumerate_signatures(g)) {
                if (!suite.expect(is_spectrally_symmetric(h) == even,
                                  even ? "even cycle but asymmetric spectrum" : "odd cycle but symmetric spectrum", h))
                    return;
                suite.count();
            }
        });
    }
    return suite.finish();
}

std::vector<BaseBicyclicSpec> base_bicyclic_specs(int max_n) {
    std::vector<BaseBicyclicSpec> out;
    for (int l1 = 1; l1 <= max_n; ++l1)
        for (int l2 = std::max(l1, 2); l1 + l2 - 1 <= max_n; ++l2)
            for (int l3 = l2; l1 + l2 + l3 - 1 <= max_n; ++l3) out.push_back({BicyclicKind::theta, {l1, l2, l3}, {}});
    for (int l1 = 3; l1 <= max_n; ++l1)
        for (int l2 = l1; l1 + l2 - 1 <= max_n; ++l2) out.push_back({BicyclicKind::infinity, {l1, l2}, {}});
    for (int l = 1; l <= max_n; ++l)
        for (int l1 = 3; l + l1 - 1 <= max_n; ++l1)
            for (int l2 = l1; l + l1 + l2 - 1 <= max_n; ++l2) out.push_back({BicyclicKind::bowtie, {l, l1, l2}, {}});
    return out;
}

SuiteReport check_bicyclic(int max_n) {
    Suite suite("bicyclic", "base bicyclic graphs: spectrally symmetric iff family member iff sign-symmetric");
    std::uint64_t graphs = 0;
    for (const auto& spec : base_bicyclic_specs(max_n)) {
        const auto g = base_bicyclic(spec);
        if (g.is_bipartite()) continue;
        ++graphs;
        const auto report = census(g);
        if (report.classes.size() != 4) return suite.stop("expected four switching classes", g);
        for (const auto& c : report.classes) {
            const bool member = bicyclic_family_membership(c.graph);
            if (c.verdict.spectrally_symmetric != member)
                return suite.stop(std::string("family membership = ") + (member ? "true" : "false") +
                                      " but spectrally symmetric = " + (c.verdict.spectrally_symmetric ? "true" : "false"),
                                  c.graph);
            if (!c.verdict.sign_symmetric || *c.verdict.sign_symmetric != c.verdict.spectrally_symmetric)
                return suite.stop("spectral symmetry and sign symmetry differ", c.graph);
            if (!check_verdict(suite, c.graph, c.verdict)) return suite.finish();
            suite.count();
        }
    }
    suite.note(std::to_string(graphs) + " non-bipartite base bicyclic graphs");
    return suite.finish();
}

SuiteReport check_counts(const std::vector<SignedGraph>& corpus, bool all_signatures) {
    Suite suite("counts", "2^k switching classes stratified by C(k,t)");
    for (const auto& g : corpus) {
        const auto report = census(g);
        const std::uint64_t expected = std::uint64_t{1} << report.k;
        if (report.classes.size() != expected || enumerate_signatures(g).size() != expected)
            return suite.stop("expected " + std::to_string(expected) + " classes", g);
        for (int t = 0; t <= report.k; ++t)
            if (report.strata[static_cast<std::size_t>(t)] != binomial(report.k, t))
                return suite.stop("stratum t = " + std::to_string(t) + " has " +
                                      std::to_string(report.strata[static_cast<std::size_t>(t)]) + " classes, expected " +
                                      std::to_string(binomial(report.k, t)),
                                  g);
        std::set<std::string> vectors;
        for (const auto& c : report.classes) vectors.insert(bits(cycle_sign_vector(c.graph, report.tree)));
        if (vectors.size() != expected) return suite.stop("representatives are not pairwise inequivalent", g);
        suite.count();

        if (!all_signatures) continue;
        std::mt19937_64 unused;
        std::set<std::string> seen;
        for (const auto& h : sample_signatures(g, {SignatureSampling::Mode::exhaustive, 0, 0}, unused)) {
            const auto key = bits(cycle_sign_vector(h, report.tree));
            seen.insert(key);
            // Every signature must be switching equivalent to the representative with the same vector.
            std::uint32_t mask = 0;
            for (std::size_t i = 0; i < key.size(); ++i)
                if (key[i] == '1') mask |= 1u << i;
            if (!switching_between(h, report.classes[mask].graph))
                return suite.stop("signature not switching equivalent to its representative", h);
        }
        if (seen.size() != expected)
            return suite.stop(std::to_string(seen.size()) + " sign vectors over all signatures, expected " +
                                  std::to_string(expected),
                              g);
    }
    return suite.finish();
}

SuiteReport check_complete_split(int max_half) {
    Suite suite("complete_split", "signed complete graphs from a graph and its complement");
    for (int h = 1; h <= max_half; ++h) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (int u = 0; u < h; ++u)
            for (int v = u + 1; v < h; ++v) pairs.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<std::pair<Vertex, Vertex>> chosen;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1u) chosen.push_back(pairs[i]);
            const auto c = complete_split(SignedGraph::from_pairs(h, chosen));
            if (!suite.expect(is_spectrally_symmetric(c.graph), "spectrum is not symmetric", c.graph))
                return suite.finish();
            suite.count();
        }
    }
    return suite.finish();
}

SuiteReport check_block_construction(int count, int max_dim, std::uint64_t seed) {
    Suite suite("block", "block matrices [[B, C], [C, -B]] are sign-symmetric");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int i = 0; i < count; ++i) {
        const auto d = static_cast<std::size_t>(dim(rng));
        std::vector<std::vector<int>> b(d, std::vector<int>(d, 0));
        auto c = b;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t s = r + 1; s < d; ++s) {
                b[r][s] = b[s][r] = entry(rng);
                c[r][s] = c[s][r] = entry(rng);
            }
        const auto out = block_construction(b, c);
        const auto v = classify(out.graph);
        if (!suite.expect(v.spectrally_symmetric, "spectrum is not symmetric", out.graph) ||
            !suite.expect(v.sign_symmetric.value_or(false), "not sign-symmetric", out.graph) ||
            !suite.expect(is_weak_automorphism(out.graph, *out.witness), "half swap is not a weak automorphism", out.graph) ||
            !check_verdict(suite, out.graph, v))
            return suite.finish();
        suite.count();
    }
    return suite.finish();
}

std::vector<Construction> certified_corpus() {
    using K = BicyclicKind;
    const SignedGraph k1(1);
    const SignedGraph k2 = positive_path(2);
    const SignedGraph p3 = positive_path(3);
    const SignedGraph triangle = positive_cycle(3);
    const auto inf33 = base_bicyclic({K::infinity, {3, 3}, {true, false}});
    const VertexPermutation phi({0, 4, 3, 2, 1});
    const auto wrap = [](SignedGraph g, std::string name) {
        return Construction{std::move(g), std::move(name), nlohmann::json::object(), std::nullopt};
    };

    std::vector<Construction> out;
    out.push_back(wrap(inf33, "infinity(3-,3)"));
    out.push_back(wrap(base_bicyclic({K::infinity, {5, 5}, {true, false}}), "infinity(5-,5)"));
    out.push_back(wrap(base_bicyclic({K::bowtie, {1, 3, 3}, {false, true, false}}), "bowtie(1,3-,3)"));
    out.push_back(wrap(base_bicyclic({K::bowtie, {2, 3, 3}, {false, true, false}}), "bowtie(2,3-,3)"));
    out.push_back(wrap(base_bicyclic({K::theta, {1, 2, 2}, {false, true, false}}), "theta(1,2-,2)"));
    out.push_back(wrap(base_bicyclic({K::theta, {3, 2, 2}, {false, true, false}}), "theta(3,2-,2)"));
    out.push_back(wrap(base_bicyclic({K::theta, {2, 3, 3}, {false, true, false}}), "theta(2,3-,3)"));
    out.push_back(extend(inf33, phi, 1, 3));
    const int plus[] = {1};
    const int minus_plus[] = {-1, 1};
    out.push_back(link(triangle, 0, plus));
    out.push_back(link(triangle, 1, minus_plus));
    out.push_back(link(inf33, 0, plus));
    AttachStep pair;
    pair.u = 1;
    pair.u_prime = 4;
    pair.part = k2;
    AttachStep fixed;
    fixed.kind = AttachStep::Kind::fixed_vertex;
    fixed.u = 0;
    fixed.part = positive_cycle(4);
    const AttachStep plan[] = {pair, fixed};
    out.push_back(attach(inf33, phi, plan));
    out.push_back(complete_split(p3));
    out.push_back(complete_split(k2));
    out.push_back(block_construction({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    out.push_back(block_construction({{0, 1}, {1, 0}}, {{0, -1}, {-1, 0}}));
    const std::array<SignedGraph, 3> singles{k1, k1, k1};
    const std::array<SignedGraph, 3> mixed{k1, k2, k1};
    const std::array<SignedGraph, 3> none{SignedGraph(0), SignedGraph(0), SignedGraph(0)};
    out.push_back(construction_one(singles));
    out.push_back(construction_one(mixed));
    out.push_back(construction_one(none, 5));
    out.push_back(corona_k1(inf33));
    return out;
}

SuiteReport check_closure() {
    Suite suite("closure", "products with K2 and K1-coronas of symmetric graphs stay symmetric");
    const SignedGraph k2 = positive_path(2);
    for (const auto& c : certified_corpus()) {
        if (!suite.expect(is_spectrally_symmetric(c.graph), c.name + " is not spectrally symmetric", c.graph) ||
            !suite.expect(is_spectrally_symmetric(cartesian_product(c.graph, k2).graph),
                          "product of " + c.name + " with K2 is not spectrally symmetric", c.graph) ||
            !suite.expect(is_spectrally_symmetric(corona_k1(c.graph).graph),
                          "corona of " + c.name + " is not spectrally symmetric", c.graph))
            return suite.finish();
        suite.count();
    }
    return suite.finish();
}

SuiteReport check_weak_constructions() {
    Suite suite("weak_constructions", "link, attach, extend and construction I outputs");
    const auto certified = [&](const Construction& c) {
        if (!is_spectrally_symmetric(c.graph)) return suite.fail(c.name + ": spectrum is not symmetric", c.graph);
        if (c.witness && !is_weak_automorphism(c.graph, *c.witness))
            return suite.fail(c.name + ": certificate is not a weak automorphism", c.graph);
        suite.count();
        return true;
    };

    // link: every small graph, signature, vertex and short path.
    const std::vector<std::vector<int>> paths{{1}, {-1}, {1, 1}, {1, -1}, {-1, -1}};
    std::mt19937_64 rng(7);
    for (const auto& g : classes_up_to(4)) {
        for (const auto& h : sample_signatures(g, {SignatureSampling::Mode::switching_classes, 0, 0}, rng))
            for (Vertex u = 0; u < h.order(); ++u)
                for (const auto& p : paths)
                    if (!certified(link(h, u, p))) return suite.finish();
    }

    // attach: pair and fixed steps, bipartite and odd-exchangeable parts.
    const auto inf33 = base_bicyclic({BicyclicKind::infinity, {3, 3}, {true, false}});
    const VertexPermutation phi({0, 4, 3, 2, 1});
    AttachStep pair;
    pair.u = 1;
    pair.u_prime = 4;
    pair.part = positive_path(2);
    AttachStep fixed_bipartite;
    fixed_bipartite.kind = AttachStep::Kind::fixed_vertex;
    fixed_bipartite.u = 0;
    fixed_bipartite.part = positive_cycle(4);
    fixed_bipartite.part_vertex = 2;
    AttachStep fixed_weak = fixed_bipartite;
    fixed_weak.part = inf33;
    fixed_weak.part_vertex = 0;
    AttachStep pair_triangle = pair;
    pair_triangle.u = 2;
    pair_triangle.u_prime = 3;
    pair_triangle.part = positive_cycle(3);
    const std::vector<std::vector<AttachStep>> plans{
        {}, {pair}, {fixed_bipartite}, {fixed_weak}, {pair, fixed_bipartite, fixed_weak}, {pair_triangle, pair}};
    for (const auto& plan : plans)
        if (!certified(attach(inf33, phi, plan))) return suite.finish();

    // extend: the worked example, then repeated extension of a path.
    if (!certified(extend(inf33, phi, 1, 3))) return suite.finish();
    if (!certified(extend(inf33, phi, 1, 3, -1))) return suite.finish();
    bool rejected = false;
    try {
        extend(inf33, phi, 1, 4);
    } catch (const InputError&) {
        rejected = true;
    }
    if (!suite.expect(rejected, "extend accepted a pair mapped onto itself", inf33)) return suite.finish();

    SignedGraph grown = positive_path(6);
    const VertexPermutation reversal({5, 4, 3, 2, 1, 0});
    std::vector<std::pair<Vertex, Vertex>> tree;
    for (int i = 0; i < 5; ++i) tree.emplace_back(i, i + 1);
    const std::vector<std::tuple<Vertex, Vertex, int>> steps{{0, 2, 1}, {1, 3, -1}, {0, 4, 1}, {0, 3, -1}};
    for (auto [vi, vj, s] : steps) {
        grown = extend(grown, reversal, vi, vj, s, tree).graph;
        const auto v = classify(grown);
        if (!suite.expect(v.odd_exchangeable.value_or(false), "repeated extension lost odd-exchangeability", grown) ||
            !check_verdict(suite, grown, v))
            return suite.finish();
        suite.count();
    }

    // Construction I with assorted trees and cycle lengths.
    const SignedGraph k1(1);
    const SignedGraph none(0);
    const std::vector<std::array<SignedGraph, 3>> tree_sets{
        {k1, k1, k1}, {k1, positive_path(2), k1}, {none, none, none}, {positive_path(3), k1, none},
        {positive_path(2), positive_path(2), positive_path(3)}};
    for (const auto& trees : tree_sets) {
        for (int len : {3, 5}) {
            const auto c = construction_one(trees, len);
            if (!suite.expect(odd_part(c.graph).is_zero(), "construction I has a nonzero odd part", c.graph) ||
                !certified(c))
                return suite.finish();
        }
    }
    return suite.finish();
}

std::vector<std::string> suite_names() {
    return {"sachs", "decomposition", "odd_part", "sign_symmetry_equiv", "unicyclic", "bicyclic", "counts", "constructions"};
}

SuiteReport verify_suite(std::string_view name) {
    using Mode = SignatureSampling::Mode;
    if (name == "sachs") {
        auto r = check_sachs(labeled_up_to(6), {Mode::random, 2, 11});
        Suite s("sachs", "connected labeled graphs n <= 6 (all-positive plus 2 random signatures), classes n = 7 (3 random)");
        s.absorb(r);
        if (s.ok()) s.absorb(check_sachs(classes_of_order(7), {Mode::random, 3, 12}));
        return s.finish();
    }
    if (name == "decomposition") {
        Suite s("decomposition", "labeled n <= 5 all signatures, labeled n = 6 with 200 random signatures, classes n = 7 with 20");
        s.absorb(check_decomposition(labeled_up_to(5), {Mode::exhaustive, 0, 0}));
        if (s.ok()) s.absorb(check_decomposition(labeled_connected_graphs(6), {Mode::random, 200, 21}));
        if (s.ok()) s.absorb(check_decomposition(classes_of_order(7), {Mode::random, 20, 22}));
        return s.finish();
    }
    if (name == "odd_part") {
        Suite s("odd_part", "every switching class of every connected graph class n <= 7");
        s.absorb(check_odd_part(classes_up_to(7), {Mode::switching_classes, 0, 0}));
        return s.finish();
    }
    if (name == "sign_symmetry_equiv") {
        Suite s("sign_symmetry_equiv", "every switching class: labeled n <= 6, classes n = 7; per-automorphism checks on classes n <= 6");
        s.absorb(check_sign_symmetry(labeled_up_to(6), false));
        if (s.ok()) s.absorb(check_sign_symmetry(classes_of_order(7), false));
        if (s.ok()) s.absorb(check_sign_symmetry(classes_up_to(6), true));
        return s.finish();
    }
    if (name == "unicyclic") {
        Suite s("unicyclic", "labeled unicyclic graphs n <= 7, both switching classes");
        s.absorb(check_unicyclic(7));
        return s.finish();
    }
    if (name == "bicyclic") {
        Suite s("bicyclic", "non-bipartite base bicyclic graphs n <= 9, all four classes");
        s.absorb(check_bicyclic(9));
        return s.finish();
    }
    if (name == "counts") {
        Suite s("counts", "named corpus and classes n <= 6; all 2^m signatures for classes n <= 5");
        using K = BicyclicKind;
        const std::vector<SignedGraph> named{positive_path(4),
                                             positive_cycle(5),
                                             base_bicyclic({K::theta, {1, 2, 2}, {}}),
                                             base_bicyclic({K::infinity, {3, 3}, {}}),
                                             base_bicyclic({K::bowtie, {1, 3, 3}, {}}),
                                             complete_graph(4)};
        s.absorb(check_counts(named, true));
        if (s.ok()) s.absorb(check_counts(classes_up_to(5), true));
        if (s.ok()) s.absorb(check_counts(classes_of_order(6), false));
        return s.finish();
    }
    if (name == "constructions") {
        Suite s("constructions", "complete split h <= 4, 100 block pairs d <= 4, closure corpus, weak-automorphism constructions");
        s.absorb(check_complete_split(4));
        if (s.ok()) s.absorb(check_block_construction(100, 4, 31));
        if (s.ok()) s.absorb(check_closure());
        if (s.ok()) s.absorb(check_weak_constructions());
        return s.finish();
    }
    throw InputError("unknown suite: " + std::string(name));
}

}  // namespace sgs
