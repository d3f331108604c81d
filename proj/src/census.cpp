#include "sgs/census.hpp"

#include <bit>

#include "sgs/error.hpp"
#include "sgs/polynomials.hpp"

namespace sgs {

namespace {

SpanningTree checked_tree(const SignedGraph& base, int max_k) {
    if (!base.is_connected()) throw InputError("census requires a connected graph");
    auto t = spanning_tree(base);
    if (t.cyclomatic_number() > max_k)
        throw ResourceLimitError("cyclomatic number " + std::to_string(t.cyclomatic_number()) +
                                 " exceeds the census cap " + std::to_string(max_k));
    return t;
}

SignedGraph representative(const SignedGraph& base, const SpanningTree& t, std::uint32_t mask) {
    std::vector<int> signs(static_cast<std::size_t>(base.size()), 1);
    for (std::size_t i = 0; i < t.cotree_edges.size(); ++i)
        if ((mask >> i) & 1u) signs[static_cast<std::size_t>(t.cotree_edges[i])] = -1;
    return base.with_signs(signs);
}

}  // namespace

std::vector<SignedGraph> enumerate_signatures(const SignedGraph& g, int max_k) {
    const SignedGraph base = g.underlying();
    const auto t = checked_tree(base, max_k);
    std::vector<SignedGraph> out;
    const std::uint32_t count = std::uint32_t{1} << t.cyclomatic_number();
    out.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) out.push_back(representative(base, t, mask));
    return out;
}

CensusReport census(const SignedGraph& g, int max_k) {
    CensusReport report;
    report.underlying = g.underlying();
    report.tree = checked_tree(report.underlying, max_k);
    report.k = report.tree.cyclomatic_number();
    report.strata.assign(static_cast<std::size_t>(report.k) + 1, 0);

    std::optional<SymmetryContext> ctx;
    try {
        ctx.emplace(report.underlying);
    } catch (const ResourceLimitError&) {
        report.undecided = true;
    }

    const std::uint32_t count = std::uint32_t{1} << report.k;
    report.classes.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        CensusClass c;
        c.mask = mask;
        c.negative_cycles = std::popcount(mask);
        for (int i = 0; i < report.k; ++i) c.cotree_signs += ((mask >> i) & 1u) ? '-' : '+';
        c.graph = representative(report.underlying, report.tree, mask);
        if (ctx) {
            c.verdict = classify(*ctx, c.graph);
        } else {
            c.verdict.spectrally_symmetric = is_spectrally_symmetric(c.graph);
        }
        ++report.strata[static_cast<std::size_t>(c.negative_cycles)];
        ++report.summary[{c.verdict.spectrally_symmetric, c.verdict.sign_symmetric}];
        report.classes.push_back(std::move(c));
    }
    return report;
}

}  // namespace sgs
