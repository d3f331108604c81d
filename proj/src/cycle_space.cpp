#include "sgs/cycle_space.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "sgs/error.hpp"

namespace sgs {

namespace {

SpanningTree finish_tree(const SignedGraph& g, SpanningTree t) {
    std::vector<char> in_tree(static_cast<std::size_t>(g.size()), 0);
    for (EdgeId e : t.tree_edges) in_tree[static_cast<std::size_t>(e)] = 1;
    std::sort(t.tree_edges.begin(), t.tree_edges.end());
    t.cotree_index.assign(static_cast<std::size_t>(g.size()), -1);
    for (EdgeId e = 0; e < g.size(); ++e) {
        if (!in_tree[static_cast<std::size_t>(e)]) {
            t.cotree_index[static_cast<std::size_t>(e)] = static_cast<int>(t.cotree_edges.size());
            t.cotree_edges.push_back(e);
        }
    }
    return t;
}

// Build a forest from per-vertex adjacency restricted to `allowed` edges.
SpanningTree bfs_forest(const SignedGraph& g, const std::vector<char>* allowed) {
    const auto n = static_cast<std::size_t>(g.order());
    SpanningTree t;
    t.parent.assign(n, -1);
    t.parent_edge.assign(n, -1);
    t.depth.assign(n, -1);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (t.depth[static_cast<std::size_t>(root)] >= 0) continue;
        t.depth[static_cast<std::size_t>(root)] = 0;
        std::vector<Vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            for (Vertex w : g.neighbors(v)) {
                const EdgeId e = *g.edge_id(v, w);
                if (allowed && !(*allowed)[static_cast<std::size_t>(e)]) continue;
                if (t.depth[static_cast<std::size_t>(w)] >= 0) continue;
                t.depth[static_cast<std::size_t>(w)] = t.depth[static_cast<std::size_t>(v)] + 1;
                t.parent[static_cast<std::size_t>(w)] = v;
                t.parent_edge[static_cast<std::size_t>(w)] = e;
                t.tree_edges.push_back(e);
                queue.push_back(w);
            }
        }
    }
    return t;
}

std::vector<std::vector<Vertex>> decompose_cycles(const SignedGraph& g, std::span<const EdgeId> edges) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::array<Vertex, 2>> nb(n, {-1, -1});
    auto link = [&](Vertex a, Vertex b) {
        auto& slot = nb[static_cast<std::size_t>(a)];
        (slot[0] < 0 ? slot[0] : slot[1]) = b;
    };
    std::vector<Vertex> touched;
    for (EdgeId e : edges) {
        const auto& ed = g.edge(e);
        if (nb[static_cast<std::size_t>(ed.u)][0] < 0) touched.push_back(ed.u);
        if (nb[static_cast<std::size_t>(ed.v)][0] < 0) touched.push_back(ed.v);
        link(ed.u, ed.v);
        link(ed.v, ed.u);
    }
    std::sort(touched.begin(), touched.end());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> cycles;
    for (Vertex s : touched) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> cycle{s};
        seen[static_cast<std::size_t>(s)] = 1;
        const auto& first = nb[static_cast<std::size_t>(s)];
        Vertex prev = s;
        Vertex cur = std::min(first[0], first[1]);
        while (cur != s) {
            cycle.push_back(cur);
            seen[static_cast<std::size_t>(cur)] = 1;
            const auto& slot = nb[static_cast<std::size_t>(cur)];
            const Vertex next = slot[0] == prev ? slot[1] : slot[0];
            prev = cur;
            cur = next;
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

void partition(TwoRegularCatalog& cat) {
    cat.even_positive.clear();
    cat.even_negative.clear();
    cat.odd_positive.clear();
    cat.odd_negative.clear();
    for (std::size_t i = 0; i < cat.all.size(); ++i) {
        const auto& c = cat.all[i];
        if (c.odd()) (c.sign > 0 ? cat.odd_positive : cat.odd_negative).push_back(i);
        else (c.sign > 0 ? cat.even_positive : cat.even_negative).push_back(i);
    }
}

}  // namespace

std::vector<EdgeId> SpanningTree::path(Vertex a, Vertex b) const {
    std::vector<EdgeId> from_a;
    std::vector<EdgeId> from_b;
    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
        from_a.push_back(parent_edge[static_cast<std::size_t>(a)]);
        a = parent[static_cast<std::size_t>(a)];
    }
    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
        from_b.push_back(parent_edge[static_cast<std::size_t>(b)]);
        b = parent[static_cast<std::size_t>(b)];
    }
    while (a != b) {
        if (a < 0 || b < 0) throw InputError("vertices lie in different components");
        from_a.push_back(parent_edge[static_cast<std::size_t>(a)]);
        from_b.push_back(parent_edge[static_cast<std::size_t>(b)]);
        a = parent[static_cast<std::size_t>(a)];
        b = parent[static_cast<std::size_t>(b)];
    }
    from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
    return from_a;
}

SpanningTree spanning_forest(const SignedGraph& g) { return finish_tree(g, bfs_forest(g, nullptr)); }

SpanningTree spanning_tree(const SignedGraph& g) {
    if (!g.is_connected()) throw InputError("graph is not connected");
    return spanning_forest(g);
}

SpanningTree spanning_tree_from_edges(const SignedGraph& g, std::span<const EdgeId> tree_edges) {
    std::vector<char> allowed(static_cast<std::size_t>(g.size()), 0);
    for (EdgeId e : tree_edges) {
        if (e < 0 || e >= g.size()) throw InputError("tree edge id out of range");
        if (allowed[static_cast<std::size_t>(e)]) throw InputError("tree edge listed twice");
        allowed[static_cast<std::size_t>(e)] = 1;
    }
    SpanningTree t = bfs_forest(g, &allowed);
    const auto expected = static_cast<std::size_t>(g.order()) - g.components().size();
    if (tree_edges.size() != expected || t.tree_edges.size() != expected)
        throw InputError("edge set is not a spanning forest of the graph");
    return finish_tree(g, std::move(t));
}

std::vector<FundamentalCycle> fundamental_cycles(const SignedGraph& g, const SpanningTree& t) {
    std::vector<FundamentalCycle> out;
    out.reserve(t.cotree_edges.size());
    for (EdgeId e : t.cotree_edges) {
        FundamentalCycle c;
        c.cotree_edge = e;
        c.edges = t.path(g.edge(e).u, g.edge(e).v);
        c.edges.push_back(e);
        std::sort(c.edges.begin(), c.edges.end());
        c.length = static_cast<int>(c.edges.size());
        c.sign = edge_set_sign(g, c.edges);
        out.push_back(std::move(c));
    }
    return out;
}

TwoRegularCatalog enumerate_two_regular(const SignedGraph& g, const SpanningTree& t, int max_k) {
    const int k = t.cyclomatic_number();
    if (k > max_k || k > 31)
        throw ResourceLimitError("cyclomatic number " + std::to_string(k) + " exceeds the enumeration cap " +
                                 std::to_string(std::min(max_k, 31)));
    const auto cycles = fundamental_cycles(g, t);

    // Gray-code walk over the cycle space, tracking vertex degrees so that
    // each step costs one fundamental cycle's length.
    std::vector<char> in_set(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    int irregular = 0;
    auto bump = [&](Vertex v, int delta) {
        auto& d = deg[static_cast<std::size_t>(v)];
        const bool was_bad = d != 0 && d != 2;
        d += delta;
        const bool is_bad = d != 0 && d != 2;
        irregular += static_cast<int>(is_bad) - static_cast<int>(was_bad);
    };
    std::vector<std::uint32_t> masks;
    std::uint32_t mask = 0;
    const std::uint64_t steps = std::uint64_t{1} << k;
    for (std::uint64_t s = 1; s < steps; ++s) {
        const int bit = std::countr_zero(s);
        mask ^= std::uint32_t{1} << bit;
        for (EdgeId e : cycles[static_cast<std::size_t>(bit)].edges) {
            auto& flag = in_set[static_cast<std::size_t>(e)];
            const int delta = flag ? -1 : 1;
            flag = static_cast<char>(!flag);
            bump(g.edge(e).u, delta);
            bump(g.edge(e).v, delta);
        }
        if (irregular == 0) masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end());

    TwoRegularCatalog cat;
    cat.cotree_index = t.cotree_index;
    cat.all.reserve(masks.size());
    std::vector<char> scratch(static_cast<std::size_t>(g.size()), 0);
    for (std::uint32_t m : masks) {
        TwoRegularSubgraph c;
        c.coordinates = m;
        for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
            for (EdgeId e : cycles[static_cast<std::size_t>(std::countr_zero(rest))].edges)
                scratch[static_cast<std::size_t>(e)] ^= 1;
        }
        for (EdgeId e = 0; e < g.size(); ++e) {
            if (scratch[static_cast<std::size_t>(e)]) {
                c.edges.push_back(e);
                scratch[static_cast<std::size_t>(e)] = 0;
            }
        }
        c.component_cycles = decompose_cycles(g, c.edges);
        for (const auto& cyc : c.component_cycles) c.vertices.insert(c.vertices.end(), cyc.begin(), cyc.end());
        std::sort(c.vertices.begin(), c.vertices.end());
        c.sign = edge_set_sign(g, c.edges);
        cat.all.push_back(std::move(c));
    }
    partition(cat);
    return cat;
}

TwoRegularCatalog resign(const TwoRegularCatalog& catalog, const SignedGraph& g) {
    TwoRegularCatalog out = catalog;
    for (auto& c : out.all) c.sign = edge_set_sign(g, c.edges);
    partition(out);
    return out;
}

std::uint32_t TwoRegularCatalog::coordinates_of(std::span<const EdgeId> edges) const {
    std::uint32_t coords = 0;
    for (EdgeId e : edges) {
        const int bit = cotree_index[static_cast<std::size_t>(e)];
        if (bit >= 0) coords ^= std::uint32_t{1} << bit;
    }
    return coords;
}

const TwoRegularSubgraph* TwoRegularCatalog::find(std::uint32_t coordinates) const {
    auto it = std::lower_bound(all.begin(), all.end(), coordinates,
                               [](const TwoRegularSubgraph& c, std::uint32_t key) { return c.coordinates < key; });
    if (it == all.end() || it->coordinates != coordinates) return nullptr;
    return &*it;
}

Gf2Vector cycle_sign_vector(const SignedGraph& g, const SpanningTree& t) {
    Gf2Vector out;
    out.reserve(t.cotree_edges.size());
    for (EdgeId e : t.cotree_edges) {
        int s = g.edge(e).sign;
        for (EdgeId p : t.path(g.edge(e).u, g.edge(e).v)) s *= g.edge(p).sign;
        out.push_back(s < 0);
    }
    return out;
}

int edge_set_sign(const SignedGraph& g, std::span<const EdgeId> edges) {
    int s = 1;
    for (EdgeId e : edges) s *= g.edge(e).sign;
    return s;
}

}  // namespace sgs
