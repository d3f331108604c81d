#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sgs/signed_graph.hpp"

namespace sgs::test {

inline SignedGraph graph(int n, std::initializer_list<Edge> edges) { return SignedGraph(n, std::vector<Edge>(edges)); }

inline SignedGraph cycle(int n, int negatives = 0) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, i < negatives ? -1 : 1});
    return SignedGraph(n, std::move(edges));
}

inline SignedGraph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
    return SignedGraph(n, std::move(edges));
}

inline SignedGraph complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
    return SignedGraph(n, std::move(edges));
}

inline SignedGraph random_signature(const SignedGraph& g, std::mt19937_64& rng) {
    std::vector<int> signs;
    for (int e = 0; e < g.size(); ++e) signs.push_back(rng() & 1 ? -1 : 1);
    return g.with_signs(signs);
}

inline SignedGraph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v, rng() & 1 ? -1 : 1});
    return SignedGraph(n, std::move(edges));
}

inline SwitchSet random_switch_set(int n, std::mt19937_64& rng) {
    std::vector<Vertex> u;
    for (Vertex v = 0; v < n; ++v)
        if (rng() & 1) u.push_back(v);
    return SwitchSet(u);
}

inline VertexPermutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<Vertex> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
    std::shuffle(image.begin(), image.end(), rng);
    return VertexPermutation(image);
}

/// Every simple cycle as a sorted edge-id set, found by depth-first search
/// from each start vertex through larger vertices only.
inline std::set<std::vector<EdgeId>> simple_cycles_by_dfs(const SignedGraph& g) {
    std::set<std::vector<EdgeId>> out;
    const int n = g.order();
    std::vector<Vertex> stack;
    std::vector<bool> on(static_cast<std::size_t>(n), false);
    auto record = [&](Vertex start) {
        std::vector<EdgeId> ids;
        for (std::size_t i = 0; i + 1 < stack.size(); ++i) ids.push_back(*g.edge_id(stack[i], stack[i + 1]));
        ids.push_back(*g.edge_id(stack.back(), start));
        std::sort(ids.begin(), ids.end());
        out.insert(ids);
    };
    auto dfs = [&](auto&& self, Vertex start, Vertex v) -> void {
        for (Vertex w : g.neighbors(v)) {
            if (w == start && stack.size() >= 3) record(start);
            if (w <= start || on[static_cast<std::size_t>(w)]) continue;
            on[static_cast<std::size_t>(w)] = true;
            stack.push_back(w);
            self(self, start, w);
            stack.pop_back();
            on[static_cast<std::size_t>(w)] = false;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        stack = {s};
        on[static_cast<std::size_t>(s)] = true;
        dfs(dfs, s, s);
        on[static_cast<std::size_t>(s)] = false;
    }
    return out;
}

}  // namespace sgs::test
