#include "sgs/corpus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "sgs/error.hpp"

namespace sgs {

namespace {

constexpr int kMaxCorpusOrder = 8;

void check_order(int n) {
    if (n < 1 || n > kMaxCorpusOrder)
        throw ResourceLimitError("graph corpus supports 1 to " + std::to_string(kMaxCorpusOrder) + " vertices");
}

std::vector<std::uint32_t> adjacency_rows(const SignedGraph& g) {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : g.edges()) {
        rows[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        rows[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    return rows;
}

bool connected_rows(const std::vector<std::uint32_t>& rows) {
    const auto n = static_cast<int>(rows.size());
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

// Iterated degree refinement; colors are isomorphism invariant.
std::vector<int> refined_colors(const std::vector<std::uint32_t>& rows) {
    const auto n = rows.size();
    std::vector<int> color(n);
    for (std::size_t v = 0; v < n; ++v) color[v] = std::popcount(rows[v]);
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            for (std::uint32_t r = rows[v]; r != 0; r &= r - 1) sig[v].push_back(color[static_cast<std::size_t>(std::countr_zero(r))]);
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& s : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        std::vector<int> refined(n);
        for (std::size_t v = 0; v < n; ++v) refined[v] = ids[sig[v]];
        const auto classes = [](const std::vector<int>& c) { return std::set<int>(c.begin(), c.end()).size(); };
        const bool stable = classes(refined) == classes(color);
        color = std::move(refined);
        if (stable) break;
    }
    return color;
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const std::vector<std::uint32_t>& rows) : rows_(rows), n_(static_cast<int>(rows.size())) {
        const auto color = refined_colors(rows);
        slots_.resize(static_cast<std::size_t>(n_));
        std::vector<int> order(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) order[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)]; });
        for (int p = 0; p < n_; ++p) slots_[static_cast<std::size_t>(p)] = color[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])];
        color_ = color;
        placed_.assign(static_cast<std::size_t>(n_), -1);
    }

    std::uint64_t run() {
        place(0, 0);
        return best_;
    }

private:
    // Bits are laid out per position p: edges to earlier positions q < p.
    void place(int p, std::uint64_t code) {
        if (code > best_) return;  // bits are only ever added
        if (p == n_) {
            best_ = std::min(best_, code);
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_ >> v & 1u || color_[static_cast<std::size_t>(v)] != slots_[static_cast<std::size_t>(p)]) continue;
            std::uint64_t add = 0;
            for (int q = 0; q < p; ++q)
                if (rows_[static_cast<std::size_t>(v)] >> placed_[static_cast<std::size_t>(q)] & 1u)
                    add |= std::uint64_t{1} << (p * (p - 1) / 2 + q);
            placed_[static_cast<std::size_t>(p)] = v;
            used_ |= 1u << v;
            place(p + 1, code | add);
            used_ &= ~(1u << v);
        }
    }

    const std::vector<std::uint32_t>& rows_;
    int n_;
    std::vector<int> color_;
    std::vector<int> slots_;
    std::vector<int> placed_;
    std::uint32_t used_ = 0;
    std::uint64_t best_ = ~std::uint64_t{0};
};

std::uint64_t code_of_rows(const std::vector<std::uint32_t>& rows) {
    // Tag with n so graphs of different order never collide.
    return (CanonicalSearch(rows).run() << 4) | rows.size();
}

SignedGraph graph_of_rows(const std::vector<std::uint32_t>& rows) {
    std::vector<Edge> edges;
    const auto n = static_cast<int>(rows.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rows[static_cast<std::size_t>(u)] >> v & 1u) edges.push_back({u, v, 1});
    return SignedGraph(n, std::move(edges));
}

}  // namespace

std::uint64_t canonical_code(const SignedGraph& g) {
    check_order(g.order());
    return code_of_rows(adjacency_rows(g));
}

void for_each_labeled_connected_graph(int n, const std::function<void(const SignedGraph&)>& visit) {
    check_order(n);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint64_t count = std::uint64_t{1} << pairs.size();
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if (std::popcount(mask) < n - 1) continue;
        std::fill(rows.begin(), rows.end(), 0u);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!(mask >> i & 1u)) continue;
            rows[static_cast<std::size_t>(pairs[i].first)] |= 1u << pairs[i].second;
            rows[static_cast<std::size_t>(pairs[i].second)] |= 1u << pairs[i].first;
        }
        if (connected_rows(rows)) visit(graph_of_rows(rows));
    }
}

std::vector<SignedGraph> labeled_connected_graphs(int n) {
    std::vector<SignedGraph> out;
    for_each_labeled_connected_graph(n, [&](const SignedGraph& g) { out.push_back(g); });
    return out;
}

std::vector<SignedGraph> connected_graph_classes(int n) {
    check_order(n);
    // Every connected graph on n > 1 vertices has a vertex whose removal
    // leaves it connected, so extending the classes on n - 1 vertices by one
    // vertex with a nonempty neighborhood reaches every class.
    std::vector<std::vector<std::uint32_t>> level{{0u}};
    for (int order = 2; order <= n; ++order) {
        std::map<std::uint64_t, std::vector<std::uint32_t>> seen;
        for (const auto& rows : level) {
            for (std::uint32_t nb = 1; nb < (1u << (order - 1)); ++nb) {
                auto grown = rows;
                grown.push_back(nb);
                for (int v = 0; v < order - 1; ++v)
                    if (nb >> v & 1u) grown[static_cast<std::size_t>(v)] |= 1u << (order - 1);
                const auto code = code_of_rows(grown);
                seen.emplace(code, std::move(grown));
            }
        }
        level.clear();
        for (auto& [code, rows] : seen) level.push_back(std::move(rows));
    }
    std::vector<SignedGraph> out;
    for (const auto& rows : level) out.push_back(graph_of_rows(rows));
    std::stable_sort(out.begin(), out.end(), [](const SignedGraph& a, const SignedGraph& b) { return a.size() < b.size(); });
    return out;
}

}  // namespace sgs
