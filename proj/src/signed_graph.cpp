#include "sgs/signed_graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sgs/error.hpp"

namespace sgs {

SignedGraph::SignedGraph(int n) : SignedGraph(n, {}) {}

SignedGraph::SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    for (auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
        if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
        if (e.sign != 1 && e.sign != -1) throw InputError("edge sign must be +1 or -1");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw InputError("duplicate edge " + std::to_string(edges_[i].u) + " " + std::to_string(edges_[i].v));
    }
    index();
}

SignedGraph SignedGraph::from_pairs(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, 1});
    return SignedGraph(n, std::move(edges));
}

void SignedGraph::index() {
    const auto n = static_cast<std::size_t>(n_);
    adj_.assign(n, {});
    id_table_.assign(n * n, -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        id_table_[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = static_cast<EdgeId>(i);
        id_table_[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = static_cast<EdgeId>(i);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::optional<EdgeId> SignedGraph::edge_id(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
    const EdgeId id = id_table_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    if (id < 0) return std::nullopt;
    return id;
}

int SignedGraph::sign(Vertex u, Vertex v) const {
    auto id = edge_id(u, v);
    return id ? edge(*id).sign : 0;
}

std::vector<std::vector<Vertex>> SignedGraph::components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : neighbors(comp[head])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool SignedGraph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool SignedGraph::is_bipartite() const {
    std::vector<int> side(static_cast<std::size_t>(n_), -1);
    for (Vertex s = 0; s < n_; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            for (Vertex w : neighbors(v)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

SignedGraph SignedGraph::underlying() const {
    std::vector<int> ones(edges_.size(), 1);
    return with_signs(ones);
}

SignedGraph SignedGraph::with_signs(std::span<const int> signs) const {
    if (signs.size() != edges_.size()) throw InputError("signature length does not match edge count");
    SignedGraph out = *this;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1) throw InputError("edge sign must be +1 or -1");
        out.edges_[i].sign = signs[i];
    }
    return out;
}

SignedGraph SignedGraph::remove_vertices(std::span<const Vertex> removed) const {
    std::vector<Vertex> relabel(static_cast<std::size_t>(n_), 0);
    for (Vertex v : removed) {
        if (v < 0 || v >= n_) throw InputError("vertex out of range");
        relabel[static_cast<std::size_t>(v)] = -1;
    }
    int next = 0;
    for (auto& r : relabel) r = (r < 0) ? -1 : next++;
    std::vector<Edge> edges;
    for (const auto& e : edges_) {
        const Vertex a = relabel[static_cast<std::size_t>(e.u)];
        const Vertex b = relabel[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.push_back({a, b, e.sign});
    }
    return SignedGraph(next, std::move(edges));
}

std::vector<std::vector<int>> SignedGraph::adjacency_matrix() const {
    const auto n = static_cast<std::size_t>(n_);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (const auto& e : edges_) {
        a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = e.sign;
        a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = e.sign;
    }
    return a;
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
    }
    return true;
}

SwitchSet::SwitchSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SwitchSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

VertexPermutation::VertexPermutation(std::vector<Vertex> image) : image_(std::move(image)) {
    std::vector<char> hit(image_.size(), 0);
    for (Vertex v : image_) {
        if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || hit[static_cast<std::size_t>(v)])
            throw InputError("image array is not a permutation");
        hit[static_cast<std::size_t>(v)] = 1;
    }
}

VertexPermutation VertexPermutation::identity(int n) {
    std::vector<Vertex> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    return VertexPermutation(std::move(image));
}

VertexPermutation VertexPermutation::inverse() const {
    std::vector<Vertex> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<Vertex>(i);
    return VertexPermutation(std::move(inv));
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& other) const {
    if (other.size() != size()) throw InputError("permutation sizes differ");
    std::vector<Vertex> out(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) out[i] = image_[static_cast<std::size_t>(other.image_[i])];
    return VertexPermutation(std::move(out));
}

bool VertexPermutation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != static_cast<Vertex>(i)) return false;
    return true;
}

bool VertexPermutation::is_involution() const { return compose(*this).is_identity(); }

std::string VertexPermutation::to_cycle_string() const {
    std::string out;
    std::vector<char> seen(image_.size(), 0);
    for (std::size_t s = 0; s < image_.size(); ++s) {
        if (seen[s]) continue;
        out += '(';
        std::size_t v = s;
        bool first = true;
        while (!seen[v]) {
            seen[v] = 1;
            if (!first) out += ' ';
            out += std::to_string(v);
            first = false;
            v = static_cast<std::size_t>(image_[v]);
        }
        out += ')';
    }
    return out;
}

SignedGraph switching(const SignedGraph& g, const SwitchSet& u) {
    for (Vertex v : u.members())
        if (v < 0 || v >= g.order()) throw InputError("switch set vertex out of range: " + std::to_string(v));
    std::vector<int> signs;
    signs.reserve(static_cast<std::size_t>(g.size()));
    for (const auto& e : g.edges()) signs.push_back(u.contains(e.u) != u.contains(e.v) ? -e.sign : e.sign);
    return g.with_signs(signs);
}

SignedGraph negate(const SignedGraph& g) {
    std::vector<int> signs;
    signs.reserve(static_cast<std::size_t>(g.size()));
    for (const auto& e : g.edges()) signs.push_back(-e.sign);
    return g.with_signs(signs);
}

SignedGraph apply_permutation(const SignedGraph& g, const VertexPermutation& p) {
    if (p.size() != g.order()) throw InputError("permutation size does not match vertex count");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.size()));
    for (const auto& e : g.edges()) edges.push_back({p(e.u), p(e.v), e.sign});
    return SignedGraph(g.order(), std::move(edges));
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view tok, std::size_t line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InputError("line " + std::to_string(line_no) + ": expected integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

SignedGraph parse_signed_graph(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!tokens(line).empty()) lines.push_back(line);
        start = end + 1;
    }
    if (lines.empty()) throw InputError("empty graph description");
    auto header = tokens(lines[0]);
    if (header.size() != 2) throw InputError("line 1: expected 'n m'");
    const int n = parse_int(header[0], 1);
    const int m = parse_int(header[1], 1);
    if (n < 0 || m < 0) throw InputError("line 1: counts must be non-negative");
    if (lines.size() - 1 != static_cast<std::size_t>(m))
        throw InputError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto tok = tokens(lines[i]);
        if (tok.size() != 3) throw InputError("line " + std::to_string(i + 1) + ": expected 'u v s'");
        const int u = parse_int(tok[0], i + 1);
        const int v = parse_int(tok[1], i + 1);
        int s = 0;
        if (tok[2] == "+") s = 1;
        else if (tok[2] == "-") s = -1;
        else throw InputError("line " + std::to_string(i + 1) + ": sign must be '+' or '-'");
        edges.push_back({u, v, s});
    }
    return SignedGraph(n, std::move(edges));
}

std::string serialize(const SignedGraph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
    return out.str();
}

}  // namespace sgs
