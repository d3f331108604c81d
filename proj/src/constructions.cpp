#include "sgs/constructions.hpp"

#include <algorithm>
#include <set>

#include "sgs/cycle_space.hpp"
#include "sgs/error.hpp"
#include "sgs/symmetry.hpp"

namespace sgs {

namespace {

class EdgeBuilder {
public:
    explicit EdgeBuilder(int n = 0) : n_(n) {}

    Vertex add_vertex() { return n_++; }
    int order() const { return n_; }
    void add(Vertex u, Vertex v, int sign) { edges_.push_back({u, v, sign}); }
    /// Adds a path from `from` through `interior` fresh vertices to `to`
    /// (or to a fresh vertex when `to` < 0); returns the last vertex.
    Vertex path(Vertex from, int edge_count, Vertex to, bool first_negative) {
        Vertex prev = from;
        for (int i = 0; i < edge_count; ++i) {
            const bool last = i == edge_count - 1;
            const Vertex next = (last && to >= 0) ? to : add_vertex();
            add(prev, next, (i == 0 && first_negative) ? -1 : 1);
            prev = next;
        }
        return prev;
    }
    /// Copies g with vertex `anchor` identified with `target`; returns the
    /// label map of g's vertices.
    std::vector<Vertex> glue(const SignedGraph& g, Vertex anchor, Vertex target, int sign_factor) {
        std::vector<Vertex> map(static_cast<std::size_t>(g.order()));
        for (Vertex x = 0; x < g.order(); ++x) map[static_cast<std::size_t>(x)] = x == anchor ? target : add_vertex();
        for (const auto& e : g.edges())
            add(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)], e.sign * sign_factor);
        return map;
    }
    SignedGraph build() const { return SignedGraph(n_, edges_); }

private:
    int n_;
    std::vector<Edge> edges_;
};

std::string sign_string(std::span<const int> signs) {
    std::string out;
    for (int s : signs) out += s > 0 ? '+' : '-';
    return out;
}

std::vector<int> image_json(const VertexPermutation& p) { return {p.image().begin(), p.image().end()}; }

void check_vertex(const SignedGraph& g, Vertex v, const char* what) {
    if (v < 0 || v >= g.order()) throw InputError(std::string(what) + " is not a vertex: " + std::to_string(v));
}

void require_weak(const SignedGraph& g, const VertexPermutation& p) {
    if (p.size() != g.order()) throw InputError("witness size does not match vertex count");
    if (!is_weak_automorphism(g, p)) throw InputError("witness is not a weak automorphism");
}

bool is_tree(const SignedGraph& t) { return t.is_connected() && t.size() == t.order() - 1; }

void check_block(const std::vector<std::vector<int>>& m, std::size_t d, const char* name) {
    if (m.size() != d) throw InputError(std::string("block ") + name + " has the wrong dimension");
    for (std::size_t i = 0; i < d; ++i) {
        if (m[i].size() != d) throw InputError(std::string("block ") + name + " is not square");
        if (m[i][i] != 0) throw InputError(std::string("block ") + name + " has a nonzero diagonal entry");
        for (std::size_t j = 0; j < d; ++j) {
            if (m[i][j] < -1 || m[i][j] > 1) throw InputError(std::string("block ") + name + " has an entry outside {0,1,-1}");
            if (m[i][j] != m[j][i]) throw InputError(std::string("block ") + name + " is not symmetric");
        }
    }
}

struct Chain {
    Vertex start = -1;
    Vertex end = -1;
    int length = 0;
    int sign = 1;
};

[[noreturn]] void not_base_bicyclic() { throw InputError("graph is not a base bicyclic graph"); }

}  // namespace

std::string to_string(BicyclicKind kind) {
    switch (kind) {
        case BicyclicKind::theta: return "theta";
        case BicyclicKind::infinity: return "infinity";
        case BicyclicKind::bowtie: return "bowtie";
    }
    return "?";
}

SignedGraph base_bicyclic(const BaseBicyclicSpec& spec) {
    const std::size_t parts = spec.kind == BicyclicKind::infinity ? 2 : 3;
    if (spec.lengths.size() != parts) throw InputError("wrong number of lengths for " + to_string(spec.kind));
    std::vector<bool> neg = spec.negative;
    if (neg.empty()) neg.assign(parts, false);
    if (neg.size() != parts) throw InputError("wrong number of sign marks for " + to_string(spec.kind));
    const auto& l = spec.lengths;

    EdgeBuilder b;
    const Vertex u = b.add_vertex();
    switch (spec.kind) {
        case BicyclicKind::theta: {
            if (std::any_of(l.begin(), l.end(), [](int x) { return x < 1; }))
                throw InputError("theta path lengths must be at least 1");
            if (std::count(l.begin(), l.end(), 1) > 1) throw InputError("theta graph with two length-1 paths is not simple");
            const Vertex v = b.add_vertex();
            for (std::size_t i = 0; i < 3; ++i) b.path(u, l[i], v, neg[i]);
            break;
        }
        case BicyclicKind::infinity: {
            if (l[0] < 3 || l[1] < 3) throw InputError("cycle lengths must be at least 3");
            for (std::size_t i = 0; i < 2; ++i) b.path(u, l[i], u, neg[i]);
            break;
        }
        case BicyclicKind::bowtie: {
            if (l[0] < 1) throw InputError("bowtie path length must be at least 1");
            if (l[1] < 3 || l[2] < 3) throw InputError("cycle lengths must be at least 3");
            const Vertex v = b.path(u, l[0], -1, neg[0]);
            b.path(u, l[1], u, neg[1]);
            b.path(v, l[2], v, neg[2]);
            break;
        }
    }
    return b.build();
}

BaseBicyclicShape recognize_base_bicyclic(const SignedGraph& g) {
    if (!g.is_connected() || g.size() != g.order() + 1) not_base_bicyclic();
    std::vector<Vertex> branch;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) < 2) not_base_bicyclic();
        if (g.degree(v) > 2) branch.push_back(v);
    }
    // Walk every maximal path of degree-2 vertices between branch vertices.
    std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
    std::vector<Chain> chains;
    for (Vertex b : branch) {
        for (Vertex first : g.neighbors(b)) {
            const EdgeId e0 = *g.edge_id(b, first);
            if (used[static_cast<std::size_t>(e0)]) continue;
            Chain c{b, first, 1, g.edge(e0).sign};
            used[static_cast<std::size_t>(e0)] = 1;
            Vertex prev = b;
            while (g.degree(c.end) == 2) {
                const auto nb = g.neighbors(c.end);
                const Vertex next = nb[0] == prev ? nb[1] : nb[0];
                const EdgeId e = *g.edge_id(c.end, next);
                used[static_cast<std::size_t>(e)] = 1;
                c.sign *= g.edge(e).sign;
                ++c.length;
                prev = c.end;
                c.end = next;
            }
            chains.push_back(c);
        }
    }

    BaseBicyclicShape shape;
    if (branch.size() == 1 && chains.size() == 2) {
        shape.kind = BicyclicKind::infinity;
        for (const auto& c : chains) {
            shape.lengths.push_back(c.length);
            shape.signs.push_back(c.sign);
        }
    } else if (branch.size() == 2 && chains.size() == 3) {
        const auto loops = std::count_if(chains.begin(), chains.end(), [](const Chain& c) { return c.start == c.end; });
        if (loops == 0) {
            shape.kind = BicyclicKind::theta;
            for (const auto& c : chains) {
                shape.lengths.push_back(c.length);
                shape.signs.push_back(c.sign);
            }
        } else if (loops == 2) {
            shape.kind = BicyclicKind::bowtie;
            const Chain* bridge = nullptr;
            const Chain* at_u = nullptr;
            const Chain* at_v = nullptr;
            for (const auto& c : chains) {
                if (c.start != c.end) bridge = &c;
                else if (c.start == branch[0]) at_u = &c;
                else at_v = &c;
            }
            if (!bridge || !at_u || !at_v) not_base_bicyclic();
            for (const Chain* c : {bridge, at_u, at_v}) {
                shape.lengths.push_back(c->length);
                shape.signs.push_back(c->sign);
            }
        } else {
            not_base_bicyclic();
        }
    } else {
        not_base_bicyclic();
    }
    return shape;
}

bool bicyclic_family_membership(const SignedGraph& g) {
    const auto shape = recognize_base_bicyclic(g);
    const auto& l = shape.lengths;
    const auto& s = shape.signs;
    switch (shape.kind) {
        case BicyclicKind::infinity:
            return l[0] == l[1] && l[0] % 2 == 1 && s[0] != s[1];
        case BicyclicKind::bowtie:
            return l[1] == l[2] && l[1] % 2 == 1 && s[1] != s[2];
        case BicyclicKind::theta:
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j) {
                    const int k = 3 - i - j;
                    if (l[i] == l[j] && (l[k] + l[i]) % 2 == 1 && s[i] != s[j]) return true;
                }
            }
            return false;
    }
    return false;
}

Construction complete_split(const SignedGraph& half) {
    const int h = half.order();
    EdgeBuilder b(2 * h);
    for (Vertex x = 0; x < 2 * h; ++x) {
        for (Vertex y = x + 1; y < 2 * h; ++y) {
            int sign = 1;
            if (y < h) sign = half.adjacent(x, y) ? -1 : 1;
            else if (x >= h) sign = half.adjacent(x - h, y - h) ? 1 : -1;
            b.add(x, y, sign);
        }
    }
    Construction out{b.build(), "complete-split", nlohmann::json::object(), std::nullopt};
    out.parameters["half"] = serialize(half);
    return out;
}

Construction block_construction(const std::vector<std::vector<int>>& bm, const std::vector<std::vector<int>>& cm) {
    const std::size_t d = bm.size();
    check_block(bm, d, "B");
    check_block(cm, d, "C");
    const int di = static_cast<int>(d);
    EdgeBuilder b(2 * di);
    for (int i = 0; i < di; ++i) {
        for (int j = i + 1; j < di; ++j) {
            const int bij = bm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (bij != 0) {
                b.add(i, j, bij);
                b.add(di + i, di + j, -bij);
            }
        }
        for (int j = 0; j < di; ++j) {
            const int cij = cm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            // Upper-right block: row i, column d + j; the lower-left mirrors it.
            if (cij != 0 && i <= j) {
                b.add(i, di + j, cij);
                if (i != j) b.add(j, di + i, cij);
            }
        }
    }
    std::vector<Vertex> swap(2 * d);
    for (int i = 0; i < di; ++i) {
        swap[static_cast<std::size_t>(i)] = di + i;
        swap[static_cast<std::size_t>(di + i)] = i;
    }
    Construction out{b.build(), "block", nlohmann::json::object(), VertexPermutation(std::move(swap))};
    out.parameters["B"] = bm;
    out.parameters["C"] = cm;
    return out;
}

Construction cartesian_product(const SignedGraph& a, const SignedGraph& bg) {
    const int nb = bg.order();
    EdgeBuilder b(a.order() * nb);
    for (Vertex x = 0; x < a.order(); ++x)
        for (const auto& e : bg.edges()) b.add(x * nb + e.u, x * nb + e.v, e.sign);
    for (const auto& e : a.edges())
        for (Vertex y = 0; y < nb; ++y) b.add(e.u * nb + y, e.v * nb + y, e.sign);
    Construction out{b.build(), "cartesian", nlohmann::json::object(), std::nullopt};
    out.parameters["a"] = serialize(a);
    out.parameters["b"] = serialize(bg);
    return out;
}

Construction corona_k1(const SignedGraph& g) {
    const int n = g.order();
    EdgeBuilder b(2 * n);
    for (const auto& e : g.edges()) b.add(e.u, e.v, e.sign);
    for (Vertex v = 0; v < n; ++v) b.add(v, n + v, 1);
    Construction out{b.build(), "corona", nlohmann::json::object(), std::nullopt};
    out.parameters["graph"] = serialize(g);
    return out;
}

Construction link(const SignedGraph& g, Vertex u, std::span<const int> path_signs) {
    check_vertex(g, u, "link vertex");
    if (path_signs.empty()) throw InputError("link path needs at least one edge");
    for (int s : path_signs)
        if (s != 1 && s != -1) throw InputError("path signs must be +1 or -1");
    const int n = g.order();
    EdgeBuilder b(2 * n);
    for (const auto& e : g.edges()) {
        b.add(e.u, e.v, e.sign);
        b.add(n + e.u, n + e.v, -e.sign);
    }
    const auto len = static_cast<int>(path_signs.size());
    std::vector<Vertex> path{u};
    for (int i = 1; i < len; ++i) path.push_back(b.add_vertex());
    path.push_back(n + u);
    for (int i = 0; i < len; ++i) b.add(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i) + 1], path_signs[static_cast<std::size_t>(i)]);

    std::vector<Vertex> swap(static_cast<std::size_t>(b.order()));
    for (Vertex v = 0; v < n; ++v) {
        swap[static_cast<std::size_t>(v)] = n + v;
        swap[static_cast<std::size_t>(n + v)] = v;
    }
    for (int i = 1; i < len; ++i) swap[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])] = path[static_cast<std::size_t>(len - i)];

    Construction out{b.build(), "link", nlohmann::json::object(), VertexPermutation(std::move(swap))};
    out.parameters["graph"] = serialize(g);
    out.parameters["u"] = u;
    out.parameters["path_signs"] = sign_string(path_signs);
    return out;
}

Construction attach(const SignedGraph& g, const VertexPermutation& witness, std::span<const AttachStep> plan) {
    require_weak(g, witness);
    SignedGraph current = g;
    std::vector<Vertex> phi(witness.image().begin(), witness.image().end());
    nlohmann::json steps = nlohmann::json::array();

    for (const auto& step : plan) {
        check_vertex(current, step.u, "attachment vertex");
        check_vertex(step.part, step.part_vertex, "part vertex");
        EdgeBuilder b(current.order());
        for (const auto& e : current.edges()) b.add(e.u, e.v, e.sign);
        nlohmann::json record;
        record["part"] = serialize(step.part);
        record["part_vertex"] = step.part_vertex;

        if (step.kind == AttachStep::Kind::exchangeable_pair) {
            check_vertex(current, step.u_prime, "partner vertex");
            if (step.u == step.u_prime || phi[static_cast<std::size_t>(step.u)] != step.u_prime ||
                phi[static_cast<std::size_t>(step.u_prime)] != step.u)
                throw InputError("vertices " + std::to_string(step.u) + " and " + std::to_string(step.u_prime) +
                                 " are not exchanged by the witness");
            const auto first = b.glue(step.part, step.part_vertex, step.u, 1);
            const auto second = b.glue(step.part, step.part_vertex, step.u_prime, -1);
            phi.resize(static_cast<std::size_t>(b.order()));
            for (Vertex x = 0; x < step.part.order(); ++x) {
                if (x == step.part_vertex) continue;
                phi[static_cast<std::size_t>(first[static_cast<std::size_t>(x)])] = second[static_cast<std::size_t>(x)];
                phi[static_cast<std::size_t>(second[static_cast<std::size_t>(x)])] = first[static_cast<std::size_t>(x)];
            }
            record["step"] = "pair";
            record["u"] = step.u;
            record["u_prime"] = step.u_prime;
        } else {
            if (phi[static_cast<std::size_t>(step.u)] != step.u)
                throw InputError("vertex " + std::to_string(step.u) + " is not fixed by the witness");
            std::optional<VertexPermutation> psi = step.part_witness;
            if (step.part.is_bipartite()) {
                if (!psi) psi = VertexPermutation::identity(step.part.order());
            } else if (!psi) {
                for_each_automorphism(step.part, [&](const VertexPermutation& p) {
                    if (p(step.part_vertex) == step.part_vertex && is_weak_automorphism(step.part, p)) {
                        psi = p;
                        return false;
                    }
                    return true;
                });
                if (!psi) {
                    // Distinguish "not odd-exchangeable" from "x not fixed".
                    bool any_weak = false;
                    for_each_automorphism(step.part, [&](const VertexPermutation& p) {
                        any_weak = is_weak_automorphism(step.part, p);
                        return !any_weak;
                    });
                    throw InputError(any_weak ? "attachment vertex of the part is not fixed by any weak automorphism"
                                              : "part is neither bipartite nor odd-exchangeable");
                }
            }
            require_weak(step.part, *psi);
            if ((*psi)(step.part_vertex) != step.part_vertex)
                throw InputError("part witness does not fix the attachment vertex");
            const auto map = b.glue(step.part, step.part_vertex, step.u, 1);
            phi.resize(static_cast<std::size_t>(b.order()));
            for (Vertex x = 0; x < step.part.order(); ++x) {
                if (x == step.part_vertex) continue;
                phi[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])] = map[static_cast<std::size_t>((*psi)(x))];
            }
            record["step"] = "fixed";
            record["u"] = step.u;
            record["part_witness"] = image_json(*psi);
        }
        current = b.build();
        steps.push_back(std::move(record));
    }

    Construction out{current, "attach", nlohmann::json::object(), VertexPermutation(std::move(phi))};
    out.parameters["graph"] = serialize(g);
    out.parameters["witness"] = image_json(witness);
    out.parameters["plan"] = std::move(steps);
    return out;
}

Construction extend(const SignedGraph& g, const VertexPermutation& witness, Vertex vi, Vertex vj, int sign_choice,
                    std::optional<std::vector<std::pair<Vertex, Vertex>>> tree) {
    check_vertex(g, vi, "v_i");
    check_vertex(g, vj, "v_j");
    if (sign_choice != 1 && sign_choice != -1) throw InputError("sign choice must be +1 or -1");
    if (vi == vj || g.adjacent(vi, vj)) throw InputError("v_i and v_j must be distinct and non-adjacent");
    require_weak(g, witness);
    if (!g.is_connected()) throw InputError("graph is not connected");

    const Vertex wi = witness(vi);
    const Vertex wj = witness(vj);
    const std::set<Vertex> pair{vi, vj};
    const std::set<Vertex> image{wi, wj};
    const std::set<Vertex> back{witness(wi), witness(wj)};
    if (pair == image) throw InputError("the witness maps {v_i, v_j} to itself");
    if (back != pair) throw InputError("the witness does not map {phi(v_i), phi(v_j)} back to {v_i, v_j}");

    SpanningTree t;
    if (tree) {
        std::vector<EdgeId> ids;
        for (auto [a, c] : *tree) {
            auto id = g.edge_id(a, c);
            if (!id) throw InputError("tree edge is not an edge of the graph");
            ids.push_back(*id);
        }
        t = spanning_tree_from_edges(g, ids);
    } else {
        t = spanning_tree(g);
    }
    for (EdgeId e : t.tree_edges) {
        auto img = g.edge_id(witness(g.edge(e).u), witness(g.edge(e).v));
        if (!img || !t.contains(*img)) throw InputError("the witness does not map the spanning tree onto itself");
    }

    const auto path = t.path(vi, vj);
    const auto mirrored = t.path(wi, wj);
    if (path.size() != mirrored.size()) throw InputError("the two new fundamental cycles differ in parity");
    const bool odd = (path.size() + 1) % 2 == 1;
    const int path_sign = edge_set_sign(g, path);
    const int mirrored_sign = edge_set_sign(g, mirrored);
    // sign(B') must equal sign(B) for even B and -sign(B) for odd B.
    const int second = sign_choice * path_sign * mirrored_sign * (odd ? -1 : 1);

    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.push_back({vi, vj, sign_choice});
    edges.push_back({wi, wj, second});

    std::vector<std::pair<Vertex, Vertex>> tree_pairs;
    for (EdgeId e : t.tree_edges) tree_pairs.emplace_back(g.edge(e).u, g.edge(e).v);

    Construction out{SignedGraph(g.order(), std::move(edges)), "extend", nlohmann::json::object(), witness};
    out.parameters["graph"] = serialize(g);
    out.parameters["witness"] = image_json(witness);
    out.parameters["vi"] = vi;
    out.parameters["vj"] = vj;
    out.parameters["sign_choice"] = sign_choice > 0 ? "+" : "-";
    out.parameters["fundamental_cycle_parity"] = odd ? "odd" : "even";
    out.parameters["tree"] = tree_pairs;
    return out;
}

Construction construction_one(std::span<const SignedGraph, 3> trees, int cycle_length) {
    if (cycle_length < 3 || cycle_length % 2 == 0) throw InputError("cycle length must be odd and at least 3");
    for (const auto& t : trees)
        if (t.order() > 0 && !is_tree(t)) throw InputError("attached graphs must be trees");
    const int len = cycle_length;
    EdgeBuilder b(2 * len);
    // v_i = i - 1, v'_i = len + i - 1.
    for (int i = 0; i < len; ++i) {
        const int next = (i + 1) % len;
        b.add(i, next, i == 1 ? -1 : 1);
        b.add(len + i, len + next, 1);
    }
    b.add(0, len, 1);
    for (int i = 1; i <= 3; ++i) {
        const auto& t = trees[static_cast<std::size_t>(i - 1)];
        if (t.order() == 0) continue;
        const Vertex at_first = i - 1;
        const Vertex at_second = len + ((i - 2 + len) % len);
        for (Vertex anchor : {at_first, at_second}) {
            const Vertex root = b.add_vertex();
            b.add(anchor, root, 1);
            std::vector<Vertex> map(static_cast<std::size_t>(t.order()));
            map[0] = root;
            for (Vertex x = 1; x < t.order(); ++x) map[static_cast<std::size_t>(x)] = b.add_vertex();
            for (const auto& e : t.edges())
                b.add(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)], 1);
        }
    }
    Construction out{b.build(), "construction-one", nlohmann::json::object(), std::nullopt};
    out.parameters["cycle_length"] = cycle_length;
    out.parameters["trees"] = nlohmann::json::array();
    for (const auto& t : trees) out.parameters["trees"].push_back(serialize(t));
    return out;
}

}  // namespace sgs
