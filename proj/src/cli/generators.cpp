#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "sgs/cli.hpp"
#include "sgs/error.hpp"

namespace sgs {

namespace {

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty())
        throw InputError(std::string(what) + ": expected an integer, got '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<int> parse_ints(std::string_view text, std::string_view what) {
    std::vector<int> out;
    for (auto part : split(text, ',')) out.push_back(parse_int(part, what));
    return out;
}

int parse_sign(std::string_view text) {
    if (text == "+" || text == "1" || text == "+1") return 1;
    if (text == "-" || text == "-1") return -1;
    throw InputError("sign must be + or -, got '" + std::string(text) + "'");
}

std::vector<int> parse_sign_string(std::string_view text) {
    std::vector<int> out;
    for (char c : text) {
        if (c == '+') out.push_back(1);
        else if (c == '-') out.push_back(-1);
        else throw InputError("path signs must be a string of + and -");
    }
    return out;
}

std::vector<std::vector<int>> parse_matrix(std::string_view text) {
    std::vector<std::vector<int>> rows;
    for (auto row : split(text, ';')) rows.push_back(parse_ints(row, "matrix entry"));
    return rows;
}

VertexPermutation parse_permutation(std::string_view text) { return VertexPermutation(parse_ints(text, "witness")); }

std::vector<std::pair<Vertex, Vertex>> parse_tree(std::string_view text) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (auto part : split(text, ',')) {
        const auto ends = split(part, '-');
        if (ends.size() != 2) throw InputError("tree edges are written u-v, got '" + std::string(part) + "'");
        out.emplace_back(parse_int(ends[0], "tree edge"), parse_int(ends[1], "tree edge"));
    }
    return out;
}

SignedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read graph file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_signed_graph(text.str());
}

BaseBicyclicSpec parse_bicyclic(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw InputError("bicyclic spec is kind:lengths");
    const auto kind = text.substr(0, colon);
    BaseBicyclicSpec spec;
    if (kind == "theta") spec.kind = BicyclicKind::theta;
    else if (kind == "infinity") spec.kind = BicyclicKind::infinity;
    else if (kind == "bowtie") spec.kind = BicyclicKind::bowtie;
    else throw InputError("unknown bicyclic kind '" + std::string(kind) + "'");
    for (auto part : split(text.substr(colon + 1), ',')) {
        const bool negative = !part.empty() && part.back() == '-';
        if (negative) part.remove_suffix(1);
        spec.lengths.push_back(parse_int(part, "length"));
        spec.negative.push_back(negative);
    }
    return spec;
}

/// key=value parameters; each key at most once.
class Params {
public:
    Params(const std::vector<std::string>& raw, std::initializer_list<std::string_view> allowed) {
        for (const auto& p : raw) {
            const auto eq = p.find('=');
            if (eq == std::string::npos) throw InputError("parameters are key=value, got '" + p + "'");
            const auto key = p.substr(0, eq);
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                throw InputError("unknown parameter '" + key + "'");
            if (!values_.emplace(key, p.substr(eq + 1)).second) throw InputError("parameter '" + key + "' given twice");
        }
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::string& get(const std::string& key) const {
        auto it = values_.find(key);
        if (it == values_.end()) throw InputError("missing parameter '" + key + "'");
        return it->second;
    }
    std::string get_or(const std::string& key, std::string fallback) const {
        return has(key) ? get(key) : std::move(fallback);
    }

private:
    std::map<std::string, std::string> values_;
};

Construction with_name(Construction c, std::string name, nlohmann::json extra = nlohmann::json::object()) {
    c.name = std::move(name);
    for (auto& [k, v] : extra.items()) c.parameters[k] = v;
    return c;
}

Construction build_attach(const std::vector<std::string>& raw) {
    std::optional<SignedGraph> g;
    std::optional<VertexPermutation> witness;
    std::vector<AttachStep> steps;
    for (const auto& p : raw) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) throw InputError("parameters are key=value, got '" + p + "'");
        const std::string key = p.substr(0, eq);
        const std::string value = p.substr(eq + 1);
        if (key == "graph") {
            g = graph_from_spec(value);
        } else if (key == "witness") {
            witness = parse_permutation(value);
        } else if (key == "step") {
            AttachStep s;
            if (value == "pair") s.kind = AttachStep::Kind::exchangeable_pair;
            else if (value == "fixed") s.kind = AttachStep::Kind::fixed_vertex;
            else throw InputError("step must be pair or fixed");
            steps.push_back(std::move(s));
        } else {
            if (steps.empty()) throw InputError("'" + key + "' must follow a step=... parameter");
            auto& s = steps.back();
            if (key == "u") s.u = parse_int(value, "u");
            else if (key == "u2") s.u_prime = parse_int(value, "u2");
            else if (key == "part") s.part = graph_from_spec(value);
            else if (key == "at") s.part_vertex = parse_int(value, "at");
            else if (key == "part_witness") s.part_witness = parse_permutation(value);
            else throw InputError("unknown parameter '" + key + "'");
        }
    }
    if (!g || !witness) throw InputError("attach needs graph= and witness=");
    return attach(*g, *witness, steps);
}

}  // namespace

SignedGraph graph_from_spec(std::string_view spec) {
    if (spec == "none") return SignedGraph(0);
    if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'P' || spec[0] == 'C') &&
        spec.find_first_not_of("0123456789", 1) == std::string_view::npos) {
        const int n = parse_int(spec.substr(1), "graph order");
        if (n < 1 || n > 64) throw InputError("graph order out of range");
        std::vector<Edge> edges;
        if (spec[0] == 'K') {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
        } else {
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
            if (spec[0] == 'C') {
                if (n < 3) throw InputError("cycles need at least 3 vertices");
                edges.push_back({0, n - 1, 1});
            }
        }
        return SignedGraph(n, std::move(edges));
    }
    if (spec.starts_with("theta:") || spec.starts_with("infinity:") || spec.starts_with("bowtie:"))
        return base_bicyclic(parse_bicyclic(spec));
    return read_graph_file(std::string(spec));
}

std::vector<std::pair<std::string, std::string>> construction_catalog() {
    return {
        {"base-bicyclic", "spec=theta:1,2-,2 | infinity:3-,3 | bowtie:1,3-,3"},
        {"complete-split", "half=GRAPH"},
        {"block", "B=rows C=rows  (rows 0,1;1,0)"},
        {"cartesian", "a=GRAPH b=GRAPH"},
        {"corona", "graph=GRAPH"},
        {"link", "graph=GRAPH u=VERTEX [path=+]"},
        {"attach", "graph=GRAPH witness=IMAGE {step=pair u= u2= part=GRAPH at= | step=fixed u= part=GRAPH at= [part_witness=]}"},
        {"extend", "graph=GRAPH witness=IMAGE vi= vj= [sign=+] [tree=u-v,...]"},
        {"construction-one", "[t1=K1] [t2=K1] [t3=K1] [cycle=3]"},
        {"extend-infinity-33", "(no parameters) the extension of infinity(v3;3-,3) adding v1v4, v2v5"},
    };
}

Construction build_construction(std::string_view name, const std::vector<std::string>& params) {
    if (name == "base-bicyclic") {
        Params p(params, {"spec"});
        const auto spec = parse_bicyclic(p.get("spec"));
        return {base_bicyclic(spec), "base-bicyclic", {{"spec", p.get("spec")}}, std::nullopt};
    }
    if (name == "complete-split") {
        Params p(params, {"half"});
        return with_name(complete_split(graph_from_spec(p.get("half"))), "complete-split", {{"half_spec", p.get("half")}});
    }
    if (name == "block") {
        Params p(params, {"B", "C"});
        return block_construction(parse_matrix(p.get("B")), parse_matrix(p.get("C")));
    }
    if (name == "cartesian") {
        Params p(params, {"a", "b"});
        return cartesian_product(graph_from_spec(p.get("a")), graph_from_spec(p.get("b")));
    }
    if (name == "corona") {
        Params p(params, {"graph"});
        return corona_k1(graph_from_spec(p.get("graph")));
    }
    if (name == "link") {
        Params p(params, {"graph", "u", "path"});
        const auto signs = parse_sign_string(p.get_or("path", "+"));
        return link(graph_from_spec(p.get("graph")), parse_int(p.get("u"), "u"), signs);
    }
    if (name == "attach") return build_attach(params);
    if (name == "extend") {
        Params p(params, {"graph", "witness", "vi", "vj", "sign", "tree"});
        std::optional<std::vector<std::pair<Vertex, Vertex>>> tree;
        if (p.has("tree")) tree = parse_tree(p.get("tree"));
        return extend(graph_from_spec(p.get("graph")), parse_permutation(p.get("witness")), parse_int(p.get("vi"), "vi"),
                      parse_int(p.get("vj"), "vj"), parse_sign(p.get_or("sign", "+")), tree);
    }
    if (name == "construction-one") {
        Params p(params, {"t1", "t2", "t3", "cycle"});
        const std::array<SignedGraph, 3> trees{graph_from_spec(p.get_or("t1", "K1")), graph_from_spec(p.get_or("t2", "K1")),
                                               graph_from_spec(p.get_or("t3", "K1"))};
        return construction_one(trees, parse_int(p.get_or("cycle", "3"), "cycle"));
    }
    if (name == "extend-infinity-33") {
        Params p(params, {});
        // v3 = 0, v1 = 1, v2 = 2, v4 = 3, v5 = 4; phi = (v1 v5)(v2 v4)(v3),
        // T = the path v1 v2 v3 v4 v5, which phi maps onto itself.
        const auto base = base_bicyclic(parse_bicyclic("infinity:3-,3"));
        const std::vector<std::pair<Vertex, Vertex>> tree{{1, 2}, {2, 0}, {0, 3}, {3, 4}};
        return with_name(extend(base, VertexPermutation({0, 4, 3, 2, 1}), 1, 3, 1, tree), "extend-infinity-33",
                         {{"labels", {{"v1", 1}, {"v2", 2}, {"v3", 0}, {"v4", 3}, {"v5", 4}}}});
    }
    throw InputError("unknown construction '" + std::string(name) + "'");
}

}  // namespace sgs
