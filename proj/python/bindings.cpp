#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "sgs/census.hpp"
#include "sgs/cli.hpp"
#include "sgs/constructions.hpp"
#include "sgs/cycle_space.hpp"
#include "sgs/error.hpp"
#include "sgs/polynomials.hpp"
#include "sgs/report.hpp"
#include "sgs/spectral.hpp"
#include "sgs/symmetry.hpp"
#include "sgs/verify.hpp"

namespace py = pybind11;
using namespace sgs;

namespace {

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::list coefficients(const IntPolynomial& p) {
    py::list out;
    for (const auto& c : p.coefficient_strings()) out.append(py::int_(py::str(c)));
    return out;
}

std::vector<std::tuple<int, int, int>> edge_tuples(const SignedGraph& g) {
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.sign);
    return out;
}

SignedGraph make_graph(int n, const std::vector<std::tuple<int, int, int>>& edges) {
    std::vector<Edge> list;
    for (const auto& [u, v, s] : edges) list.push_back({u, v, s});
    return SignedGraph(n, std::move(list));
}

std::vector<Vertex> image_of(const VertexPermutation& p) { return {p.image().begin(), p.image().end()}; }

BicyclicKind kind_of(const std::string& name) {
    if (name == "theta") return BicyclicKind::theta;
    if (name == "infinity") return BicyclicKind::infinity;
    if (name == "bowtie") return BicyclicKind::bowtie;
    throw InputError("unknown bicyclic kind '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact spectral-symmetry tests for signed graphs";
    m.attr("__version__") = kToolVersion;

    auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    (void)input_error;

    py::class_<SignedGraph>(m, "SignedGraph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::tuple<int, int, int>>{},
             "Graph on 0..n-1 from (u, v, sign) triples.")
        .def_static("parse", [](const std::string& text) { return parse_signed_graph(text); })
        .def_static("from_spec", [](const std::string& spec) { return graph_from_spec(spec); },
                    "K5, P4, C6, theta:1,2-,2, infinity:3-,3, bowtie:1,3-,3 or a file path.")
        .def("to_text", [](const SignedGraph& g) { return serialize(g); })
        .def_property_readonly("n", &SignedGraph::order)
        .def_property_readonly("m", &SignedGraph::size)
        .def_property_readonly("edges", &edge_tuples)
        .def("sign", &SignedGraph::sign)
        .def("is_connected", &SignedGraph::is_connected)
        .def("is_bipartite", &SignedGraph::is_bipartite)
        .def("switch", [](const SignedGraph& g, std::vector<Vertex> u) { return switching(g, SwitchSet(std::move(u))); })
        .def("negate", [](const SignedGraph& g) { return negate(g); })
        .def("permute", [](const SignedGraph& g, std::vector<Vertex> image) {
            return apply_permutation(g, VertexPermutation(std::move(image)));
        })
        .def("__eq__", [](const SignedGraph& a, const SignedGraph& b) { return a == b; })
        .def("__hash__", [](const SignedGraph& g) { return py::hash(py::str(serialize(g))); })
        .def("__repr__", [](const SignedGraph& g) {
            return "SignedGraph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    m.def("char_poly", [](const SignedGraph& g) { return coefficients(char_poly(g)); },
          "det(xI - A), coefficients lowest degree first.");
    m.def("matching_poly", [](const SignedGraph& g) { return coefficients(matching_poly(g)); });
    m.def("odd_part", [](const SignedGraph& g) { return coefficients(odd_part(g)); });
    m.def("two_regular_expansion", [](const SignedGraph& g) { return coefficients(two_regular_expansion(g)); });
    m.def("sachs_coefficients", [](const SignedGraph& g) {
        py::list out;
        for (const auto& a : sachs_coefficients(g)) out.append(py::int_(py::str(a.get_str())));
        return out;
    }, "a_0..a_n from basic figures.");
    m.def("is_spectrally_symmetric", &is_spectrally_symmetric);

    m.def("eigenvalues", [](const SignedGraph& g) { return eigenvalues(g).values; }, "Descending.");
    m.def("numeric_symmetry_check", [](std::vector<double> values, double tolerance) {
        return numeric_symmetry_check({std::move(values), tolerance});
    }, py::arg("values"), py::arg("tolerance") = kDefaultPairingTolerance);

    m.def("cycle_sign_vector", [](const SignedGraph& g) {
        const auto v = cycle_sign_vector(g, spanning_forest(g));
        return std::vector<int>(v.begin(), v.end());
    });
    m.def("automorphisms", [](const SignedGraph& g) {
        std::vector<std::vector<Vertex>> out;
        for (const auto& p : automorphisms(g)) out.push_back(image_of(p));
        return out;
    });
    m.def("is_weak_automorphism", [](const SignedGraph& g, std::vector<Vertex> image) {
        return is_weak_automorphism(g, VertexPermutation(std::move(image)));
    });
    m.def("spanning_cycle_criterion", [](const SignedGraph& g, std::vector<Vertex> image) {
        return spanning_cycle_criterion(g, VertexPermutation(std::move(image)));
    });
    m.def("is_sign_symmetric", [](const SignedGraph& g) -> std::optional<std::vector<Vertex>> {
        const auto w = is_sign_symmetric(g);
        if (!w) return std::nullopt;
        return image_of(*w);
    }, "A switching witness as an image list, or None.");
    m.def("classify", [](const SignedGraph& g, bool allow_undecided) { return from_json(to_json(classify(g, allow_undecided))); },
          py::arg("g"), py::arg("allow_undecided") = false);
    m.def("census", [](const SignedGraph& g, int max_k) { return from_json(to_json(census(g, max_k))); },
          py::arg("g"), py::arg("max_k") = kDefaultCensusMaxK);
    m.def("switching_classes", [](const SignedGraph& g, int max_k) { return enumerate_signatures(g, max_k); },
          py::arg("g"), py::arg("max_k") = kDefaultCensusMaxK);

    m.def("base_bicyclic", [](const std::string& kind, std::vector<int> lengths, std::vector<bool> negative) {
        return base_bicyclic({kind_of(kind), std::move(lengths), std::move(negative)});
    }, py::arg("kind"), py::arg("lengths"), py::arg("negative") = std::vector<bool>{});
    m.def("bicyclic_family_membership", &bicyclic_family_membership);

    m.def("construct", [](const std::string& name, const py::dict& params) {
        std::vector<std::string> raw;
        for (const auto& [k, v] : params) raw.push_back(py::str(k).cast<std::string>() + "=" + py::str(v).cast<std::string>());
        const auto c = build_construction(name, raw);
        return py::make_tuple(c.graph, from_json(certificate_json(c)));
    }, py::arg("name"), py::arg("params") = py::dict(), "Returns (graph, certificate).");
    m.def("constructions", [] { return construction_catalog(); });

    m.def("suite_names", &suite_names);
    m.def("verify", [](const std::string& name) { return from_json(to_json(verify_suite(name))); });
}
