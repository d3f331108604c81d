#include "sgs/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sgs/census.hpp"
#include "sgs/error.hpp"
#include "sgs/polynomials.hpp"
#include "sgs/report.hpp"
#include "sgs/spectral.hpp"
#include "sgs/symmetry.hpp"
#include "sgs/verify.hpp"

namespace sgs {

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream text;
    if (path == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InputError("cannot read '" + path + "'");
        text << in.rdbuf();
    }
    return text.str();
}

json envelope(const std::string& command, std::string_view input, json result) {
    return {{"tool_version", kToolVersion},
            {"command", command},
            {"input_hash", input_hash(input)},
            {"result", std::move(result)}};
}

std::string fixed(double x, int digits) {
    if (std::fabs(x) < 0.5 * std::pow(10.0, -digits)) x = 0.0;
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "undecided"; }

template <class F>
std::optional<std::invoke_result_t<F>> within_caps(F&& f) {
    try {
        return f();
    } catch (const ResourceLimitError&) {
        return std::nullopt;
    }
}

int cmd_analyze(const std::string& file, bool as_json, std::ostream& out) {
    const auto input = read_input(file);
    const auto g = parse_signed_graph(input);
    const auto phi = char_poly(g);
    const auto matching = within_caps([&] { return matching_poly(g); });
    const auto odd = within_caps([&] { return odd_part(g); });
    const auto verdict = classify(g, true);
    const auto spectrum = eigenvalues(g);
    const int components = static_cast<int>(g.components().size());
    const int k = g.size() - g.order() + components;

    if (as_json) {
        json r;
        r["graph"] = graph_json(g);
        r["connected"] = components == 1;
        r["bipartite"] = g.is_bipartite();
        r["cyclomatic_number"] = k;
        r["char_poly"] = to_json(phi);
        r["matching_poly"] = matching ? to_json(*matching) : json(nullptr);
        r["odd_part"] = odd ? to_json(*odd) : json(nullptr);
        r["verdict"] = to_json(verdict);
        r["spectrum"] = to_json(spectrum);
        out << envelope("analyze", input, std::move(r)).dump(2) << '\n';
        return exit_code::ok;
    }
    out << "vertices " << g.order() << ", edges " << g.size() << ", cyclomatic number " << k << ", "
        << (components == 1 ? "connected" : std::to_string(components) + " components") << ", "
        << (g.is_bipartite() ? "bipartite" : "not bipartite") << '\n';
    out << "char_poly: " << phi.to_string() << '\n';
    out << "matching_poly: " << (matching ? matching->to_string() : "undecided (cap)") << '\n';
    out << "odd_part: " << (odd ? odd->to_string() : "undecided (cap)") << '\n';
    out << "spectrally_symmetric: " << (verdict.spectrally_symmetric ? "true" : "false") << '\n';
    out << "sign_symmetric: " << yes_no(verdict.sign_symmetric);
    if (verdict.switching_witness) out << " (automorphism " << verdict.switching_witness->to_cycle_string() << ")";
    out << '\n';
    out << "odd_exchangeable: " << yes_no(verdict.odd_exchangeable);
    if (verdict.witness) out << " (weak automorphism " << verdict.witness->to_cycle_string() << ")";
    out << '\n';
    out << "automorphisms: " << (verdict.automorphism_count ? std::to_string(*verdict.automorphism_count) : "undecided")
        << '\n';
    out << "spectrum:";
    for (double x : spectrum.values) out << ' ' << fixed(x, 4);
    out << '\n';
    for (const auto& f : verdict.findings) out << "FINDING: " << f << '\n';
    return exit_code::ok;
}

int cmd_census(const std::string& file, bool as_json, int max_k, std::ostream& out) {
    const auto input = read_input(file);
    const auto g = parse_signed_graph(input);
    if (max_k < 0 || max_k > kMaxCyclomaticNumber)
        throw InputError("--max-k must lie in 0.." + std::to_string(kMaxCyclomaticNumber));
    const auto report = census(g, max_k);
    if (as_json) {
        out << envelope("census", input, to_json(report)).dump(2) << '\n';
        return exit_code::ok;
    }
    out << "underlying graph: " << report.underlying.order() << " vertices, " << report.underlying.size()
        << " edges, k = " << report.k << ", " << report.classes.size() << " switching classes\n";
    out << "cotree edges:";
    for (EdgeId e : report.tree.cotree_edges)
        out << ' ' << report.underlying.edge(e).u << '-' << report.underlying.edge(e).v;
    out << "\n\nmask  cotree  t  spectral  sign-sym   odd-exch   witness\n";
    for (const auto& c : report.classes) {
        out << std::left << std::setw(6) << c.mask << std::setw(8) << (c.cotree_signs.empty() ? "-" : c.cotree_signs)
            << std::setw(3) << c.negative_cycles << std::setw(10)
            << (c.verdict.spectrally_symmetric ? "true" : "false") << std::setw(11) << yes_no(c.verdict.sign_symmetric)
            << std::setw(11) << yes_no(c.verdict.odd_exchangeable)
            << (c.verdict.witness ? c.verdict.witness->to_cycle_string() : "-") << '\n';
        for (const auto& f : c.verdict.findings) out << "      FINDING: " << f << '\n';
    }
    out << std::right << "\nstrata (t: classes):";
    for (std::size_t t = 0; t < report.strata.size(); ++t) out << ' ' << t << ':' << report.strata[t];
    out << "\nsummary:\n";
    for (const auto& [key, count] : report.summary)
        out << "  spectrally_symmetric=" << (key.first ? "true" : "false") << " sign_symmetric=" << yes_no(key.second)
            << ": " << count << '\n';
    return exit_code::ok;
}

int cmd_construct(const std::string& name, const std::vector<std::string>& params, const std::string& output,
                  const std::string& cert_file, bool list, std::ostream& out) {
    if (list) {
        for (const auto& [n, usage] : construction_catalog()) out << std::left << std::setw(20) << n << usage << '\n';
        return exit_code::ok;
    }
    if (name.empty()) throw InputError("construct needs a generator name (see --list)");
    const auto c = build_construction(name, params);
    std::string invocation = name;
    for (const auto& p : params) invocation += ' ' + p;
    const auto cert = envelope("construct", invocation, certificate_json(c)).dump(2);
    const auto text = serialize(c.graph);
    const auto write = [](const std::string& path, const std::string& body) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw InputError("cannot write '" + path + "'");
        f << body;
    };
    if (!cert_file.empty()) write(cert_file, cert + '\n');
    if (output.empty()) {
        out << text;
    } else {
        write(output, text);
        out << cert << '\n';
    }
    return exit_code::ok;
}

int cmd_verify(const std::string& suite, bool as_json, std::ostream& out) {
    std::vector<std::string> names;
    if (suite == "all") names = suite_names();
    else names.push_back(suite);
    json reports = json::array();
    bool all_passed = true;
    for (const auto& n : names) {
        const auto r = verify_suite(n);
        all_passed = all_passed && r.passed;
        if (as_json) {
            reports.push_back(to_json(r));
            continue;
        }
        out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.name << std::right << std::setw(9)
            << r.cases << " cases " << std::fixed << std::setprecision(1) << std::setw(7) << r.seconds << " s  ("
            << r.scope << ")\n";
        for (const auto& note : r.notes) out << "     note: " << note << '\n';
        if (!r.passed) {
            out << "     failure: " << r.detail << '\n';
            if (r.counterexample) out << "     counterexample:\n" << *r.counterexample;
        }
        out.flush();
    }
    if (as_json) {
        json result{{"passed", all_passed}, {"suites", std::move(reports)}};
        out << envelope("verify", suite, std::move(result)).dump(2) << '\n';
    }
    return all_passed ? exit_code::ok : exit_code::suite_failure;
}

int cmd_spectrum(const std::string& file, int digits, bool as_json, std::ostream& out) {
    if (digits < 0 || digits > 17) throw InputError("--digits must lie in 0..17");
    const auto input = read_input(file);
    const auto g = parse_signed_graph(input);
    const auto s = eigenvalues(g);
    if (as_json) {
        out << envelope("spectrum", input, to_json(s)).dump(2) << '\n';
        return exit_code::ok;
    }
    for (std::size_t i = 0; i < s.values.size(); ++i) out << (i ? " " : "") << fixed(s.values[i], digits);
    out << '\n';
    return exit_code::ok;
}

}  // namespace

std::string input_hash(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream hex;
    hex << "sha256:" << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < length; ++i) hex << std::setw(2) << static_cast<int>(digest[i]);
    return hex.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral symmetry toolkit for signed graphs", "sgs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string file;
    bool as_json = false;
    int max_k = kDefaultCensusMaxK;
    int digits = 4;
    std::string name;
    std::vector<std::string> params;
    std::string output;
    std::string cert_file;
    bool list = false;
    std::string suite;

    auto* analyze = app.add_subcommand("analyze", "Polynomials, symmetry verdict and spectrum of a signed graph");
    analyze->add_option("file", file, "graph file ('-' for stdin)")->required();
    analyze->add_flag("--json", as_json, "emit a JSON report");

    auto* census_cmd = app.add_subcommand("census", "Classify every switching class of the underlying graph");
    census_cmd->add_option("file", file, "graph file ('-' for stdin)")->required();
    census_cmd->add_flag("--json", as_json, "emit a JSON report");
    census_cmd->add_option("--max-k", max_k, "largest cyclomatic number to enumerate")->capture_default_str();

    auto* construct = app.add_subcommand("construct", "Build a graph from a named generator");
    construct->add_option("name", name, "generator name");
    construct->add_option("params", params, "key=value parameters");
    construct->add_option("-o,--output", output, "write the graph here and the certificate to stdout");
    construct->add_option("--cert", cert_file, "also write the JSON certificate to this file");
    construct->add_flag("--list", list, "list generators and their parameters");

    auto* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_flag("--json", as_json, "emit a JSON report");

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the signed adjacency matrix");
    spectrum->add_option("file", file, "graph file ('-' for stdin)")->required();
    spectrum->add_option("--digits", digits, "decimal places")->capture_default_str();
    spectrum->add_flag("--json", as_json, "emit full-precision JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::input_error;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(file, as_json, out);
        if (census_cmd->parsed()) return cmd_census(file, as_json, max_k, out);
        if (construct->parsed()) return cmd_construct(name, params, output, cert_file, list, out);
        if (verify->parsed()) {
            if (suite != "all") {
                const auto names = suite_names();
                if (std::find(names.begin(), names.end(), suite) == names.end())
                    throw InputError("unknown suite '" + suite + "'");
            }
            return cmd_verify(suite, as_json, out);
        }
        if (spectrum->parsed()) return cmd_spectrum(file, digits, as_json, out);
    } catch (const ResourceLimitError& e) {
        err << "sgs: resource limit: " << e.what() << '\n';
        return exit_code::resource_cap;
    } catch (const InputError& e) {
        err << "sgs: " << e.what() << '\n';
        return exit_code::input_error;
    }
    return exit_code::input_error;
}

}  // namespace sgs
