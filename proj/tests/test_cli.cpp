#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sgs/cli.hpp"
#include "support.hpp"

using namespace sgs;
using namespace sgs::test;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("sgs-test-" + std::to_string(std::random_device{}()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name, const std::string& text) const {
        const auto p = path_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const char* kInfinity = "5 6\n0 1 -\n0 2 +\n0 3 +\n0 4 +\n1 2 +\n3 4 +\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze") {
    TempDir dir;
    const auto file = dir.file("inf.sg", kInfinity);
    const auto text = run({"analyze", file});
    CHECK(text.code == 0);
    CHECK(text.out.find("spectrally_symmetric") != std::string::npos);

    const auto r = run({"analyze", file, "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["tool_version"] == kToolVersion);
    CHECK(j["command"] == "analyze");
    CHECK(j["input_hash"] == input_hash(kInfinity));
    const auto& res = j["result"];
    CHECK(res["char_poly"] == json::array({"0", "5", "0", "-6", "0", "1"}));
    CHECK(res["odd_part"] == json::array());
    CHECK(res["verdict"]["spectrally_symmetric"] == true);
    CHECK(res["verdict"]["sign_symmetric"] == true);
    CHECK(res["verdict"]["odd_exchangeable"] == true);
    CHECK(res["verdict"]["automorphism_count"] == 8);
    CHECK(res["verdict"]["witness"].is_array());
    CHECK(res["spectrum"]["values"].size() == 5);
}

TEST_CASE("input hash") {
    CHECK(input_hash("") == "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("spectrum") {
    TempDir dir;
    const auto file = dir.file("c4.sg", "4 4\n0 1 +\n0 3 +\n1 2 +\n2 3 +\n");
    const auto r = run({"spectrum", file});
    CHECK(r.code == 0);
    CHECK(r.out == "2.0000 0.0000 0.0000 -2.0000\n");
    CHECK(run({"spectrum", file, "--digits", "2"}).out == "2.00 0.00 0.00 -2.00\n");
    const auto j = json::parse(run({"spectrum", file, "--json"}).out);
    CHECK(j["result"]["values"][0].get<double>() == doctest::Approx(2.0));
    CHECK(j["result"]["numerically_symmetric"] == true);
}

TEST_CASE("census") {
    TempDir dir;
    const auto file = dir.file("k4.sg", serialize(complete(4)));
    const auto a = run({"census", file, "--json"});
    REQUIRE(a.code == 0);
    const auto j = json::parse(a.out);
    CHECK(j["result"]["classes"].size() == 8);
    CHECK(j["result"]["strata"] == json::array({1, 3, 3, 1}));
    CHECK(run({"census", file, "--json"}).out == a.out);
    CHECK(run({"census", file, "--max-k", "2"}).code == exit_code::resource_cap);
    CHECK(run({"census", dir.file("split.sg", "3 1\n0 1 +\n")}).code == exit_code::input_error);
}

TEST_CASE("construct") {
    TempDir dir;
    const auto out = dir.path("ext.sg");
    const auto r = run({"construct", "extend-infinity-33", "-o", out});
    REQUIRE(r.code == 0);
    CHECK(slurp(out) == "5 8\n0 1 -\n0 2 +\n0 3 +\n0 4 +\n1 2 +\n1 3 +\n2 4 +\n3 4 +\n");
    const auto cert = json::parse(r.out)["result"];
    CHECK(cert["construction"] == "extend-infinity-33");
    CHECK(cert["witness_permutation"] == json::array({0, 4, 3, 2, 1}));
    CHECK(cert["parameters"].is_object());

    const auto plain = run({"construct", "complete-split", "half=P2"});
    CHECK(plain.code == 0);
    CHECK(plain.out.rfind("4 6\n", 0) == 0);

    CHECK(run({"construct", "--list"}).code == 0);
    CHECK(run({"construct", "no-such-thing"}).code == exit_code::input_error);
    CHECK(run({"construct", "link", "graph=C3"}).code == exit_code::input_error);
    CHECK(run({"construct", "block", "B=1", "C=0"}).code == exit_code::input_error);
}

TEST_CASE("input errors") {
    TempDir dir;
    CHECK(run({"analyze", dir.path("missing.sg")}).code == exit_code::input_error);
    CHECK(run({"analyze", dir.file("dup.sg", "3 2\n0 1 +\n0 1 -\n")}).code == exit_code::input_error);
    CHECK(run({"frobnicate"}).code == exit_code::input_error);
    CHECK(run({}).code == exit_code::input_error);
    CHECK(run({"verify", "nope"}).code == exit_code::input_error);
    CHECK(run({"--help"}).code == exit_code::ok);
}

TEST_CASE("verify") {
    const auto r = run({"verify", "counts"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS counts", 0) == 0);
    const auto j = json::parse(run({"verify", "bicyclic", "--json"}).out);
    CHECK(j["result"]["passed"] == true);
}

}
