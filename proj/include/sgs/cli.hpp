#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgs/constructions.hpp"

namespace sgs {

inline constexpr const char* kToolVersion = "0.1.0";

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int suite_failure = 1;
inline constexpr int input_error = 2;
inline constexpr int resource_cap = 3;
}  // namespace exit_code

/// The `sgs` command line, writing to the given streams instead of the
/// process ones. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Builds a named generator from key=value parameters.
Construction build_construction(std::string_view name, const std::vector<std::string>& params);
/// (name, usage) for every generator.
std::vector<std::pair<std::string, std::string>> construction_catalog();

/// Graph from a short spec: K<n>, P<n>, C<n>, none, theta:l1,l2,l3,
/// infinity:l1,l2, bowtie:l,l1,l2 (a trailing '-' on a length marks one
/// negative edge), or else a path to a graph file.
SignedGraph graph_from_spec(std::string_view spec);

/// "sha256:" followed by the hex digest of the bytes.
std::string input_hash(std::string_view bytes);

}  // namespace sgs
