#pragma once

#include <optional>
#include <ostream>
#include <string>

// Subcommands of the tetrabox tool. Each returns the process exit code and
// writes its JSON report to `out`, diagnostics to `err`.
namespace tetrabox::cli {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// 0 success, 1 reducible or wrong-type input, 2 unreadable or invalid spec.
int cmd_build(const std::string& spec_path, const std::optional<std::string>& out_path, Streams io);
/// 0 when every check passes, 1 otherwise, 2 on unreadable input.
int cmd_verify(const std::string& module_path, bool deep, Streams io);
int cmd_classify(const std::string& spec_path, Streams io);
/// 0 isomorphic, 1 not, 2 reducible or unreadable input, 3 oracle disagrees with the criterion.
int cmd_compare(const std::string& spec1, const std::string& spec2, bool oracle, Streams io);
int cmd_inspect(const std::string& module_path, bool flags, bool table, Streams io);

int run(int argc, const char* const* argv, Streams io);

}  // namespace tetrabox::cli
