#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cliquemin {

struct RunConfig {
  std::string command;
  std::optional<long> n;
  std::optional<std::string> beta;  // "p/q"
  std::optional<int> r;
  std::optional<int> delta;
  std::optional<int> p;
  std::vector<std::pair<int, int>> pairs;  // (t, s)
  std::uint64_t seed = 1;
  long trials = 100;
  int threshold = 8;         // exhaustive graph search
  int inner_threshold = 10;  // inner-graph searches of the construction
  std::string suite = "all";
  std::string mode = "exactly";  // or "at-least"
  std::string graph;             // graph6 or edge-list file
  bool construct = false;
  std::string resolution = "1/10000";
  std::string format = "text";  // json, csv or text
  std::string output;           // empty: standard output
};

/// Exit codes: 0 when no check was violated, 1 on a violation, 2 on a
/// parse, input or domain error (message on err).
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

/// Runs one command and writes its report once, to config.output or `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line into a RunConfig and runs it.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cliquemin
