// Command-line front end: triangle | verify | eval.

#ifndef NCSTIRLING_TOOLS_CLI_HPP
#define NCSTIRLING_TOOLS_CLI_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncstirling/exact.hpp"
#include "ncstirling/noncentral.hpp"

namespace ncs::cli {

enum class Format { kJson, kCsv };

struct RunConfig {
  std::string subcommand;
  std::size_t n_max = 0;
  Format format = Format::kJson;
  std::string out_path;  // empty: standard output
  std::uint64_t seed = 0;
  double tolerance = 1e-6;
  bool with_oracle = false;
  Construction construction = Construction::kRecurrence;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<Rational> alpha;
  std::optional<double> beta;
  std::optional<double> x0;
  /// Test hook: add 1 to coefficient (n, k, power) of the recurrence
  /// triangle before verification.
  std::optional<std::array<std::size_t, 3>> corrupt;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int cmd_triangle(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncs::cli

#endif  // NCSTIRLING_TOOLS_CLI_HPP
