#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "delpezzo/report.hpp"

namespace delpezzo::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kRefused = 3,
};

/// Parsed input file: {"kind": ..., "coefficients": ["p/q", ...], "params": {...}}.
struct SurfaceInput {
  std::string kind;                    ///< dp4-pencil, diagonal-cubic, quad-pair, pic-rank-one
  std::vector<Rat> coefficients;
  Json params = Json::object();

  /// Checks kind-specific arity. Throws InputError.
  static SurfaceInput from_json(const Json& j);
};

struct Options {
  bool json = false;
  std::uint64_t budget = 0;            ///< 0: environment override or the library default
  std::uint64_t seed = 1;
  std::optional<unsigned> kmax;
  std::optional<unsigned> fmax;
};

struct Outcome {
  Report report;
  int exit_code = kOk;
};

/// Runs one verification command on parsed input. Throws the library's
/// exception types; run() maps them to exit codes.
Outcome dispatch(const std::string& group, const std::string& action, const SurfaceInput& input,
                 const Options& options);

/// Full command line (argv[0] included). Writes the report to out and
/// diagnostics to err; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delpezzo::cli
