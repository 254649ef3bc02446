#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "succoef/classes.hpp"
#include "succoef/report.hpp"
#include "succoef/verify.hpp"

namespace succoef::cli {

enum ExitStatus : int { exit_pass = 0, exit_failure = 1, exit_usage = 2 };

/// Parses a real or a multiple of pi: "0.25", "-pi/3", "2pi/3", "2*pi/3", "1/4".
/// Throws std::invalid_argument on malformed text.
double parse_real(std::string_view text);

/// A lattice value with the text it was given as (kept for the report).
struct LatticeValue {
  std::string text;
  double value;
};

/// "start:stop:count" (count evenly spaced values, endpoints included) or a
/// comma-separated list. A count of 0 or an empty string yields no values.
std::vector<LatticeValue> parse_lattice(std::string_view text);

struct RunConfig {
  std::string command;
  std::string family = "spirallike";
  std::string alpha = "0";
  std::string gamma = "0";
  std::string lambda = "1";
  GridSize grid;
  std::size_t order = default_order;
  double tol = 0.001;
  std::uint64_t seed = 1;
  int samples = 500;
  int atoms = 4;
  std::string alphas;  // sweep lattices; empty means the single value above
  std::string gammas;
  std::string lambdas;
  std::string out;
  report::Format format = report::Format::table;
};

/// Family name and parameter strings turned into validated ClassParams.
ClassParams class_params(std::string_view family, double alpha, double gamma, double lambda);
ClassParams class_params(const RunConfig& config);

struct CommandResult {
  report::Table table;
  bool passed = true;
};

CommandResult cmd_bounds(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_sweep(const RunConfig& config);
CommandResult cmd_extremal(const RunConfig& config);
CommandResult cmd_sample(const RunConfig& config);

/// Full command line entry point. Exit status 0 pass, 1 verification
/// failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace succoef::cli
