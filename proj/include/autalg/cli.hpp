#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "autalg/derivation.hpp"

namespace autalg {

/// Bad flags, unparsable expressions, wrong arity and the like: exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct JobSpec {
  std::string command;
  std::string algebra = "comm";  // comm | free
  std::vector<std::string> vars;  // empty: x, y, z, ... by input count
  bool fix_z = false;
  std::string field = "q";  // q | q(z)
  std::string order = "deglex";
  std::vector<std::string> exprs;
  /// Rows separated by ';', entries by ','.
  std::string matrix;
  std::string format = "json";
  unsigned cap = kDefaultExpCap;
  /// example: which one; sigma-h reads h from exprs, omega-m reads m.
  std::string example;
  unsigned m = 1;
  /// exp-derivation / smith-check: the kernel element w in w*delta.
  std::string w;
  /// eval-word: generator list as emitted by the check commands.
  nlohmann::json word;
};

/// Fields present in `j` override `base`; used for piped input.
JobSpec job_from_json(const nlohmann::json& j, JobSpec base = {});
nlohmann::json job_to_json(const JobSpec& job);

struct RunResult {
  int exit_code = 0;
  nlohmann::json out;
};

/// Dispatches one job. Throws InputError on malformed jobs.
RunResult run(const JobSpec& job);

/// Plain-text rendering of a result object.
std::string render_text(const nlohmann::json& out);

}  // namespace autalg
