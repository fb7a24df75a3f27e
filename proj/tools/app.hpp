#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fuzzytorus/clockshift.hpp"
#include "fuzzytorus/dirac.hpp"
#include "fuzzytorus/qroots.hpp"

namespace fuzzytorus::cli {

enum class Command { Spectrum, Laplace, Verify, OracleCompare, Sectors, Figure };

enum ExitCode : int { kOk = 0, kComputeError = 1, kConfigError = 2, kVerifyFailure = 3 };

struct RunConfig {
  Command command = Command::Spectrum;
  int n = 4;
  int k = 1;
  Branch half_branch = Branch::Plus;
  bool half_branch_given = false;
  Branch quarter_branch = Branch::Plus;
  IntegerMetric metric;
  bool normalize = false;
  std::optional<SpinStructure> sigma;
  std::optional<SpinStructure> chi;
  std::optional<int> window;
  double bin_width = 2.0;
  int count = 20;
  std::string format = "csv";
  bool oracle = false;
  std::string out;
  std::string figure = "surface";
  std::string op = "dirac";
  double tolerance = 1e-9;
};

// Parses "a,b,c,d" or the Hermite triple "a,c,d".
IntegerMetric parse_metric(const std::string& text);

// Parses "h,j" into two bits.
SpinStructure parse_bits(const std::string& text);

// Parses argv-style arguments (without the program name).  Throws Error with
// kind InvalidArgument, or CLI::Error, on malformed input.
RunConfig parse_args(const std::vector<std::string>& args);

// Root of the config: default_root(n, k) unless a half branch was given.
RootOfUnity config_root(const RunConfig& config);

// Runs one command; returns the process exit code.  Errors are written to err
// as a JSON object.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses and runs; parse failures return kConfigError.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 17 significant digits, with -0 printed as 0.
std::string format_number(double value);

}  // namespace fuzzytorus::cli
