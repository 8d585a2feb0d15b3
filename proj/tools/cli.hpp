#ifndef DZETA_TOOLS_CLI_HPP
#define DZETA_TOOLS_CLI_HPP

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "dzeta/double_zeta.hpp"

namespace dzeta::cli {

enum ExitCode { kOk = 0, kNumericFailure = 1, kUsage = 2 };

/// Bad flags or arguments; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  double lo;
  double hi;
  std::optional<double> step;
};

/// "lo:hi" or "lo:hi:step" with lo < hi and step > 0.
Range parse_range(const std::string& text);
/// "l,N"
EvalParams parse_params(const std::string& text);

/// Runs the command line; output goes to `out` unless --out is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dzeta::cli

#endif  // DZETA_TOOLS_CLI_HPP
