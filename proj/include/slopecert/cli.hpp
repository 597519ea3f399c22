#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace slopecert {

enum class OutputMode { human, json };

/// Defaults for the numerical commands. Flags override them per call.
struct Config {
  double tol = 1e-10;
  double eps = 1e-2;
  std::uint64_t restarts = 200;
  std::uint64_t seed = 1;
  OutputMode output = OutputMode::human;

  /// Throws std::invalid_argument unless tol, eps > 0 and restarts >= 1.
  void validate() const;
};

std::string version_string();

/// Runs one command. args excludes the program name. Returns the process exit
/// code: certify uses 0/2/3 for certified/open/fails_in_general, and every
/// command returns 1 on bad input.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slopecert
