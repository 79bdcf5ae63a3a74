#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace eicat {

class DimensionLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kOk = 0, kDomainFailure = 1, kUsageFailure = 2 };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::int64_t characteristic = 0;
  std::size_t cap = 8;
  std::string out;  // empty: stdout
  bool explain = false;
  std::uint64_t seed = 0;
  std::size_t count = 30;
  std::size_t max_dim = 64;
};

/// Runs one command. args[0] is the program name. JSON results go to `out` (or the --out file),
/// diagnostics to `err`. Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eicat
