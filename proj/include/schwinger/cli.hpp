#pragma once

// Command-line front end. run_cli does all the work and returns the captured
// streams so the commands can be driven from tests without a subprocess.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or
// validation error.

#include <optional>
#include <string>
#include <vector>

namespace schwinger {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// args excludes the program name. env_max_dense is the value of
/// SCHWINGER_MAX_DENSE, if set; the --max-dense flag takes precedence.
CliResult run_cli(const std::vector<std::string>& args,
                  const std::optional<std::string>& env_max_dense = std::nullopt);

}  // namespace schwinger
