#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace bded::cli {

/// Machine-readable result of one CLI command plus its process exit code.
struct RunReport {
  nlohmann::json json;
  int exit_code = 0;
};

/// Exit codes: 0 yes/pass, 1 no/fail, 2 unsupported, 3 usage/parse error.
int run(int argc, const char* const* argv);
RunReport run_command(const std::vector<std::string>& args);

}  // namespace bded::cli
