#include "cli.hpp"

namespace bded::cli {

RunReport run_command(const std::vector<std::string>&) {
  return {nlohmann::json{{"error", "not implemented"}}, 3};
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_command(args).exit_code;
}

}  // namespace bded::cli
