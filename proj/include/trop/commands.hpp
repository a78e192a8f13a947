#pragma once

#include <string>

namespace trop {

// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 numerical failure.
struct CommandResult {
  int exit_code = 0;
  std::string output;  // result envelope (JSON) or graph description text
};

struct CommandOptions {
  long long seed = 0;
  int samples = 0;       // implicitize: 0 = twice the support size
  double tol = 1e-8;     // implicitize nullity threshold
  std::string format = "json";  // graph: json | dot
};

CommandResult cmd_tropicalize(const std::string& input, const CommandOptions& opts = {});
CommandResult cmd_newton(const std::string& input, const CommandOptions& opts = {});
CommandResult cmd_chow(const std::string& input, const CommandOptions& opts = {});
CommandResult cmd_implicitize(const std::string& input, const CommandOptions& opts = {});
CommandResult cmd_graph(const std::string& input, const CommandOptions& opts = {});
CommandResult cmd_oracle_curve(const std::string& input, const CommandOptions& opts = {});

}  // namespace trop
