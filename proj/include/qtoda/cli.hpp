#pragma once

#include <string>
#include <vector>

namespace qtoda::cli {

// One invocation of the tool. `out` always carries the payload; when --out
// was given the payload is also written to that path and `out_path` records
// it so the caller can keep standard output quiet. Diagnostics go to `err`.
// Exit codes: 0 success, 1 failed check or internal error, 2 usage error.
struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
  std::string out_path;
};

RunResult run(const std::vector<std::string>& args);

}  // namespace qtoda::cli
