#include <iostream>
#include <string>
#include <vector>

#include "qtoda/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const qtoda::cli::RunResult r = qtoda::cli::run(args);
  if (!r.err.empty()) std::cerr << r.err;
  if (r.out_path.empty()) std::cout << r.out;
  return r.exit_code;
}
