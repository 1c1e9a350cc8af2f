#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> max_nodes;
  if (const char* env = std::getenv("SUPERTAB_MAX_NODES")) max_nodes = env;
  return supertab::cli::run(args, std::cout, std::cerr, max_nodes);
}
