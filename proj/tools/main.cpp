#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> capacity_env;
  if (const char* env = std::getenv(coinbound::cli::kCapacityEnvVar)) capacity_env = env;
  return coinbound::cli::run(args, std::cout, std::cerr, capacity_env);
}
