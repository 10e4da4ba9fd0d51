#include <vector>

#include "cyberlex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cyberlex::run_cli(args);
}
