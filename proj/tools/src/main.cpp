#include <iostream>
#include <string>
#include <vector>

#include "vekua_cli/cli.hpp"

int main(int argc, char** argv) {
  return vekua::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
