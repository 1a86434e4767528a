#include <iostream>
#include <string>
#include <vector>

#include <nashift/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nashift::cli::run(args, std::cout, std::cerr);
}
