// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

#include <iostream>  // for cout, cerr
#include <string>    // for string
#include <vector>    // for vector

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rees_lab::cli::run(args, std::cout, std::cerr);
}
