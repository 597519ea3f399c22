#include <iostream>

#include "slopecert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return slopecert::dispatch(args, std::cout, std::cerr);
}
