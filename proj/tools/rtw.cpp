#include <iostream>
#include <string>
#include <vector>

#include "rtw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rtw::run_cli(args, std::cout, std::cerr);
}
