#include <iostream>
#include <string>
#include <vector>

#include <hermon/hermon.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  hermon::CommandResult res = hermon::run_command(args);
  std::cout << res.output;
  return res.status;
}
