#include <cstdio>
#include <string>
#include <vector>

#include "torelli/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  torelli::CommandResult res = torelli::run_command(args);
  if (res.exit_code == 0)
    std::fputs(res.output.c_str(), stdout);
  else
    std::fputs(res.output.c_str(), stderr);
  return res.exit_code;
}
