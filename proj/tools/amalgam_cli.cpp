#include <fstream>
#include <iostream>

#include "amalgam/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  amalgam::CommandResult r = amalgam::run_command(args);
  if (r.help) {
    std::cout << *r.help;
    return 0;
  }
  const std::string text = amalgam::render_report(r.report);
  if (r.out) {
    std::ofstream out(*r.out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << *r.out << "\n";
      return amalgam::kExitInputError;
    }
    out << text;
  } else {
    std::cout << text;
  }
  if (r.exit_status != 0 && r.report.contains("error")) std::cerr << r.report["error"]["message"].get<std::string>() << "\n";
  return r.exit_status;
}
