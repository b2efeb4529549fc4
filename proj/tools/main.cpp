#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace pretzel::cli;
  Config cfg;
  try {
    cfg = parse_args(argc, argv);
  } catch (const HelpRequested& h) {
    std::cout << h.what();
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(cfg, std::cout, std::cerr);
}
