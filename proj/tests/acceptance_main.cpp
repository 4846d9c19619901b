#include <cstring>
#include <iostream>

#include "fishburn/acceptance.hpp"

// One line per criterion; failing checks are listed below their criterion.
int main(int argc, char** argv) {
  bool verbose = false;
  for (int i = 1; i < argc; ++i) verbose = verbose || std::strcmp(argv[i], "-v") == 0;
  fishburn::acceptance::Options opt;
  opt.cli_path = FISHBURN_CLI;
  int failed = 0;
  for (int id = 1; id <= fishburn::acceptance::kCriteria; ++id) {
    const auto r = fishburn::acceptance::run(id, opt);
    std::cout << fishburn::acceptance::format(r, verbose) << std::flush;
    failed += r.pass ? 0 : 1;
  }
  std::cout << (fishburn::acceptance::kCriteria - failed) << " of " << fishburn::acceptance::kCriteria
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
