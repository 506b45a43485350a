#include <iostream>
#include <string>

#include "gwwedge/acceptance.hpp"

// one line per criterion; optional argument selects a suite
int main(int argc, char** argv) {
  const std::string which = argc > 1 ? argv[1] : "all";
  bool ok = true;
  for (const auto& r : gwwedge::run_suite(which)) {
    std::cout << gwwedge::summary_line(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
