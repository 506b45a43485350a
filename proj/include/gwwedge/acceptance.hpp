#pragma once

#include <string>
#include <vector>

namespace gwwedge {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = true;
  long checks = 0;
  double seconds = 0;
  std::vector<std::string> failures;  // first few only
  std::string note;
};

// suite names, indexed by criterion id - 1
const std::vector<std::string>& criterion_names();

// id in 1..9; never throws, exceptions become failures
CriterionResult run_criterion(int id);

// "all", a suite name, or a criterion number
std::vector<CriterionResult> run_suite(const std::string& which);

std::string summary_line(const CriterionResult& r);

}  // namespace gwwedge
