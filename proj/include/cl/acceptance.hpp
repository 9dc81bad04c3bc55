#pragma once
// the twelve end-to-end checks, shared by the acceptance binary and `verify`

#include <cstdint>
#include <string>
#include <vector>

namespace cl {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double ms = 0;
};

CriterionResult run_criterion(int id, std::uint64_t seed);
// criteria belonging to a named suite; empty for an unknown name
std::vector<int> suite_criteria(const std::string& suite);
std::vector<std::string> suite_names();

}  // namespace cl
