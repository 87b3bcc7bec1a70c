#pragma once

#include <string>
#include <vector>

namespace troplin::golden {

struct ExampleResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> details;
};

std::vector<std::string> example_names();
ExampleResult run_example(const std::string& name);

}  // namespace troplin::golden
