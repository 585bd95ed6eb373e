#include "acceptance.hpp"

#include <iostream>

int main(int argc, char** argv) {
  rootlie::acceptance::Options options;
  options.data_dir = argc > 1 ? std::filesystem::path(argv[1])
                              : rootlie::acceptance::default_data_dir();
  int failed = 0;
  for (int id = 1; id <= rootlie::acceptance::kCriterionCount; ++id) {
    const auto r = rootlie::acceptance::run_criterion(id, options);
    std::cout << rootlie::acceptance::format_line(r) << std::endl;
    failed += r.pass ? 0 : 1;
  }
  std::cout << (rootlie::acceptance::kCriterionCount - failed) << "/"
            << rootlie::acceptance::kCriterionCount << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
