#include <iostream>

#include "acceptance/suite.hpp"

int main() {
  bool all = true;
  for (const auto& r : acceptance::run_suite()) {
    std::cout << acceptance::format_line(r) << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
