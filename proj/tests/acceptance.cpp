#include <iostream>

#include "elimdist/selftest.hpp"

int main() {
  auto reports = elimdist::selftest::run_all(elimdist::selftest::Scale::full(), std::cout);
  bool all = true;
  for (const auto& r : reports) all = all && r.passed();
  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
