#include <iostream>

#include "weylkit/acceptance.hpp"

int main() {
  bool all = true;
  const auto results = weylkit::run_acceptance(0, [&](const weylkit::CriterionResult& r) {
    std::cout << weylkit::format_result(r) << std::endl;
    all = all && r.pass;
  });
  double total = 0;
  for (const auto& r : results) total += r.seconds;
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << " in " << total << "s" << std::endl;
  return all ? 0 : 1;
}
