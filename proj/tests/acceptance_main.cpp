#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "sgm/acceptance.hpp"

// Usage: acceptance [criterion ...]
int main(int argc, char** argv) {
  sgm::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) opts.only.push_back(std::atoi(argv[i]));
  auto results = sgm::run_acceptance(opts);
  std::cout << sgm::format_results(results) << std::flush;
  int failed = 0;
  for (const auto& r : results) failed += !r.pass;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
