#include <cstdio>
#include <exception>

#include "ropelab/suites.hpp"

int main(int argc, char** argv) {
  ropelab::SuiteOptions o;
  const char* only = argc > 1 ? argv[1] : "all";
  int failed = 0;
  std::printf("exact arithmetic over Q and F_p, tolerance 0, seed %llu\n", static_cast<unsigned long long>(o.seed));
  try {
    for (const auto& r : ropelab::run_suite(only, o)) {
      std::printf("%s  %-14s %6lld cases %8.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.cases, r.seconds,
                  r.title.c_str());
      if (!r.detail.empty()) std::printf("      %s\n", r.detail.c_str());
      for (const auto& c : r.counterexamples) std::printf("      counterexample: %s\n", c.c_str());
      if (!r.pass) ++failed;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance: %s\n", e.what());
    return 2;
  }
  std::fflush(stdout);
  return failed ? 1 : 0;
}
