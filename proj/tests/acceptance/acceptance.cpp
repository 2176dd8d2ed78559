// Runs every acceptance criterion at full size and prints one PASS/FAIL line
// per criterion. Exit status is nonzero if any criterion fails.

#include <cstdlib>
#include <iostream>

#include "arbor/selftest.hpp"

int main() {
  arbor::RunConfig cfg;
  if (const char* env = std::getenv("ARBOR_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);
  bool ok = true;
  int k = 0;
  for (const auto& name : arbor::suite_names()) {
    ++k;
    const auto r = arbor::run_suite(name, cfg);
    const bool pass = r.failures.empty() && r.cases > 0;
    ok &= pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << k << " [" << r.name << "] " << r.title << ": "
              << r.cases << " cases, " << r.failures.size() << " failures\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) std::cout << "    " << r.failures[i] << "\n";
    if (!pass) std::cout << "    reproduce: " << arbor::reproducer(cfg, r.name) << "\n";
  }
  std::cout << (ok ? "ALL PASS" : "SOME FAILED") << " (seed " << cfg.seed << ")\n";
  return ok ? 0 : 1;
}
