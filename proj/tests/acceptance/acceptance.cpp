#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "toroidal/suite.hpp"

int main(int argc, char** argv) {
  toroidal::SuiteConfig cfg;
  std::vector<std::string> only;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      cfg.seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (arg == "--only" && i + 1 < argc) {
      only.emplace_back(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--seed N] [--only ID]...\n", argv[0]);
      return 2;
    }
  }
  auto report = toroidal::run_suite(cfg, only, [](const toroidal::CriterionResult& r) {
    std::printf("%s %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.seconds);
    for (const auto& f : r.failures) std::printf("  %s\n", f.c_str());
    std::fflush(stdout);
  });
  return report.all_pass() ? 0 : 1;
}
