#include <cstdio>
#include <cstring>

#include "acceptance_suite.hpp"

int main(int argc, char** argv) {
  bool verbose = false;
  for (int i = 1; i < argc; ++i) verbose = verbose || std::strcmp(argv[i], "-v") == 0;
  const auto options = lat::suite::options_from_env();
  int failed = 0;
  lat::suite::run_all(options, [&](const lat::suite::Result& r) {
    std::printf("criterion %2d: %s  %s (%.2fs)\n", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
    for (const auto& note : r.notes)
      if (verbose || !r.passed) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  });
  std::printf("%d/%d criteria passed\n", lat::suite::kCriteria - failed, lat::suite::kCriteria);
  return failed == 0 ? 0 : 1;
}
