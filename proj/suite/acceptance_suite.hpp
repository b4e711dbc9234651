#ifndef LAT_SUITE_ACCEPTANCE_SUITE_HPP
#define LAT_SUITE_ACCEPTANCE_SUITE_HPP

#include <functional>
#include <string>
#include <vector>

namespace lat::suite {

struct Options {
  bool slow = false;  // Leech norm-4 enumeration checks
};

// Reads LAT_SLOW_TESTS.
Options options_from_env();

struct Result {
  int id = 0;
  std::string title;
  bool passed = true;
  std::vector<std::string> notes;
  double seconds = 0;
};

constexpr int kCriteria = 10;

Result run_criterion(int id, const Options& options);

// Runs criteria 1..kCriteria in order, reporting each as it finishes.
std::vector<Result> run_all(const Options& options, const std::function<void(const Result&)>& on_result = {});

}  // namespace lat::suite

#endif  // LAT_SUITE_ACCEPTANCE_SUITE_HPP
