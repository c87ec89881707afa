#ifndef ELLWEYL_VERIFY_HPP
#define ELLWEYL_VERIFY_HPP

// The verification suite: every explicit computation the library is built
// to reproduce, plus randomized property checks. Each item reports pass or
// fail independently; an exception inside an item is a failure of that
// item only.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ellweyl/rootsys.hpp"

namespace ellweyl {

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  int normal_form_pairs = 10'000;  // per kind
  int braid_words = 10'000;        // per kind
  int central_samples = 1'000;
  int central_powers = 100;
  std::size_t lambda_census_states = 1'000'000;
  int lambda_bound = 2;
  int connect_samples = 100;
  int connect_bound = 1;
  std::size_t connect_census_states = 1'000'000;
  std::size_t connect_max_states = 2'000'000;
  int threads = 1;
  bool sabotage_gram = false;
};

struct CheckResult {
  std::string id;      // e.g. "C1.reflection_length"
  std::string kind;    // "D4" .. "E8"
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct CheckItem {
  std::string id;
  std::string title;
  bool d4_only = false;
  std::function<std::string(Kind, const VerifyOptions&)> run;  // throws or returns "FAIL..." on failure
};

/// Structural items (S.*) followed by C1 .. C11 in order.
const std::vector<CheckItem>& check_items();

CheckResult run_item(const CheckItem& item, Kind kind, const VerifyOptions& options);

/// Runs every item applicable to each kind. Sabotage (if requested) is
/// switched on for the duration of the run.
std::vector<CheckResult> run_paper_suite(const std::vector<Kind>& kinds, const VerifyOptions& options,
                                         const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace ellweyl

#endif  // ELLWEYL_VERIFY_HPP
