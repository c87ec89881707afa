// Acceptance suite: one line per criterion, aggregated over every kind the
// criterion applies to. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "ellweyl/verify.hpp"

using namespace ellweyl;

int main(int argc, char** argv) {
  VerifyOptions options;
  if (const char* env = std::getenv("ELLWEYL_THREADS")) options.threads = std::max(1, std::atoi(env));
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--sabotage-gram") options.sabotage_gram = true;

  struct Row {
    std::string title;
    std::vector<std::string> kinds;
    std::vector<std::string> failures;
    double seconds = 0.0;
  };
  std::map<std::string, Row> rows;
  std::vector<std::string> order;
  for (const auto& item : check_items()) {
    if (item.id.rfind("C", 0) != 0) continue;
    rows[item.id].title = item.title;
    order.push_back(item.id);
  }

  const std::vector<Kind> kinds(kAllKinds.begin(), kAllKinds.end());
  bool structural_ok = true;
  run_paper_suite(kinds, options, [&](const CheckResult& r) {
    auto it = rows.find(r.id);
    if (it == rows.end()) {
      if (!r.passed) {
        structural_ok = false;
        std::printf("structural check %s failed for %s: %s\n", r.id.c_str(), r.kind.c_str(), r.detail.c_str());
      }
      return;
    }
    it->second.kinds.push_back(r.kind);
    it->second.seconds += r.seconds;
    if (!r.passed) it->second.failures.push_back(r.kind + ": " + r.detail);
  });

  int failed = 0;
  for (const auto& id : order) {
    const Row& row = rows[id];
    const bool ok = row.failures.empty() && !row.kinds.empty();
    failed += ok ? 0 : 1;
    std::string kinds_text;
    for (const auto& k : row.kinds) kinds_text += (kinds_text.empty() ? "" : ",") + k;
    std::printf("%s %-22s [%s] %s (%.1fs)\n", ok ? "PASS" : "FAIL", id.c_str(), kinds_text.c_str(), row.title.c_str(),
                row.seconds);
    for (const auto& f : row.failures) std::printf("     %s\n", f.c_str());
  }
  std::printf("%zu of %zu criteria passed\n", order.size() - static_cast<std::size_t>(failed), order.size());
  return failed == 0 && structural_ok ? 0 : 1;
}
