// Acceptance run: one line per criterion, exit status 1 if any line fails.

#include <cstdio>
#include <functional>
#include <vector>

#include "etrans/verify.hpp"

using namespace etrans::verify;

int main() {
  const Options o;
  struct Criterion {
    const char* id;
    std::function<CheckResult(const Options&)> run;
  };
  const std::vector<Criterion> criteria{
      {"1", discrete_orthogonality}, {"2", norm_tables},       {"3a", epsilon_tables},
      {"3b", epsilon_sum_printed},   {"4", round_trip},        {"5", continuous_orthogonality},
      {"6", closed_forms},           {"7", products},          {"8", laplacian},
      {"9", central_splitting},      {"10", invariance},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    CheckResult r;
    try {
      r = c.run(o);
    } catch (const std::exception& e) {
      r.title = "threw";
      r.summary = e.what();
    }
    if (!r.passed) ++failed;
    std::printf("%s criterion %-3s %s: %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", c.id, r.title.c_str(),
                r.summary.c_str(), r.seconds);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
