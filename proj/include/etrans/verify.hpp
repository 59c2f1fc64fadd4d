#pragma once

// Property and oracle checks over the whole library. Each check is
// deterministic (fixed seeds) and returns a machine-readable record.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "etrans/types.hpp"

namespace etrans::verify {

struct Options {
  std::vector<GroupId> groups{kAllGroups.begin(), kAllGroups.end()};
  /// Replaces the per-check default resolutions when set.
  std::optional<std::vector<std::int64_t>> Ms;
  std::uint64_t seed = 0x5eed2024ULL;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  /// Known disagreement with a printed claim; reported but not counted as a
  /// failure by run_all.
  bool documented_discrepancy = false;
  std::string summary;
  double seconds = 0.0;
  nlohmann::json details;
};

CheckResult discrete_orthogonality(const Options& o);     // M in 1..8
CheckResult norm_tables(const Options& o);                // M in {2,3,4,6}
CheckResult epsilon_tables(const Options& o);             // M in 2..8
CheckResult epsilon_sum_printed(const Options& o);        // sum eps = M^2, literally
CheckResult epsilon_sum_torus(const Options& o);          // sum eps = |(1/M)P^/Q^|
CheckResult round_trip(const Options& o);                 // M in {2,4,6}
CheckResult continuous_orthogonality(const Options& o);
CheckResult closed_forms(const Options& o);
CheckResult products(const Options& o);
CheckResult laplacian(const Options& o);
CheckResult central_splitting(const Options& o);          // M in {2,4,6}
CheckResult invariance(const Options& o);
CheckResult kernel_equivalence(const Options& o);

/// Every check; the printed sum-of-eps claim is marked as a documented
/// discrepancy rather than a failure.
std::vector<CheckResult> run_all(const Options& o);

nlohmann::json to_json(const CheckResult& r);

}  // namespace etrans::verify
