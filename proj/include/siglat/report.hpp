#pragma once

#include <string>
#include <vector>

#include "siglat/corpus.hpp"
#include "siglat/theorems.hpp"

namespace siglat {

inline constexpr int kSchemaVersion = 1;

/// Stable-key-order JSON for one pair report. Deterministic: no timing, no
/// floats, witnesses chosen lexicographically by the analysis itself.
std::string report_to_json(const PairReport& r);
PairReport report_from_json(const std::string& text);

/// Human summary of a sweep; `duration_ms < 0` omits the timing line.
std::string reports_to_markdown(const std::vector<PairReport>& reports,
                                long duration_ms = -1);

/// Analyzes every (group, partition) pair of the corpus with `jobs` worker
/// threads; the result is sorted by (group name, partition name) regardless
/// of scheduling.
std::vector<PairReport> run_sweep(const std::vector<GroupSpec>& corpus,
                                  const std::vector<PrimePartition>& partitions,
                                  const Caps& caps, int jobs);

/// Modularity survey entry for one sigma-full pair.
struct ModularityFinding {
  std::string group;
  std::string partition;
  bool modular = false;
  std::string witness;
};

std::vector<ModularityFinding> hunt_modularity(
    const std::vector<PairReport>& reports);
std::string findings_to_json(const std::vector<ModularityFinding>& findings);

int total_violations(const std::vector<PairReport>& reports);
int total_cap_skips(const std::vector<PairReport>& reports);

}  // namespace siglat
