// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "siglat/report.hpp"

using namespace siglat;

namespace {

int failures = 0;

void criterion(int n, const std::string& label, bool ok,
               const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << label;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

const PairReport& find_pair(const std::vector<PairReport>& rs,
                            const std::string& group,
                            const std::string& partition) {
  for (const auto& r : rs)
    if (r.group == group && r.partition == partition) return r;
  throw Error("missing pair " + group + " / " + partition);
}

bool lemma_holds(const PairReport& r, const std::string& id, bool* found) {
  for (const auto& lc : r.lemmas)
    if (lc.id == id) {
      if (found) *found = true;
      return lc.check.holds;
    }
  return false;
}

}  // namespace

int main() {
  const std::vector<std::string> partition_texts = {
      "sigma0", "pi:2", "pi:2,3", "blocks:[2,5][3];rest=singletons"};
  std::vector<PrimePartition> partitions;
  for (const auto& t : partition_texts)
    partitions.push_back(parse_partition(t));

  auto t0 = std::chrono::steady_clock::now();
  std::vector<PairReport> reports =
      run_sweep(builtin_corpus(), partitions, Caps{}, 4);
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();

  // 1. Theorem A biconditional across the sweep.
  {
    bool ok = builtin_corpus().size() >= 25;
    std::string detail;
    int full_pairs = 0;
    for (const auto& r : reports) {
      if (!r.sigma_full) continue;
      ++full_pairs;
      if (!r.theorem_a.consistent() || !r.violations.empty() ||
          r.cap_skips != 0) {
        ok = false;
        detail = r.group + "/" + r.partition;
      }
    }
    if (ms >= 600000) ok = false;
    criterion(1,
              "Theorem A biconditional over " + std::to_string(full_pairs) +
                  " sigma-full pairs, zero violations/skips, " +
                  std::to_string(ms) + " ms",
              ok, detail);
  }

  // 2. Sufficiency: conditions with covers-mode (iv) imply distributivity.
  {
    bool ok = true;
    std::string detail;
    for (const auto& r : reports)
      if (r.sigma_full && !r.theorem_a.sufficiency_ok()) {
        ok = false;
        detail = r.group + "/" + r.partition;
      }
    criterion(2, "covers-mode conditions imply distributivity", ok, detail);
  }

  // 3. Theorem B: meet/join closure of every sigma-permutable family.
  {
    bool ok = true;
    std::string detail;
    for (const auto& r : reports)
      if (r.sigma_full && !r.theorem_b.holds) {
        ok = false;
        detail = r.group + "/" + r.partition + ": " + r.theorem_b.witness;
      }
    criterion(3, "sigma-permutable families are sublattices", ok, detail);
  }

  // 4. sigma0 specialization against the independent S-permutability check.
  {
    bool ok = true;
    std::string detail;
    for (const auto& r : reports) {
      if (r.partition != "sigma0") continue;
      bool found = false;
      if (!lemma_holds(r, "remark_1.2.iii", &found) || !found) {
        ok = false;
        detail = r.group;
      }
    }
    criterion(4, "sigma0 agrees with S-permutability and Kegel closure", ok,
              detail);
  }

  // 5. Theorem C three-way equivalence.
  {
    bool ok = true;
    std::string detail;
    for (const auto& r : reports)
      if (r.sigma_full && !r.theorem_c.holds) {
        ok = false;
        detail = r.group + "/" + r.partition + ": " + r.theorem_c.witness;
      }
    criterion(5, "Theorem C equivalence for sigma-nilpotent subgroups", ok,
              detail);
  }

  // 6. sigma-nilpotency vs all-subgroups-permutable; residual identity.
  {
    bool ok = true;
    std::string detail;
    for (const auto& r : reports) {
      if (!r.sigma_full) continue;
      bool found = false;
      if (!lemma_holds(r, "remark_1.2.ii", &found) || !found) {
        ok = false;
        detail = r.group + "/" + r.partition + " remark";
      }
      if (r.partition == "sigma0" || r.partition == "pi:2") {
        found = false;
        if (!lemma_holds(r, "3.9", &found) || !found) {
          ok = false;
          detail = r.group + "/" + r.partition + " residual";
        }
      }
    }
    criterion(6, "nilpotency remark and residual identity", ok, detail);
  }

  // 7. Golden values.
  {
    bool ok = true;
    std::string detail;
    const PairReport& s3 = find_pair(reports, "S3", "sigma0");
    if (s3.sperm_orders != std::vector<int>{1, 3, 6} ||
        !s3.lattice.distributive) {
      ok = false;
      detail = "S3";
    }
    const PairReport& q8 = find_pair(reports, "Q8", "sigma0");
    if (q8.sperm_count != 6 || q8.sperm_count != q8.full_lattice.size ||
        q8.lattice.distributive ||
        q8.theorem_a.cond_iv_covers.witness !=
            "R=#0(|1|) sigma_i={2} K=#1(|2|) H=#2(|4|) L=#3(|4|)") {
      ok = false;
      detail = "Q8";
    }
    const PairReport& a5 = find_pair(reports, "A5", "sigma0");
    if (a5.sperm_orders != std::vector<int>{1, 60}) {
      ok = false;
      detail = "A5";
    }
    // A5 is not sigma-full when {3} is split off and the rest is one block.
    for (const GroupSpec& spec : builtin_corpus())
      if (spec.name == "A5") {
        GroupWork gw = GroupWork::build(spec.build());
        PairReport r =
            analyze_pair(gw, parse_partition("blocks:[3];rest=one_block"));
        if (r.sigma_full) {
          ok = false;
          detail = "A5 fullness";
        }
      }
    criterion(7, "golden values for S3, Q8, A5", ok, detail);
  }

  // 8. Lattice law route agreement and the cyclic/distributive criterion.
  {
    bool ok = true;
    std::string detail;
    for (const auto& r : reports) {
      if (!r.full_lattice.laws_consistent ||
          (r.sigma_full && !r.lattice.laws_consistent)) {
        ok = false;
        detail = r.group + "/" + r.partition + " laws";
      }
      bool found = false;
      if (r.sigma_full && (!lemma_holds(r, "ore", &found) || !found)) {
        ok = false;
        detail = r.group + "/" + r.partition + " ore";
      }
    }
    criterion(8, "lattice law routes and the cyclic criterion agree", ok,
              detail);
  }

  // 9. Determinism across job counts.
  {
    std::vector<PairReport> again =
        run_sweep(builtin_corpus(), partitions, Caps{}, 1);
    bool ok = again.size() == reports.size();
    std::string detail;
    for (size_t i = 0; ok && i < reports.size(); ++i)
      if (report_to_json(reports[i]) != report_to_json(again[i])) {
        ok = false;
        detail = reports[i].group + "/" + reports[i].partition;
      }
    criterion(9, "reports are byte-identical across --jobs values", ok,
              detail);
  }

  if (failures) std::cout << failures << " criteria failed\n";
  return failures ? 1 : 0;
}
