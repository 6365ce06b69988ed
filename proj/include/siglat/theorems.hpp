#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siglat/iso.hpp"
#include "siglat/sigma.hpp"

namespace siglat {

/// One verified statement: quantified instances checked, pass/fail, and a
/// printable witness for the first failing instance.
struct Check {
  bool holds = true;
  long checked = 0;
  std::string witness;
};

struct LatticeInfo {
  int size = 0;
  bool distributive = false;
  bool modular = false;
  std::string distributive_witness;
  std::string modular_witness;
  bool has_diamond = false;
  bool has_pentagon = false;
  /// Lemma 3.6 route agreement: distributive == (modular && diamond-free),
  /// and modular == pentagon-free.
  bool laws_consistent = false;
};

struct TheoremAReport {
  bool direct_distributive = false;
  std::string direct_witness;
  Check cond_i, cond_ii, cond_iii, cond_iv_full, cond_iv_covers;

  bool conditions_full() const {
    return cond_i.holds && cond_ii.holds && cond_iii.holds &&
           cond_iv_full.holds;
  }
  bool consistent() const {
    return direct_distributive == conditions_full();
  }
  /// Sufficiency direction of the covers-mode variant.
  bool sufficiency_ok() const {
    bool premise = cond_i.holds && cond_ii.holds && cond_iii.holds &&
                   cond_iv_covers.holds;
    return !premise || direct_distributive;
  }
};

struct LemmaCheck {
  std::string id;
  Check check;
};

/// Result of analyzing one (group, partition) pair.
struct PairReport {
  std::string group;
  std::string partition;
  int group_order = 0;
  int degree = 0;
  bool sigma_full = false;
  int cap_skips = 0;
  int sperm_count = 0;
  std::vector<int> sperm_orders;
  LatticeInfo lattice;   // over the sigma-permutable family
  LatticeInfo full_lattice;
  TheoremAReport theorem_a;
  Check theorem_b;
  Check theorem_c;
  std::vector<LemmaCheck> lemmas;
  std::vector<std::string> violations;
};

/// Quotient G/R with its own subgroup machinery, shared across partitions.
struct QuotientWork {
  QuotientGroup q;
  GroupData gd;
};

/// Per-group state reused by every partition analyzed against the group.
struct GroupWork {
  GroupPtr g;
  Caps caps;
  GroupData gd;
  std::vector<QuotientWork> quotients;  // parallel to gd.normal_idx

  static GroupWork build(const GroupPtr& g, const Caps& caps = {});

  /// Characteristic subgroups of family member `idx` as family indices;
  /// nullopt when the automorphism cap was exceeded. Memoized.
  const std::optional<std::vector<int>>& characteristic_of(int idx);

 private:
  std::vector<std::optional<std::vector<int>>> char_memo_;
  std::vector<char> char_done_;
};

/// Runs direct distributivity, Theorem A conditions (i)-(iv), Theorems B
/// and C, and the supporting lemma suite for one pair.
PairReport analyze_pair(GroupWork& gw, const PrimePartition& sigma);

/// A small generating set for a subgroup, greedily chosen by element index.
std::vector<int> generating_set(const Group& g, const DynBitset& members);

}  // namespace siglat
