#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siglat/lattice.hpp"
#include "siglat/subgroup_enum.hpp"

namespace siglat {

/// A partition of the primes: explicit disjoint blocks plus a rule for the
/// leftover primes. "sigma0" is no explicit blocks with singleton leftovers.
struct PrimePartition {
  enum class Leftover { Singletons, OneBlock };

  std::string name;
  std::vector<std::vector<int>> blocks;  // sorted primes, pairwise disjoint
  Leftover leftover = Leftover::Singletons;

  /// Block id of a prime: explicit block index, or a leftover tag.
  /// Leftover singletons are keyed by the prime itself (as -p), the single
  /// rest block by -1.
  int classify(int p) const;
};

/// Parses the partition grammar: `sigma0`, `pi:2,3`,
/// `blocks:[2,5][3];rest=singletons` (or `rest=one_block`).
PrimePartition parse_partition(const std::string& text);

/// True iff every prime divisor of n lies in the block. n = 1 qualifies.
bool is_sigma_number(long n, const std::vector<int>& block);

/// The blocks of sigma meeting pi(G), restricted to pi(G), in canonical
/// order (explicit blocks first, then leftovers ascending).
std::vector<std::vector<int>> sigma_of_group(const Group& g,
                                             const PrimePartition& sigma);

/// Largest divisor of n supported on the block.
long sigma_part(long n, const std::vector<int>& block);

/// Partition-independent per-group precomputation: the full subgroup family
/// with containment, normality, permutability, meet/join and core tables.
struct GroupData {
  GroupPtr g;
  SubgroupFamily subs;
  SigmaLattice full;  // lattice over all subgroups; shares meet/join tables
  std::vector<char> normal_flag;
  std::vector<int> normal_idx;  // ascending family indices
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<char>> permutes_t;
  std::vector<std::vector<char>> normal_in_t;  // [x][y] valid when x <= y
  std::vector<std::vector<int>> core_ord;      // |core_in(x,y)|, -1 if x !<= y
  std::vector<std::vector<int>> conj_class;    // per member: orbit under conjugation

  int size() const { return subs.size(); }
  int order_of(int i) const { return subs.order_of(i); }
  int index_of(const DynBitset& b) const { return subs.index_of(b); }
  int join(int a, int b) const { return full.join[a][b]; }
  int meet(int a, int b) const { return full.meet[a][b]; }
};

GroupData build_group_data(const GroupPtr& g, const Caps& caps = {});

/// Everything sigma-specific about one (group, partition) pair.
struct SigmaContext {
  std::vector<std::vector<int>> blocks;  // sigma(G), concrete prime sets
  bool sigma_full = false;
  std::vector<std::vector<int>> hall;  // per block: family indices
  std::vector<char> sperm;             // sigma-permutable (valid when sigma_full)
  std::vector<char> fullperm;          // permutes with all conjugates of some
                                       // complete Hall sigma-set
  std::vector<char> subnorm;           // sigma-subnormal in G
  std::vector<char> snilp;             // the subgroup itself is sigma-nilpotent
  std::vector<char> sprimary;
  std::vector<std::vector<char>> step;  // chain step relation on the family
  std::vector<int> core_idx;            // per block: O_{sigma_i}(G)
  std::vector<int> residual_idx;        // per block: O^{sigma_i}(G)
  int nilres_idx = -1;                  // G^{N_sigma}
  bool nilres_quotient_nilpotent = false;
  std::vector<int> sperm_family;  // ascending family indices

  /// Memoized sigma-subnormal-in-T reachability (T a family index).
  const std::vector<char>& subnormal_in(const GroupData& gd, int top) const;

 private:
  mutable std::map<int, std::vector<char>> subnorm_in_;
};

SigmaContext build_sigma_context(const GroupData& gd,
                                 const PrimePartition& sigma);

/// True iff G/N is sigma-nilpotent, decided from G's normal subgroup family
/// (normal subgroups of G/N are exactly the M/N with N <= M normal in G).
bool quotient_is_sigma_nilpotent(const GroupData& gd, const SigmaContext& sc,
                                 int n_idx);

/// Spec-level wrappers over the context machinery.
bool is_sigma_full(const GroupData& gd, const PrimePartition& sigma);
bool is_sigma_permutable(const GroupData& gd, const SigmaContext& sc, int idx);
SubgroupFamily sigma_permutable_family(const GroupData& gd,
                                       const SigmaContext& sc);
bool is_sigma_subnormal(const GroupData& gd, const SigmaContext& sc, int idx);
bool is_fully_permutable(const GroupData& gd, const SigmaContext& sc, int idx);

/// All complete Hall sigma-sets, as one family-index choice per block.
std::vector<std::vector<int>> complete_hall_sets(const SigmaContext& sc);

/// O_{sigma_i} of a subgroup: largest subgroup of h normal in h with order
/// supported on the block.
int sigma_core_of(const GroupData& gd, int h, const std::vector<int>& block);

/// O^{sigma_i} of a subgroup: generated by the members of h whose element
/// order avoids the block.
DynBitset sigma_residual_members(const GroupData& gd, const DynBitset& h,
                                 const std::vector<int>& block);

}  // namespace siglat
