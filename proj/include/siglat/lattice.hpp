#pragma once

#include <array>
#include <optional>
#include <vector>

#include "siglat/subgroup_enum.hpp"

namespace siglat {

/// A finite lattice over a family of subgroups of one parent, with meet and
/// join index tables. Meet is intersection, join is the generated subgroup.
struct SigmaLattice {
  GroupPtr parent;
  std::vector<DynBitset> elems;  // canonical family order
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
  int bottom = 0;
  int top = 0;

  int size() const { return int(elems.size()); }
  bool leq(int a, int b) const { return elems[a].subset_of(elems[b]); }
  int order_of(int i) const { return elems[i].count(); }
};

using Triple = std::array<int, 3>;

/// Verifies closure of the family under pairwise intersection and join and
/// fills the tables. Throws NotClosed with the offending pair otherwise.
SigmaLattice build_lattice(const SubgroupFamily& family);

/// Exhaustive triple check of a /\ (b \/ c) = (a /\ b) \/ (a /\ c); the
/// witness is the first failing triple in lexicographic order.
bool is_distributive(const SigmaLattice& l, Triple* witness = nullptr);

/// a <= c implies a \/ (b /\ c) = (a \/ b) /\ c.
bool is_modular(const SigmaLattice& l, Triple* witness = nullptr);

bool is_meet_distributive_element(const SigmaLattice& l, int a);

/// Distinct a, b, c with equal pairwise joins and equal pairwise meets
/// (an M3 obstruction).
std::optional<Triple> find_diamond(const SigmaLattice& l);

/// a < c, b incomparable to both, with b \/ a = b \/ c and b /\ a = b /\ c
/// (an N5 obstruction); independent route to modularity.
std::optional<Triple> find_pentagon(const SigmaLattice& l);

/// Sublattice {x : a <= x <= b}. Throws NotComparable unless a <= b.
SigmaLattice interval(const SigmaLattice& l, int a, int b);

}  // namespace siglat
