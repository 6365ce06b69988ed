#pragma once

#include <memory>
#include <string>
#include <vector>

#include "siglat/bitset.hpp"
#include "siglat/errors.hpp"
#include "siglat/perm.hpp"

namespace siglat {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A fully enumerated finite permutation group. Elements are stored in a
/// canonical order (lexicographic by image array), so the identity is always
/// element 0 and two constructions of the same group agree index for index.
class Group {
 public:
  /// Closure of the generators under composition. Throws OrderCapExceeded
  /// when the closure passes `order_cap`.
  static GroupPtr generate(int degree, std::vector<Permutation> generators,
                           std::string name = "", int order_cap = 2000);

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  int order() const { return int(elems_.size()); }

  const Permutation& element(int i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const { return elems_; }
  /// Indices of the generating elements in the canonical table.
  const std::vector<int>& generator_indices() const { return gen_idx_; }

  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[size_t(a) * elems_.size() + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int x, int g) const { return mul(mul(inv_[g], x), g); }
  int element_order(int a) const { return ord_[a]; }

  /// Index of a permutation in the element table, or -1.
  int index_of(const Permutation& p) const;

  bool is_cyclic() const;

  /// Prime factorization support: sorted distinct primes dividing |G|.
  std::vector<int> prime_divisors() const;

 private:
  Group() = default;
  void build_tables();

  std::string name_;
  int degree_ = 0;
  std::vector<Permutation> elems_;
  std::vector<int> gen_idx_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> ord_;
};

/// A subgroup of a fixed parent, as a membership bit-vector over the
/// parent's element table. Equality is bit-vector equality.
struct SubgroupHandle {
  GroupPtr parent;
  DynBitset members;

  int order() const { return members.count(); }
  bool contains(int e) const { return members.test(e); }
  bool operator==(const SubgroupHandle& o) const {
    return parent.get() == o.parent.get() && members == o.members;
  }
};

SubgroupHandle trivial_subgroup(const GroupPtr& g);
SubgroupHandle full_subgroup(const GroupPtr& g);

/// Smallest subgroup of `parent` containing the seed elements.
DynBitset closure(const Group& g, const std::vector<int>& seed);
SubgroupHandle subgroup_generated(const GroupPtr& parent,
                                  const std::vector<int>& seed);

/// Element-set product AB = {ab : a in A, b in B}.
DynBitset set_product(const SubgroupHandle& a, const SubgroupHandle& b);
/// AB == BA, equivalently AB is a subgroup.
bool permutes(const SubgroupHandle& a, const SubgroupHandle& b);

DynBitset conjugate_members(const Group& g, const DynBitset& members, int by);
SubgroupHandle conjugate_subgroup(const SubgroupHandle& h, int by);
bool is_normal(const Group& g, const DynBitset& members);
bool is_normal(const SubgroupHandle& h);
/// H normal in Y, both given as member sets of the same parent.
bool is_normal_in(const Group& g, const DynBitset& h, const DynBitset& y);

/// Core of H in Y: the intersection of all Y-conjugates of H, i.e. the
/// largest subgroup of H normal in Y. Requires H <= Y.
DynBitset core_in(const Group& g, const DynBitset& h, const DynBitset& y);
SubgroupHandle core_in(const SubgroupHandle& h, const SubgroupHandle& y);

/// G/R as a faithful permutation group on the right cosets of R, with the
/// projection map from base elements to quotient elements.
struct QuotientGroup {
  GroupPtr base;
  SubgroupHandle kernel;
  GroupPtr quotient;
  std::vector<int> projection;  // base element index -> quotient element index

  DynBitset project(const DynBitset& members) const;
  /// Preimage of a subgroup of the quotient.
  DynBitset lift(const DynBitset& members) const;
};

QuotientGroup quotient_group(const GroupPtr& g, const SubgroupHandle& r);

/// A section H/K of a fixed parent group, with K normal in H. Elements are
/// cosets, canonically ordered by their least member; element 0 is K itself.
class Section {
 public:
  Section(GroupPtr parent, DynBitset h, DynBitset k);

  const Group& parent() const { return *parent_; }
  int size() const { return int(reps_.size()); }
  const DynBitset& top() const { return h_; }
  const DynBitset& bottom() const { return k_; }

  int rep(int coset) const { return reps_[coset]; }
  /// Coset of a parent element, or -1 if the element is outside H.
  int coset_of(int e) const { return coset_of_[e]; }

  int mul(int a, int b) const {
    return coset_of_[parent_->mul(reps_[a], reps_[b])];
  }
  int identity() const { return 0; }
  int inv(int a) const { return coset_of_[parent_->inv(reps_[a])]; }
  int element_order(int a) const;

  /// Whether conjugation by `g` maps both H and K onto themselves, so that
  /// it induces an action on the section.
  bool normalized_by(int g) const;
  /// The induced action of conjugation by `g` on cosets.
  int conj(int coset, int g) const {
    return coset_of_[parent_->conj(reps_[coset], g)];
  }

 private:
  GroupPtr parent_;
  DynBitset h_, k_;
  std::vector<int> reps_;
  std::vector<int> coset_of_;
};

}  // namespace siglat
