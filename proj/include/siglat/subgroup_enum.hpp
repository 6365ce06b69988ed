#pragma once

#include <utility>
#include <vector>

#include "siglat/group.hpp"

namespace siglat {

/// A deduplicated list of subgroups of one parent, sorted by order and then
/// by membership bit-vector. Always contains the trivial subgroup and the
/// parent itself.
struct SubgroupFamily {
  GroupPtr parent;
  std::vector<DynBitset> members;

  int size() const { return int(members.size()); }
  int order_of(int i) const { return members[i].count(); }
  /// Index of a member, or -1.
  int index_of(const DynBitset& b) const;
  SubgroupHandle handle(int i) const { return {parent, members[i]}; }
};

/// Every subgroup of G, as the join-closure of all cyclic subgroups.
SubgroupFamily all_subgroups(const GroupPtr& g, int subgroup_cap = 20000);

SubgroupFamily all_normal_subgroups(const SubgroupFamily& all);

/// Cover pairs (x, y) within the given family: x < y with no member
/// strictly between. Indices refer to the family order.
std::vector<std::pair<int, int>> hasse_covers(
    const std::vector<DynBitset>& family);

}  // namespace siglat
