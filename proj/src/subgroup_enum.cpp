#include "siglat/subgroup_enum.hpp"

#include <algorithm>
#include <unordered_set>

namespace siglat {

namespace {

void sort_family(std::vector<DynBitset>& v) {
  std::sort(v.begin(), v.end(), [](const DynBitset& a, const DynBitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
}

}  // namespace

int SubgroupFamily::index_of(const DynBitset& b) const {
  int c = b.count();
  auto cmp = [c](const DynBitset& x, const DynBitset& y) {
    int cx = x.count(), cy = y.count();
    if (cx != cy) return cx < cy;
    return x < y;
  };
  auto it = std::lower_bound(members.begin(), members.end(), b, cmp);
  (void)c;
  if (it == members.end() || !(*it == b)) return -1;
  return int(it - members.begin());
}

SubgroupFamily all_subgroups(const GroupPtr& g, int subgroup_cap) {
  const int n = g->order();
  std::unordered_set<DynBitset, DynBitsetHash> seen;
  std::vector<DynBitset> subs;
  auto add = [&](const DynBitset& b) {
    if (seen.insert(b).second) {
      if (int(subs.size()) >= subgroup_cap)
        throw SubgroupCountCapExceeded("more than " +
                                       std::to_string(subgroup_cap) +
                                       " subgroups");
      subs.push_back(b);
      return true;
    }
    return false;
  };

  // Cyclic atoms. Every subgroup is a join of cyclic subgroups, so the
  // join-closure of these is the complete list.
  for (int e = 0; e < n; ++e) add(closure(*g, {e}));

  // Worklist join closure over pairs.
  for (size_t i = 0; i < subs.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      const DynBitset& a = subs[i];
      const DynBitset& b = subs[j];
      if (a.subset_of(b) || b.subset_of(a)) continue;
      std::vector<int> seed = a.indices();
      for (int e : b.indices()) seed.push_back(e);
      add(closure(*g, seed));
    }
  }

  sort_family(subs);
  return {g, std::move(subs)};
}

SubgroupFamily all_normal_subgroups(const SubgroupFamily& all) {
  std::vector<DynBitset> out;
  for (const DynBitset& b : all.members)
    if (is_normal(*all.parent, b)) out.push_back(b);
  return {all.parent, std::move(out)};
}

std::vector<std::pair<int, int>> hasse_covers(
    const std::vector<DynBitset>& family) {
  std::vector<std::pair<int, int>> out;
  const int n = int(family.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (!(family[x].subset_of(family[y]) && family[x] != family[y])) continue;
      bool covered = true;
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (family[x].subset_of(family[z]) && family[z].subset_of(family[y]) &&
            family[z] != family[x] && family[z] != family[y]) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace siglat
