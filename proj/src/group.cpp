#include "siglat/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace siglat {

GroupPtr Group::generate(int degree, std::vector<Permutation> generators,
                         std::string name, int order_cap) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InvalidPermutation("generator degree mismatch for group " + name);

  // Breadth-first closure under right multiplication by generators.
  std::set<Permutation> seen;
  std::vector<Permutation> elems;
  std::queue<Permutation> work;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  elems.push_back(id);
  work.push(id);
  while (!work.empty()) {
    Permutation x = work.front();
    work.pop();
    for (const auto& g : generators) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (int(seen.size()) > order_cap)
          throw OrderCapExceeded("group order exceeds cap " +
                                 std::to_string(order_cap));
        elems.push_back(y);
        work.push(y);
      }
    }
  }

  auto g = std::shared_ptr<Group>(new Group());
  g->name_ = std::move(name);
  g->degree_ = degree;
  std::sort(elems.begin(), elems.end());
  g->elems_ = std::move(elems);
  g->build_tables();
  for (const auto& gen : generators) {
    int idx = g->index_of(gen);
    if (std::find(g->gen_idx_.begin(), g->gen_idx_.end(), idx) ==
        g->gen_idx_.end())
      g->gen_idx_.push_back(idx);
  }
  if (g->gen_idx_.empty()) g->gen_idx_.push_back(0);
  return g;
}

void Group::build_tables() {
  const int n = order();
  std::map<Permutation, int> index;
  for (int i = 0; i < n; ++i) index[elems_[i]] = i;

  mul_.assign(size_t(n) * n, 0);
  inv_.assign(n, 0);
  ord_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto it = index.find(elems_[a] * elems_[b]);
      if (it == index.end())
        throw Error("element table is not closed under composition");
      mul_[size_t(a) * n + b] = it->second;
    }
    inv_[a] = index.at(elems_[a].inverse());
    ord_[a] = elems_[a].order();
  }
}

int Group::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || !(*it == p)) return -1;
  return int(it - elems_.begin());
}

bool Group::is_cyclic() const {
  for (int i = 0; i < order(); ++i)
    if (ord_[i] == order()) return true;
  return order() == 1;
}

std::vector<int> Group::prime_divisors() const {
  std::vector<int> out;
  int n = order();
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

SubgroupHandle trivial_subgroup(const GroupPtr& g) {
  DynBitset b(g->order());
  b.set(g->identity());
  return {g, b};
}

SubgroupHandle full_subgroup(const GroupPtr& g) {
  DynBitset b(g->order());
  for (int i = 0; i < g->order(); ++i) b.set(i);
  return {g, b};
}

DynBitset closure(const Group& g, const std::vector<int>& seed) {
  DynBitset members(g.order());
  members.set(g.identity());
  std::vector<int> work{g.identity()};
  for (size_t i = 0; i < work.size(); ++i) {
    for (int s : seed) {
      int y = g.mul(work[i], s);
      if (!members.test(y)) {
        members.set(y);
        work.push_back(y);
      }
    }
  }
  return members;
}

SubgroupHandle subgroup_generated(const GroupPtr& parent,
                                  const std::vector<int>& seed) {
  for (int s : seed)
    if (s < 0 || s >= parent->order())
      throw Error("seed index out of range");
  return {parent, closure(*parent, seed)};
}

DynBitset set_product(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.parent.get() != b.parent.get())
    throw ParentMismatch("set_product across different parent groups");
  const Group& g = *a.parent;
  DynBitset out(g.order());
  a.members.for_each([&](int x) {
    b.members.for_each([&](int y) { out.set(g.mul(x, y)); });
  });
  return out;
}

bool permutes(const SubgroupHandle& a, const SubgroupHandle& b) {
  return set_product(a, b) == set_product(b, a);
}

DynBitset conjugate_members(const Group& g, const DynBitset& members, int by) {
  DynBitset out(g.order());
  members.for_each([&](int x) { out.set(g.conj(x, by)); });
  return out;
}

SubgroupHandle conjugate_subgroup(const SubgroupHandle& h, int by) {
  return {h.parent, conjugate_members(*h.parent, h.members, by)};
}

bool is_normal(const Group& g, const DynBitset& members) {
  // Invariance under the generators implies invariance under the group.
  for (int gen : g.generator_indices())
    if (conjugate_members(g, members, gen) != members) return false;
  return true;
}

bool is_normal(const SubgroupHandle& h) { return is_normal(*h.parent, h.members); }

bool is_normal_in(const Group& g, const DynBitset& h, const DynBitset& y) {
  bool ok = true;
  y.for_each([&](int e) {
    if (ok && conjugate_members(g, h, e) != h) ok = false;
  });
  return ok;
}

DynBitset core_in(const Group& g, const DynBitset& h, const DynBitset& y) {
  if (!h.subset_of(y)) throw NotContained("core_in requires H <= Y");
  DynBitset core = h;
  y.for_each([&](int e) { core = core & conjugate_members(g, h, e); });
  return core;
}

SubgroupHandle core_in(const SubgroupHandle& h, const SubgroupHandle& y) {
  if (h.parent.get() != y.parent.get())
    throw ParentMismatch("core_in across different parent groups");
  return {h.parent, core_in(*h.parent, h.members, y.members)};
}

DynBitset QuotientGroup::project(const DynBitset& members) const {
  DynBitset out(quotient->order());
  members.for_each([&](int e) { out.set(projection[e]); });
  return out;
}

DynBitset QuotientGroup::lift(const DynBitset& members) const {
  DynBitset out(base->order());
  for (int e = 0; e < base->order(); ++e)
    if (members.test(projection[e])) out.set(e);
  return out;
}

QuotientGroup quotient_group(const GroupPtr& g, const SubgroupHandle& r) {
  if (r.parent.get() != g.get())
    throw ParentMismatch("kernel belongs to a different group");
  if (!is_normal(r)) throw NotNormal("quotient kernel is not normal");

  const int n = g->order();
  // Cosets keyed by their least element.
  std::vector<int> coset_id(n, -1);
  std::vector<int> reps;
  for (int e = 0; e < n; ++e) {
    if (coset_id[e] >= 0) continue;
    int id = int(reps.size());
    reps.push_back(e);
    r.members.for_each([&](int k) { coset_id[g->mul(k, e)] = id; });
  }

  // Right multiplication action on cosets; faithful since R is normal.
  const int m = int(reps.size());
  std::vector<Permutation> gens;
  for (int gen : g->generator_indices()) {
    std::vector<int> img(m);
    for (int c = 0; c < m; ++c) img[c] = coset_id[g->mul(reps[c], gen)];
    gens.push_back(Permutation(std::move(img)));
  }
  GroupPtr q = Group::generate(m, gens, g->name() + "/" + std::to_string(r.order()),
                               n + 1);
  if (q->order() * r.order() != n)
    throw Error("quotient order mismatch");

  std::vector<int> proj(n);
  for (int e = 0; e < n; ++e) {
    std::vector<int> img(m);
    for (int c = 0; c < m; ++c) img[c] = coset_id[g->mul(reps[c], e)];
    proj[e] = q->index_of(Permutation(std::move(img)));
    if (proj[e] < 0) throw Error("coset action fell outside the quotient");
  }
  return {g, r, q, std::move(proj)};
}

Section::Section(GroupPtr parent, DynBitset h, DynBitset k)
    : parent_(std::move(parent)), h_(std::move(h)), k_(std::move(k)) {
  if (!k_.subset_of(h_)) throw NotContained("section bottom not inside top");
  if (!is_normal_in(*parent_, k_, h_))
    throw NotNormal("section bottom not normal in top");
  const int n = parent_->order();
  coset_of_.assign(n, -1);
  h_.for_each([&](int e) {
    if (coset_of_[e] >= 0) return;
    int id = int(reps_.size());
    reps_.push_back(e);
    k_.for_each([&](int x) { coset_of_[parent_->mul(x, e)] = id; });
  });
  // Element order guarantees reps_ is sorted by least member and that the
  // coset K itself (containing the identity) comes first.
}

int Section::element_order(int a) const {
  int x = a, n = 1;
  while (x != identity()) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

bool Section::normalized_by(int g) const {
  return conjugate_members(*parent_, h_, g) == h_ &&
         conjugate_members(*parent_, k_, g) == k_;
}

}  // namespace siglat
