#include "siglat/lattice.hpp"

namespace siglat {

SigmaLattice build_lattice(const SubgroupFamily& family) {
  if (family.members.empty()) throw Error("empty lattice family");
  SigmaLattice l;
  l.parent = family.parent;
  l.elems = family.members;
  const int n = l.size();
  l.meet.assign(n, std::vector<int>(n, -1));
  l.join.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int m = family.index_of(l.elems[a] & l.elems[b]);
      if (m < 0)
        throw NotClosed("family not closed under intersection", true, a, b);
      std::vector<int> seed = l.elems[a].indices();
      for (int e : l.elems[b].indices()) seed.push_back(e);
      int j = family.index_of(closure(*l.parent, seed));
      if (j < 0)
        throw NotClosed("family not closed under join", false, a, b);
      l.meet[a][b] = l.meet[b][a] = m;
      l.join[a][b] = l.join[b][a] = j;
    }
  }
  l.bottom = 0;
  l.top = 0;
  for (int i = 0; i < n; ++i) {
    if (l.leq(i, l.bottom)) l.bottom = i;
    if (l.leq(l.top, i)) l.top = i;
  }
  return l;
}

bool is_distributive(const SigmaLattice& l, Triple* witness) {
  const int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (l.meet[a][l.join[b][c]] != l.join[l.meet[a][b]][l.meet[a][c]]) {
          if (witness) *witness = {a, b, c};
          return false;
        }
  return true;
}

bool is_modular(const SigmaLattice& l, Triple* witness) {
  const int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!l.leq(a, c)) continue;
        if (l.join[a][l.meet[b][c]] != l.meet[l.join[a][b]][c]) {
          if (witness) *witness = {a, b, c};
          return false;
        }
      }
  return true;
}

bool is_meet_distributive_element(const SigmaLattice& l, int a) {
  if (a < 0 || a >= l.size())
    throw ElementNotInLattice("element index out of range");
  for (int b = 0; b < l.size(); ++b)
    for (int c = 0; c < l.size(); ++c)
      if (l.meet[a][l.join[b][c]] != l.join[l.meet[a][b]][l.meet[a][c]])
        return false;
  return true;
}

std::optional<Triple> find_diamond(const SigmaLattice& l) {
  const int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int j = l.join[a][b], m = l.meet[a][b];
      for (int c = b + 1; c < n; ++c)
        if (l.join[a][c] == j && l.join[b][c] == j && l.meet[a][c] == m &&
            l.meet[b][c] == m)
          return Triple{a, b, c};
    }
  return std::nullopt;
}

std::optional<Triple> find_pentagon(const SigmaLattice& l) {
  const int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (a == c || !l.leq(a, c)) continue;
      for (int b = 0; b < n; ++b) {
        if (l.leq(b, c) || l.leq(a, b)) continue;
        if (l.join[a][b] == l.join[c][b] && l.meet[a][b] == l.meet[c][b])
          return Triple{a, b, c};
      }
    }
  return std::nullopt;
}

SigmaLattice interval(const SigmaLattice& l, int a, int b) {
  if (!l.leq(a, b)) throw NotComparable("interval endpoints not comparable");
  std::vector<DynBitset> sub;
  for (int x = 0; x < l.size(); ++x)
    if (l.leq(a, x) && l.leq(x, b)) sub.push_back(l.elems[x]);
  return build_lattice({l.parent, std::move(sub)});
}

}  // namespace siglat
