#include "siglat/iso.hpp"

#include <algorithm>
#include <functional>

namespace siglat {

namespace {

// Greedy minimal generating sequence for a section: repeatedly adjoin the
// least coset outside the subgroup generated so far.
std::vector<int> generating_sequence(const Section& s) {
  std::vector<int> gens;
  std::vector<char> gen_set(s.size(), 0);
  gen_set[s.identity()] = 1;
  int covered = 1;
  while (covered < s.size()) {
    int pick = -1;
    for (int c = 0; c < s.size(); ++c)
      if (!gen_set[c]) {
        pick = c;
        break;
      }
    gens.push_back(pick);
    // Close gen_set under multiplication.
    std::vector<int> members;
    for (int c = 0; c < s.size(); ++c)
      if (gen_set[c]) members.push_back(c);
    gen_set[pick] = 1;
    members.push_back(pick);
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j) {
        int p = s.mul(members[i], members[j]);
        if (!gen_set[p]) {
          gen_set[p] = 1;
          members.push_back(p);
        }
      }
    covered = int(members.size());
  }
  return gens;
}

struct IsoSearch {
  const Section& s1;
  const Section& s2;
  std::vector<int> gens;                    // generating sequence of s1
  std::vector<std::vector<int>> act1, act2; // actor actions on cosets
  std::function<bool(const SectionMap&)> emit;  // false = keep searching

  bool equivariant(const SectionMap& f) const {
    for (size_t a = 0; a < act1.size(); ++a)
      for (int x = 0; x < s1.size(); ++x)
        if (f[act1[a][x]] != act2[a][f[x]]) return false;
    return true;
  }

  // Extends the partial map by gen -> image and closes under products.
  // domain/defined are restored by the caller on backtrack.
  bool extend(std::vector<int>& f, std::vector<char>& used,
              std::vector<int>& domain, int gen, int image) {
    if (f[gen] >= 0) return f[gen] == image;
    if (used[image]) return false;
    size_t mark_d = domain.size();
    f[gen] = image;
    used[image] = 1;
    domain.push_back(gen);
    for (size_t i = mark_d; i < domain.size(); ++i) {
      for (size_t j = 0; j < domain.size(); ++j) {
        int pairs[2][2] = {{domain[i], domain[j]}, {domain[j], domain[i]}};
        for (auto& pr : pairs) {
          int p = s1.mul(pr[0], pr[1]);
          int q = s2.mul(f[pr[0]], f[pr[1]]);
          if (f[p] < 0) {
            if (used[q]) goto fail;
            f[p] = q;
            used[q] = 1;
            domain.push_back(p);
          } else if (f[p] != q) {
            goto fail;
          }
        }
      }
    }
    return true;
  fail:
    for (size_t i = mark_d; i < domain.size(); ++i) {
      used[f[domain[i]]] = 0;
      f[domain[i]] = -1;
    }
    domain.resize(mark_d);
    return false;
  }

  // Returns true when emit() accepted a map and the search should stop.
  bool search(std::vector<int>& f, std::vector<char>& used,
              std::vector<int>& domain, size_t gi) {
    if (gi == gens.size()) {
      if (int(domain.size()) != s1.size()) return false;
      if (!equivariant(f)) return false;
      return emit(f);
    }
    int gen = gens[gi];
    if (f[gen] >= 0) return search(f, used, domain, gi + 1);
    int want = s1.element_order(gen);
    for (int cand = 0; cand < s2.size(); ++cand) {
      if (used[cand] || s2.element_order(cand) != want) continue;
      size_t mark = domain.size();
      if (extend(f, used, domain, gen, cand)) {
        if (search(f, used, domain, gi + 1)) return true;
        for (size_t i = mark; i < domain.size(); ++i) {
          used[f[domain[i]]] = 0;
          f[domain[i]] = -1;
        }
        domain.resize(mark);
      }
    }
    return false;
  }

  bool run() {
    std::vector<int> f(s1.size(), -1);
    std::vector<char> used(s2.size(), 0);
    std::vector<int> domain;
    f[s1.identity()] = s2.identity();
    used[s2.identity()] = 1;
    domain.push_back(s1.identity());
    return search(f, used, domain, 0);
  }
};

std::vector<std::vector<int>> actor_actions(const Section& s,
                                            const std::vector<int>& actors) {
  std::vector<std::vector<int>> acts;
  for (int a : actors) {
    if (!s.normalized_by(a))
      throw ActorDoesNotNormalize("actor does not normalize the section");
    std::vector<int> act(s.size());
    for (int c = 0; c < s.size(); ++c) act[c] = s.conj(c, a);
    acts.push_back(std::move(act));
  }
  return acts;
}

}  // namespace

std::optional<SectionMap> find_equivariant_isomorphism(
    const Section& h1, const Section& h2, const std::vector<int>& actors) {
  if (h1.size() != h2.size())
    throw OrderMismatch("sections have different orders");
  std::optional<SectionMap> found;
  IsoSearch is{h1, h2, generating_sequence(h1), actor_actions(h1, actors),
               actor_actions(h2, actors), [&](const SectionMap& f) {
                 found = f;
                 return true;
               }};
  is.run();
  return found;
}

std::vector<SectionMap> all_isomorphisms(const Section& h1, const Section& h2) {
  if (h1.size() != h2.size()) return {};
  std::vector<SectionMap> out;
  IsoSearch is{h1, h2, generating_sequence(h1), {}, {},
               [&](const SectionMap& f) {
                 out.push_back(f);
                 return false;
               }};
  is.run();
  return out;
}

std::vector<DynBitset> characteristic_subgroups(
    const SubgroupHandle& a, const std::vector<DynBitset>& subgroups_of_a,
    int aut_cap) {
  if (a.order() > aut_cap)
    throw OrderCapExceeded("automorphism search cap " + std::to_string(aut_cap) +
                           " exceeded by subgroup of order " +
                           std::to_string(a.order()));
  DynBitset triv(a.parent->order());
  triv.set(a.parent->identity());
  Section sec(a.parent, a.members, triv);
  std::vector<SectionMap> auts = all_isomorphisms(sec, sec);

  std::vector<DynBitset> out;
  for (const DynBitset& s : subgroups_of_a) {
    if (!s.subset_of(a.members)) throw NotContained("candidate not inside A");
    bool invariant = true;
    for (const SectionMap& f : auts) {
      DynBitset image(a.parent->order());
      s.for_each([&](int e) { image.set(sec.rep(f[sec.coset_of(e)])); });
      if (image != s) {
        invariant = false;
        break;
      }
    }
    if (invariant) out.push_back(s);
  }
  return out;
}

}  // namespace siglat
