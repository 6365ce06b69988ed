#include "siglat/theorems.hpp"

#include <algorithm>

namespace siglat {

namespace {

std::string fmt_sub(const GroupData& gd, int i) {
  return "#" + std::to_string(i) + "(|" + std::to_string(gd.order_of(i)) + "|)";
}

std::string fmt_block(const std::vector<int>& block) {
  std::string s = "{";
  for (size_t i = 0; i < block.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(block[i]);
  }
  return s + "}";
}

std::string fmt_triple(const SigmaLattice& l, const Triple& t) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (i) s += ",";
    s += "#" + std::to_string(t[i]) + "(|" +
         std::to_string(l.order_of(t[i])) + "|)";
  }
  return s;
}

LatticeInfo lattice_info(const SigmaLattice& l) {
  LatticeInfo info;
  info.size = l.size();
  Triple w{};
  info.distributive = is_distributive(l, &w);
  if (!info.distributive) info.distributive_witness = fmt_triple(l, w);
  info.modular = is_modular(l, &w);
  if (!info.modular) info.modular_witness = fmt_triple(l, w);
  auto diamond = find_diamond(l);
  auto pentagon = find_pentagon(l);
  info.has_diamond = diamond.has_value();
  info.has_pentagon = pentagon.has_value();
  info.laws_consistent =
      (info.distributive == (info.modular && !info.has_diamond)) &&
      (info.modular == !info.has_pentagon);
  return info;
}

bool section_sigma_nilpotent(const Section& s,
                             const std::vector<std::vector<int>>& blocks) {
  std::vector<int> ord(s.size());
  for (int i = 0; i < s.size(); ++i) ord[i] = s.element_order(i);
  for (const auto& block : blocks) {
    std::vector<int> part;
    for (int i = 0; i < s.size(); ++i)
      if (sigma_part(ord[i], block) == ord[i]) part.push_back(i);
    for (int a : part)
      for (int b : part) {
        int p = s.mul(a, b);
        if (sigma_part(ord[p], block) != ord[p]) return false;
      }
  }
  return true;
}

// The per-pair verification driver. Builds everything once, then walks the
// theorem and lemma statements.
struct PairRun {
  GroupWork& gw;
  const PrimePartition& sigma;
  PairReport& r;
  SigmaContext sc;
  std::vector<SigmaContext> qsc;  // per quotient, parallel to gd.normal_idx
  std::optional<SigmaLattice> sperm_lat;
  std::vector<int> sperm_pos;  // family index -> lattice index, or -1

  const GroupData& gd() const { return gw.gd; }
  int nsubs() const { return gw.gd.size(); }
  int top() const { return gw.gd.size() - 1; }

  void push_lemma(const std::string& id, Check c) {
    if (!c.holds)
      r.violations.push_back("lemma " + id + ": " + c.witness);
    r.lemmas.push_back({id, std::move(c)});
  }

  void run();
  void build_quotient_contexts();
  void theorem_b();
  void theorem_a();
  Check cond_iv(bool covers);
  void theorem_c();
  void lemma_suite();
};

void PairRun::build_quotient_contexts() {
  for (const auto& qw : gw.quotients)
    qsc.push_back(build_sigma_context(qw.gd, sigma));
}

int image_index(const QuotientWork& qw, const GroupData& base,
                const DynBitset& members) {
  (void)base;
  return qw.gd.index_of(qw.q.project(members));
}

void PairRun::theorem_b() {
  Check c;
  c.checked = int(sc.sperm_family.size());
  try {
    SubgroupFamily fam = sigma_permutable_family(gd(), sc);
    sperm_lat = build_lattice(fam);
    sperm_pos.assign(nsubs(), -1);
    for (size_t i = 0; i < sc.sperm_family.size(); ++i)
      sperm_pos[sc.sperm_family[i]] = int(i);
  } catch (const NotClosed& e) {
    c.holds = false;
    int fa = sc.sperm_family[e.a], fb = sc.sperm_family[e.b];
    c.witness = std::string(e.meet ? "meet" : "join") + " of " +
                fmt_sub(gd(), fa) + " and " + fmt_sub(gd(), fb) +
                " is not sigma-permutable";
    r.violations.push_back("theorem B: " + c.witness);
  }
  r.theorem_b = c;
}

Check PairRun::cond_iv(bool covers) {
  Check c;
  for (size_t ni = 0; ni < gw.quotients.size(); ++ni) {
    const QuotientWork& qw = gw.quotients[ni];
    const SigmaContext& s = qsc[ni];
    if (!s.sigma_full) {
      c.holds = false;
      c.witness = "quotient by " + fmt_sub(gd(), gd().normal_idx[ni]) +
                  " is not sigma-full";
      return c;
    }
    const GroupData& qd = qw.gd;
    auto covers_in_sperm = [&](int k, int h) {
      for (int m : s.sperm_family) {
        if (m == k || m == h) continue;
        if (qd.leq[k][m] && qd.leq[m][h]) return false;
      }
      return true;
    };
    for (size_t bi = 0; bi < s.blocks.size(); ++bi) {
      const auto& block = s.blocks[bi];
      std::vector<int> lsig;
      for (int i : s.sperm_family)
        if (sigma_part(qd.order_of(i), block) == qd.order_of(i))
          lsig.push_back(i);
      std::vector<int> actors = generating_set(
          *qw.q.quotient, qd.subs.members[s.residual_idx[bi]]);
      for (size_t ki = 0; ki < lsig.size(); ++ki) {
        int k = lsig[ki];
        for (size_t hi = 0; hi < lsig.size(); ++hi) {
          int h = lsig[hi];
          if (h == k || !qd.leq[k][h] || !qd.normal_in_t[k][h]) continue;
          if (covers && !covers_in_sperm(k, h)) continue;
          for (size_t li = hi + 1; li < lsig.size(); ++li) {
            int l = lsig[li];
            if (qd.order_of(l) != qd.order_of(h)) break;
            if (!qd.leq[k][l] || !qd.normal_in_t[k][l]) continue;
            if (covers && !covers_in_sperm(k, l)) continue;
            ++c.checked;
            Section s1(qw.q.quotient, qd.subs.members[h], qd.subs.members[k]);
            Section s2(qw.q.quotient, qd.subs.members[l], qd.subs.members[k]);
            if (find_equivariant_isomorphism(s1, s2, actors)) {
              c.holds = false;
              c.witness = "R=" + fmt_sub(gd(), gd().normal_idx[ni]) +
                          " sigma_i=" + fmt_block(block) + " K=" +
                          fmt_sub(qd, k) + " H=" + fmt_sub(qd, h) + " L=" +
                          fmt_sub(qd, l);
              return c;
            }
          }
        }
      }
    }
  }
  return c;
}

void PairRun::theorem_a() {
  TheoremAReport& a = r.theorem_a;
  const GroupData& d = gd();

  if (sperm_lat) {
    Triple w{};
    a.direct_distributive = is_distributive(*sperm_lat, &w);
    if (!a.direct_distributive) a.direct_witness = fmt_triple(*sperm_lat, w);
  }

  // (i) every two members of L are permutable
  for (size_t i = 0; i < sc.sperm_family.size() && a.cond_i.holds; ++i)
    for (size_t j = i + 1; j < sc.sperm_family.size(); ++j) {
      ++a.cond_i.checked;
      int x = sc.sperm_family[i], y = sc.sperm_family[j];
      if (!d.permutes_t[x][y]) {
        a.cond_i.holds = false;
        a.cond_i.witness = fmt_sub(d, x) + "," + fmt_sub(d, y);
        break;
      }
    }

  // (ii) the normal subgroup lattice is distributive
  {
    std::vector<DynBitset> nb;
    for (int i : d.normal_idx) nb.push_back(d.subs.members[i]);
    SigmaLattice nl = build_lattice({d.g, std::move(nb)});
    Triple w{};
    a.cond_ii.checked = nl.size();
    a.cond_ii.holds = is_distributive(nl, &w);
    if (!a.cond_ii.holds) a.cond_ii.witness = fmt_triple(nl, w);
  }

  // (iii) G/D cyclic and D meet-distributive in L
  {
    int dres = sc.nilres_idx;
    bool cyclic = false;
    for (int e = 0; e < d.g->order() && !cyclic; ++e) {
      int cyc = d.index_of(closure(*d.g, {e}));
      if (d.join(dres, cyc) == top()) cyclic = true;
    }
    bool meetdist = true;
    if (sperm_lat) {
      int pos = sperm_pos[dres];
      meetdist = pos >= 0 && is_meet_distributive_element(*sperm_lat, pos);
    }
    a.cond_iii.checked = 1;
    a.cond_iii.holds = cyclic && meetdist;
    if (!a.cond_iii.holds)
      a.cond_iii.witness = std::string("D=") + fmt_sub(d, dres) +
                           (cyclic ? "" : " G/D not cyclic") +
                           (meetdist ? "" : " D not meet-distributive");
  }

  a.cond_iv_full = cond_iv(false);
  a.cond_iv_covers = cond_iv(true);

  if (!a.consistent())
    r.violations.push_back(
        "theorem A: distributivity " +
        std::string(a.direct_distributive ? "holds" : "fails") +
        " but conditions (i)-(iv) " +
        std::string(a.conditions_full() ? "hold" : "fail"));
  if (!a.sufficiency_ok())
    r.violations.push_back(
        "proposition 3.10: conditions with covers-mode (iv) hold but the "
        "lattice is not distributive");
  if (a.cond_iv_full.holds && !a.cond_iv_covers.holds)
    r.violations.push_back(
        "condition (iv): full quantification holds but covers mode fails");
}

void PairRun::theorem_c() {
  Check c;
  const GroupData& d = gd();
  for (int ai = 0; ai < nsubs(); ++ai) {
    if (!sc.snilp[ai]) continue;
    bool self_perm = sc.sperm[ai];

    bool halls_perm = true;
    for (const auto& block : sc.blocks) {
      long part = sigma_part(d.order_of(ai), block);
      if (part == 1) continue;
      for (int h = 0; h < nsubs(); ++h)
        if (d.leq[h][ai] && d.order_of(h) == part && !sc.sperm[h])
          halls_perm = false;
    }

    const auto& chars = gw.characteristic_of(ai);
    if (!chars) {
      ++r.cap_skips;
      continue;
    }
    bool chars_perm = true;
    for (int v : *chars)
      if (!sc.sperm[v]) chars_perm = false;

    ++c.checked;
    if (!(self_perm == halls_perm && halls_perm == chars_perm)) {
      c.holds = false;
      c.witness = "A=" + fmt_sub(d, ai) + " perm=" +
                  std::to_string(self_perm) + " halls=" +
                  std::to_string(halls_perm) + " chars=" +
                  std::to_string(chars_perm);
      break;
    }
  }
  if (!c.holds) r.violations.push_back("theorem C: " + c.witness);
  r.theorem_c = c;
}

void PairRun::lemma_suite() {
  const GroupData& d = gd();
  const int n = nsubs();

  {  // Lemma 2.1: A,B both permuting with H => <A,B> permutes with H
    Check c;
    for (int a = 0; a < n && c.holds; ++a)
      for (int b = 0; b <= a && c.holds; ++b)
        for (int h = 0; h < n; ++h) {
          if (!d.permutes_t[a][h] || !d.permutes_t[b][h]) continue;
          ++c.checked;
          if (!d.permutes_t[d.join(a, b)][h]) {
            c.holds = false;
            c.witness = "A=" + fmt_sub(d, a) + " B=" + fmt_sub(d, b) +
                        " H=" + fmt_sub(d, h);
            break;
          }
        }
    push_lemma("2.1", c);
  }

  {  // Lemma 2.2: fully permutable => sigma-subnormal
    Check c;
    for (int a = 0; a < n; ++a) {
      if (!sc.fullperm[a]) continue;
      ++c.checked;
      if (!sc.subnorm[a]) {
        c.holds = false;
        c.witness = fmt_sub(d, a);
        break;
      }
    }
    push_lemma("2.2", c);
  }

  {  // Lemma 2.3(1): A sigma-subnormal => A∩K sigma-subnormal in K
    Check c;
    for (int a = 0; a < n && c.holds; ++a) {
      if (!sc.subnorm[a]) continue;
      for (int k = 0; k < n; ++k) {
        ++c.checked;
        const auto& reach = sc.subnormal_in(d, k);
        if (!reach[d.meet(a, k)]) {
          c.holds = false;
          c.witness = "A=" + fmt_sub(d, a) + " K=" + fmt_sub(d, k);
          break;
        }
      }
    }
    push_lemma("2.3.1", c);
  }

  {  // Lemma 2.3(2): |G:A| a sigma_i-number => O^{sigma_i}(A) = O^{sigma_i}(G)
    Check c;
    for (int a = 0; a < n && c.holds; ++a) {
      if (!sc.subnorm[a]) continue;
      for (size_t bi = 0; bi < sc.blocks.size(); ++bi) {
        long index = d.g->order() / d.order_of(a);
        if (!is_sigma_number(index, sc.blocks[bi])) continue;
        ++c.checked;
        DynBitset res_a =
            sigma_residual_members(d, d.subs.members[a], sc.blocks[bi]);
        if (d.index_of(res_a) != sc.residual_idx[bi]) {
          c.holds = false;
          c.witness = "A=" + fmt_sub(d, a) + " block=" +
                      fmt_block(sc.blocks[bi]);
          break;
        }
      }
    }
    push_lemma("2.3.2", c);
  }

  {  // Lemma 2.3(3): AN/N is sigma-subnormal in G/N
    Check c;
    for (int a = 0; a < n && c.holds; ++a) {
      if (!sc.subnorm[a]) continue;
      for (size_t ni = 0; ni < gw.quotients.size(); ++ni) {
        ++c.checked;
        const QuotientWork& qw = gw.quotients[ni];
        int an = d.join(a, d.normal_idx[ni]);
        int img = image_index(qw, d, d.subs.members[an]);
        if (!qsc[ni].subnorm[img]) {
          c.holds = false;
          c.witness = "A=" + fmt_sub(d, a) + " N=" +
                      fmt_sub(d, d.normal_idx[ni]);
          break;
        }
      }
    }
    push_lemma("2.3.3", c);
  }

  {  // Lemma 2.3(4): sigma-subnormal sigma_i-group lies in O_{sigma_i}(G)
    Check c;
    for (int a = 0; a < n && c.holds; ++a) {
      if (!sc.subnorm[a]) continue;
      for (size_t bi = 0; bi < sc.blocks.size(); ++bi) {
        if (sigma_part(d.order_of(a), sc.blocks[bi]) != d.order_of(a))
          continue;
        ++c.checked;
        if (!d.leq[a][sc.core_idx[bi]]) {
          c.holds = false;
          c.witness = "A=" + fmt_sub(d, a) + " block=" +
                      fmt_block(sc.blocks[bi]);
          break;
        }
      }
    }
    push_lemma("2.3.4", c);
  }

  {  // Lemma 2.3(5): A∩H is a Hall sigma_i-subgroup of A
    Check c;
    for (int a = 0; a < n && c.holds; ++a) {
      if (!sc.subnorm[a]) continue;
      for (size_t bi = 0; bi < sc.blocks.size() && c.holds; ++bi) {
        long part_a = sigma_part(d.order_of(a), sc.blocks[bi]);
        if (part_a == 1) continue;  // sigma_i not in sigma(A)
        for (int h : sc.hall[bi]) {
          if (d.order_of(h) == 1) continue;
          ++c.checked;
          if (d.order_of(d.meet(a, h)) != part_a) {
            c.holds = false;
            c.witness = "A=" + fmt_sub(d, a) + " H=" + fmt_sub(d, h);
            break;
          }
        }
      }
    }
    push_lemma("2.3.5", c);
  }

  {  // Lemma 2.3(6): joins of sigma-subnormal sigma-nilpotent subgroups
    Check c;
    for (int a = 0; a < n && c.holds; ++a) {
      if (!sc.subnorm[a] || !sc.snilp[a]) continue;
      for (int k = 0; k <= a; ++k) {
        if (!sc.subnorm[k] || !sc.snilp[k]) continue;
        ++c.checked;
        if (!sc.snilp[d.join(a, k)]) {
          c.holds = false;
          c.witness = "A=" + fmt_sub(d, a) + " K=" + fmt_sub(d, k);
          break;
        }
      }
    }
    push_lemma("2.3.6", c);
  }

  {  // Lemma 2.4(1): O^{sigma_i}(G) normalizes fully permutable sigma_i-groups
    Check c;
    for (int a = 0; a < n && c.holds; ++a) {
      if (!sc.fullperm[a]) continue;
      for (size_t bi = 0; bi < sc.blocks.size(); ++bi) {
        if (sigma_part(d.order_of(a), sc.blocks[bi]) != d.order_of(a))
          continue;
        ++c.checked;
        bool ok = true;
        d.subs.members[sc.residual_idx[bi]].for_each([&](int e) {
          if (ok &&
              conjugate_members(*d.g, d.subs.members[a], e) !=
                  d.subs.members[a])
            ok = false;
        });
        if (!ok) {
          c.holds = false;
          c.witness = "A=" + fmt_sub(d, a) + " block=" +
                      fmt_block(sc.blocks[bi]);
          break;
        }
      }
    }
    push_lemma("2.4.1", c);
  }

  {  // Lemma 2.4(2): A/A_G sigma-nilpotent for fully permutable A
    Check c;
    for (int a = 0; a < n; ++a) {
      if (!sc.fullperm[a]) continue;
      ++c.checked;
      DynBitset core = core_in(*d.g, d.subs.members[a],
                               d.subs.members[n - 1]);
      Section s(d.g, d.subs.members[a], core);
      if (!section_sigma_nilpotent(s, sc.blocks)) {
        c.holds = false;
        c.witness = "A=" + fmt_sub(d, a);
        break;
      }
    }
    push_lemma("2.4.2", c);
  }

  {  // Lemma 2.4(3): normalized sigma_i-groups are fully permutable
    Check c;
    for (int b = 0; b < n && c.holds; ++b) {
      for (size_t bi = 0; bi < sc.blocks.size(); ++bi) {
        if (sigma_part(d.order_of(b), sc.blocks[bi]) != d.order_of(b))
          continue;
        bool normalized = true;
        d.subs.members[sc.residual_idx[bi]].for_each([&](int e) {
          if (normalized &&
              conjugate_members(*d.g, d.subs.members[b], e) !=
                  d.subs.members[b])
            normalized = false;
        });
        if (!normalized) continue;
        ++c.checked;
        if (!sc.fullperm[b]) {
          c.holds = false;
          c.witness = "B=" + fmt_sub(d, b) + " block=" +
                      fmt_block(sc.blocks[bi]);
          break;
        }
      }
    }
    push_lemma("2.4.3", c);
  }

  {  // Proposition 2.5: characteristic subgroups inherit AH=HA
    Check c;
    for (int a = 0; a < n && c.holds; ++a) {
      if (!sc.snilp[a] || !sc.subnorm[a]) continue;
      const auto& chars = gw.characteristic_of(a);
      if (!chars) {
        ++r.cap_skips;
        continue;
      }
      for (const auto& halls : sc.hall) {
        for (int h : halls) {
          if (!d.permutes_t[a][h]) continue;
          for (int v : *chars) {
            ++c.checked;
            if (!d.permutes_t[v][h]) {
              c.holds = false;
              c.witness = "A=" + fmt_sub(d, a) + " V=" + fmt_sub(d, v) +
                          " H=" + fmt_sub(d, h);
              break;
            }
          }
          if (!c.holds) break;
        }
        if (!c.holds) break;
      }
    }
    push_lemma("2.5", c);
  }

  {  // Proposition 3.1: fully permutable => sigma-permutable
    Check c;
    for (int a = 0; a < n; ++a) {
      if (!sc.fullperm[a]) continue;
      ++c.checked;
      if (!sc.sperm[a]) {
        c.holds = false;
        c.witness = fmt_sub(d, a);
        break;
      }
    }
    push_lemma("3.1", c);
  }

  {  // Lemma 3.2(2): HR/R sigma-permutable in G/R
    Check c;
    for (size_t ni = 0; ni < gw.quotients.size() && c.holds; ++ni) {
      const QuotientWork& qw = gw.quotients[ni];
      for (int h : sc.sperm_family) {
        ++c.checked;
        int img = image_index(qw, d, d.subs.members[h]);
        if (!qsc[ni].sperm[img]) {
          c.holds = false;
          c.witness = "H=" + fmt_sub(d, h) + " R=" +
                      fmt_sub(d, d.normal_idx[ni]);
          break;
        }
      }
    }
    push_lemma("3.2.2", c);
  }

  {  // Lemma 3.2(1): V/R sigma-permutable in G/R => V sigma-permutable
    Check c;
    for (size_t ni = 0; ni < gw.quotients.size() && c.holds; ++ni) {
      const QuotientWork& qw = gw.quotients[ni];
      for (int vbar : qsc[ni].sperm_family) {
        ++c.checked;
        int v = d.index_of(qw.q.lift(qw.gd.subs.members[vbar]));
        if (!sc.sperm[v]) {
          c.holds = false;
          c.witness = "V=" + fmt_sub(d, v) + " R=" +
                      fmt_sub(d, d.normal_idx[ni]);
          break;
        }
      }
    }
    push_lemma("3.2.1", c);
  }

  if (sperm_lat && lattice_info(*sperm_lat).modular) {
    // Lemma 3.3 on the modular sublattice L_{sigma per}(G)
    Check c;
    const SigmaLattice& l = *sperm_lat;
    auto fidx = [&](int li) { return sc.sperm_family[li]; };
    for (int u = 0; u < l.size() && c.holds; ++u)
      for (int v = 0; v < l.size() && c.holds; ++v)
        for (int w = 0; w < l.size(); ++w) {
          int jv = l.join[u][v];
          if (!d.normal_in_t[fidx(w)][fidx(jv)]) continue;
          int un = l.join[u][w];
          int vn = l.join[v][w];
          if (!d.permutes_t[fidx(u)][fidx(l.meet[v][un])]) continue;
          if (!d.permutes_t[fidx(u)][fidx(vn)]) continue;
          ++c.checked;
          if (!d.permutes_t[fidx(u)][fidx(v)]) {
            c.holds = false;
            c.witness = "U=" + fmt_sub(d, fidx(u)) + " V=" +
                        fmt_sub(d, fidx(v)) + " N=" + fmt_sub(d, fidx(w));
            break;
          }
        }
    push_lemma("3.3", c);
  }

  {  // Proposition 3.4: L_{sigma_i}(G) is a sublattice; distributive => permutable
    Check c;
    for (size_t bi = 0; bi < sc.blocks.size() && c.holds; ++bi) {
      std::vector<int> lsig;
      for (int i : sc.sperm_family)
        if (sigma_part(d.order_of(i), sc.blocks[bi]) == d.order_of(i))
          lsig.push_back(i);
      for (size_t i = 0; i < lsig.size() && c.holds; ++i)
        for (size_t j = 0; j <= i; ++j) {
          ++c.checked;
          int m = d.meet(lsig[i], lsig[j]);
          int jn = d.join(lsig[i], lsig[j]);
          bool closed =
              sc.sperm[m] && sc.sperm[jn] &&
              sigma_part(d.order_of(jn), sc.blocks[bi]) == d.order_of(jn);
          if (!closed) {
            c.holds = false;
            c.witness = "not a sublattice at " + fmt_sub(d, lsig[i]) + "," +
                        fmt_sub(d, lsig[j]);
            break;
          }
        }
      if (!c.holds) break;
      std::vector<DynBitset> bits;
      for (int i : lsig) bits.push_back(d.subs.members[i]);
      SigmaLattice ls = build_lattice({d.g, std::move(bits)});
      if (is_distributive(ls)) {
        for (size_t i = 0; i < lsig.size() && c.holds; ++i)
          for (size_t j = 0; j < i; ++j) {
            ++c.checked;
            if (!d.permutes_t[lsig[i]][lsig[j]]) {
              c.holds = false;
              c.witness = "distributive but AB!=BA at " +
                          fmt_sub(d, lsig[i]) + "," + fmt_sub(d, lsig[j]);
              break;
            }
          }
      }
    }
    push_lemma("3.4", c);
  }

  {  // Corollary 3.5: distributive L => every two members permutable
    Check c;
    if (sperm_lat && r.lattice.distributive) {
      for (size_t i = 0; i < sc.sperm_family.size() && c.holds; ++i)
        for (size_t j = 0; j < i; ++j) {
          ++c.checked;
          if (!d.permutes_t[sc.sperm_family[i]][sc.sperm_family[j]]) {
            c.holds = false;
            c.witness = fmt_sub(d, sc.sperm_family[i]) + "," +
                        fmt_sub(d, sc.sperm_family[j]);
            break;
          }
        }
    }
    push_lemma("3.5", c);
  }

  {  // Lemma 3.7: diagonal complements of internal direct products
    Check c;
    for (int ai : d.normal_idx) {
      for (int bi : d.normal_idx) {
        if (d.meet(ai, bi) != 0) continue;
        if (long(d.order_of(ai)) * d.order_of(bi) != d.g->order()) continue;
        if (d.order_of(ai) != d.order_of(bi)) continue;
        DynBitset triv(d.g->order());
        triv.set(0);
        Section sa(d.g, d.subs.members[ai], triv);
        Section sb(d.g, d.subs.members[bi], triv);
        for (const SectionMap& f : all_isomorphisms(sa, sb)) {
          ++c.checked;
          DynBitset cbits(d.g->order());
          d.subs.members[ai].for_each([&](int e) {
            cbits.set(d.g->mul(e, sb.rep(f[sa.coset_of(e)])));
          });
          int ci = d.index_of(cbits);
          bool ok = ci >= 0 && d.meet(ai, ci) == 0 && d.meet(bi, ci) == 0 &&
                    d.join(ai, ci) == n - 1 && d.join(bi, ci) == n - 1 &&
                    long(d.order_of(ai)) * d.order_of(ci) == d.g->order();
          if (!ok) {
            c.holds = false;
            c.witness = "A=" + fmt_sub(d, ai) + " B=" + fmt_sub(d, bi);
            break;
          }
        }
        if (!c.holds) break;
      }
      if (!c.holds) break;
    }
    push_lemma("3.7", c);
  }

  {  // Lemma 3.8: sigma-nilpotency closure properties
    Check c;
    for (int ai : d.normal_idx) {
      if (!sc.snilp[ai]) continue;
      for (int bi : d.normal_idx) {
        if (!sc.snilp[bi]) continue;
        ++c.checked;
        if (!sc.snilp[d.join(ai, bi)]) {
          c.holds = false;
          c.witness = "product of " + fmt_sub(d, ai) + " and " +
                      fmt_sub(d, bi);
        }
      }
    }
    if (c.holds && sc.snilp[n - 1]) {
      for (int s = 0; s < n; ++s) {
        ++c.checked;
        if (!sc.snilp[s]) {
          c.holds = false;
          c.witness = "subgroup " + fmt_sub(d, s);
          break;
        }
      }
      for (size_t ni = 0; ni < gw.quotients.size() && c.holds; ++ni) {
        ++c.checked;
        int qtop = gw.quotients[ni].gd.size() - 1;
        if (!qsc[ni].snilp[qtop]) {
          c.holds = false;
          c.witness = "image by " + fmt_sub(d, d.normal_idx[ni]);
        }
      }
    }
    if (c.holds && !sc.nilres_quotient_nilpotent) {
      c.holds = false;
      c.witness = "G / G^{N_sigma} is not sigma-nilpotent";
    }
    push_lemma("3.8", c);
  }

  {  // Lemma 3.9: (G/N)^{N_sigma} = G^{N_sigma} N / N
    Check c;
    for (size_t ni = 0; ni < gw.quotients.size(); ++ni) {
      ++c.checked;
      const QuotientWork& qw = gw.quotients[ni];
      int dn = d.join(sc.nilres_idx, d.normal_idx[ni]);
      if (image_index(qw, d, d.subs.members[dn]) != qsc[ni].nilres_idx) {
        c.holds = false;
        c.witness = "N=" + fmt_sub(d, d.normal_idx[ni]);
        break;
      }
    }
    push_lemma("3.9", c);
  }

  {  // Section 1 criterion: L_n(G) distributive iff in every G/R two
     // G/R-isomorphic normal subgroups coincide
    Check c;
    std::vector<DynBitset> nb;
    for (int i : d.normal_idx) nb.push_back(d.subs.members[i]);
    bool dist = is_distributive(build_lattice({d.g, std::move(nb)}));
    bool coincide = true;
    std::string where;
    for (size_t ni = 0; ni < gw.quotients.size() && coincide; ++ni) {
      const QuotientWork& qw = gw.quotients[ni];
      const GroupData& qd = qw.gd;
      std::vector<int> actors = qw.q.quotient->generator_indices();
      DynBitset triv(qw.q.quotient->order());
      triv.set(0);
      for (size_t x = 0; x < qd.normal_idx.size() && coincide; ++x)
        for (size_t y = x + 1; y < qd.normal_idx.size(); ++y) {
          int hx = qd.normal_idx[x], hy = qd.normal_idx[y];
          if (qd.order_of(hx) != qd.order_of(hy)) continue;
          ++c.checked;
          Section s1(qw.q.quotient, qd.subs.members[hx], triv);
          Section s2(qw.q.quotient, qd.subs.members[hy], triv);
          if (find_equivariant_isomorphism(s1, s2, actors)) {
            coincide = false;
            where = "R=" + fmt_sub(d, d.normal_idx[ni]) + " H=" +
                    fmt_sub(qd, hx) + " L=" + fmt_sub(qd, hy);
            break;
          }
        }
    }
    if (dist != coincide) {
      c.holds = false;
      c.witness = "L_n(G) distributive=" + std::to_string(dist) +
                  " but coincidence=" + std::to_string(coincide) +
                  (where.empty() ? "" : " at " + where);
    }
    push_lemma("normal_lattice_criterion", c);
  }

  {  // Remark 1.2(ii): sigma-nilpotent iff every subgroup sigma-permutable
    Check c;
    c.checked = 1;
    bool all_perm = int(sc.sperm_family.size()) == n;
    if (sc.snilp[n - 1] != all_perm) {
      c.holds = false;
      c.witness = "sigma-nilpotent=" + std::to_string(bool(sc.snilp[n - 1])) +
                  " all-permutable=" + std::to_string(all_perm);
    }
    push_lemma("remark_1.2.ii", c);
  }

  {  // Remark 1.2(iii) + Corollary 1.6: the sigma^0 specialization agrees
     // with an independent S-permutability check, and is meet/join closed.
    Check c;
    bool all_singletons = true;
    for (const auto& b : sc.blocks)
      if (b.size() != 1) all_singletons = false;
    if (all_singletons) {
      std::vector<char> s_perm(n, 1);
      for (int i = 0; i < n; ++i) {
        for (int p : d.g->prime_divisors()) {
          long part = sigma_part(d.g->order(), {p});
          for (int s = 0; s < n; ++s) {
            if (d.order_of(s) != part) continue;
            if (!permutes(d.subs.handle(i), d.subs.handle(s))) {
              s_perm[i] = 0;
              break;
            }
          }
          if (!s_perm[i]) break;
        }
      }
      for (int i = 0; i < n; ++i) {
        ++c.checked;
        if (s_perm[i] != sc.sperm[i]) {
          c.holds = false;
          c.witness = "S-permutability disagrees at " + fmt_sub(d, i);
          break;
        }
      }
      // Kegel closure on the independent family.
      for (int i = 0; i < n && c.holds; ++i)
        for (int j = 0; j < n; ++j) {
          if (!s_perm[i] || !s_perm[j]) continue;
          ++c.checked;
          if (!s_perm[d.meet(i, j)] || !s_perm[d.join(i, j)]) {
            c.holds = false;
            c.witness = "Kegel closure fails at " + fmt_sub(d, i) + "," +
                        fmt_sub(d, j);
            break;
          }
        }
    }
    push_lemma("remark_1.2.iii", c);
  }

  {  // Ore: G cyclic iff L(G) distributive
    Check c;
    c.checked = 1;
    if (d.g->is_cyclic() != r.full_lattice.distributive) {
      c.holds = false;
      c.witness = "cyclic=" + std::to_string(d.g->is_cyclic()) +
                  " distributive=" + std::to_string(r.full_lattice.distributive);
    }
    push_lemma("ore", c);
  }
}

void PairRun::run() {
  r.group = gd().g->name();
  r.partition = sigma.name;
  r.group_order = gd().g->order();
  r.degree = gd().g->degree();
  sc = build_sigma_context(gd(), sigma);
  r.sigma_full = sc.sigma_full;
  r.full_lattice = lattice_info(gd().full);
  if (!r.full_lattice.laws_consistent)
    r.violations.push_back("lattice law routes disagree on L(G)");
  if (!sc.sigma_full) return;

  build_quotient_contexts();
  r.sperm_count = int(sc.sperm_family.size());
  for (int i : sc.sperm_family) r.sperm_orders.push_back(gd().order_of(i));

  theorem_b();
  if (sperm_lat) {
    r.lattice = lattice_info(*sperm_lat);
    if (!r.lattice.laws_consistent)
      r.violations.push_back("lattice law routes disagree on L_sigmaper(G)");
  }
  theorem_a();
  theorem_c();
  lemma_suite();
}

}  // namespace

std::vector<int> generating_set(const Group& g, const DynBitset& members) {
  std::vector<int> gens;
  DynBitset cur = closure(g, {});
  while (cur != members) {
    int pick = -1;
    members.for_each([&](int e) {
      if (pick < 0 && !cur.test(e)) pick = e;
    });
    gens.push_back(pick);
    cur = closure(g, gens);
  }
  return gens;
}

GroupWork GroupWork::build(const GroupPtr& g, const Caps& caps) {
  GroupWork gw;
  gw.g = g;
  gw.caps = caps;
  gw.gd = build_group_data(g, caps);
  for (int ni : gw.gd.normal_idx) {
    QuotientGroup q = quotient_group(g, gw.gd.subs.handle(ni));
    GroupData qd = build_group_data(q.quotient, caps);
    gw.quotients.push_back({std::move(q), std::move(qd)});
  }
  gw.char_memo_.resize(gw.gd.size());
  gw.char_done_.assign(gw.gd.size(), 0);
  return gw;
}

const std::optional<std::vector<int>>& GroupWork::characteristic_of(int idx) {
  if (!char_done_[idx]) {
    char_done_[idx] = 1;
    std::vector<DynBitset> candidates;
    std::vector<int> cand_idx;
    for (int s = 0; s < gd.size(); ++s)
      if (gd.leq[s][idx]) {
        candidates.push_back(gd.subs.members[s]);
        cand_idx.push_back(s);
      }
    try {
      std::vector<DynBitset> chars = characteristic_subgroups(
          gd.subs.handle(idx), candidates, caps.max_aut);
      std::vector<int> out;
      for (const DynBitset& b : chars) out.push_back(gd.index_of(b));
      char_memo_[idx] = std::move(out);
    } catch (const OrderCapExceeded&) {
      char_memo_[idx] = std::nullopt;
    }
  }
  return char_memo_[idx];
}

PairReport analyze_pair(GroupWork& gw, const PrimePartition& sigma) {
  PairReport report;
  PairRun run{gw, sigma, report};
  run.run();
  return report;
}

}  // namespace siglat
