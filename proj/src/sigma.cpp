#include "siglat/sigma.hpp"

#include <algorithm>
#include <cctype>

namespace siglat {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors_of(long n) {
  std::vector<int> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(int(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(int(n));
  return out;
}

std::vector<int> parse_prime_list(const std::string& s, size_t from, size_t to) {
  std::vector<int> out;
  int v = 0;
  bool have = false;
  for (size_t i = from; i <= to; ++i) {
    char c = i < to ? s[i] : ',';
    if (std::isdigit(uint8_t(c))) {
      v = v * 10 + (c - '0');
      have = true;
    } else if (c == ',') {
      if (!have) throw ParseError("empty entry in prime list", 1, int(i) + 1);
      if (!is_prime(v))
        throw ParseError(std::to_string(v) + " is not prime", 1, int(i) + 1);
      out.push_back(v);
      v = 0;
      have = false;
    } else {
      throw ParseError("unexpected character in prime list", 1, int(i) + 1);
    }
  }
  std::sort(out.begin(), out.end());
  for (size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i] == out[i + 1])
      throw ParseError("repeated prime in block", 1, int(from) + 1);
  return out;
}

}  // namespace

int PrimePartition::classify(int p) const {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), p))
      return int(i);
  return leftover == PrimePartition::Leftover::Singletons ? -p : -1;
}

PrimePartition parse_partition(const std::string& text) {
  PrimePartition out;
  out.name = text;
  if (text == "sigma0") return out;
  if (text.rfind("pi:", 0) == 0) {
    out.blocks.push_back(parse_prime_list(text, 3, text.size()));
    if (out.blocks.back().empty())
      throw ParseError("pi: needs at least one prime", 1, 4);
    out.leftover = PrimePartition::Leftover::OneBlock;
    return out;
  }
  if (text.rfind("blocks:", 0) == 0) {
    size_t i = 7;
    while (i < text.size() && text[i] == '[') {
      size_t close = text.find(']', i);
      if (close == std::string::npos)
        throw ParseError("unterminated block", 1, int(i) + 1);
      out.blocks.push_back(parse_prime_list(text, i + 1, close));
      i = close + 1;
    }
    if (out.blocks.empty())
      throw ParseError("blocks: needs at least one [..] block", 1, 8);
    if (i < text.size()) {
      std::string rest = text.substr(i);
      if (rest == ";rest=singletons")
        out.leftover = PrimePartition::Leftover::Singletons;
      else if (rest == ";rest=one_block")
        out.leftover = PrimePartition::Leftover::OneBlock;
      else
        throw ParseError("expected ;rest=singletons or ;rest=one_block", 1,
                         int(i) + 1);
    }
    // Disjointness across blocks.
    for (size_t a = 0; a < out.blocks.size(); ++a)
      for (size_t b = a + 1; b < out.blocks.size(); ++b)
        for (int p : out.blocks[a])
          if (std::binary_search(out.blocks[b].begin(), out.blocks[b].end(), p))
            throw ParseError("blocks are not disjoint", 1, 8);
    return out;
  }
  throw ParseError("unknown partition spec: " + text, 1, 1);
}

bool is_sigma_number(long n, const std::vector<int>& block) {
  for (int p : prime_divisors_of(n))
    if (!std::binary_search(block.begin(), block.end(), p)) return false;
  return true;
}

long sigma_part(long n, const std::vector<int>& block) {
  long out = 1;
  for (int p : block)
    while (n % p == 0) {
      n /= p;
      out *= p;
    }
  return out;
}

std::vector<std::vector<int>> sigma_of_group(const Group& g,
                                             const PrimePartition& sigma) {
  std::vector<int> primes = g.prime_divisors();
  std::vector<std::vector<int>> out;
  std::vector<char> taken(primes.size(), 0);
  for (const auto& block : sigma.blocks) {
    std::vector<int> b;
    for (size_t i = 0; i < primes.size(); ++i)
      if (std::binary_search(block.begin(), block.end(), primes[i])) {
        b.push_back(primes[i]);
        taken[i] = 1;
      }
    if (!b.empty()) out.push_back(std::move(b));
  }
  if (sigma.leftover == PrimePartition::Leftover::OneBlock) {
    std::vector<int> rest;
    for (size_t i = 0; i < primes.size(); ++i)
      if (!taken[i]) rest.push_back(primes[i]);
    if (!rest.empty()) out.push_back(std::move(rest));
  } else {
    for (size_t i = 0; i < primes.size(); ++i)
      if (!taken[i]) out.push_back({primes[i]});
  }
  return out;
}

GroupData build_group_data(const GroupPtr& g, const Caps& caps) {
  if (g->order() > caps.max_order)
    throw OrderCapExceeded("group order " + std::to_string(g->order()) +
                           " exceeds cap " + std::to_string(caps.max_order));
  GroupData gd;
  gd.g = g;
  gd.subs = all_subgroups(g, caps.max_subgroups);
  gd.full = build_lattice(gd.subs);
  const int n = gd.size();

  gd.normal_flag.assign(n, 0);
  for (int i = 0; i < n; ++i)
    if (is_normal(*g, gd.subs.members[i])) {
      gd.normal_flag[i] = 1;
      gd.normal_idx.push_back(i);
    }

  gd.leq.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      gd.leq[a][b] = gd.subs.members[a].subset_of(gd.subs.members[b]);

  gd.permutes_t.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    gd.permutes_t[a][a] = 1;
    for (int b = 0; b < a; ++b) {
      bool p = permutes(gd.subs.handle(a), gd.subs.handle(b));
      gd.permutes_t[a][b] = gd.permutes_t[b][a] = p;
    }
  }

  gd.normal_in_t.assign(n, std::vector<char>(n, 0));
  gd.core_ord.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!gd.leq[a][b]) continue;
      DynBitset core =
          core_in(*g, gd.subs.members[a], gd.subs.members[b]);
      gd.core_ord[a][b] = core.count();
      gd.normal_in_t[a][b] = (gd.core_ord[a][b] == gd.order_of(a));
    }

  gd.conj_class.assign(n, {});
  for (int a = 0; a < n; ++a) {
    std::vector<int> orbit{a};
    std::vector<char> in_orbit(n, 0);
    in_orbit[a] = 1;
    for (size_t i = 0; i < orbit.size(); ++i)
      for (int gen : g->generator_indices()) {
        int c = gd.index_of(
            conjugate_members(*g, gd.subs.members[orbit[i]], gen));
        if (!in_orbit[c]) {
          in_orbit[c] = 1;
          orbit.push_back(c);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    gd.conj_class[a] = std::move(orbit);
  }
  return gd;
}

namespace {

bool order_in_one_block(long q, const std::vector<std::vector<int>>& blocks) {
  if (q == 1) return true;
  for (const auto& b : blocks)
    if (sigma_part(q, b) == q) return true;
  return false;
}

// O_{sigma_i}(H): join of the subgroups of h that are normal in h with order
// supported on the block.
int core_of(const GroupData& gd, int h, const std::vector<int>& block) {
  int acc = 0;  // trivial subgroup
  for (int s = 0; s < gd.size(); ++s) {
    if (!gd.leq[s][h] || !gd.normal_in_t[s][h]) continue;
    if (sigma_part(gd.order_of(s), block) != gd.order_of(s)) continue;
    acc = gd.join(acc, s);
  }
  return acc;
}

bool subgroup_sigma_nilpotent(const GroupData& gd,
                              const std::vector<std::vector<int>>& blocks,
                              int h) {
  for (const auto& block : blocks) {
    long part = sigma_part(gd.order_of(h), block);
    if (part == 1) continue;
    if (gd.order_of(core_of(gd, h, block)) != part) return false;
  }
  return true;
}

}  // namespace

int sigma_core_of(const GroupData& gd, int h, const std::vector<int>& block) {
  return core_of(gd, h, block);
}

DynBitset sigma_residual_members(const GroupData& gd, const DynBitset& h,
                                 const std::vector<int>& block) {
  std::vector<int> seed;
  h.for_each([&](int e) {
    if (sigma_part(gd.g->element_order(e), block) == 1) seed.push_back(e);
  });
  return closure(*gd.g, seed);
}

bool quotient_is_sigma_nilpotent(const GroupData& gd, const SigmaContext& sc,
                                 int n_idx) {
  long m = gd.g->order() / gd.order_of(n_idx);
  for (const auto& block : sc.blocks) {
    long part = sigma_part(m, block);
    if (part == 1) continue;
    // O_{sigma_i}(G/N) lifted: join of normal M >= N with sigma_i index over N.
    int acc = n_idx;
    for (int mi : gd.normal_idx) {
      if (!gd.leq[n_idx][mi]) continue;
      if (!is_sigma_number(gd.order_of(mi) / gd.order_of(n_idx), block))
        continue;
      acc = gd.join(acc, mi);
    }
    if (gd.order_of(acc) / gd.order_of(n_idx) != part) return false;
  }
  return true;
}

const std::vector<char>& SigmaContext::subnormal_in(const GroupData& gd,
                                                    int top) const {
  auto it = subnorm_in_.find(top);
  if (it != subnorm_in_.end()) return it->second;
  const int n = gd.size();
  std::vector<char> reach(n, 0);
  reach[top] = 1;
  // Family order is ascending by subgroup order; a proper step always
  // increases the order, so one descending pass suffices.
  for (int x = n - 1; x >= 0; --x) {
    if (reach[x] || !gd.leq[x][top]) continue;
    for (int y = x + 1; y < n; ++y)
      if (reach[y] && gd.leq[x][y] && gd.leq[y][top] && step[x][y]) {
        reach[x] = 1;
        break;
      }
  }
  return subnorm_in_.emplace(top, std::move(reach)).first->second;
}

SigmaContext build_sigma_context(const GroupData& gd,
                                 const PrimePartition& sigma) {
  SigmaContext sc;
  const int n = gd.size();
  sc.blocks = sigma_of_group(*gd.g, sigma);

  sc.hall.resize(sc.blocks.size());
  for (size_t bi = 0; bi < sc.blocks.size(); ++bi) {
    long part = sigma_part(gd.g->order(), sc.blocks[bi]);
    for (int i = 0; i < n; ++i)
      if (gd.order_of(i) == part) sc.hall[bi].push_back(i);
  }
  sc.sigma_full = true;
  for (const auto& h : sc.hall)
    if (h.empty()) sc.sigma_full = false;

  sc.sprimary.assign(n, 0);
  for (int i = 0; i < n; ++i)
    sc.sprimary[i] = order_in_one_block(gd.order_of(i), sc.blocks);

  sc.snilp.assign(n, 0);
  for (int i = 0; i < n; ++i)
    sc.snilp[i] = subgroup_sigma_nilpotent(gd, sc.blocks, i);

  // Chain step: X normal in Y, or Y over the core of X in Y is sigma-primary.
  sc.step.assign(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !gd.leq[x][y]) continue;
      if (gd.normal_in_t[x][y]) {
        sc.step[x][y] = 1;
        continue;
      }
      long q = gd.order_of(y) / gd.core_ord[x][y];
      sc.step[x][y] = order_in_one_block(q, sc.blocks);
    }

  sc.subnorm.assign(n, 0);
  sc.subnorm[n - 1] = 1;
  for (int x = n - 2; x >= 0; --x)
    for (int y = x + 1; y < n; ++y)
      if (sc.subnorm[y] && gd.leq[x][y] && sc.step[x][y]) {
        sc.subnorm[x] = 1;
        break;
      }

  sc.sperm.assign(n, 0);
  sc.fullperm.assign(n, 0);
  if (sc.sigma_full) {
    for (int i = 0; i < n; ++i) {
      bool all = true;
      for (const auto& halls : sc.hall)
        for (int h : halls)
          if (!gd.permutes_t[i][h]) {
            all = false;
            break;
          }
      sc.sperm[i] = all;

      bool full = true;
      for (const auto& halls : sc.hall) {
        bool found = false;
        for (int h : halls) {
          bool cls_ok = true;
          for (int c : gd.conj_class[h])
            if (!gd.permutes_t[i][c]) {
              cls_ok = false;
              break;
            }
          if (cls_ok) {
            found = true;
            break;
          }
        }
        if (!found) {
          full = false;
          break;
        }
      }
      sc.fullperm[i] = full;
    }
    for (int i = 0; i < n; ++i)
      if (sc.sperm[i]) sc.sperm_family.push_back(i);
  }

  sc.core_idx.resize(sc.blocks.size());
  sc.residual_idx.resize(sc.blocks.size());
  for (size_t bi = 0; bi < sc.blocks.size(); ++bi) {
    sc.core_idx[bi] = core_of(gd, n - 1, sc.blocks[bi]);

    // Residual, two independent routes that must agree: generation by
    // block-avoiding elements, and intersection of normal subgroups with
    // block-supported index.
    DynBitset gen = sigma_residual_members(
        gd, gd.subs.members[n - 1], sc.blocks[bi]);
    int by_generation = gd.index_of(gen);
    int by_intersection = n - 1;
    for (int mi : gd.normal_idx)
      if (is_sigma_number(gd.g->order() / gd.order_of(mi), sc.blocks[bi]))
        by_intersection = gd.meet(by_intersection, mi);
    if (by_generation != by_intersection)
      throw Error("sigma-residual routes disagree for " + gd.g->name());
    sc.residual_idx[bi] = by_generation;
  }

  // Sigma-nilpotent residual: intersection of the normal subgroups with
  // sigma-nilpotent quotient. N = G always qualifies.
  sc.nilres_idx = n - 1;
  for (int mi : gd.normal_idx)
    if (quotient_is_sigma_nilpotent(gd, sc, mi))
      sc.nilres_idx = gd.meet(sc.nilres_idx, mi);
  sc.nilres_quotient_nilpotent =
      quotient_is_sigma_nilpotent(gd, sc, sc.nilres_idx);

  return sc;
}

bool is_sigma_full(const GroupData& gd, const PrimePartition& sigma) {
  return build_sigma_context(gd, sigma).sigma_full;
}

bool is_sigma_permutable(const GroupData& gd, const SigmaContext& sc,
                         int idx) {
  if (!sc.sigma_full)
    throw NotSigmaFull(gd.g->name() + " has no complete Hall sigma-set");
  return sc.sperm[idx];
}

SubgroupFamily sigma_permutable_family(const GroupData& gd,
                                       const SigmaContext& sc) {
  if (!sc.sigma_full)
    throw NotSigmaFull(gd.g->name() + " has no complete Hall sigma-set");
  std::vector<DynBitset> out;
  for (int i : sc.sperm_family) out.push_back(gd.subs.members[i]);
  return {gd.g, std::move(out)};
}

bool is_sigma_subnormal(const GroupData& gd, const SigmaContext& sc, int idx) {
  (void)gd;
  return sc.subnorm[idx];
}

bool is_fully_permutable(const GroupData& gd, const SigmaContext& sc,
                         int idx) {
  if (!sc.sigma_full)
    throw NotSigmaFull(gd.g->name() + " has no complete Hall sigma-set");
  return sc.fullperm[idx];
}

std::vector<std::vector<int>> complete_hall_sets(const SigmaContext& sc) {
  if (!sc.sigma_full) return {};
  std::vector<std::vector<int>> out{{}};
  for (const auto& halls : sc.hall) {
    std::vector<std::vector<int>> next;
    for (const auto& partial : out)
      for (int h : halls) {
        auto copy = partial;
        copy.push_back(h);
        next.push_back(std::move(copy));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace siglat
