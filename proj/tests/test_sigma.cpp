#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "siglat/corpus.hpp"
#include "siglat/sigma.hpp"

using namespace siglat;

namespace {

GroupPtr by_name(const std::string& name) {
  for (const GroupSpec& s : builtin_corpus())
    if (s.name == name) return s.build();
  REQUIRE(false);
  return nullptr;
}

GroupData data(const std::string& name) {
  return build_group_data(by_name(name));
}

int index_of_order_unique(const GroupData& gd, int order) {
  int found = -1;
  for (int i = 0; i < gd.size(); ++i)
    if (gd.order_of(i) == order) {
      REQUIRE(found == -1);
      found = i;
    }
  REQUIRE(found >= 0);
  return found;
}

// Test-side sigma-part of n, written independently of the library helper.
long part_oracle(long n, const std::vector<int>& block) {
  long out = 1;
  for (int p : block)
    while (n % p == 0) {
      n /= p;
      out *= p;
    }
  return out;
}

// Literal sigma-nilpotency of a subgroup: for every block, the elements of
// the subgroup with block-supported order form a normal subgroup, and those
// pieces multiply up to the whole subgroup.
bool snilp_oracle(const Group& g, const DynBitset& members,
                  const std::vector<std::vector<int>>& blocks) {
  long prod = 1;
  std::vector<int> elems = members.indices();
  for (const auto& block : blocks) {
    std::vector<int> piece;
    DynBitset bits(g.order());
    for (int e : elems)
      if (part_oracle(g.element_order(e), block) == g.element_order(e)) {
        piece.push_back(e);
        bits.set(e);
      }
    for (int a : piece)
      for (int b : piece)
        if (!bits.test(g.mul(a, b))) return false;
    for (int a : piece)
      for (int y : elems)
        if (!bits.test(g.conj(a, y))) return false;
    prod *= long(piece.size());
  }
  return prod == long(elems.size());
}

}  // namespace

TEST_CASE("partition grammar") {
  PrimePartition s0 = parse_partition("sigma0");
  CHECK(s0.blocks.empty());
  CHECK(s0.classify(2) == -2);
  CHECK(s0.classify(97) == -97);

  PrimePartition pi = parse_partition("pi:2,3");
  REQUIRE(pi.blocks.size() == 1);
  CHECK(pi.blocks[0] == std::vector<int>{2, 3});
  CHECK(pi.classify(3) == 0);
  CHECK(pi.classify(5) == -1);  // the complement block

  PrimePartition b = parse_partition("blocks:[2,5][3];rest=singletons");
  REQUIRE(b.blocks.size() == 2);
  CHECK(b.classify(5) == 0);
  CHECK(b.classify(3) == 1);
  CHECK(b.classify(7) == -7);

  PrimePartition ob = parse_partition("blocks:[3];rest=one_block");
  CHECK(ob.classify(3) == 0);
  CHECK(ob.classify(2) == -1);
  CHECK(ob.classify(5) == -1);

  CHECK_THROWS_AS(parse_partition(""), ParseError);
  CHECK_THROWS_AS(parse_partition("pi:"), ParseError);
  CHECK_THROWS_AS(parse_partition("pi:4"), ParseError);
  CHECK_THROWS_AS(parse_partition("pi:2,2"), ParseError);
  CHECK_THROWS_AS(parse_partition("blocks:[2][2]"), ParseError);
  CHECK_THROWS_AS(parse_partition("blocks:[2];rest=nope"), ParseError);
  CHECK_THROWS_AS(parse_partition("nonsense"), ParseError);
}

TEST_CASE("sigma numbers and parts") {
  CHECK(is_sigma_number(1, {2}));
  CHECK(is_sigma_number(8, {2}));
  CHECK_FALSE(is_sigma_number(12, {2}));
  CHECK(is_sigma_number(12, {2, 3}));
  for (long n : {1L, 12L, 60L, 720L})
    for (auto block : {std::vector<int>{2}, {2, 3}, {5}, {7}})
      CHECK(sigma_part(n, block) == part_oracle(n, block));
}

TEST_CASE("sigma of group") {
  GroupPtr a4 = by_name("A4");
  auto blocks = sigma_of_group(*a4, parse_partition("pi:2"));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<int>{2});
  CHECK(blocks[1] == std::vector<int>{3});

  // explicit block does not meet pi(S3); leftovers collapse to one block
  auto s3blocks = sigma_of_group(*by_name("S3"), parse_partition("pi:5"));
  REQUIRE(s3blocks.size() == 1);
  CHECK(s3blocks[0] == std::vector<int>{2, 3});

  CHECK(sigma_of_group(*by_name("C1"), parse_partition("sigma0")).empty());
}

TEST_CASE("sigma fullness on A5") {
  GroupData gd = data("A5");
  CHECK(is_sigma_full(gd, parse_partition("sigma0")));
  CHECK_FALSE(is_sigma_full(gd, parse_partition("pi:2")));  // no Hall {3,5}
  CHECK(is_sigma_full(gd, parse_partition("pi:2,3")));      // A4 and C5
  CHECK_FALSE(is_sigma_full(gd, parse_partition("blocks:[2,5][3];rest=singletons")));
  CHECK_FALSE(is_sigma_full(gd, parse_partition("blocks:[3];rest=one_block")));
}

TEST_CASE("every corpus group is sigma0-full") {
  for (const GroupSpec& spec : builtin_corpus()) {
    CAPTURE(spec.name);
    CHECK(is_sigma_full(build_group_data(spec.build()),
                        parse_partition("sigma0")));
  }
}

TEST_CASE("Hall subgroups and complete Hall sets of S4") {
  GroupData gd = data("S4");
  SigmaContext sc = build_sigma_context(gd, parse_partition("sigma0"));
  REQUIRE(sc.blocks.size() == 2);
  CHECK(sc.hall[0].size() == 3);  // Sylow 2: three D8's
  for (int h : sc.hall[0]) CHECK(gd.order_of(h) == 8);
  CHECK(sc.hall[1].size() == 4);  // Sylow 3
  for (int h : sc.hall[1]) CHECK(gd.order_of(h) == 3);
  CHECK(complete_hall_sets(sc).size() == 12);
}

TEST_CASE("sigma-permutable families") {
  GroupData s3 = data("S3");
  SigmaContext sc = build_sigma_context(s3, parse_partition("sigma0"));
  std::vector<int> orders;
  for (int i : sc.sperm_family) orders.push_back(s3.order_of(i));
  CHECK(orders == std::vector<int>{1, 3, 6});

  GroupData q8 = data("Q8");
  SigmaContext qc = build_sigma_context(q8, parse_partition("sigma0"));
  CHECK(int(qc.sperm_family.size()) == q8.size());

  // wrappers raise when the group is not sigma-full
  GroupData a5 = data("A5");
  SigmaContext bad = build_sigma_context(a5, parse_partition("pi:2"));
  CHECK_THROWS_AS(is_sigma_permutable(a5, bad, 0), NotSigmaFull);
  CHECK_THROWS_AS(sigma_permutable_family(a5, bad), NotSigmaFull);
  CHECK_THROWS_AS(is_fully_permutable(a5, bad, 0), NotSigmaFull);
}

TEST_CASE("sigma-subnormality in S4") {
  GroupData gd = data("S4");
  SigmaContext sc = build_sigma_context(gd, parse_partition("sigma0"));
  int a4 = index_of_order_unique(gd, 12);
  CHECK(sc.subnorm[a4]);
  CHECK(sc.subnorm[0]);
  CHECK(sc.subnorm[gd.size() - 1]);
  // V4 and its subgroups are subnormal
  for (int i = 0; i < gd.size(); ++i)
    if (gd.normal_flag[i]) CHECK(sc.subnorm[i]);
  // no transposition subgroup or Sylow 2 is sigma-subnormal
  bool saw_c2 = false, saw_d8 = false;
  for (int i = 0; i < gd.size(); ++i) {
    if (gd.order_of(i) == 8) {
      CHECK_FALSE(sc.subnorm[i]);
      saw_d8 = true;
    }
    if (gd.order_of(i) == 3) CHECK_FALSE(sc.subnorm[i]);
  }
  (void)saw_c2;
  CHECK(saw_d8);
}

TEST_CASE("fully permutable subgroups of S3") {
  GroupData gd = data("S3");
  SigmaContext sc = build_sigma_context(gd, parse_partition("sigma0"));
  int a3 = index_of_order_unique(gd, 3);
  CHECK(is_fully_permutable(gd, sc, a3));
  for (int i = 0; i < gd.size(); ++i)
    if (gd.order_of(i) == 2) CHECK_FALSE(is_fully_permutable(gd, sc, i));
}

TEST_CASE("sigma-nilpotency matches the literal definition") {
  for (const char* name :
       {"C12", "C24", "S3", "D8", "Q8", "D12", "A4", "S4", "SL(2,3)", "Dic3",
        "A5", "S3xC4", "C2xC4"}) {
    GroupData gd = data(name);
    CAPTURE(name);
    for (const char* part : {"sigma0", "pi:2", "pi:2,3"}) {
      PrimePartition sigma = parse_partition(part);
      SigmaContext sc = build_sigma_context(gd, sigma);
      for (int i = 0; i < gd.size(); ++i) {
        CAPTURE(part);
        CAPTURE(i);
        CHECK(bool(sc.snilp[i]) ==
              snilp_oracle(*gd.g, gd.subs.members[i],
                           sigma_of_group(*gd.g, sigma)));
      }
    }
  }
}

TEST_CASE("cores and residuals of S4") {
  GroupData gd = data("S4");
  SigmaContext sc = build_sigma_context(gd, parse_partition("sigma0"));
  CHECK(gd.order_of(sc.core_idx[0]) == 4);       // O_2(S4) = V4
  CHECK(gd.order_of(sc.core_idx[1]) == 1);       // O_3(S4) = 1
  CHECK(gd.order_of(sc.residual_idx[0]) == 12);  // O^2(S4) = A4
  CHECK(gd.order_of(sc.residual_idx[1]) == 24);  // O^3(S4) = S4
  CHECK(gd.order_of(sc.nilres_idx) == 12);       // S4 / A4 = C2
}

TEST_CASE("nilpotent residual chain") {
  GroupData a4 = data("A4");
  SigmaContext sc = build_sigma_context(a4, parse_partition("sigma0"));
  CHECK(a4.order_of(sc.nilres_idx) == 4);  // A4 / V4 = C3

  GroupData c12 = data("C12");
  SigmaContext cc = build_sigma_context(c12, parse_partition("sigma0"));
  CHECK(c12.order_of(cc.nilres_idx) == 1);
  CHECK(cc.nilres_quotient_nilpotent);
}

TEST_CASE("quotient sigma-nilpotency from the normal family") {
  GroupData gd = data("S4");
  SigmaContext sc = build_sigma_context(gd, parse_partition("sigma0"));
  int v4 = -1, a4 = -1;
  for (int i : gd.normal_idx) {
    if (gd.order_of(i) == 4) v4 = i;
    if (gd.order_of(i) == 12) a4 = i;
  }
  REQUIRE(v4 >= 0);
  REQUIRE(a4 >= 0);
  CHECK(quotient_is_sigma_nilpotent(gd, sc, a4));        // C2
  CHECK_FALSE(quotient_is_sigma_nilpotent(gd, sc, v4));  // S3
  CHECK(quotient_is_sigma_nilpotent(gd, sc, gd.size() - 1));
  CHECK_FALSE(quotient_is_sigma_nilpotent(gd, sc, 0));
}

TEST_CASE("residual members route") {
  GroupData gd = data("S4");
  DynBitset full = gd.subs.members[gd.size() - 1];
  CHECK(sigma_residual_members(gd, full, {2}).count() == 12);
  CHECK(sigma_residual_members(gd, full, {3}).count() == 24);
  CHECK(sigma_residual_members(gd, full, {2, 3}).count() == 1);
}

TEST_CASE("sigma core of subgroups") {
  GroupData gd = data("S4");
  int a4 = index_of_order_unique(gd, 12);
  CHECK(gd.order_of(sigma_core_of(gd, a4, {2})) == 4);
  CHECK(gd.order_of(sigma_core_of(gd, a4, {3})) == 1);
  CHECK(gd.order_of(sigma_core_of(gd, gd.size() - 1, {2, 3})) == 24);
}
