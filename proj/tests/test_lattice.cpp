#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "siglat/corpus.hpp"
#include "siglat/lattice.hpp"

using namespace siglat;

namespace {

GroupPtr by_name(const std::string& name) {
  for (const GroupSpec& s : builtin_corpus())
    if (s.name == name) return s.build();
  REQUIRE(false);
  return nullptr;
}

SigmaLattice full_lattice(const std::string& name) {
  return build_lattice(all_subgroups(by_name(name)));
}

}  // namespace

TEST_CASE("meet and join tables are order-theoretically correct") {
  SigmaLattice l = full_lattice("D12");
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      int m = l.meet[a][b], j = l.join[a][b];
      CHECK(l.leq(m, a));
      CHECK(l.leq(m, b));
      CHECK(l.leq(a, j));
      CHECK(l.leq(b, j));
      for (int x = 0; x < l.size(); ++x) {
        if (l.leq(x, a) && l.leq(x, b)) CHECK(l.leq(x, m));
        if (l.leq(a, x) && l.leq(b, x)) CHECK(l.leq(j, x));
      }
    }
  CHECK(l.order_of(l.bottom) == 1);
  CHECK(l.order_of(l.top) == 12);
}

TEST_CASE("cyclic groups give distributive lattices") {
  for (const char* name : {"C1", "C6", "C8", "C12", "C16", "C24"}) {
    SigmaLattice l = full_lattice(name);
    CAPTURE(name);
    CHECK(is_distributive(l));
    CHECK(is_modular(l));
    CHECK_FALSE(find_diamond(l).has_value());
    CHECK_FALSE(find_pentagon(l).has_value());
  }
}

TEST_CASE("C2xC2 full lattice is the diamond") {
  SigmaLattice l = full_lattice("C2xC2");
  REQUIRE(l.size() == 5);
  CHECK_FALSE(is_distributive(l));
  CHECK(is_modular(l));
  auto d = find_diamond(l);
  REQUIRE(d.has_value());
  for (int x : *d) CHECK(l.order_of(x) == 2);
  CHECK_FALSE(find_pentagon(l).has_value());
}

TEST_CASE("S4 full lattice is not modular") {
  SigmaLattice l = full_lattice("S4");
  Triple w{};
  CHECK_FALSE(is_modular(l, &w));
  // the witness really falsifies the modular law
  int a = w[0], b = w[1], c = w[2];
  CHECK(l.leq(a, c));
  CHECK(l.join[a][l.meet[b][c]] != l.meet[l.join[a][b]][c]);
  CHECK(find_pentagon(l).has_value());
}

TEST_CASE("law routes agree across the corpus") {
  for (const GroupSpec& spec : builtin_corpus()) {
    SigmaLattice l = build_lattice(all_subgroups(spec.build()));
    CAPTURE(spec.name);
    bool dist = is_distributive(l);
    bool mod = is_modular(l);
    CHECK(dist == (mod && !find_diamond(l).has_value()));
    CHECK(mod == !find_pentagon(l).has_value());
    // Ore: distributive iff cyclic
    CHECK(dist == spec.build()->is_cyclic());
  }
}

TEST_CASE("meet-distributive elements") {
  SigmaLattice l = full_lattice("C2xC2");
  CHECK(is_meet_distributive_element(l, l.bottom));
  CHECK(is_meet_distributive_element(l, l.top));
  bool some_atom_fails = false;
  for (int i = 0; i < l.size(); ++i)
    if (l.order_of(i) == 2 && !is_meet_distributive_element(l, i))
      some_atom_fails = true;
  CHECK(some_atom_fails);
  CHECK_THROWS_AS(is_meet_distributive_element(l, 99), ElementNotInLattice);
}

TEST_CASE("interval sublattice") {
  SigmaLattice l = full_lattice("C12");
  SigmaLattice i = interval(l, l.bottom, l.top);
  CHECK(i.size() == l.size());
  int c2 = -1, c6 = -1;
  for (int x = 0; x < l.size(); ++x) {
    if (l.order_of(x) == 2) c2 = x;
    if (l.order_of(x) == 6) c6 = x;
  }
  SigmaLattice mid = interval(l, c2, c6);
  CHECK(mid.size() == 2);
  CHECK_THROWS_AS(interval(l, c6, c2), NotComparable);
}

TEST_CASE("non-closed families are rejected with a falsifier") {
  GroupPtr v4 = by_name("C2xC2");
  SubgroupFamily all = all_subgroups(v4);
  SubgroupFamily missing_bottom{v4, {}};
  for (int i = 1; i < all.size(); ++i)
    if (all.order_of(i) == 2 || all.order_of(i) == 4)
      missing_bottom.members.push_back(all.members[i]);
  try {
    build_lattice(missing_bottom);
    CHECK(false);
  } catch (const NotClosed& e) {
    CHECK(e.meet);
    CHECK(e.a != e.b);
  }

  SubgroupFamily missing_top{v4, {}};
  for (int i = 0; i < all.size(); ++i)
    if (all.order_of(i) <= 2) missing_top.members.push_back(all.members[i]);
  try {
    build_lattice(missing_top);
    CHECK(false);
  } catch (const NotClosed& e) {
    CHECK_FALSE(e.meet);
  }
}
