#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cgt/constructors.hpp"
#include "cgt/error.hpp"
#include "cgt/smallgroups.hpp"
#include "cgt/structure.hpp"

#include <algorithm>
#include <map>

using namespace cgt;

namespace {

// classical census of finite groups by order (complete and well established
// for this range); validates both completeness and isomorphism dedup
std::map<u64, u64> const kCensus{
    {1, 1},   {2, 1},   {3, 1},   {4, 2},   {5, 1},   {6, 2},   {7, 1},
    {8, 5},   {9, 2},   {10, 2},  {11, 1},  {12, 5},  {13, 1},  {14, 2},
    {15, 1},  {16, 14}, {17, 1},  {18, 5},  {19, 1},  {20, 5},  {21, 2},
    {22, 2},  {23, 1},  {24, 15}, {25, 2},  {26, 2},  {27, 5},  {28, 4},
    {29, 1},  {30, 4},  {31, 1},  {32, 51}, {33, 1},  {34, 2},  {35, 1},
    {36, 14}, {37, 1},  {38, 2},  {39, 2},  {40, 14}, {41, 1},  {42, 6},
    {43, 1},  {44, 4},  {45, 2},  {46, 2},  {47, 1},  {48, 52}, {49, 2},
    {50, 5},  {51, 1},  {52, 5},  {53, 1},  {54, 15}, {55, 2},  {56, 13},
    {57, 2},  {58, 2},  {59, 1},  {60, 13}, {61, 1},  {62, 2},  {63, 4},
    {65, 1},  {66, 4},  {67, 1},  {68, 5},  {69, 1},  {70, 4},  {71, 1},
    {72, 50}, {73, 1},  {74, 2},  {75, 3},  {76, 4},  {77, 1},  {78, 6},
    {79, 1},  {80, 52}, {81, 15}, {82, 2},  {83, 1},  {84, 15}, {85, 1},
    {86, 2},  {87, 1},  {88, 12}, {89, 1},  {90, 10}, {91, 1},  {92, 4},
    {93, 2},  {94, 2},  {95, 1},  {97, 1},  {98, 5},  {99, 2},  {100, 16},
};

std::vector<std::pair<u64, std::vector<Group>>> const &all_lists() {
  static auto const lists = groups_up_to(100);
  return lists;
}

std::vector<Group> const &list_of(u64 n) {
  for (auto const &[order, groups] : all_lists())
    if (order == n)
      return groups;
  throw std::runtime_error("order not enumerated");
}

} // namespace

TEST_CASE("multiplication tables are associative and well formed") {
  for (u64 n : {1, 2, 6, 8, 12, 16}) {
    for (Group const &G : list_of(n)) {
      MulTable T = MulTable::of(G);
      REQUIRE(T.n == n);
      CHECK(T.elems[0].is_identity());
      for (size_t a = 0; a < T.n; ++a) {
        CHECK(T.at(0, a) == a);
        CHECK(T.at(a, 0) == a);
        CHECK(T.at(a, T.inv[a]) == 0);
        CHECK(T.at(T.inv[a], a) == 0);
      }
      bool assoc = true;
      for (size_t a = 0; a < T.n && assoc; ++a)
        for (size_t b = 0; b < T.n && assoc; ++b)
          for (size_t c = 0; c < T.n && assoc; ++c)
            assoc = T.at(T.at(a, b), c) == T.at(a, T.at(b, c));
      CHECK(assoc);
    }
  }
}

TEST_CASE("isomorphism machinery distinguishes and identifies") {
  auto t = [](Group const &g) { return MulTable::of(g); };
  // same group, different faithful degrees
  CHECK(tables_isomorphic(t(symmetric(3)), t(dihedral(3))));
  CHECK(tables_isomorphic(t(cyclic(6)),
                          t(direct_product(cyclic(2), cyclic(3)))));
  // classic non-isomorphic pairs with equal orders
  CHECK_FALSE(tables_isomorphic(t(dihedral(4)), t(quaternion8())));
  CHECK_FALSE(tables_isomorphic(t(cyclic(8)),
                                t(direct_product(cyclic(2), cyclic(4)))));
  CHECK_FALSE(tables_isomorphic(t(cyclic(4)), t(elementary_abelian(2, 2))));
  CHECK_FALSE(tables_isomorphic(t(dihedral(6)), t(alternating(4))));
  // fingerprints agree exactly on isomorphic tables
  CHECK(group_fingerprint(t(symmetric(3))) == group_fingerprint(t(dihedral(3))));
  CHECK(group_fingerprint(t(dihedral(4))) != group_fingerprint(t(quaternion8())));
}

TEST_CASE("automorphism group orders of standard groups") {
  auto aut_count = [](Group const &g) {
    return table_automorphisms(MulTable::of(g)).size();
  };
  CHECK(aut_count(cyclic(1)) == 1);
  CHECK(aut_count(cyclic(7)) == 6);   // (Z/7)*
  CHECK(aut_count(cyclic(12)) == 4);  // (Z/12)*
  CHECK(aut_count(symmetric(3)) == 6);
  CHECK(aut_count(elementary_abelian(2, 3)) == 168);  // GL(3,2)
  CHECK(aut_count(elementary_abelian(3, 2)) == 48);   // GL(2,3)
  CHECK(aut_count(quaternion8()) == 24);
  CHECK(aut_count(dihedral(4)) == 8);
  CHECK(aut_count(elementary_abelian(2, 4)) == 20160); // GL(4,2)
}

TEST_CASE("group counts match the census for every supported order") {
  for (auto const &[n, groups] : all_lists()) {
    CAPTURE(n);
    REQUIRE(kCensus.count(n) == 1);
    CHECK(groups.size() == kCensus.at(n));
    for (Group const &G : groups)
      CHECK(G.order() == n);
  }
  CHECK_FALSE(small_groups_order_supported(64));
  CHECK_FALSE(small_groups_order_supported(96));
  CHECK_FALSE(small_groups_order_supported(101));
  CHECK_THROWS_AS((void)groups_of_order(64), PreconditionError);
  // the classical total below order 64
  u64 below64 = 0;
  for (auto const &[n, groups] : all_lists())
    if (n < 64)
      below64 += groups.size();
  CHECK(below64 == 319);
}

TEST_CASE("named groups appear in their order lists") {
  auto contains = [](u64 n, Group const &g) {
    MulTable T = MulTable::of(g);
    for (Group const &h : list_of(n))
      if (tables_isomorphic(MulTable::of(h), T))
        return true;
    return false;
  };
  CHECK(contains(8, quaternion8()));
  CHECK(contains(16, semidihedral16()));
  CHECK(contains(21, frobenius21()));
  CHECK(contains(27, extraspecial_3_exponent3()));
  CHECK(contains(54, counterexample_54()));
  CHECK(contains(24, symmetric(4)));
  CHECK(contains(60, alternating(5)));

  // exactly one group of order 60 is non-solvable, and it is A5
  int nonsolvable = 0;
  for (Group const &g : list_of(60))
    if (!is_solvable(g))
      ++nonsolvable;
  CHECK(nonsolvable == 1);
}

TEST_CASE("abelian groups by invariants agree with the enumeration") {
  for (auto const &[n, groups] : all_lists()) {
    CAPTURE(n);
    auto ab = abelian_groups_of_order(n);
    CHECK(ab.size() == abelian_group_count(n));
    // the enumerated abelian groups match the invariant lists one to one
    std::vector<MulTable> enumerated;
    for (Group const &g : groups)
      if (g.is_abelian())
        enumerated.push_back(MulTable::of(g));
    REQUIRE(ab.size() == enumerated.size());
    std::vector<char> taken(enumerated.size(), 0);
    for (auto const &[invs, g] : ab) {
      CHECK(g.is_abelian());
      u64 prod = 1;
      for (u64 q : invs)
        prod *= q;
      CHECK(prod == n);
      MulTable T = MulTable::of(g);
      bool found = false;
      for (size_t i = 0; i < enumerated.size() && !found; ++i)
        if (!taken[i] && tables_isomorphic(enumerated[i], T)) {
          taken[i] = 1;
          found = true;
        }
      CHECK(found);
    }
  }
  // counts alone for the range beyond the enumerator
  CHECK(abelian_group_count(128) == 15); // partitions of 7
  CHECK(abelian_group_count(192) == 11); // p(6) * p(1)
  CHECK(abelian_group_count(200) == 6);  // p(3) * p(2)
  CHECK(abelian_groups_of_order(128).size() == 15);
  CHECK(abelian_groups_of_order(200).size() == 6);
  for (auto const &[invs, g] : abelian_groups_of_order(180)) {
    CHECK(g.order() == 180);
    CHECK(g.is_abelian());
    (void)invs;
  }
}

TEST_CASE("enumeration is deterministic") {
  auto a = groups_of_order(24), b = groups_of_order(24);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].generators().size() == b[i].generators().size());
    for (size_t j = 0; j < a[i].generators().size(); ++j)
      CHECK(a[i].generators()[j] == b[i].generators()[j]);
  }
}
