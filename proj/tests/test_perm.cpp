#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgt/error.hpp"
#include "cgt/perm.hpp"

#include "oracles.hpp"

using namespace cgt;

TEST_CASE("composition convention, exhaustively on three points") {
  // the product a*b applies b first: (a*b)(x) = a(b(x)); every derived
  // routine in the library leans on this, so it is pinned here exhaustively
  auto s3 = oracle::all_perms(3);
  REQUIRE(s3.size() == 6);
  for (auto const &a : s3)
    for (auto const &b : s3) {
      Perm ab = a * b;
      for (Point x = 0; x < 3; ++x)
        CHECK(ab[x] == a[b[x]]);
    }
  // the worked instance: (0 1) * (1 2) = (0 1 2)
  Perm t01 = parse_cycles("(0 1)", 3);
  Perm t12 = parse_cycles("(1 2)", 3);
  CHECK(to_cycle_string(t01 * t12) == "(0 1 2)");
  CHECK(to_cycle_string(t12 * t01) == "(0 2 1)");
}

TEST_CASE("inverse and identity, exhaustively on four points") {
  auto s4 = oracle::all_perms(4);
  REQUIRE(s4.size() == 24);
  Perm id = oracle::identity(4);
  for (auto const &p : s4) {
    CHECK(p * p.inverse() == id);
    CHECK(p.inverse() * p == id);
    CHECK(p.inverse().inverse() == p);
  }
}

TEST_CASE("conjugation matches g^-1 * x * g") {
  auto s4 = oracle::all_perms(4);
  for (auto const &x : s4)
    for (auto const &g : s4)
      CHECK(conjugate(x, g) == g.inverse() * x * g);
}

TEST_CASE("order and parity against brute force") {
  for (auto const &p : oracle::all_perms(5)) {
    // brute order: repeated multiplication
    Perm q = p;
    std::uint64_t n = 1;
    while (!q.is_identity()) {
      q = q * p;
      ++n;
    }
    CHECK(perm_order(p) == n);
    // brute parity: count inversions
    int inversions = 0;
    for (Point i = 0; i < 5; ++i)
      for (Point j = i + 1; j < 5; ++j)
        if (p[i] > p[j])
          ++inversions;
    CHECK(is_even(p) == (inversions % 2 == 0));
  }
}

TEST_CASE("cycle decomposition round trips") {
  for (auto const &p : oracle::all_perms(6)) {
    auto s = to_cycle_string(p);
    CHECK(parse_cycles(s, 6) == p);
  }
  CHECK(to_cycle_string(oracle::identity(3)) == "()");
  Perm p = parse_cycles("(0 4)(1 3 2)", 5);
  CHECK(p[0] == 4);
  CHECK(p[4] == 0);
  CHECK(p[1] == 3);
  CHECK(p[3] == 2);
  CHECK(p[2] == 1);
  auto cycles = cycle_decomposition(p);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<Point>{0, 4});
  CHECK(cycles[1] == std::vector<Point>{1, 3, 2});
}

TEST_CASE("one-indexed cycle notation") {
  Perm p = parse_cycles("(1 2 3)", 4, /*one_indexed=*/true);
  CHECK(p == parse_cycles("(0 1 2)", 4));
  CHECK(to_cycle_string(p, /*one_indexed=*/true) == "(1 2 3)");
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_cycles("(0 1", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 0)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)", 3), ParseError); // repeated point
  CHECK_THROWS_AS(parse_cycles("(0 5)", 3), ParseError);      // out of range
  CHECK_THROWS_AS(parse_cycles("(0 x)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3, true), ParseError); // 0 in 1-indexed
  CHECK(parse_cycles("", 3) == oracle::identity(3));
  CHECK(parse_cycles("()", 3) == oracle::identity(3));
  CHECK(parse_cycles(" (0 1) , (2 3) ", 5) == parse_cycles("(0 1)(2 3)", 5));
}

TEST_CASE("degree mismatch is surfaced") {
  Perm a = parse_cycles("(0 1)", 3);
  Perm b = parse_cycles("(0 1)", 4);
  CHECK_THROWS_AS(a * b, DegreeMismatch);
}

TEST_CASE("non-bijective images are rejected") {
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), ParseError);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 3, 1}), ParseError);
}
