#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgt/backtrack.hpp"
#include "cgt/error.hpp"
#include "cgt/group.hpp"

#include "oracles.hpp"

#include <set>

using namespace cgt;

namespace {

struct Fixture {
  std::string name;
  Point degree;
  std::vector<std::string> gens;
};

std::vector<Fixture> fixtures() {
  return {
      {"s4", 4, {"(0 1 2 3)", "(0 1)"}},
      {"d6", 6, {"(0 1 2 3 4 5)", "(1 5)(2 4)"}},
      {"a5", 5, {"(0 1 2 3 4)", "(0 1 2)"}},
      {"s3xc3", 6, {"(0 1 2)", "(0 1)", "(3 4 5)"}},
      {"s6", 6, {"(0 1 2 3 4 5)", "(0 1)"}},
      {"psl27", 8, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)", "(0 7)(1 6)(2 3)(4 5)"}},
  };
}

std::vector<Perm> parse_all(std::vector<std::string> const &strs, Point degree) {
  std::vector<Perm> out;
  for (auto const &s : strs)
    out.push_back(parse_cycles(s, degree));
  return out;
}

std::set<Perm> as_set(Group const &g) {
  std::set<Perm> out;
  g.for_each_element([&](Perm const &p) { out.insert(p); });
  return out;
}

} // namespace

TEST_CASE("centralizers of single elements match brute force") {
  for (auto const &fx : fixtures()) {
    CAPTURE(fx.name);
    auto gens = parse_all(fx.gens, fx.degree);
    Group g(fx.degree, gens);
    auto all = oracle::closure(fx.degree, gens);
    // probe a spread of elements: every 7th element of the enumeration
    size_t i = 0;
    for (auto const &t : all) {
      if (i++ % 7 != 0)
        continue;
      auto truth = oracle::brute_centralizer(all, {t});
      Group c = backtrack_centralizer(g, t);
      CHECK(c.order() == truth.size());
      CHECK(as_set(c) == truth);
    }
  }
}

TEST_CASE("centralizers of generating sets match brute force") {
  auto gens = parse_all({"(0 1 2 3)", "(0 1)"}, 4);
  Group s4(4, gens);
  auto all = oracle::closure(4, gens);
  // centralizer of the Klein four-group inside S4 is the Klein four-group
  auto v4 = parse_all({"(0 1)(2 3)", "(0 2)(1 3)"}, 4);
  auto truth = oracle::brute_centralizer(all, v4);
  Group c = backtrack_centralizer(s4, v4);
  CHECK(c.order() == 4);
  CHECK(as_set(c) == truth);
}

TEST_CASE("conjugator search agrees with brute-force conjugacy") {
  for (auto const &fx : fixtures()) {
    CAPTURE(fx.name);
    auto gens = parse_all(fx.gens, fx.degree);
    Group g(fx.degree, gens);
    auto all = oracle::closure(fx.degree, gens);
    std::vector<Perm> sample;
    size_t i = 0;
    for (auto const &t : all)
      if (i++ % 11 == 0)
        sample.push_back(t);
    for (auto const &x : sample)
      for (auto const &y : sample) {
        auto found = backtrack_conjugator(g, x, y);
        bool truth = oracle::brute_conjugate_in(all, x, y);
        CHECK(found.has_value() == truth);
        if (found) {
          CHECK(g.contains(*found));
          CHECK(conjugate(x, *found) == y);
        }
      }
  }
}

TEST_CASE("normalizers match brute force") {
  for (auto const &fx : fixtures()) {
    CAPTURE(fx.name);
    auto gens = parse_all(fx.gens, fx.degree);
    Group g(fx.degree, gens);
    auto all = oracle::closure(fx.degree, gens);
    // subgroups generated by single elements and by pairs, sampled
    std::vector<std::vector<Perm>> seeds;
    size_t i = 0;
    for (auto const &t : all) {
      if (i % 9 == 0)
        seeds.push_back({t});
      if (i % 31 == 0 && i + 1 < all.size())
        seeds.push_back({t, *std::next(all.begin())});
      ++i;
    }
    for (auto const &kg : seeds) {
      Group k(fx.degree, kg);
      auto ktruth = oracle::closure(fx.degree, kg);
      auto truth = oracle::brute_normalizer(all, ktruth);
      Group n = backtrack_normalizer(g, k);
      CHECK(n.order() == truth.size());
      CHECK(as_set(n) == truth);
    }
  }
}

TEST_CASE("normal subgroups short-circuit to the whole group") {
  auto gens = parse_all({"(0 1 2 3)", "(0 1)"}, 4);
  Group s4(4, gens);
  Group a4(4, parse_all({"(0 1 2)", "(1 2 3)"}, 4));
  Group n = backtrack_normalizer(s4, a4);
  CHECK(n.order() == 24);
}

TEST_CASE("self-normalizing subgroup") {
  auto gens = parse_all({"(0 1 2 3)", "(0 1)"}, 4);
  Group s4(4, gens);
  // S3 on the first three points is self-normalizing in S4
  Group s3(4, parse_all({"(0 1 2)", "(0 1)"}, 4));
  Group n = backtrack_normalizer(s4, s3);
  CHECK(n.order() == 6);
}

TEST_CASE("node budget is enforced") {
  auto gens = parse_all({"(0 1 2 3 4 5)", "(0 1)"}, 6);
  Group s6(6, gens);
  SearchLimits lim;
  lim.max_nodes = 3;
  CHECK_THROWS_AS(backtrack_centralizer(s6, parse_cycles("(0 1)", 6), lim),
                  ResourceLimit);
}

TEST_CASE("centralizer in the trivial group") {
  Group t = Group::trivial(5);
  Group c = backtrack_centralizer(t, parse_cycles("(0 1)", 5));
  CHECK(c.order() == 1);
}
