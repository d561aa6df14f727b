#include "cgt/structure.hpp"

#include "cgt/error.hpp"

#include <algorithm>

namespace cgt {

std::string CompositionFactor::name() const {
  switch (family) {
  case FactorFamily::cyclic:
    return "C" + std::to_string(parameter);
  case FactorFamily::alternating:
    return "A" + std::to_string(parameter);
  case FactorFamily::psl2:
    return "PSL(2," + std::to_string(parameter) + ")";
  case FactorFamily::other_simple:
    return label;
  case FactorFamily::unidentified:
    break;
  }
  return "unidentified-" + std::to_string(order.value());
}

namespace {

struct SimpleEntry {
  u64 order;
  FactorFamily family;
  u64 parameter;
  std::string name;
};

// every nonabelian simple order up to the ceiling, except the ambiguous 20160
// (split by a probe instead). Groups isomorphic both to an alternating group
// and to a PSL(2,q) — order 60 and order 360 — are listed as psl2.
std::vector<SimpleEntry> const &simple_order_table() {
  static std::vector<SimpleEntry> const table = [] {
    std::vector<SimpleEntry> t;
    auto add = [&](u64 n, FactorFamily f, u64 par, std::string s) {
      if (n <= kSimpleOrderCeiling)
        t.push_back({n, f, par, std::move(s)});
    };
    auto prime_powers = [](u64 lo, u64 hi) {
      std::vector<u64> qs;
      for (u64 q = lo; q <= hi; ++q) {
        u64 m = q, p = 0;
        for (u64 d = 2; d * d <= m; ++d)
          if (m % d == 0) {
            p = d;
            break;
          }
        if (p == 0)
          p = m;
        while (m % p == 0)
          m /= p;
        if (m == 1)
          qs.push_back(q);
      }
      return qs;
    };
    // PSL(2,q): q = 4 is skipped (isomorphic to PSL(2,5)); the ceiling cuts
    // the family off above q = 271
    for (u64 q : prime_powers(5, 271))
      add(q * (q - 1) * (q + 1) / gcd_u64(2, q - 1), FactorFamily::psl2, q, "");
    // alternating: A5, A6 are listed as psl2 above; A8 goes through the 20160
    // probe; A11 and beyond exceed the ceiling
    add(2520, FactorFamily::alternating, 7, "");
    add(181440, FactorFamily::alternating, 9, "");
    add(1814400, FactorFamily::alternating, 10, "");
    auto other = [&](u64 n, std::string s) {
      add(n, FactorFamily::other_simple, 0, std::move(s));
    };
    // PSL(3,q): q = 2 is PSL(2,7), q = 4 is in the 20160 pair
    for (u64 q : {3u, 5u, 7u}) {
      u64 q3 = u64{q} * q * q;
      other(q3 * (q3 - 1) * (q * q - 1) / gcd_u64(3, q - 1),
            "PSL(3," + std::to_string(q) + ")");
    }
    for (u64 q : {3u, 4u, 5u, 7u, 8u}) { // PSU(3,2) is not simple
      u64 q3 = u64{q} * q * q;
      other(q3 * (q3 + 1) * (q * q - 1) / gcd_u64(3, q + 1),
            "PSU(3," + std::to_string(q) + ")");
    }
    // PSL(4,2) = A8 is in the 20160 pair; PSU(4,2) = PSp(4,3) keeps this name
    other(6065280, "PSL(4,3)");
    other(25920, "PSU(4,2)");
    other(3265920, "PSU(4,3)");
    other(979200, "PSp(4,4)");
    other(4680000, "PSp(4,5)");
    other(1451520, "PSp(6,2)");
    other(9999360, "PSL(5,2)");
    other(29120, "Sz(8)");
    other(4245696, "G2(3)");
    other(7920, "M11");
    other(95040, "M12");
    other(443520, "M22");
    other(175560, "J1");
    other(604800, "J2");
    std::sort(t.begin(), t.end(),
              [](SimpleEntry const &a, SimpleEntry const &b) {
                return a.order < b.order;
              });
    return t;
  }();
  return table;
}

bool has_element_of_order(Group const &G, u64 k, u64 seed) {
  Rng rng(seed);
  for (int i = 0; i < 4000; ++i)
    if (perm_order(G.random_element(rng)) % k == 0)
      return true;
  return false;
}

} // namespace

std::vector<std::pair<u64, std::string>> known_simple_orders() {
  std::vector<std::pair<u64, std::string>> out;
  for (auto const &e : simple_order_table()) {
    CompositionFactor f;
    f.family = e.family;
    f.parameter = e.parameter;
    f.label = e.name;
    out.emplace_back(e.order, f.name());
  }
  return out;
}

CompositionFactor identify_simple(Factored const &order, Group const &G) {
  CompositionFactor f;
  f.order = order;
  auto const &fs = order.factors();
  if (fs.size() == 1 && fs.begin()->second == 1) {
    f.family = FactorFamily::cyclic;
    f.parameter = order.value();
    return f;
  }
  u64 n = order.value();
  if (n > kSimpleOrderCeiling)
    return f; // above the table's completeness guarantee: unidentified
  if (n == 20160) {
    // the one order below the ceiling shared by two simple groups; only the
    // alternating one has elements of order 15
    if (has_element_of_order(G, 15, 7)) {
      f.family = FactorFamily::alternating;
      f.parameter = 8;
    } else {
      f.family = FactorFamily::other_simple;
      f.label = "PSL(3,4)";
    }
    return f;
  }
  for (auto const &e : simple_order_table())
    if (e.order == n) {
      f.family = e.family;
      f.parameter = e.parameter;
      f.label = e.name;
      return f;
    }
  return f;
}

namespace {

// a proper nontrivial normal subgroup, if one exists; every nontrivial normal
// subgroup contains the closure of some nontrivial class, so scanning class
// closures is a complete test
std::optional<Group> proper_normal_subgroup(Group const &G, u64 max_order) {
  ClassTable ct = ClassTable::compute(G, max_order);
  std::optional<Group> best;
  for (size_t c = 1; c < ct.count(); ++c) {
    Group N = normal_closure(G, {ct.rep(c)});
    if (N.order() == G.order())
      continue;
    if (!best || N.order() < best->order())
      best = std::move(N);
  }
  return best;
}

void factors_rec(Group const &G, u64 max_order,
                 std::vector<CompositionFactor> &out) {
  if (G.order() == 1)
    return;
  auto n = proper_normal_subgroup(G, max_order);
  if (!n) {
    CompositionFactor f = identify_simple(G.order_factored(), G);
    f.realization = G;
    out.push_back(std::move(f));
    return;
  }
  Quotient q(G, *n);
  factors_rec(q.group(), max_order, out);
  factors_rec(*n, max_order, out);
}

} // namespace

std::vector<CompositionFactor> composition_factors_full(Group const &G,
                                                        u64 max_order) {
  std::vector<CompositionFactor> out;
  factors_rec(G, max_order, out);
  return out;
}

std::vector<std::string> composition_factors(Group const &G, u64 max_order) {
  std::vector<std::string> out;
  for (auto const &f : composition_factors_full(G, max_order))
    out.push_back(f.name());
  return out;
}

bool is_simple(Group const &G) {
  if (G.order() == 1)
    return false;
  return !proper_normal_subgroup(G, kDefaultEnumBound).has_value();
}

Group solvable_radical(Group const &G) {
  ClassTable ct = ClassTable::compute(G, kDefaultEnumBound);
  std::vector<Perm> gens;
  Group J = Group::trivial(G.degree());
  for (size_t c = 1; c < ct.count(); ++c) {
    Group N = normal_closure(G, {ct.rep(c)});
    if (!is_solvable(N))
      continue;
    bool contained = true;
    for (auto const &g : N.generators())
      if (!J.contains(g)) {
        contained = false;
        break;
      }
    if (contained)
      continue;
    for (auto const &g : N.generators())
      gens.push_back(g);
    J = Group(G.degree(), gens);
  }
  return J;
}

std::vector<Group> all_normal_subgroups(Group const &G, size_t max_count) {
  ClassTable ct = ClassTable::compute(G, kDefaultEnumBound);
  std::vector<Group> found{Group::trivial(G.degree())};
  auto known = [&](Group const &N) {
    for (auto const &M : found) {
      if (M.order() != N.order())
        continue;
      bool sub = true;
      for (auto const &g : N.generators())
        if (!M.contains(g)) {
          sub = false;
          break;
        }
      if (sub)
        return true;
    }
    return false;
  };
  auto push = [&](Group N) {
    if (known(N))
      return false;
    if (found.size() >= max_count)
      throw BoundExceeded("more normal subgroups than requested");
    found.push_back(std::move(N));
    return true;
  };
  for (size_t c = 1; c < ct.count(); ++c)
    push(normal_closure(G, {ct.rep(c)}));
  // close under pairwise joins
  for (;;) {
    bool grown = false;
    size_t n = found.size();
    for (size_t i = 1; i < n && !grown; ++i)
      for (size_t j = i + 1; j < n && !grown; ++j) {
        auto gens = found[i].generators();
        for (auto const &g : found[j].generators())
          gens.push_back(g);
        grown = push(Group(G.degree(), gens));
      }
    if (!grown)
      break;
  }
  std::sort(found.begin(), found.end(),
            [](Group const &a, Group const &b) { return a.order() < b.order(); });
  return found;
}

} // namespace cgt
