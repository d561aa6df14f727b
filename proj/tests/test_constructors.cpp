#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgt/constructors.hpp"
#include "cgt/error.hpp"
#include "cgt/ff.hpp"
#include "cgt/matgroup.hpp"
#include "cgt/structure.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

using namespace cgt;

namespace {

u64 brute_order_of(Group const &g) {
  return oracle::closure(g.degree(), g.generators()).size();
}

// 2-transitivity: the ordered-pair orbit of (0,1) covers all distinct pairs
bool two_transitive(Group const &g) {
  Point n = g.degree();
  auto enc = [n](Point a, Point b) { return static_cast<u64>(a) * n + b; };
  std::set<u64> seen{enc(0, 1)};
  std::vector<std::pair<Point, Point>> queue{{0, 1}};
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    for (auto const &p : g.generators()) {
      Point a2 = p[a], b2 = p[b];
      if (seen.insert(enc(a2, b2)).second)
        queue.push_back({a2, b2});
    }
  }
  return seen.size() == static_cast<u64>(n) * (n - 1);
}

std::multiset<u64> class_size_multiset(Group const &g) {
  auto ct = ClassTable::compute(g);
  std::multiset<u64> out;
  for (size_t i = 0; i < ct.count(); ++i)
    out.insert(ct.size(i));
  return out;
}

} // namespace

// ---- finite fields -------------------------------------------------------------

TEST_CASE("finite field arithmetic satisfies the field axioms") {
  for (u64 q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u}) {
    CAPTURE(q);
    FiniteField F(q);
    CHECK(F.size() == q);
    auto [p, k] = prime_power_of(q);
    CHECK(F.characteristic() == p);
    CHECK(F.degree_over_prime() == k);

    for (u64 a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.pow(a, q - 1) == 1); // Fermat
      }
      CHECK(F.pow(a, q) == a);
      for (u64 b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        // frobenius is additive
        CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
        for (u64 c = 0; c < q; c += (q > 9 ? 5 : 1))
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }

    // the fixed primitive element really has order q-1
    u64 g = F.generator();
    std::set<u64> powers;
    u64 v = 1;
    for (u64 i = 0; i + 1 < q; ++i) {
      powers.insert(v);
      CHECK(F.log(v) == i);
      v = F.mul(v, g);
    }
    CHECK(v == 1);
    CHECK(powers.size() == q - 1);

    CHECK_THROWS_AS(F.inv(0), PreconditionError);
    CHECK_THROWS_AS(F.log(0), PreconditionError);
  }
  CHECK_THROWS_AS(FiniteField(6), PreconditionError);
  CHECK_THROWS_AS(FiniteField(1), PreconditionError);
  CHECK_THROWS_AS(FiniteField(0), PreconditionError);
}

TEST_CASE("field moduli are the documented first irreducibles") {
  using V = std::vector<int>;
  CHECK(FiniteField(4).modulus() == V{1, 1, 1});     // x^2+x+1
  CHECK(FiniteField(8).modulus() == V{1, 1, 0, 1});  // x^3+x+1
  CHECK(FiniteField(16).modulus() == V{1, 1, 0, 0, 1});
  CHECK(FiniteField(9).modulus() == V{1, 0, 1});     // x^2+1
  CHECK(FiniteField(27).modulus() == V{1, 2, 0, 1}); // x^3+2x+1
  CHECK(FiniteField(25).modulus() == V{2, 0, 1});    // x^2+2
  CHECK(FiniteField(49).modulus() == V{1, 0, 1});    // x^2+1
}

TEST_CASE("matrix determinant and multiplication") {
  FiniteField F(5);
  Mat A(2), B(2);
  A.at(0, 0) = 1; A.at(0, 1) = 2; A.at(1, 0) = 3; A.at(1, 1) = 4;
  B.at(0, 0) = 2; B.at(0, 1) = 0; B.at(1, 0) = 1; B.at(1, 1) = 3;
  CHECK(mat_det(F, A) == (4 + 5 - 6 % 5) % 5); // 1*4 - 2*3 = -2 = 3 mod 5
  CHECK(mat_det(F, A) == 3);
  CHECK(mat_det(F, B) == 1);                   // 6 mod 5
  Mat C = mat_mul(F, A, B);
  CHECK(C.at(0, 0) == 4); // 1*2 + 2*1
  CHECK(C.at(0, 1) == 1); // 2*3 = 6
  CHECK(C.at(1, 0) == 0); // 3*2 + 4*1 = 10
  CHECK(C.at(1, 1) == 2); // 4*3 = 12
  CHECK(mat_det(F, C) == F.mul(mat_det(F, A), mat_det(F, B)));
  Mat S(3); // singular
  S.at(0, 0) = 1; S.at(1, 0) = 2; S.at(2, 0) = 3;
  CHECK(mat_det(F, S) == 0);
}

// ---- order formulas ------------------------------------------------------------

TEST_CASE("classical order formulas") {
  CHECK(general_linear_order(2, 2, Sign::plus).value() == 6);
  CHECK(general_linear_order(2, 3, Sign::plus).value() == 48);
  CHECK(general_linear_order(2, 4, Sign::plus).value() == 180);
  CHECK(general_linear_order(3, 2, Sign::plus).value() == 168);
  CHECK(general_linear_order(4, 2, Sign::plus).value() == 20160);
  CHECK(special_linear_order(2, 3, Sign::plus).value() == 24);
  CHECK(projective_special_linear_order(2, 7, Sign::plus).value() == 168);
  CHECK(projective_special_linear_order(2, 9, Sign::plus).value() == 360);
  CHECK(projective_special_linear_order(3, 4, Sign::plus).value() == 20160);
  CHECK(general_linear_order(2, 2, Sign::minus).value() == 18);
  CHECK(general_linear_order(3, 2, Sign::minus).value() == 648);
  CHECK(special_linear_order(3, 2, Sign::minus).value() == 216);
  CHECK(projective_special_linear_order(3, 2, Sign::minus).value() == 72);
  CHECK(projective_special_linear_order(3, 3, Sign::minus).value() == 6048);
  CHECK(general_linear_order(4, 2, Sign::minus).value() == 77760);
  CHECK_THROWS_AS(general_linear_order(2, 6, Sign::plus), PreconditionError);
  CHECK_THROWS_AS(general_linear_order(0, 2, Sign::plus), PreconditionError);
}

// ---- linear and unitary permutation groups -------------------------------------

TEST_CASE("small linear groups match brute-force closure") {
  struct Case {
    int n;
    u64 q;
    Sign eps;
    u64 order;
    u64 degree;
  };
  for (auto const &[n, q, eps, order, degree] : std::vector<Case>{
           {2, 2, Sign::plus, 6, 3},
           {2, 3, Sign::plus, 48, 8},
           {2, 4, Sign::plus, 180, 15},
           {3, 2, Sign::plus, 168, 7},
           {1, 5, Sign::plus, 4, 4},
           {2, 2, Sign::minus, 18, 15},
           {1, 3, Sign::minus, 4, 8},
       }) {
    CAPTURE(n);
    CAPTURE(q);
    Group g = general_linear(n, q, eps);
    CHECK(g.degree() == degree);
    CHECK(g.order() == order);
    CHECK(brute_order_of(g) == order);
  }
  CHECK(special_linear(2, 3).order() == 24);
  CHECK(brute_order_of(special_linear(2, 3)) == 24);
  CHECK(special_linear(3, 2, Sign::minus).order() == 216);
  CHECK(brute_order_of(special_linear(3, 2, Sign::minus)) == 216);
  CHECK(special_linear(1, 7).is_trivial());
  CHECK(projective_special_linear(1, 3, Sign::minus).is_trivial());
}

TEST_CASE("projective special linear groups on the projective line") {
  // degree q+1, 2-transitive, simple for q > 3
  for (u64 q : {4u, 5u, 7u, 9u, 11u, 13u}) {
    CAPTURE(q);
    Group g = projective_special_linear(2, q);
    CHECK(g.degree() == q + 1);
    CHECK(g.order() == projective_special_linear_order(2, q, Sign::plus).value());
    CHECK(two_transitive(g));
    CHECK(is_simple(g));
  }
  CHECK(projective_special_linear(2, 2).order() == 6);
  CHECK(projective_special_linear(2, 3).order() == 12);
  CHECK_FALSE(is_simple(projective_special_linear(2, 3)));
}

TEST_CASE("projective unitary groups") {
  Group psu32 = projective_special_linear(3, 2, Sign::minus);
  CHECK(psu32.degree() == 21); // projective plane over the quadratic extension
  CHECK(psu32.order() == 72);
  CHECK(is_solvable(psu32)); // the unique solvable projective unitary group

  Group psu33 = projective_special_linear(3, 3, Sign::minus);
  CHECK(psu33.degree() == 91);
  CHECK(psu33.order() == 6048);
  CHECK(is_simple(psu33));
  auto f = identify_simple(psu33.order_factored(), psu33);
  CHECK(f.name() == "PSU(3,3)");
}

TEST_CASE("the order-168 simple group appears as both PSL(2,7) and PSL(3,2)") {
  Group a = projective_special_linear(2, 7);
  Group b = projective_special_linear(3, 2);
  CHECK(a.order() == 168);
  CHECK(b.order() == 168);
  CHECK(b.degree() == 7);
  CHECK(is_simple(b));
  CHECK(class_size_multiset(a) == class_size_multiset(b));
}

TEST_CASE("the order-20160 pair is distinguished") {
  Group psl34 = projective_special_linear(3, 4);
  CHECK(psl34.degree() == 21);
  CHECK(psl34.order() == 20160);
  CHECK(is_simple(psl34));
  auto f = identify_simple(psl34.order_factored(), psl34);
  CHECK(f.family == FactorFamily::other_simple);
  CHECK(f.name() == "PSL(3,4)");
  CHECK(composition_factors(psl34) == std::vector<std::string>{"PSL(3,4)"});

  // the alternating side of the collision carries elements of order 15
  Group a8 = alternating(8);
  auto g = identify_simple(a8.order_factored(), a8);
  CHECK(g.family == FactorFamily::alternating);
  CHECK(g.name() == "A8");
}

TEST_CASE("psl2 exceptional isomorphism labels") {
  Group psl29 = projective_special_linear(2, 9);
  CHECK(psl29.order() == 360);
  CHECK(class_size_multiset(psl29) == class_size_multiset(alternating(6)));
  CHECK(composition_factors(psl29) == std::vector<std::string>{"PSL(2,9)"});
  CHECK(composition_factors(alternating(6)) == std::vector<std::string>{"PSL(2,9)"});
}

TEST_CASE("matrix constructor input validation") {
  CHECK_THROWS_AS(general_linear(2, 6), PreconditionError);
  CHECK_THROWS_AS(general_linear(0, 5), PreconditionError);
  CHECK_THROWS_AS(general_linear(2, 71), BoundExceeded);        // degree 5040
  CHECK_THROWS_AS(projective_special_linear(2, 5003), BoundExceeded);
  CHECK_THROWS_AS(general_linear(3, 17, Sign::minus), BoundExceeded);
  // a tighter custom cap
  CHECK_THROWS_AS(general_linear(2, 5, Sign::plus, 20), BoundExceeded);
}

// ---- named families ------------------------------------------------------------

TEST_CASE("symmetric, alternating, cyclic, dihedral, elementary abelian") {
  u64 fact = 1;
  for (u64 n = 1; n <= 8; ++n) {
    fact *= n;
    CAPTURE(n);
    Group s = symmetric(n);
    CHECK(s.degree() == n);
    CHECK(s.order() == fact);
    Group a = alternating(n);
    CHECK(a.order() == (n < 3 ? 1 : fact / 2));
    if (n >= 3) {
      for (auto const &p : a.generators())
        CHECK(is_even(p));
      CHECK(a.is_subgroup_of(s));
    }
    Group c = cyclic(n);
    CHECK(c.order() == n);
    CHECK(c.is_abelian());
    Group d = dihedral(n);
    CHECK(d.order() == 2 * n);
    CHECK(d.is_abelian() == (n <= 2));
  }
  CHECK(symmetric(1).is_trivial());
  CHECK(dihedral(4).order() == 8);
  CHECK(brute_order_of(dihedral(4)) == 8);

  Group ea = elementary_abelian(3, 2);
  CHECK(ea.order() == 9);
  CHECK(ea.degree() == 6);
  CHECK(ea.is_abelian());
  bool all_exp3 = true;
  ea.for_each_element([&](Perm const &x) {
    all_exp3 = all_exp3 && perm_order(x) <= 3 && perm_order(x) != 2;
  });
  CHECK(all_exp3);
  CHECK(elementary_abelian(2, 1).order() == 2);

  CHECK_THROWS_AS(symmetric(0), PreconditionError);
  CHECK_THROWS_AS(alternating(0), PreconditionError);
  CHECK_THROWS_AS(cyclic(0), PreconditionError);
  CHECK_THROWS_AS(dihedral(0), PreconditionError);
  CHECK_THROWS_AS(elementary_abelian(4, 2), PreconditionError);
  CHECK_THROWS_AS(elementary_abelian(3, 0), PreconditionError);
  CHECK_THROWS_AS(symmetric(25), BoundExceeded); // order exceeds 64 bits
}

TEST_CASE("quaternion, semidihedral, frobenius fixtures") {
  Group q8 = quaternion8();
  CHECK(q8.order() == 8);
  CHECK(center(q8).order() == 2);
  int involutions = 0;
  q8.for_each_element([&](Perm const &x) {
    if (perm_order(x) == 2)
      ++involutions;
  });
  CHECK(involutions == 1); // the defining property among order-8 groups

  Group sd = semidihedral16();
  CHECK(sd.order() == 16);
  CHECK(center(sd).order() == 2);

  Group f21 = frobenius21();
  CHECK(f21.order() == 21);
  CHECK_FALSE(f21.is_abelian());
  CHECK(is_solvable(f21));
  CHECK(sylow_subgroup(f21, 7).order() == 7);
  CHECK(is_normal_in(f21, sylow_subgroup(f21, 7)));
}

TEST_CASE("extraspecial group of order 27 and exponent 3") {
  Group F = extraspecial_3_exponent3();
  CHECK(F.order() == 27);
  CHECK(brute_order_of(F) == 27);
  CHECK_FALSE(F.is_abelian());

  Group Z = center(F);
  CHECK(Z.order() == 3);

  bool exponent3 = true;
  F.for_each_element([&](Perm const &x) {
    exponent3 = exponent3 && (perm_order(x) == 1 || perm_order(x) == 3);
  });
  CHECK(exponent3);

  // derived subgroup equals the center (extraspecial)
  Group D = derived_subgroup(F);
  CHECK(D.order() == 3);
  CHECK(D.is_subgroup_of(Z));

  // classes: three central singletons, eight classes of size 3
  CHECK(class_size_multiset(F) ==
        std::multiset<u64>{1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3});
}

TEST_CASE("order-54 extension inverts the extraspecial group modulo its center") {
  Group G = counterexample_54();
  CHECK(G.order() == 54);
  CHECK(brute_order_of(G) == 54);

  auto const &gens = G.generators();
  REQUIRE(gens.size() == 3);
  Group F(G.degree(), {gens[0], gens[1]});
  CHECK(F.order() == 27);
  CHECK(is_normal_in(G, F));

  Perm t = gens[2];
  CHECK(perm_order(t) == 2);
  CHECK_FALSE(F.contains(t));

  Group Z = center(F);
  CHECK(Z.order() == 3);
  // t centralizes the center and inverts everything modulo it
  std::vector<Perm> zs;
  Z.for_each_element([&](Perm const &z) { zs.push_back(z); });
  for (auto const &z : zs)
    CHECK(conjugate(z, t) == z);
  bool inverts = true;
  F.for_each_element([&](Perm const &x) {
    inverts = inverts && Z.contains(compose(conjugate(x, t), x));
  });
  CHECK(inverts);

  // the center of the extension is still the order-3 center
  CHECK(center(G).order() == 3);
}

TEST_CASE("direct products") {
  Group s3c2 = direct_product(symmetric(3), cyclic(2));
  CHECK(s3c2.order() == 12);
  CHECK(s3c2.degree() == 5);
  CHECK_FALSE(s3c2.is_abelian());

  Group psl7c2 = direct_product(projective_special_linear(2, 7), cyclic(2));
  CHECK(psl7c2.order() == 336);
  auto fs = composition_factors(psl7c2);
  std::sort(fs.begin(), fs.end());
  CHECK(fs == std::vector<std::string>{"C2", "PSL(2,7)"});
  CHECK(center(psl7c2).order() == 2);
}

// ---- psl2 parameter predicate ---------------------------------------------------

TEST_CASE("psl2 parameter check") {
  CHECK(psl2_parameter_check(3));
  CHECK(psl2_parameter_check(7));
  CHECK(psl2_parameter_check(11));
  CHECK(psl2_parameter_check(19));
  CHECK(psl2_parameter_check(23));
  CHECK(psl2_parameter_check(27)); // 3^3 = 27 = 3 mod 4
  CHECK_FALSE(psl2_parameter_check(9));  // 1 mod 4
  CHECK_FALSE(psl2_parameter_check(13)); // 1 mod 4
  CHECK_FALSE(psl2_parameter_check(4));  // 0 mod 4
  CHECK_FALSE(psl2_parameter_check(2));
  CHECK_FALSE(psl2_parameter_check(5));
  CHECK_FALSE(psl2_parameter_check(15)); // 3 mod 4 but not a prime power
  CHECK_FALSE(psl2_parameter_check(1));
  CHECK_FALSE(psl2_parameter_check(0));
}

// ---- Sylow shape of the linear and unitary groups --------------------------------

TEST_CASE("sylow shape worked examples") {
  {
    auto s = sylow_classical_shape(2, 4, Sign::plus, 3);
    CHECK(s.e == 1);
    CHECK(s.m == 2);
    CHECK(s.dim_v0 == 0);
    CHECK(s.toral_factor_order == 3);
    CHECK(s.predicted_sylow_order == 9);
  }
  {
    auto s = sylow_classical_shape(3, 2, Sign::plus, 7);
    CHECK(s.e == 3);
    CHECK(s.m == 1);
    CHECK(s.toral_factor_order == 7);
    CHECK(s.predicted_sylow_order == 7);
  }
  {
    auto s = sylow_classical_shape(2, 2, Sign::minus, 3);
    CHECK(s.e == 1);
    CHECK(s.m == 2);
    CHECK(s.toral_factor_order == 3);
    CHECK(s.predicted_sylow_order == 9);
  }
  {
    // the Weyl part contributes once m reaches p
    auto s = sylow_classical_shape(4, 4, Sign::plus, 3);
    CHECK(s.e == 1);
    CHECK(s.m == 4);
    CHECK(s.predicted_sylow_order == 243); // 3^4 from the torus, 3 from S_4
  }
  CHECK_THROWS_AS(sylow_classical_shape(2, 3, Sign::minus, 5), PreconditionError);
  CHECK_THROWS_AS(sylow_classical_shape(2, 4, Sign::plus, 2), PreconditionError);
  CHECK_THROWS_AS(sylow_classical_shape(2, 4, Sign::plus, 6), PreconditionError);
  CHECK_THROWS_AS(sylow_classical_shape(2, 9, Sign::plus, 3), PreconditionError);
}

TEST_CASE("sylow shape invariants over an arithmetic grid") {
  for (int n = 1; n <= 6; ++n)
    for (u64 q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
      for (Sign eps : {Sign::plus, Sign::minus})
        for (u64 p : {3u, 5u, 7u, 11u, 13u, 17u, 31u}) {
          if (q % p == 0)
            continue;
          Factored order = general_linear_order(n, q, eps);
          if (order.exponent(p) == 0) {
            CHECK_THROWS_AS(sylow_classical_shape(n, q, eps, p),
                            PreconditionError);
            continue;
          }
          CAPTURE(n);
          CAPTURE(q);
          CAPTURE(p);
          CAPTURE(sign_char(eps));
          auto s = sylow_classical_shape(n, q, eps, p);
          CHECK(s.dim_v0 >= 0);
          CHECK(s.dim_v0 < s.e);
          CHECK(s.n == s.e * s.m + s.dim_v0);
          CHECK(s.toral_factor_order % p == 0);
          // the closed form equals the exact p-part of the group order
          CHECK(Factored::of(s.predicted_sylow_order) ==
                Factored().mul_prime_power(p, order.exponent(p)));
        }
}

TEST_CASE("sylow shape matches computed sylow subgroups on small instances") {
  struct Case {
    int n;
    u64 q;
    Sign eps;
    u64 p;
  };
  for (auto const &[n, q, eps, p] : std::vector<Case>{
           {2, 4, Sign::plus, 3},
           {2, 4, Sign::plus, 5},
           {3, 2, Sign::plus, 7},
           {3, 2, Sign::plus, 3},
           {2, 2, Sign::minus, 3},
           {2, 4, Sign::minus, 5},
           {3, 2, Sign::minus, 3},
           {2, 7, Sign::plus, 3},
           {2, 5, Sign::plus, 3},
       }) {
    CAPTURE(n);
    CAPTURE(q);
    CAPTURE(p);
    CAPTURE(sign_char(eps));
    auto s = sylow_classical_shape(n, q, eps, p);
    Group g = general_linear(n, q, eps);
    CHECK(sylow_subgroup(g, p).order() == s.predicted_sylow_order);
  }
}
