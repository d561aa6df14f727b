#include "cgt/constructors.hpp"

#include "cgt/error.hpp"

namespace cgt {

namespace {

void require_positive(u64 n, char const *who) {
  if (n < 1)
    throw PreconditionError(std::string(who) + ": parameter must be at least 1");
}

u64 checked_factorial(u64 n) {
  u128 f = 1;
  for (u64 i = 2; i <= n; ++i) {
    f *= i;
    if (f > ~u64{0})
      throw BoundExceeded("group order exceeds 64 bits");
  }
  return static_cast<u64>(f);
}

Group from_gens(Point degree, std::vector<Perm> gens, u64 order) {
  BuildOptions opts;
  opts.known_order = order;
  return Group(degree, std::move(gens), opts);
}

} // namespace

Group symmetric(u64 n) {
  require_positive(n, "symmetric");
  u64 order = checked_factorial(n);
  if (n == 1)
    return Group::trivial(1);
  auto deg = static_cast<Point>(n);
  std::vector<Point> cycle(deg), swap01(deg);
  for (Point i = 0; i < deg; ++i) {
    cycle[i] = (i + 1) % deg;
    swap01[i] = i;
  }
  std::swap(swap01[0], swap01[1]);
  std::vector<Perm> gens{Perm(cycle)};
  if (n > 2)
    gens.emplace_back(swap01);
  return from_gens(deg, std::move(gens), order);
}

Group alternating(u64 n) {
  require_positive(n, "alternating");
  u64 order = n < 3 ? 1 : checked_factorial(n) / 2;
  if (n < 3)
    return Group::trivial(static_cast<Point>(n));
  auto deg = static_cast<Point>(n);
  // (0 1 2) together with an n-cycle (n odd) or an (n-1)-cycle on 1..n-1
  std::vector<Point> three(deg), big(deg);
  for (Point i = 0; i < deg; ++i) {
    three[i] = i;
    big[i] = i;
  }
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n % 2 == 1) {
    for (Point i = 0; i < deg; ++i)
      big[i] = (i + 1) % deg;
  } else {
    for (Point i = 1; i < deg; ++i)
      big[i] = i % (deg - 1) + 1;
  }
  std::vector<Perm> gens{Perm(three)};
  if (n > 3)
    gens.emplace_back(big);
  return from_gens(deg, std::move(gens), order);
}

Group cyclic(u64 n) {
  require_positive(n, "cyclic");
  if (n == 1)
    return Group::trivial(1);
  if (n > (u64{1} << 31))
    throw BoundExceeded("cyclic: degree exceeds the permutation limit");
  auto deg = static_cast<Point>(n);
  std::vector<Point> cycle(deg);
  for (Point i = 0; i < deg; ++i)
    cycle[i] = (i + 1) % deg;
  return from_gens(deg, {Perm(cycle)}, n);
}

Group dihedral(u64 n) {
  require_positive(n, "dihedral");
  if (n == 1)
    return cyclic(2);
  if (n == 2) // the Klein group needs four points to act faithfully
    return from_gens(4, {Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})}, 4);
  if (n > (u64{1} << 31))
    throw BoundExceeded("dihedral: degree exceeds the permutation limit");
  auto deg = static_cast<Point>(n);
  std::vector<Point> rot(deg), flip(deg);
  for (Point i = 0; i < deg; ++i) {
    rot[i] = (i + 1) % deg;
    flip[i] = static_cast<Point>((deg - i) % deg);
  }
  u128 order = u128{2} * n;
  if (order > ~u64{0})
    throw BoundExceeded("dihedral: order exceeds 64 bits");
  return from_gens(deg, {Perm(rot), Perm(flip)}, static_cast<u64>(order));
}

Group elementary_abelian(u64 p, int k) {
  if (!is_prime(p))
    throw PreconditionError("elementary_abelian: " + std::to_string(p) +
                            " is not prime");
  if (k < 1)
    throw PreconditionError("elementary_abelian: exponent must be at least 1");
  u128 order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order > ~u64{0})
      throw BoundExceeded("elementary_abelian: order exceeds 64 bits");
  }
  u128 deg128 = u128{p} * static_cast<u64>(k);
  if (deg128 > (u64{1} << 31))
    throw BoundExceeded("elementary_abelian: degree exceeds the permutation limit");
  auto deg = static_cast<Point>(p * static_cast<u64>(k));
  std::vector<Perm> gens;
  for (int j = 0; j < k; ++j) {
    std::vector<Point> img(deg);
    for (Point i = 0; i < deg; ++i)
      img[i] = i;
    Point base = static_cast<Point>(j) * static_cast<Point>(p);
    for (u64 i = 0; i < p; ++i)
      img[base + i] = base + static_cast<Point>((i + 1) % p);
    gens.emplace_back(img);
  }
  return from_gens(deg, std::move(gens), static_cast<u64>(order));
}

Group quaternion8() {
  // regular action on {1,-1,i,-i,j,-j,k,-k} = points 0..7; generators i and j
  // i: 1->i->-1->-i, j->k->-j->-k    j: 1->j->-1->-j, i->-k->-i->k
  Perm i({2, 3, 1, 0, 6, 7, 5, 4});
  Perm j({4, 5, 7, 6, 1, 0, 2, 3});
  return from_gens(8, {i, j}, 8);
}

Group semidihedral16() {
  return from_gens(
      8, {parse_cycles("(0 1 2 3 4 5 6 7)", 8), parse_cycles("(1 3)(2 6)(5 7)", 8)},
      16);
}

Group frobenius21() {
  return from_gens(
      7, {parse_cycles("(0 1 2 3 4 5 6)", 7), parse_cycles("(1 2 4)(3 6 5)", 7)},
      21);
}

namespace {

// the Heisenberg group over F_3: triples (a,b,c) with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'); encoded as 9a+3b+c
struct H27 {
  int a, b, c;
  static H27 decode(Point x) {
    return {static_cast<int>(x) / 9, static_cast<int>(x) / 3 % 3,
            static_cast<int>(x) % 3};
  }
  Point encode() const { return static_cast<Point>(9 * a + 3 * b + c); }
  H27 mul(H27 const &o) const {
    return {(a + o.a) % 3, (b + o.b) % 3, (c + o.c + a * o.b) % 3};
  }
};

Perm left_translation(H27 g) {
  std::vector<Point> img(27);
  for (Point x = 0; x < 27; ++x)
    img[x] = g.mul(H27::decode(x)).encode();
  return Perm(img);
}

} // namespace

Group extraspecial_3_exponent3() {
  return from_gens(27, {left_translation({1, 0, 0}), left_translation({0, 1, 0})},
                   27);
}

Group counterexample_54() {
  // the map (a,b,c) -> (-a,-b,c) is an automorphism: it fixes the center
  // pointwise and inverts every element modulo the center
  std::vector<Point> tau(27);
  for (Point x = 0; x < 27; ++x) {
    H27 v = H27::decode(x);
    tau[x] = H27{(3 - v.a) % 3, (3 - v.b) % 3, v.c}.encode();
  }
  return from_gens(
      27, {left_translation({1, 0, 0}), left_translation({0, 1, 0}), Perm(tau)},
      54);
}

Group direct_product(Group const &A, Group const &B) {
  u128 order = u128{A.order()} * B.order();
  if (order > ~u64{0})
    throw BoundExceeded("direct_product: order exceeds 64 bits");
  Point da = A.degree(), db = B.degree();
  Point deg = da + db;
  std::vector<Perm> gens;
  for (auto const &g : A.generators()) {
    std::vector<Point> img(deg);
    for (Point i = 0; i < da; ++i)
      img[i] = g[i];
    for (Point i = 0; i < db; ++i)
      img[da + i] = da + i;
    gens.emplace_back(img);
  }
  for (auto const &g : B.generators()) {
    std::vector<Point> img(deg);
    for (Point i = 0; i < da; ++i)
      img[i] = i;
    for (Point i = 0; i < db; ++i)
      img[da + i] = da + g[i];
    gens.emplace_back(img);
  }
  return from_gens(deg, std::move(gens), static_cast<u64>(order));
}

bool psl2_parameter_check(u64 q) {
  return is_prime_power(q) && q % 4 == 3;
}

SylowClassicalShape sylow_classical_shape(int n, u64 q, Sign eps, u64 p) {
  if (n < 1)
    throw PreconditionError("sylow_classical_shape: dimension must be at least 1");
  if (q < 2 || !is_prime_power(q))
    throw PreconditionError("sylow_classical_shape: " + std::to_string(q) +
                            " is not a prime power");
  if (!is_prime(p) || p == 2)
    throw PreconditionError("sylow_classical_shape: " + std::to_string(p) +
                            " is not an odd prime");
  if (q % p == 0)
    throw PreconditionError("sylow_classical_shape: p divides q (defining "
                            "characteristic)");

  SylowClassicalShape s;
  s.epsilon = eps;
  s.n = n;
  s.q = q;
  s.p = p;

  // e = multiplicative order of eps*q modulo p
  u64 base = q % p;
  if (eps == Sign::minus)
    base = p - base; // nonzero since p does not divide q
  int e = 1;
  u64 v = base;
  while (v != 1) {
    v = mul_mod(v, base, p);
    ++e;
  }
  s.e = e;
  s.m = n / e;
  s.dim_v0 = n - e * s.m;
  if (s.m == 0)
    throw PreconditionError(
        "sylow_classical_shape: p does not divide the group order");

  u128 qe = 1;
  for (int i = 0; i < e; ++i) {
    qe *= q;
    if (qe > ~u64{0})
      throw BoundExceeded("sylow_classical_shape: toral factor exceeds 64 bits");
  }
  s.toral_factor_order = (eps == Sign::plus || e % 2 == 0)
                             ? static_cast<u64>(qe) - 1
                             : static_cast<u64>(qe) + 1;

  u64 toral_p = Factored::of(s.toral_factor_order).p_part(p);
  int weyl_exp = 0; // p-adic valuation of m! by Legendre's formula
  for (u64 pk = p; pk <= static_cast<u64>(s.m); pk *= p) {
    weyl_exp += s.m / static_cast<int>(pk);
    if (pk > static_cast<u64>(s.m) / p)
      break;
  }
  u128 predicted = 1;
  for (int i = 0; i < s.m; ++i)
    predicted *= toral_p;
  for (int i = 0; i < weyl_exp; ++i)
    predicted *= p;
  if (predicted > ~u64{0})
    throw BoundExceeded("sylow_classical_shape: predicted order exceeds 64 bits");
  s.predicted_sylow_order = static_cast<u64>(predicted);
  return s;
}

} // namespace cgt
