#pragma once

#include "cgt/group.hpp"
#include "cgt/matgroup.hpp"

namespace cgt {

// named families in their natural faithful actions; orders n!, n!/2, n, 2n, p^k
Group symmetric(u64 n);
Group alternating(u64 n);
Group cyclic(u64 n);
Group dihedral(u64 n); // order 2n
Group elementary_abelian(u64 p, int k);

Group quaternion8();    // order 8, regular action
Group semidihedral16(); // order 16 on 8 points, s r s^-1 = r^3
Group frobenius21();    // C7 : C3 on 7 points, the smallest nonabelian odd-order group

// the extraspecial group of order 27 and exponent 3, in its regular action
Group extraspecial_3_exponent3();
// that group extended by an involution inverting it modulo the center and
// centralizing the center; order 54 on 27 points
Group counterexample_54();

// A acting on its points, B on a disjoint shifted copy
Group direct_product(Group const &A, Group const &B);

// true iff q is a prime power congruent to 3 modulo 4
bool psl2_parameter_check(u64 q);

// closed-form shape of a Sylow p-subgroup of GL^eps_n(q) for odd p not
// dividing q: the natural module splits as V_0 perp V_1 ... perp V_m with
// dim V_i = e for i >= 1, the Sylow subgroup is (toral p-part)^m extended by a
// Sylow p-subgroup of the symmetric group permuting the V_i
struct SylowClassicalShape {
  Sign epsilon = Sign::plus;
  int n = 0;
  u64 q = 0;
  u64 p = 0;
  int e = 0;                     // multiplicative order of eps*q modulo p
  int m = 0;                     // floor(n/e), the number of moved blocks
  int dim_v0 = 0;                // n - e*m, the dimension p acts trivially on
  u64 toral_factor_order = 0;    // q^e - eps^e
  u64 predicted_sylow_order = 0; // (p-part of toral)^m * (p-part of m!)
};

SylowClassicalShape sylow_classical_shape(int n, u64 q, Sign eps, u64 p);

} // namespace cgt
