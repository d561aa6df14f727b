#pragma once

#include "cgt/ff.hpp"
#include "cgt/group.hpp"

#include <vector>

namespace cgt {

// family selector for the linear groups: plus is the linear series GL/SL/PSL
// over F_q, minus the unitary series GU/SU/PSU over F_{q^2} preserving the
// identity hermitian form (orthonormal basis)
enum class Sign : int { plus = +1, minus = -1 };

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// square matrix over a finite field; entries are field-element encodings
struct Mat {
  int n = 0;
  std::vector<u64> a; // row-major

  Mat() = default;
  explicit Mat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}

  u64 &at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  u64 at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static Mat identity(int n);
};

Mat mat_mul(FiniteField const &F, Mat const &A, Mat const &B);
u64 mat_det(FiniteField const &F, Mat A);

// classical order formulas: |GL^e_n(q)| = q^{n(n-1)/2} prod_{i=1..n}(q^i - e^i),
// |SL^e| = |GL^e| / (q - e), |PSL^e| = |SL^e| / gcd(n, q - e)
Factored general_linear_order(int n, u64 q, Sign eps);
Factored special_linear_order(int n, u64 q, Sign eps);
Factored projective_special_linear_order(int n, u64 q, Sign eps);

inline constexpr Point kMatrixDegreeCap = 5000;

// permutation images: GL/SL/GU/SU act on the nonzero vectors of the natural
// module (lexicographic point order), PSL/PSU on the projective points. Every
// returned group's order is certified against the classical formula.
Group general_linear(int n, u64 q, Sign eps = Sign::plus,
                     Point degree_cap = kMatrixDegreeCap);
Group special_linear(int n, u64 q, Sign eps = Sign::plus,
                     Point degree_cap = kMatrixDegreeCap);
Group projective_special_linear(int n, u64 q, Sign eps = Sign::plus,
                                Point degree_cap = kMatrixDegreeCap);

} // namespace cgt
