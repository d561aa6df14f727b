#pragma once

#include "cgt/numeric.hpp"

#include <string>
#include <vector>

namespace cgt {

// m-th cyclotomic polynomial as integer coefficients, constant term first;
// results are cached process-wide (single-threaded use)
std::vector<i64> const &cyclotomic_polynomial(u64 m);

// An algebraic integer in Z[zeta_m], stored as the unique coordinate vector
// over the power basis 1, zeta, ..., zeta^(phi(m)-1) (reduced modulo the m-th
// cyclotomic polynomial). Values of different conductors compare and combine
// by lifting to the least common conductor; all arithmetic is exact.
class CyclotomicValue {
public:
  CyclotomicValue() : m_(1), c_{0} {} // zero
  static CyclotomicValue integer(i64 n);
  static CyclotomicValue root_of_unity(u64 m, u64 k); // zeta_m^k
  // sum of ev[j] * zeta_m^j over j < m
  static CyclotomicValue from_exponent_vector(u64 m, std::vector<i64> ev);

  u64 conductor() const { return m_; }
  std::vector<i64> const &coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const; // power-basis coordinates make this a vector test
  i64 rational_value() const;

  CyclotomicValue conjugated() const;         // complex conjugation
  CyclotomicValue galois(u64 k) const;        // zeta -> zeta^k, gcd(k,m) = 1
  CyclotomicValue at_conductor(u64 big) const; // rewrite over Q(zeta_big), m | big

  friend CyclotomicValue operator+(CyclotomicValue const &a,
                                   CyclotomicValue const &b);
  friend CyclotomicValue operator-(CyclotomicValue const &a,
                                   CyclotomicValue const &b);
  friend CyclotomicValue operator*(CyclotomicValue const &a,
                                   CyclotomicValue const &b);
  friend bool operator==(CyclotomicValue const &a, CyclotomicValue const &b);
  friend bool operator!=(CyclotomicValue const &a, CyclotomicValue const &b) {
    return !(a == b);
  }
  // reproducible total order (common-conductor coordinate lex); used only for
  // deterministic sorting, no numeric meaning
  friend bool operator<(CyclotomicValue const &a, CyclotomicValue const &b);

  // evaluation under the ring map zeta_m -> root^(n/m) for a primitive n-th
  // root of unity `root` in F_ell, m | n; used for modular cross-checks
  u64 eval_mod(u64 n, u64 root, u64 ell) const;

  std::string str() const; // compact rendering, e.g. "1-z3^2"

private:
  CyclotomicValue(u64 m, std::vector<i64> c) : m_(m), c_(std::move(c)) {}

  u64 m_;
  std::vector<i64> c_; // size phi(m_)
};

} // namespace cgt
