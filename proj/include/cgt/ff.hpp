#pragma once

#include "cgt/numeric.hpp"

#include <vector>

namespace cgt {

// max table-backed field size; large enough for every permutation degree the
// matrix constructors can accept
inline constexpr u64 kMaxFieldSize = 1u << 16;

// The field with q = p^k elements, realized as Z_p[x]/(f) where f is the first
// monic irreducible of degree k in base-p counting order: f = x^k + sum c_i x^i
// with (c_{k-1} ... c_1 c_0) read as the base-p digits of the smallest counter
// value that yields an irreducible polynomial. An element is encoded by the
// integer sum c_i p^i of its coefficient vector, so 0 and 1 encode the additive
// and multiplicative identities. Multiplication runs on exp/log tables over the
// least primitive element, so all arithmetic is deterministic and reproducible.
class FiniteField {
public:
  explicit FiniteField(u64 q); // q a prime power <= kMaxFieldSize

  u64 size() const { return q_; }
  u64 characteristic() const { return p_; }
  int degree_over_prime() const { return k_; }

  u64 add(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const; // throws PreconditionError on 0
  u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }
  u64 pow(u64 a, u64 e) const;

  u64 generator() const { return gen_; } // least primitive element
  u64 log(u64 a) const;                  // discrete log base generator(); throws on 0

  // the reduction modulus: k+1 coefficients in [0,p), constant term first
  std::vector<int> const &modulus() const { return mod_; }

private:
  u64 q_ = 0, p_ = 0, gen_ = 0;
  int k_ = 0;
  std::vector<int> mod_;
  std::vector<u64> exp_; // exp_[i] = generator^i, i in [0, q-1)
  std::vector<u64> log_; // log_[exp_[i]] = i; log_[0] unused
};

} // namespace cgt
