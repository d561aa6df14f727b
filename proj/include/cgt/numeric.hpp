#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cgt {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// prime factorization with exponents, kept sorted by prime
class Factored {
public:
  Factored() = default;

  static Factored of(u64 n);

  Factored mul_prime_power(u64 p, int e) const;
  Factored mul(Factored const &other) const;
  Factored div(Factored const &other) const; // throws unless exact

  u64 value() const; // throws on 64-bit overflow
  u64 p_part(u64 p) const;
  int exponent(u64 p) const { auto it = f_.find(p); return it == f_.end() ? 0 : it->second; }
  bool divisible_by(u64 p) const { return exponent(p) > 0; }
  bool divisible_by(Factored const &d) const;
  bool operator==(Factored const &o) const { return f_ == o.f_; }
  bool operator!=(Factored const &o) const { return f_ != o.f_; }

  std::vector<u64> primes() const;
  std::map<u64, int> const &factors() const { return f_; }
  std::string str() const; // "2^3 * 3 * 7"

private:
  std::map<u64, int> f_;
};

bool is_prime(u64 n);
bool is_prime_power(u64 n);                // p^k with k >= 1
std::pair<u64, int> prime_power_of(u64 n); // (p, k); throws unless prime power
std::vector<u64> prime_factors(u64 n);
u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b); // throws on overflow

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 e, u64 m);
u64 inv_mod(u64 a, u64 m); // m prime

// smallest prime ell with ell ≡ 1 (mod k) and ell > floor
u64 find_prime_in_progression(u64 k, u64 floor);

u64 least_primitive_root(u64 p);

} // namespace cgt
