#include "cgt/numeric.hpp"

#include "cgt/error.hpp"

#include <algorithm>
#include <sstream>

namespace cgt {

Factored Factored::of(u64 n) {
  if (n == 0)
    throw PreconditionError("Factored::of: zero has no factorization");
  Factored r;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    if (e) r.f_[p] = e;
  }
  if (n > 1) r.f_[n] += 1;
  return r;
}

Factored Factored::mul_prime_power(u64 p, int e) const {
  Factored r = *this;
  if (e != 0) r.f_[p] += e;
  return r;
}

Factored Factored::mul(Factored const &other) const {
  Factored r = *this;
  for (auto const &[p, e] : other.f_) r.f_[p] += e;
  return r;
}

Factored Factored::div(Factored const &other) const {
  Factored r = *this;
  for (auto const &[p, e] : other.f_) {
    auto it = r.f_.find(p);
    if (it == r.f_.end() || it->second < e)
      throw PreconditionError("Factored::div: " + str() + " not divisible by " +
                              other.str());
    it->second -= e;
    if (it->second == 0)
      r.f_.erase(it);
  }
  return r;
}

bool Factored::divisible_by(Factored const &d) const {
  for (auto const &[p, e] : d.f_)
    if (exponent(p) < e)
      return false;
  return true;
}

u64 Factored::value() const {
  u128 v = 1;
  for (auto const &[p, e] : f_)
    for (int i = 0; i < e; ++i) {
      v *= p;
      if (v > ~u64{0})
        throw BoundExceeded("Factored::value: exceeds 64 bits");
    }
  return static_cast<u64>(v);
}

u64 Factored::p_part(u64 p) const {
  int e = exponent(p);
  u64 v = 1;
  while (e-- > 0) v *= p;
  return v;
}

std::vector<u64> Factored::primes() const {
  std::vector<u64> ps;
  ps.reserve(f_.size());
  for (auto const &[p, e] : f_) ps.push_back(p);
  return ps;
}

std::string Factored::str() const {
  if (f_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto const &[p, e] : f_) {
    if (!first) os << " * ";
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

namespace {

// deterministic Miller-Rabin, valid for all 64-bit inputs
bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int r = 0;
  while (d % 2 == 0) { d /= 2; ++r; }
  u64 x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 0; i < r - 1; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

} // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (!miller_rabin(n, a)) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  return Factored::of(n).primes();
}

bool is_prime_power(u64 n) {
  if (n < 2)
    return false;
  return Factored::of(n).factors().size() == 1;
}

std::pair<u64, int> prime_power_of(u64 n) {
  if (!is_prime_power(n))
    throw PreconditionError("prime_power_of: " + std::to_string(n) +
                            " is not a prime power");
  auto const &f = Factored::of(n).factors();
  return {f.begin()->first, f.begin()->second};
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) { u64 t = a % b; a = b; b = t; }
  return a;
}

u64 lcm_u64(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  u64 g = gcd_u64(a, b);
  u128 v = (u128)(a / g) * b;
  if (v > ~u64{0})
    throw BoundExceeded("lcm_u64: exceeds 64 bits");
  return static_cast<u64>(v);
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((u128)a * b % m);
}

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 m) {
  return pow_mod(a % m, m - 2, m); // m prime
}

u64 find_prime_in_progression(u64 k, u64 floor) {
  // Dirichlet guarantees one exists; the loop is bounded in practice
  u64 ell = k + 1;
  while (ell <= floor || !is_prime(ell)) {
    ell += k;
    if (ell < k) // overflow, unreachable at sane scales
      throw InternalError("find_prime_in_progression: overflow");
  }
  return ell;
}

u64 least_primitive_root(u64 p) {
  if (p == 2) return 1;
  auto qs = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : qs)
      if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw InternalError("least_primitive_root: none found");
}

} // namespace cgt
