#include "cgt/cyclotomic.hpp"

#include "cgt/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cgt {

namespace {

// exact division of integer polynomials, divisor monic; throws if inexact
std::vector<i64> exact_div(std::vector<i64> num, std::vector<i64> const &den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  if (dn < dd)
    throw InternalError("cyclotomic division underflow");
  std::vector<i64> quo(static_cast<size_t>(dn - dd) + 1, 0);
  for (int i = dn - dd; i >= 0; --i) {
    i64 c = num[static_cast<size_t>(i + dd)];
    quo[static_cast<size_t>(i)] = c;
    if (c == 0)
      continue;
    for (int j = 0; j <= dd; ++j)
      num[static_cast<size_t>(i + j)] -= c * den[static_cast<size_t>(j)];
  }
  for (i64 c : num)
    if (c != 0)
      throw InternalError("cyclotomic division left a remainder");
  return quo;
}

// remainder of c modulo the monic polynomial f, in place
void reduce_mod(std::vector<i64> &c, std::vector<i64> const &f) {
  size_t df = f.size() - 1;
  while (c.size() > df) {
    i64 lead = c.back();
    size_t shift = c.size() - 1 - df;
    if (lead != 0)
      for (size_t j = 0; j < df; ++j)
        c[shift + j] -= lead * f[j];
    c.pop_back();
  }
  c.resize(df, 0);
}

} // namespace

std::vector<i64> const &cyclotomic_polynomial(u64 m) {
  static std::map<u64, std::vector<i64>> cache;
  if (m < 1)
    throw PreconditionError("cyclotomic polynomial needs m >= 1");
  auto it = cache.find(m);
  if (it != cache.end())
    return it->second;
  // (x^m - 1) / prod of the cyclotomic polynomials of the proper divisors
  std::vector<i64> f(m + 1, 0);
  f[0] = -1;
  f[m] = 1;
  for (u64 d = 1; d < m; ++d)
    if (m % d == 0)
      f = exact_div(std::move(f), cyclotomic_polynomial(d));
  return cache.emplace(m, std::move(f)).first->second;
}

CyclotomicValue CyclotomicValue::from_exponent_vector(u64 m,
                                                      std::vector<i64> ev) {
  reduce_mod(ev, cyclotomic_polynomial(m));
  return CyclotomicValue(m, std::move(ev));
}

CyclotomicValue CyclotomicValue::integer(i64 n) {
  return CyclotomicValue(1, {n});
}

CyclotomicValue CyclotomicValue::root_of_unity(u64 m, u64 k) {
  if (m < 1)
    throw PreconditionError("root of unity needs conductor >= 1");
  std::vector<i64> ev(m, 0);
  ev[k % m] = 1;
  return from_exponent_vector(m, std::move(ev));
}

bool CyclotomicValue::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](i64 x) { return x == 0; });
}

bool CyclotomicValue::is_rational() const {
  // power-basis coordinates are unique, so rational means constant
  return std::all_of(c_.begin() + 1, c_.end(), [](i64 x) { return x == 0; });
}

i64 CyclotomicValue::rational_value() const {
  if (!is_rational())
    throw PreconditionError("cyclotomic value is irrational");
  return c_[0];
}

CyclotomicValue CyclotomicValue::galois(u64 k) const {
  if (m_ == 1)
    return *this;
  if (std::gcd(k % m_, m_) != 1)
    throw PreconditionError("galois exponent not coprime to the conductor");
  std::vector<i64> ev(m_, 0);
  for (size_t j = 0; j < c_.size(); ++j)
    ev[(j * (k % m_)) % m_] += c_[j];
  return from_exponent_vector(m_, std::move(ev));
}

CyclotomicValue CyclotomicValue::conjugated() const {
  return m_ == 1 ? *this : galois(m_ - 1);
}

CyclotomicValue CyclotomicValue::at_conductor(u64 big) const {
  if (big % m_ != 0)
    throw PreconditionError("target conductor must be a multiple");
  if (big == m_)
    return *this;
  u64 stride = big / m_;
  std::vector<i64> ev(big, 0);
  for (size_t j = 0; j < c_.size(); ++j)
    ev[j * stride] += c_[j];
  return from_exponent_vector(big, std::move(ev));
}

CyclotomicValue operator+(CyclotomicValue const &a, CyclotomicValue const &b) {
  u64 m = std::lcm(a.m_, b.m_);
  CyclotomicValue x = a.at_conductor(m), y = b.at_conductor(m);
  for (size_t i = 0; i < x.c_.size(); ++i)
    x.c_[i] += y.c_[i];
  return x;
}

CyclotomicValue operator-(CyclotomicValue const &a, CyclotomicValue const &b) {
  u64 m = std::lcm(a.m_, b.m_);
  CyclotomicValue x = a.at_conductor(m), y = b.at_conductor(m);
  for (size_t i = 0; i < x.c_.size(); ++i)
    x.c_[i] -= y.c_[i];
  return x;
}

CyclotomicValue operator*(CyclotomicValue const &a, CyclotomicValue const &b) {
  u64 m = std::lcm(a.m_, b.m_);
  CyclotomicValue x = a.at_conductor(m), y = b.at_conductor(m);
  std::vector<i64> prod(x.c_.size() + y.c_.size() - 1, 0);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0)
      continue;
    for (size_t j = 0; j < y.c_.size(); ++j)
      prod[i + j] += x.c_[i] * y.c_[j];
  }
  reduce_mod(prod, cyclotomic_polynomial(m));
  return CyclotomicValue(m, std::move(prod));
}

bool operator==(CyclotomicValue const &a, CyclotomicValue const &b) {
  if (a.m_ == b.m_)
    return a.c_ == b.c_;
  u64 m = std::lcm(a.m_, b.m_);
  return a.at_conductor(m).c_ == b.at_conductor(m).c_;
}

bool operator<(CyclotomicValue const &a, CyclotomicValue const &b) {
  u64 m = std::lcm(a.m_, b.m_);
  return a.at_conductor(m).c_ < b.at_conductor(m).c_;
}

u64 CyclotomicValue::eval_mod(u64 n, u64 root, u64 ell) const {
  if (n % m_ != 0)
    throw PreconditionError("evaluation root order not divisible by conductor");
  u64 z = 1, step = 1;
  {
    u64 e = n / m_;
    u64 base = root % ell;
    while (e) { // z = root^(n/m)
      if (e & 1)
        z = static_cast<u64>(u128(z) * base % ell);
      base = static_cast<u64>(u128(base) * base % ell);
      e >>= 1;
    }
  }
  u64 acc = 0;
  for (size_t j = 0; j < c_.size(); ++j) {
    i64 c = c_[j];
    u64 cm = c >= 0 ? static_cast<u64>(c) % ell
                    : ell - static_cast<u64>(-c) % ell;
    acc = (acc + u128(cm % ell) * step) % ell;
    step = static_cast<u64>(u128(step) * z % ell);
  }
  return acc % ell;
}

std::string CyclotomicValue::str() const {
  if (is_rational())
    return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    i64 c = c_[j];
    if (c == 0)
      continue;
    if (!first)
      os << (c > 0 ? "+" : "-");
    else if (c < 0)
      os << "-";
    first = false;
    i64 mag = c > 0 ? c : -c;
    if (j == 0) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag;
    os << "z" << m_;
    if (j > 1)
      os << "^" << j;
  }
  return os.str();
}

} // namespace cgt
