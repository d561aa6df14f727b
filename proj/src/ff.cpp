#include "cgt/ff.hpp"

#include "cgt/error.hpp"

namespace cgt {

namespace {

// dense coefficient vectors over Z_p, constant term first, no trailing zeros
using Poly = std::vector<int>;

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// remainder of a by b (b monic is not assumed; leading coeff inverted mod p)
Poly pol_mod(Poly a, Poly const &b, u64 p) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  u64 lead_inv = inv_mod(static_cast<u64>(b[db]), p);
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    u64 c = mul_mod(static_cast<u64>(a[da]), lead_inv, p);
    for (int i = 0; i <= db; ++i) {
      u64 t = mul_mod(c, static_cast<u64>(b[i]), p);
      a[da - db + i] = static_cast<int>((a[da - db + i] + p - t) % p);
    }
    trim(a); // the leading term cancels exactly, so the degree drops
  }
  return a;
}

bool is_irreducible(Poly const &f, u64 p) {
  int k = static_cast<int>(f.size()) - 1;
  if (k == 1)
    return true;
  // trial division by every monic polynomial of degree 1..k/2
  for (int d = 1; 2 * d <= k; ++d) {
    u64 count = 1;
    for (int i = 0; i < d; ++i)
      count *= p;
    for (u64 t = 0; t < count; ++t) {
      Poly g(d + 1, 0);
      u64 r = t;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(r % p);
        r /= p;
      }
      g[d] = 1;
      if (pol_mod(f, g, p).empty())
        return false;
    }
  }
  return true;
}

Poly least_irreducible(u64 p, int k) {
  u64 count = 1;
  for (int i = 0; i < k; ++i)
    count *= p;
  for (u64 t = 0; t < count; ++t) {
    Poly f(k + 1, 0);
    u64 r = t;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(r % p);
      r /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p))
      return f;
  }
  throw InternalError("least_irreducible: no irreducible polynomial found");
}

std::vector<int> decode(u64 a, u64 p, int k) {
  std::vector<int> c(k, 0);
  for (int i = 0; i < k && a; ++i) {
    c[i] = static_cast<int>(a % p);
    a /= p;
  }
  return c;
}

u64 encode(std::vector<int> const &c, u64 p) {
  u64 a = 0;
  for (size_t i = c.size(); i-- > 0;)
    a = a * p + static_cast<u64>(c[i]);
  return a;
}

// coefficient-level product reduced by the modulus; used only to bootstrap the
// exp table, after which mul() runs on the tables
u64 mul_slow(u64 a, u64 b, u64 p, int k, Poly const &mod) {
  auto ca = decode(a, p, k), cb = decode(b, p, k);
  Poly prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      prod[i + j] = static_cast<int>(
          (prod[i + j] + mul_mod(static_cast<u64>(ca[i]), static_cast<u64>(cb[j]), p)) % p);
  Poly r = pol_mod(prod, mod, p);
  r.resize(k, 0);
  return encode(r, p);
}

} // namespace

FiniteField::FiniteField(u64 q) : q_(q) {
  if (q < 2 || !is_prime_power(q))
    throw PreconditionError("FiniteField: " + std::to_string(q) +
                            " is not a prime power");
  if (q > kMaxFieldSize)
    throw BoundExceeded("FiniteField: " + std::to_string(q) +
                        " exceeds the table limit");
  auto [p, k] = prime_power_of(q);
  p_ = p;
  k_ = k;
  mod_ = least_irreducible(p, k);

  // least primitive element: order exactly q-1, certified by checking all
  // maximal proper divisors
  auto pow_slow = [&](u64 a, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1)
        r = mul_slow(r, a, p_, k_, mod_);
      a = mul_slow(a, a, p_, k_, mod_);
      e >>= 1;
    }
    return r;
  };
  auto rs = prime_factors(q - 1);
  for (u64 g = 2; g < q; ++g) {
    bool primitive = true;
    for (u64 r : rs)
      if (pow_slow(g, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen_ = g;
      break;
    }
  }
  if (gen_ == 0) {
    if (q != 2)
      throw InternalError("FiniteField: no primitive element");
    gen_ = 1; // F_2 has the trivial unit group
  }

  exp_.assign(q - 1, 0);
  log_.assign(q, 0);
  u64 v = 1;
  for (u64 i = 0; i < q - 1; ++i) {
    exp_[i] = v;
    log_[v] = i;
    v = mul_slow(v, gen_, p_, k_, mod_);
  }
  if (v != 1)
    throw InternalError("FiniteField: generator order mismatch");
}

u64 FiniteField::add(u64 a, u64 b) const {
  if (p_ == 2)
    return a ^ b;
  u64 r = 0, m = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((a + b) % p_) * m;
    a /= p_;
    b /= p_;
    m *= p_;
  }
  return r;
}

u64 FiniteField::neg(u64 a) const {
  if (p_ == 2)
    return a;
  u64 r = 0, m = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * m;
    a /= p_;
    m *= p_;
  }
  return r;
}

u64 FiniteField::mul(u64 a, u64 b) const {
  if (a == 0 || b == 0)
    return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

u64 FiniteField::inv(u64 a) const {
  if (a == 0)
    throw PreconditionError("FiniteField: division by zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

u64 FiniteField::pow(u64 a, u64 e) const {
  if (a == 0)
    return e == 0 ? 1 : 0;
  return exp_[static_cast<u64>((u128)log_[a] * (e % (q_ - 1)) % (q_ - 1))];
}

u64 FiniteField::log(u64 a) const {
  if (a == 0)
    throw PreconditionError("FiniteField: log of zero");
  return log_[a];
}

} // namespace cgt
