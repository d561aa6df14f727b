#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgt/error.hpp"
#include "cgt/numeric.hpp"

#include <vector>

using namespace cgt;

namespace {

// independent primality check by pure trial division
bool slow_is_prime(u64 n) {
  if (n < 2)
    return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace

TEST_CASE("primality matches trial division up to 10000") {
  for (u64 n = 0; n <= 10000; ++n)
    CHECK(is_prime(n) == slow_is_prime(n));
}

TEST_CASE("primality on selected 64-bit values") {
  CHECK(is_prime(2305843009213693951ull)); // 2^61 - 1, Mersenne prime
  CHECK(!is_prime(2305843009213693953ull));
  CHECK(is_prime(18446744073709551557ull)); // largest prime below 2^64
  CHECK(!is_prime(18446744073709551615ull));
}

TEST_CASE("factorization reconstructs and yields prime factors") {
  for (u64 n = 1; n <= 5000; ++n) {
    auto f = Factored::of(n);
    CHECK(f.value() == n);
    for (auto const &[p, e] : f.factors()) {
      CHECK(slow_is_prime(p));
      CHECK(e >= 1);
    }
  }
  auto big = Factored::of(2ull * 3 * 3 * 1000003);
  CHECK(big.exponent(3) == 2);
  CHECK(big.exponent(2) == 1);
  CHECK(big.exponent(1000003) == 1);
  CHECK(big.exponent(5) == 0);
}

TEST_CASE("factored arithmetic") {
  auto a = Factored::of(12); // 2^2 * 3
  auto b = Factored::of(18); // 2 * 3^2
  CHECK(a.mul(b).value() == 216);
  CHECK(a.p_part(2) == 4);
  CHECK(a.p_part(3) == 3);
  CHECK(a.p_part(5) == 1);
  CHECK(a.divisible_by(Factored::of(6)));
  CHECK(!a.divisible_by(b));
  CHECK(Factored::of(1).value() == 1);
  CHECK(Factored::of(1).factors().empty());
  auto c = Factored::of(60);
  CHECK(c.str() == "2^2 * 3 * 5");
  CHECK(Factored::of(1).str() == "1");
  CHECK(Factored::of(7).str() == "7");
}

TEST_CASE("factored value overflow is detected") {
  Factored huge;
  huge = huge.mul_prime_power(2, 64);
  CHECK_THROWS_AS(huge.value(), BoundExceeded);
}

TEST_CASE("modular arithmetic against direct computation") {
  u64 const m = 1000000007;
  CHECK(mul_mod(999999999, 999999998, m) ==
        static_cast<u64>((static_cast<u128>(999999999) * 999999998) % m));
  CHECK(pow_mod(3, 0, m) == 1);
  CHECK(pow_mod(3, 1, m) == 3);
  u64 x = 1;
  for (int i = 0; i < 20; ++i)
    x = mul_mod(x, 7, m);
  CHECK(pow_mod(7, 20, m) == x);
  for (u64 a = 1; a < 97; ++a) {
    u64 inv = inv_mod(a, 97);
    CHECK(mul_mod(a, inv, 97) == 1);
  }
}

TEST_CASE("gcd and lcm") {
  CHECK(gcd_u64(0, 5) == 5);
  CHECK(gcd_u64(12, 18) == 6);
  CHECK(lcm_u64(4, 6) == 12);
  CHECK(lcm_u64(1, 1) == 1);
  CHECK_THROWS_AS(lcm_u64(1ull << 40, (1ull << 40) + 1), BoundExceeded);
}

TEST_CASE("prime in arithmetic progression 1 mod k") {
  for (u64 k : {1ull, 2ull, 6ull, 12ull, 60ull, 5040ull}) {
    u64 p = find_prime_in_progression(k, 100);
    CHECK(is_prime(p));
    CHECK(p % k == 1 % k);
    CHECK(p > 100);
  }
  // the character-table use case: a prime that is 1 mod the group exponent
  // and larger than twice the square root of the group order
  u64 ell = find_prime_in_progression(12, 9); // exponent 12, order 24
  CHECK(ell % 12 == 1);
  CHECK(ell > 9);
  CHECK(is_prime(ell));
}

TEST_CASE("primitive roots") {
  for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull, 97ull, 101ull, 1009ull}) {
    u64 g = least_primitive_root(p);
    // verify g has multiplicative order exactly p-1
    u64 v = g % p;
    u64 ord = 1;
    while (v != 1) {
      v = mul_mod(v, g, p);
      ++ord;
    }
    CHECK(ord == p - 1);
    // leastness: no smaller generator
    for (u64 h = 2; h < g; ++h) {
      u64 w = h % p, o = 1;
      while (w != 1) {
        w = mul_mod(w, h, p);
        ++o;
      }
      CHECK(o < p - 1);
    }
  }
}
