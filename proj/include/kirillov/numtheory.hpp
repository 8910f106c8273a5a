#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include <boost/multiprecision/miller_rabin.hpp>

#include "kirillov/bigint.hpp"

namespace kirillov {

namespace detail {

inline BigInt pollard_brent(const BigInt& n, unsigned seed) {
  if (n % 2 == 0) return 2;
  BigInt y = seed + 1, c = seed + 3, m = 64, g = 1, r = 1, q = 1, x, ys;
  auto f = [&](const BigInt& v) { return (v * v + c) % n; };
  while (g == 1) {
    x = y;
    for (BigInt i = 0; i < r; ++i) y = f(y);
    BigInt k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (BigInt i = 0, lim = std::min<BigInt>(m, r - k); i < lim; ++i) {
        y = f(y);
        q = q * (x > y ? BigInt(x - y) : BigInt(y - x)) % n;
      }
      g = boost::multiprecision::gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = boost::multiprecision::gcd(x > ys ? BigInt(x - ys) : BigInt(ys - x), n);
    } while (g == 1);
  }
  return g;
}

inline void factor_into(BigInt n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (boost::multiprecision::miller_rabin_test(n, 25)) {
    ++out[n];
    return;
  }
  for (unsigned seed = 0;; ++seed) {
    BigInt d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace detail

/// Prime factorization of |n| (n nonzero): trial division by small primes, then Pollard-Brent.
inline std::map<BigInt, unsigned> factor_integer(BigInt n) {
  std::map<BigInt, unsigned> out;
  if (n < 0) n = -n;
  for (unsigned d = 2; d < 10000 && BigInt(d) * d <= n; d += d == 2 ? 1 : 2) {
    while (n % d == 0) {
      ++out[BigInt(d)];
      n /= d;
    }
  }
  if (n > 1) detail::factor_into(n, out);
  return out;
}

/// Positive divisors of |n|, ascending.
inline std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> ds{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = ds.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

/// Smallest primes strictly greater than `above` that do not divide `avoid`.
inline std::vector<unsigned> primes_not_dividing(const BigInt& avoid, std::size_t count, unsigned above = 3) {
  std::vector<unsigned> primes;
  for (unsigned p = above + 1; primes.size() < count; ++p) {
    bool prime = p >= 2;
    for (unsigned d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime && avoid % p != 0) primes.push_back(p);
  }
  return primes;
}

}  // namespace kirillov
