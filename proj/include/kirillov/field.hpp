#pragma once

// Finite fields GF(q), q = p^k.
//
// Elements are encoded as integers in [0, q): the base-p digits of the code are
// the coefficients (lowest first) of the residue polynomial modulo the field's
// defining polynomial. For k = 1 the code is simply the residue mod p. The
// integer order of the codes is the canonical enumeration order.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "kirillov/errors.hpp"
#include "kirillov/modpoly.hpp"

namespace kirillov {

using Elem = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Writes q = p^k with p prime; returns false if q is not a prime power.
inline bool prime_power_decompose(std::uint64_t q, std::uint64_t& p, unsigned& k) {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (d * d <= q && q % d != 0) ++d;
  if (q % d != 0) d = q;
  p = d;
  k = 0;
  while (q % d == 0) {
    q /= d;
    ++k;
  }
  return q == 1;
}

class FieldCtx {
 public:
  /// Fields at most this large get full addition and multiplication tables.
  static constexpr std::uint32_t kTableLimit = 1024;

  std::uint32_t characteristic() const { return impl_->p; }
  unsigned degree() const { return impl_->k; }
  std::uint32_t order() const { return impl_->q; }
  /// Monic defining polynomial, lowest coefficient first; {0, 1} for prime fields.
  const std::vector<std::uint64_t>& modulus() const { return impl_->modulus; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  /// Image of an integer in the prime subfield.
  Elem from_int(long long x) const {
    const long long p = impl_->p;
    long long r = x % p;
    return static_cast<Elem>(r < 0 ? r + p : r);
  }

  Elem add(Elem x, Elem y) const {
    const Impl& f = *impl_;
    if (f.k == 1) {
      const Elem s = x + y;
      return s >= f.p ? s - f.p : s;
    }
    if (!f.add_table.empty()) return f.add_table[x * f.q + y];
    return digitwise(x, y, false);
  }

  Elem neg(Elem x) const {
    const Impl& f = *impl_;
    if (f.k == 1) return x == 0 ? 0 : f.p - x;
    return digitwise(0, x, true);
  }

  Elem sub(Elem x, Elem y) const {
    const Impl& f = *impl_;
    if (f.k == 1) return x >= y ? x - y : x + f.p - y;
    if (!f.add_table.empty()) return f.add_table[x * f.q + f.neg_table[y]];
    return digitwise(x, y, true);
  }

  Elem mul(Elem x, Elem y) const {
    const Impl& f = *impl_;
    if (!f.mul_table.empty()) return f.mul_table[x * f.q + y];
    if (f.k == 1) return static_cast<Elem>(std::uint64_t{x} * y % f.p);
    return poly_mul(x, y);
  }

  Elem inv(Elem x) const {
    if (x == 0) throw Error("FieldCtx: zero has no inverse");
    const Impl& f = *impl_;
    if (!f.inv_table.empty()) return f.inv_table[x];
    return compute_inverse(x);
  }

  Elem pow(Elem x, std::uint64_t e) const {
    Elem r = one();
    while (e > 0) {
      if (e & 1U) r = mul(r, x);
      x = mul(x, x);
      e >>= 1U;
    }
    return r;
  }

  /// Quadratic character test (Euler's criterion in GF(q)); zero counts as a square.
  bool is_square(Elem x) const {
    if (x == 0) return true;
    if (impl_->p == 2) return true;
    return pow(x, (impl_->q - 1) / 2) == one();
  }

  /// Base-p digits of an element, i.e. its coordinates over GF(p).
  std::vector<std::uint32_t> digits(Elem x) const {
    std::vector<std::uint32_t> d(impl_->k, 0);
    for (unsigned i = 0; i < impl_->k; ++i) {
      d[i] = x % impl_->p;
      x /= impl_->p;
    }
    return d;
  }

  std::string name() const {
    return impl_->k == 1 ? "GF(" + std::to_string(impl_->p) + ")" : "GF(" + std::to_string(impl_->q) + ")";
  }

  friend bool operator==(const FieldCtx& x, const FieldCtx& y) {
    return x.impl_ == y.impl_ || (x.impl_->q == y.impl_->q && x.impl_->modulus == y.impl_->modulus);
  }

  friend FieldCtx make_prime_field(std::uint64_t p);
  friend FieldCtx make_extension_field(std::uint64_t p, unsigned k);

 private:
  struct Impl {
    std::uint32_t p = 0;
    unsigned k = 1;
    std::uint32_t q = 0;
    std::vector<std::uint64_t> modulus;
    std::vector<Elem> add_table, mul_table, neg_table, inv_table;
  };

  explicit FieldCtx(const std::shared_ptr<Impl>& impl) : impl_(impl) { build_tables(*impl); }

  Elem digitwise(Elem x, Elem y, bool subtract) const {
    const std::uint32_t p = impl_->p;
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < impl_->k; ++i) {
      const std::uint32_t a = x % p, b = y % p;
      const std::uint32_t s = subtract ? (a + p - b) % p : (a + b) % p;
      r += s * scale;
      scale *= p;
      x /= p;
      y /= p;
    }
    return r;
  }

  ModPoly to_poly(Elem x) const {
    std::vector<std::uint64_t> c;
    for (auto d : digits(x)) c.push_back(d);
    return ModPoly(impl_->p, std::move(c));
  }

  Elem from_poly(const ModPoly& m) const {
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < impl_->k; ++i) {
      r += static_cast<Elem>(m[i]) * scale;
      scale *= impl_->p;
    }
    return r;
  }

  Elem poly_mul(Elem x, Elem y) const {
    const ModPoly m(impl_->p, impl_->modulus);
    return from_poly((to_poly(x) * to_poly(y)) % m);
  }

  Elem compute_inverse(Elem x) const {
    if (impl_->k == 1) return static_cast<Elem>(ModPoly::inverse_mod(x, impl_->p));
    // Extended Euclid in GF(p)[t] against the defining polynomial.
    const std::uint64_t p = impl_->p;
    ModPoly r0(p, impl_->modulus), r1 = to_poly(x);
    ModPoly s0(p), s1(p, {1});
    while (!r1.is_zero()) {
      auto [quo, rem] = r0.divmod(r1);
      ModPoly s2 = s0 - quo * s1;
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant since the modulus is irreducible.
    return from_poly(s0.scaled(ModPoly::inverse_mod(r0[0], p)));
  }

  void build_tables(Impl& f) const {
    if (f.q > kTableLimit) return;
    const std::uint32_t q = f.q;
    std::vector<Elem> add(q * q), mul(q * q), neg(q), inv(q, 0);
    for (Elem x = 0; x < q; ++x) {
      for (Elem y = 0; y < q; ++y) {
        add[x * q + y] = f.k == 1 ? (x + y) % f.p : digitwise(x, y, false);
        mul[x * q + y] = f.k == 1 ? static_cast<Elem>(std::uint64_t{x} * y % f.p) : poly_mul(x, y);
      }
      neg[x] = f.k == 1 ? (f.p - x) % f.p : digitwise(0, x, true);
      if (x != 0) inv[x] = compute_inverse(x);
    }
    f.add_table = std::move(add);
    f.mul_table = std::move(mul);
    f.neg_table = std::move(neg);
    f.inv_table = std::move(inv);
  }

  std::shared_ptr<const Impl> impl_;
};

inline FieldCtx make_prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p >= (1ULL << 31)) throw TooLarge("prime fields are limited to p < 2^31");
  auto impl = std::make_shared<FieldCtx::Impl>();
  impl->p = static_cast<std::uint32_t>(p);
  impl->k = 1;
  impl->q = static_cast<std::uint32_t>(p);
  impl->modulus = {0, 1};
  return FieldCtx(std::move(impl));
}

/// Lexicographically smallest monic irreducible polynomial of degree k over GF(p),
/// ordering candidates by the integer whose base-p digits are the lower coefficients.
inline std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned k) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint64_t> c(k + 1, 0);
    std::uint64_t t = code;
    for (unsigned i = 0; i < k; ++i) {
      c[i] = t % p;
      t /= p;
    }
    c[k] = 1;
    if (c[0] == 0) continue;
    if (is_irreducible(ModPoly(p, c))) return c;
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

inline FieldCtx make_extension_field(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (k < 1) throw Error("extension degree must be at least 1");
  if (k == 1) return make_prime_field(p);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q >= (1ULL << 31)) throw TooLarge("field order too large");
  }
  auto impl = std::make_shared<FieldCtx::Impl>();
  impl->p = static_cast<std::uint32_t>(p);
  impl->k = k;
  impl->q = static_cast<std::uint32_t>(q);
  impl->modulus = smallest_irreducible(p, k);
  return FieldCtx(std::move(impl));
}

/// GF(q) for a prime power q.
inline FieldCtx make_field(std::uint64_t q) {
  std::uint64_t p = 0;
  unsigned k = 0;
  if (!prime_power_decompose(q, p, k)) throw NotPrime(std::to_string(q) + " is not a prime power");
  return make_extension_field(p, k);
}

}  // namespace kirillov
