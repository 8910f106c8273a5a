#pragma once

// Dense univariate polynomials over a prime field GF(p), p < 2^31.
// Coefficients are stored lowest degree first and kept reduced in [0, p).

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "kirillov/errors.hpp"

namespace kirillov {

class ModPoly {
 public:
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs = {})
      : p_(p), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= p_;
    trim();
  }

  static ModPoly monomial(std::uint64_t p, std::size_t k, std::uint64_t coeff = 1) {
    std::vector<std::uint64_t> c(k + 1, 0);
    c[k] = coeff;
    return ModPoly(p, std::move(c));
  }

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  friend bool operator==(const ModPoly& x, const ModPoly& y) { return x.p_ == y.p_ && x.c_ == y.c_; }

  friend ModPoly operator+(const ModPoly& x, const ModPoly& y) {
    std::vector<std::uint64_t> r(std::max(x.c_.size(), y.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (x[i] + y[i]) % x.p_;
    return ModPoly(x.p_, std::move(r));
  }

  friend ModPoly operator-(const ModPoly& x, const ModPoly& y) {
    std::vector<std::uint64_t> r(std::max(x.c_.size(), y.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (x[i] + x.p_ - y[i]) % x.p_;
    return ModPoly(x.p_, std::move(r));
  }

  friend ModPoly operator*(const ModPoly& x, const ModPoly& y) {
    if (x.is_zero() || y.is_zero()) return ModPoly(x.p_);
    std::vector<std::uint64_t> r(x.c_.size() + y.c_.size() - 1, 0);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] = (r[i + j] + x.c_[i] * y.c_[j]) % x.p_;
    }
    return ModPoly(x.p_, std::move(r));
  }

  ModPoly scaled(std::uint64_t s) const {
    std::vector<std::uint64_t> r(c_);
    for (auto& x : r) x = x * (s % p_) % p_;
    return ModPoly(p_, std::move(r));
  }

  ModPoly monic() const {
    if (is_zero()) return *this;
    return scaled(inverse(lead()));
  }

  ModPoly derivative() const {
    std::vector<std::uint64_t> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * (i % p_) % p_);
    return ModPoly(p_, std::move(r));
  }

  /// Quotient and remainder; the divisor must be nonzero.
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& d) const {
    if (d.is_zero()) throw ZeroPolynomial("ModPoly: division by zero polynomial");
    std::vector<std::uint64_t> rem(c_);
    if (degree() < d.degree()) return {ModPoly(p_), *this};
    std::vector<std::uint64_t> quo(c_.size() - d.c_.size() + 1, 0);
    const std::uint64_t inv_lead = inverse(d.lead());
    for (std::size_t k = quo.size(); k-- > 0;) {
      const std::uint64_t t = rem[k + d.c_.size() - 1] * inv_lead % p_;
      quo[k] = t;
      if (t == 0) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) {
        auto& slot = rem[k + j];
        slot = (slot + p_ - t * d.c_[j] % p_) % p_;
      }
    }
    return {ModPoly(p_, std::move(quo)), ModPoly(p_, std::move(rem))};
  }

  ModPoly operator%(const ModPoly& d) const { return divmod(d).second; }
  ModPoly operator/(const ModPoly& d) const { return divmod(d).first; }

  std::uint64_t inverse(std::uint64_t a) const { return inverse_mod(a, p_); }

  static std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw Error("ModPoly: element has no inverse");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

inline ModPoly gcd(ModPoly x, ModPoly y) {
  while (!y.is_zero()) {
    ModPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

/// base^e mod m.
inline ModPoly pow_mod(ModPoly base, std::uint64_t e, const ModPoly& m) {
  ModPoly result(m.modulus(), {1});
  base = base % m;
  while (e > 0) {
    if (e & 1U) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1U;
  }
  return result % m;
}

/// Square-free decomposition: pairs (g, e) with f = lead · Π g^e and each g square-free, monic.
inline std::vector<std::pair<ModPoly, int>> squarefree_decomposition(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::pair<ModPoly, int>> out;
  if (f.degree() <= 0) return out;

  // Musser's algorithm, with the p-th root step for characteristic p.
  auto rec = [&](auto&& self, const ModPoly& g, int mult) -> void {
    if (g.degree() <= 0) return;
    ModPoly c = gcd(g, g.derivative());
    ModPoly w = g.monic() / c;
    int i = 1;
    while (w.degree() > 0) {
      ModPoly y = gcd(w, c);
      ModPoly z = w / y;
      if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
      ++i;
      w = y;
      c = c / y;
    }
    if (c.degree() > 0) {
      // c is a polynomial in x^p; take its p-th root coefficientwise.
      std::vector<std::uint64_t> root;
      for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
      self(self, ModPoly(p, std::move(root)), mult * static_cast<int>(p));
    }
  };
  rec(rec, f.monic(), 1);
  return out;
}

/// Degrees (with multiplicity) of the irreducible factors of a square-free monic polynomial.
inline std::vector<int> distinct_degree_split(const ModPoly& f) {
  std::vector<int> degrees;
  const std::uint64_t p = f.modulus();
  ModPoly rest = f.monic();
  const ModPoly x = ModPoly::monomial(p, 1);
  ModPoly h = x;  // x^(p^d) mod rest
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = pow_mod(h, p, rest);
    ModPoly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      for (int k = 0; k < g.degree() / d; ++k) degrees.push_back(d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) degrees.push_back(rest.degree());
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

/// Multiset of irreducible-factor degrees of f over GF(p), repeated factors counted with multiplicity.
inline std::vector<int> factor_degrees(const ModPoly& f) {
  std::vector<int> degrees;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    for (int d : distinct_degree_split(g))
      for (int k = 0; k < mult; ++k) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

inline bool is_irreducible(const ModPoly& f) {
  if (f.degree() <= 0) return false;
  const auto d = factor_degrees(f);
  return d.size() == 1;
}

}  // namespace kirillov
