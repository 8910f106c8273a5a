#pragma once

// Univariate polynomials with arbitrary-precision integer coefficients in q.

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kirillov/bigint.hpp"
#include "kirillov/errors.hpp"
#include "kirillov/field.hpp"

namespace kirillov {

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) c_.emplace_back(c);
    trim();
  }
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }
  static IntPoly monomial(std::size_t k, const BigInt& coeff = 1) {
    std::vector<BigInt> c(k + 1, 0);
    c[k] = coeff;
    return IntPoly(std::move(c));
  }
  /// The indeterminate q.
  static IntPoly q() { return monomial(1); }

  /// Lowest degree first.
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt lead() const { return c_.empty() ? BigInt(0) : c_.back(); }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend auto operator<=>(const IntPoly& x, const IntPoly& y) {
    if (x.c_.size() != y.c_.size()) return x.c_.size() <=> y.c_.size();
    for (std::size_t i = x.c_.size(); i-- > 0;)
      if (x.c_[i] != y.c_[i]) return x.c_[i] < y.c_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend IntPoly operator+(IntPoly x, const IntPoly& y) { return x += y; }
  friend IntPoly operator-(IntPoly x, const IntPoly& y) { return x -= y; }
  friend IntPoly operator-(IntPoly x) {
    for (auto& c : x.c_) c = -c;
    return x;
  }
  friend IntPoly operator*(const IntPoly& x, const IntPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<BigInt> r(x.c_.size() + y.c_.size() - 1, 0);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
    }
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const BigInt& s, IntPoly x) {
    for (auto& c : x.c_) c *= s;
    x.trim();
    return x;
  }

  IntPoly pow(unsigned e) const {
    IntPoly r = constant(1), b = *this;
    while (e > 0) {
      if (e & 1U) r = r * b;
      e >>= 1U;
      if (e) b = b * b;
    }
    return r;
  }

  /// Multiplication by q^k.
  IntPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPoly(std::move(r));
  }

  IntPoly derivative() const {
    std::vector<BigInt> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * i);
    return IntPoly(std::move(r));
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
    return g;
  }

  /// Exact division in Z[q]; throws InexactDivision when the divisor does not divide.
  IntPoly divexact(const IntPoly& d) const {
    auto [quo, rem] = divmod(d);
    if (!quo.second || !rem.is_zero()) throw InexactDivision("IntPoly: divisor does not divide exactly");
    return quo.first;
  }

  /// True if d divides *this in Z[q].
  bool divisible_by(const IntPoly& d) const {
    auto [quo, rem] = divmod(d);
    return quo.second && rem.is_zero();
  }

  BigInt eval(const BigInt& x) const {
    BigInt r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  /// Evaluation at a field element; integer coefficients map into the prime subfield.
  Elem eval(const FieldCtx& f, Elem x) const {
    Elem r = f.zero();
    const BigInt p = f.characteristic();
    for (std::size_t i = c_.size(); i-- > 0;) {
      BigInt c = c_[i] % p;
      if (c < 0) c += p;
      r = f.add(f.mul(r, x), static_cast<Elem>(c.convert_to<unsigned long long>()));
    }
    return r;
  }

  /// "1 + 2q + 3q^2", lowest degree first; "0" for the zero polynomial.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const bool negative = c_[i] < 0;
      const BigInt mag = negative ? BigInt(-c_[i]) : c_[i];
      if (first)
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      first = false;
      if (i == 0 || mag != 1) s += mag.str();
      if (i >= 1) s += "q";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

  /// Accepts the to_string() format, or a comma-separated coefficient list (lowest first).
  static IntPoly parse(std::string_view text);

 private:
  // Returns ((quotient, exact-in-Z), remainder); the remainder is only meaningful when exact.
  std::pair<std::pair<IntPoly, bool>, IntPoly> divmod(const IntPoly& d) const {
    if (d.is_zero()) throw ZeroPolynomial("IntPoly: division by zero polynomial");
    if (degree() < d.degree()) return {{IntPoly{}, true}, *this};
    std::vector<BigInt> rem(c_);
    std::vector<BigInt> quo(c_.size() - d.c_.size() + 1, 0);
    const BigInt& dl = d.c_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const BigInt& top = rem[k + d.c_.size() - 1];
      if (top == 0) continue;
      if (top % dl != 0) return {{IntPoly{}, false}, IntPoly{}};
      const BigInt t = top / dl;
      quo[k] = t;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= t * d.c_[j];
    }
    return {{IntPoly(std::move(quo)), true}, IntPoly(std::move(rem))};
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& x) { return os << x.to_string(); }

inline IntPoly IntPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");
  auto bad = [&]() { return ParseError("bad polynomial: '" + std::string(text) + "'"); };

  if (s.find('q') == std::string::npos && s.find(',') != std::string::npos) {
    std::vector<BigInt> c;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const std::size_t comma = std::min(s.find(',', pos), s.size());
      const std::string tok = s.substr(pos, comma - pos);
      const std::size_t digits_from = !tok.empty() && (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
      if (tok.size() == digits_from || tok.find_first_not_of("0123456789", digits_from) != std::string::npos)
        throw bad();
      c.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
      pos = comma + 1;
    }
    return IntPoly(std::move(c));
  }

  std::vector<BigInt> c;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw bad();
    }
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    BigInt coeff = start == pos ? BigInt(1) : BigInt(s.substr(start, pos - start));
    std::size_t exponent = 0;
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::size_t e0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (e0 == pos) throw bad();
        exponent = std::stoul(s.substr(e0, pos - e0));
      }
    } else if (start == pos) {
      throw bad();
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw bad();
    if (c.size() <= exponent) c.resize(exponent + 1, 0);
    c[exponent] += negative ? BigInt(-coeff) : coeff;
  }
  return IntPoly(std::move(c));
}

/// q^a (q-1)^b R with R(0) and R(1) nonzero.
struct SplitForm {
  unsigned a = 0;
  unsigned b = 0;
  IntPoly r;

  IntPoly reconstruct() const { return (IntPoly{-1, 1}.pow(b) * r).shifted(a); }
  friend bool operator==(const SplitForm&, const SplitForm&) = default;
};

inline SplitForm split_qfactors(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("split_qfactors: zero polynomial");
  SplitForm s;
  const auto& c = p.coeffs();
  while (c[s.a] == 0) ++s.a;
  std::vector<BigInt> rest(c.begin() + s.a, c.end());
  // Synthetic division by (q - 1) while 1 is a root.
  while (rest.size() > 1) {
    BigInt sum = 0;
    for (const auto& x : rest) sum += x;
    if (sum != 0) break;
    std::vector<BigInt> quo(rest.size() - 1);
    BigInt carry = 0;
    for (std::size_t k = rest.size() - 1; k-- > 0;) {
      carry += rest[k + 1];
      quo[k] = carry;
    }
    rest = std::move(quo);
    ++s.b;
  }
  s.r = IntPoly(std::move(rest));
  return s;
}

/// Unique polynomial of degree < points.size() through the given points.
/// Exact rational Newton interpolation; the result must have integer coefficients.
inline IntPoly poly_interpolate(const std::vector<std::pair<BigInt, BigInt>>& points) {
  std::set<BigInt> seen;
  for (const auto& [x, y] : points)
    if (!seen.insert(x).second) throw DuplicateAbscissa("duplicate abscissa " + x.str());
  const std::size_t m = points.size();
  if (m == 0) return {};

  std::vector<BigRational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = BigRational(points[i].second);
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / BigRational(points[i].first - points[i - level].first);

  // Expand the Newton form by Horner: p = dd0 + (x-x0)(dd1 + (x-x1)(...)).
  std::vector<BigRational> coeffs{dd[m - 1]};
  for (std::size_t k = m - 1; k-- > 0;) {
    std::vector<BigRational> next(coeffs.size() + 1, BigRational(0));
    const BigRational xk(points[k].first);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= xk * coeffs[i];
    }
    next[0] += dd[k];
    coeffs = std::move(next);
  }
  std::vector<BigInt> out;
  for (const auto& c : coeffs) {
    if (boost::multiprecision::denominator(c) != 1)
      throw NonIntegerCoefficients("interpolated polynomial has non-integer coefficient " + c.str());
    out.push_back(boost::multiprecision::numerator(c));
  }
  return IntPoly(std::move(out));
}

}  // namespace kirillov
