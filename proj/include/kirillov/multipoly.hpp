#pragma once

// Integer polynomials in the six indeterminates a, b, c, d, e, f.

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "kirillov/errors.hpp"
#include "kirillov/field.hpp"

namespace kirillov {

class MultiPoly {
 public:
  static constexpr std::size_t kVars = 6;
  static constexpr std::string_view kNames = "abcdef";
  using Exponents = std::array<std::uint8_t, kVars>;

  MultiPoly() = default;
  /// Constant polynomial.
  MultiPoly(long long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[Exponents{}] = c;
  }

  /// The indeterminate with the given index (0 = a, ..., 5 = f).
  static MultiPoly var(std::size_t index) {
    MultiPoly m;
    Exponents e{};
    e.at(index) = 1;
    m.terms_[e] = 1;
    return m;
  }

  /// Parses expressions such as "2ae - 2bd + 2c^2" or "-(bc+df)".
  static MultiPoly parse(std::string_view text);

  const std::map<Exponents, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
  friend MultiPoly operator-(const MultiPoly& x) { return MultiPoly{} - x; }
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
    MultiPoly r;
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) {
        Exponents e{};
        for (std::size_t i = 0; i < kVars; ++i) e[i] = static_cast<std::uint8_t>(ex[i] + ey[i]);
        r.add_term(e, cx * cy);
      }
    return r;
  }

  /// Substitutes a constant for one indeterminate.
  MultiPoly substitute(std::size_t index, long long value) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      long long scale = c;
      for (unsigned k = 0; k < e[index]; ++k) scale *= value;
      Exponents e2 = e;
      e2[index] = 0;
      r.add_term(e2, scale);
    }
    return r;
  }

  /// Value at (a, ..., f) in a finite field.
  Elem eval(const FieldCtx& f, const std::array<Elem, kVars>& point) const {
    Elem acc = f.zero();
    for (const auto& [e, c] : terms_) {
      Elem t = f.from_int(c);
      for (std::size_t i = 0; i < kVars; ++i) t = f.mul(t, f.pow(point[i], e[i]));
      acc = f.add(acc, t);
    }
    return acc;
  }

  long long eval(const std::array<long long, kVars>& point) const {
    long long acc = 0;
    for (const auto& [e, c] : terms_) {
      long long t = c;
      for (std::size_t i = 0; i < kVars; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      acc += t;
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Highest total degree first, then lexicographic in (a, ..., f).
    std::multimap<int, std::pair<Exponents, long long>, std::greater<>> ordered;
    for (const auto& [e, c] : terms_) {
      int deg = 0;
      for (auto x : e) deg += x;
      ordered.emplace(deg, std::make_pair(e, c));
    }
    for (const auto& [deg, term] : ordered) {
      const auto& [e, c] = term;
      const long long mag = c < 0 ? -c : c;
      s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (mag != 1 || deg == 0) s += std::to_string(mag);
      for (std::size_t i = 0; i < kVars; ++i) {
        if (e[i] == 0) continue;
        s += kNames[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
      }
    }
    return s;
  }

 private:
  void add_term(const Exponents& e, long long c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }

  std::map<Exponents, long long> terms_;
};

namespace detail {

class MultiPolyParser {
 public:
  explicit MultiPolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly r = expression();
    skip_space();
    if (pos_ != text_.size()) fail();
    return r;
  }

 private:
  // expression := ['+'|'-'] term { ('+'|'-') term }
  MultiPoly expression() {
    MultiPoly acc;
    bool first = true;
    for (;;) {
      skip_space();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = get() == '-';
      } else if (!first) {
        return acc;
      }
      const MultiPoly t = term();
      acc += negative ? -t : t;
      first = false;
    }
  }

  // term := factor { ['*'] factor }
  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      skip_space();
      if (peek() == '*') get();
      skip_space();
      const char c = peek();
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '(' || MultiPoly::kNames.find(c) != std::string_view::npos))
        return acc;
      acc = acc * factor();
    }
  }

  // factor := (integer | variable | '(' expression ')') ['^' integer]
  MultiPoly factor() {
    skip_space();
    MultiPoly base;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      base = MultiPoly(integer());
    } else if (c == '(') {
      get();
      base = expression();
      skip_space();
      if (get() != ')') fail();
    } else if (auto idx = MultiPoly::kNames.find(c); c != '\0' && idx != std::string_view::npos) {
      get();
      base = MultiPoly::var(idx);
    } else {
      fail();
    }
    skip_space();
    if (peek() == '^') {
      get();
      skip_space();
      const long long e = integer();
      MultiPoly r(1);
      for (long long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  long long integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail();
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  [[noreturn]] void fail() const {
    throw ParseError("bad polynomial expression: '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly MultiPoly::parse(std::string_view text) { return detail::MultiPolyParser(text).parse(); }

}  // namespace kirillov
