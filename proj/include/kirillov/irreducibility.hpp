#pragma once

// Irreducibility of integer polynomials over Z[q].
//
// Pipeline: units and linear polynomials are decided directly; otherwise a
// polynomial irreducible modulo some prime (not dividing its leading
// coefficient) is irreducible over Z. Failing that, the factor degrees modulo
// several primes restrict which degrees an integer factor could have, and
// Kronecker's method searches the surviving degrees exhaustively. Every
// verdict carries a certificate that verify_verdict() re-checks.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kirillov/bigint.hpp"
#include "kirillov/errors.hpp"
#include "kirillov/intpoly.hpp"
#include "kirillov/modpoly.hpp"
#include "kirillov/numtheory.hpp"

namespace kirillov {

/// Number of primes consulted for mod-p certificates and degree pruning.
inline constexpr std::size_t kCertificatePrimes = 10;

struct IrreducibilityVerdict {
  enum class Kind { Unit, Irreducible, Reducible };
  enum class Certificate { None, Linear, ModP, DegreeSet, Kronecker };

  Kind kind = Kind::Unit;
  Certificate certificate = Certificate::None;
  unsigned prime = 0;                 // ModP: the prime modulo which the input is irreducible
  std::vector<unsigned> primes;       // DegreeSet / Kronecker: primes used for pruning
  std::vector<int> searched_degrees;  // Kronecker: factor degrees searched without success
  std::vector<IntPoly> factors;       // Reducible: irreducible factors, sorted

  bool reducible() const { return kind == Kind::Reducible; }

  std::string kind_name() const {
    switch (kind) {
      case Kind::Unit: return "unit";
      case Kind::Irreducible: return "irreducible";
      case Kind::Reducible: return "reducible";
    }
    return "?";
  }

  std::string describe() const {
    auto join = [](const auto& xs) {
      std::string s;
      for (const auto& x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
      return s;
    };
    switch (certificate) {
      case Certificate::Linear: return "irreducible (degree 1)";
      case Certificate::ModP: return "irreducible (irreducible mod " + std::to_string(prime) + ")";
      case Certificate::DegreeSet: return "irreducible (factor degrees mod " + join(primes) + " admit no proper factor)";
      case Certificate::Kronecker: return "irreducible (Kronecker search exhausted degrees {" + join(searched_degrees) + "})";
      case Certificate::None: break;
    }
    if (kind == Kind::Unit) return "unit";
    std::string s = "reducible:";
    for (const auto& f : factors) s += " (" + f.to_string() + ")";
    return s;
  }
};

/// Degrees of the irreducible factors of f modulo p, with multiplicity.
inline std::vector<int> ddf_degrees(const IntPoly& f, unsigned p) {
  if (f.is_zero()) throw ZeroPolynomial("ddf_degrees: zero polynomial");
  if (f.lead() % p == 0) throw BadPrime(std::to_string(p) + " divides the leading coefficient");
  std::vector<std::uint64_t> c;
  for (const auto& x : f.coeffs()) {
    BigInt r = x % p;
    if (r < 0) r += p;
    c.push_back(r.convert_to<std::uint64_t>());
  }
  return factor_degrees(ModPoly(p, std::move(c)));
}

namespace detail {

inline std::set<int> subset_sums(const std::vector<int>& degrees) {
  std::set<int> sums{0};
  for (int d : degrees) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

/// Degrees d in [1, n/2] compatible with the factor-degree multisets modulo every prime.
inline std::vector<int> admissible_factor_degrees(const IntPoly& f, const std::vector<unsigned>& primes) {
  const int n = f.degree();
  std::vector<int> candidates;
  for (int d = 1; 2 * d <= n; ++d) candidates.push_back(d);
  for (unsigned p : primes) {
    const auto sums = subset_sums(ddf_degrees(f, p));
    std::erase_if(candidates, [&](int d) { return !sums.contains(d); });
  }
  return candidates;
}

inline IntPoly newton_to_monomial(const std::vector<BigInt>& nodes, const std::vector<BigInt>& newton) {
  IntPoly g = IntPoly::constant(newton.back());
  for (std::size_t k = newton.size() - 1; k-- > 0;)
    g = g * IntPoly(std::vector<BigInt>{-nodes[k], 1}) + IntPoly::constant(newton[k]);
  return g;
}

}  // namespace detail

/// Searches for a factor of f of exact degree d with Kronecker's method.
/// Values at d+1 integer nodes must divide the values of f there; divided
/// differences of an integer polynomial at integer nodes are integers, which
/// prunes partial assignments. Returns a factor normalized to g(node_0) > 0.
inline std::optional<IntPoly> kronecker_factor(const IntPoly& f, int d) {
  if (d < 1 || d >= f.degree()) return std::nullopt;

  // Candidate nodes 0, 1, -1, 2, -2, ...; an integer root yields a linear factor at once.
  struct Node {
    BigInt x;
    std::vector<BigInt> values;
  };
  std::vector<Node> pool;
  const std::size_t want = static_cast<std::size_t>(d) + 1;
  const std::size_t pool_size = 2 * want + 2;
  for (long long k = 0; pool.size() < pool_size; ++k) {
    const BigInt x = k == 0 ? BigInt(0) : (k % 2 ? BigInt((k + 1) / 2) : BigInt(-(k / 2)));
    const BigInt v = f.eval(x);
    if (v == 0) {
      if (d == 1) return IntPoly(std::vector<BigInt>{-x, 1});
      continue;
    }
    pool.push_back({x, divisors(v)});
  }
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Node& a, const Node& b) { return a.values.size() < b.values.size(); });
  pool.resize(want);

  std::vector<BigInt> nodes;
  std::vector<std::vector<BigInt>> choices;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    nodes.push_back(pool[i].x);
    std::vector<BigInt> vals;
    for (const auto& dv : pool[i].values) {
      vals.push_back(dv);
      if (i > 0) vals.push_back(-dv);
    }
    choices.push_back(std::move(vals));
  }

  const BigInt lead = f.lead();
  std::vector<BigInt> newton(want);
  // diag[k][j] = g[x_{k-j}, ..., x_k]
  std::vector<std::vector<BigInt>> diag(want);
  std::optional<IntPoly> found;

  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    for (const BigInt& v : choices[k]) {
      auto& row = diag[k];
      row.assign(k + 1, 0);
      row[0] = v;
      bool integral = true;
      for (std::size_t j = 1; j <= k && integral; ++j) {
        const BigInt num = row[j - 1] - diag[k - 1][j - 1];
        const BigInt den = nodes[k] - nodes[k - j];
        if (num % den != 0) integral = false;
        else row[j] = num / den;
      }
      if (!integral) continue;
      newton[k] = row[k];
      if (k + 1 == want) {
        if (newton[k] == 0 || lead % newton[k] != 0) continue;
        IntPoly g = detail::newton_to_monomial(nodes, newton);
        if (f.divisible_by(g)) {
          found = std::move(g);
          return true;
        }
        continue;
      }
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

inline IrreducibilityVerdict irreducibility(const IntPoly& r);

namespace detail {

inline void collect_factors(const IntPoly& g, std::vector<IntPoly>& out) {
  const auto v = irreducibility(g);
  if (v.kind == IrreducibilityVerdict::Kind::Reducible)
    out.insert(out.end(), v.factors.begin(), v.factors.end());
  else if (v.kind == IrreducibilityVerdict::Kind::Irreducible)
    out.push_back(g);
}

inline IrreducibilityVerdict make_reducible(const IntPoly& input, std::vector<IntPoly> factors) {
  // Positive leading coefficients; any sign goes into the first factor.
  for (auto& g : factors)
    if (g.lead() < 0) g = -g;
  std::sort(factors.begin(), factors.end());
  IntPoly product = IntPoly::constant(1);
  for (const auto& g : factors) product = product * g;
  if (product != input) factors.front() = -factors.front();
  IrreducibilityVerdict v;
  v.kind = IrreducibilityVerdict::Kind::Reducible;
  v.factors = std::move(factors);
  return v;
}

}  // namespace detail

inline IrreducibilityVerdict irreducibility(const IntPoly& r) {
  using Kind = IrreducibilityVerdict::Kind;
  using Cert = IrreducibilityVerdict::Certificate;
  if (r.is_zero()) throw ZeroPolynomial("irreducibility: zero polynomial");

  IrreducibilityVerdict v;
  const BigInt content = r.content();
  if (r.degree() == 0) {
    if (content == 1) return v;  // unit
    return detail::make_reducible(r, {IntPoly::constant(content)});
  }
  if (content > 1) {
    std::vector<IntPoly> factors{IntPoly::constant(content)};
    detail::collect_factors(r.divexact(IntPoly::constant(content)), factors);
    return detail::make_reducible(r, std::move(factors));
  }
  if (r.coeff(0) == 0) {
    std::vector<IntPoly> factors;
    const SplitForm s = split_qfactors(r);
    for (unsigned i = 0; i < s.a; ++i) factors.push_back(IntPoly::q());
    if (factors.size() == 1 && r.degree() == 1) {
      v.kind = Kind::Irreducible;
      v.certificate = Cert::Linear;
      return v;
    }
    detail::collect_factors(r.divexact(IntPoly::monomial(s.a)), factors);
    return detail::make_reducible(r, std::move(factors));
  }
  if (r.degree() == 1) {
    v.kind = Kind::Irreducible;
    v.certificate = Cert::Linear;
    return v;
  }

  const auto primes = primes_not_dividing(r.lead(), kCertificatePrimes);
  for (unsigned p : primes) {
    const auto degs = ddf_degrees(r, p);
    if (degs.size() == 1) {
      v.kind = Kind::Irreducible;
      v.certificate = Cert::ModP;
      v.prime = p;
      return v;
    }
  }
  const auto candidates = detail::admissible_factor_degrees(r, primes);
  if (candidates.empty()) {
    v.kind = Kind::Irreducible;
    v.certificate = Cert::DegreeSet;
    v.primes = primes;
    return v;
  }
  for (int d : candidates) {
    if (auto g = kronecker_factor(r, d)) {
      std::vector<IntPoly> factors;
      detail::collect_factors(*g, factors);
      detail::collect_factors(r.divexact(*g), factors);
      return detail::make_reducible(r, std::move(factors));
    }
  }
  v.kind = Kind::Irreducible;
  v.certificate = Cert::Kronecker;
  v.primes = primes;
  v.searched_degrees = candidates;
  return v;
}

/// Independently re-checks a verdict's certificate against its input.
inline bool verify_verdict(const IntPoly& r, const IrreducibilityVerdict& v) {
  using Kind = IrreducibilityVerdict::Kind;
  using Cert = IrreducibilityVerdict::Certificate;
  if (v.kind == Kind::Unit) return r.degree() == 0 && (r.lead() == 1 || r.lead() == -1);
  if (v.kind == Kind::Reducible) {
    if (v.factors.size() < 2 && !(v.factors.size() == 1 && v.factors[0].degree() == 0)) return false;
    IntPoly product = IntPoly::constant(1);
    for (const auto& g : v.factors) {
      if (g.degree() == 0 && (g.lead() == 1 || g.lead() == -1)) return false;
      product = product * g;
    }
    return product == r;
  }
  if (r.content() != 1) return false;
  switch (v.certificate) {
    case Cert::Linear: return r.degree() == 1;
    case Cert::ModP: return r.lead() % v.prime != 0 && ddf_degrees(r, v.prime) == std::vector<int>{r.degree()};
    case Cert::DegreeSet: return detail::admissible_factor_degrees(r, v.primes).empty();
    case Cert::Kronecker: {
      const auto degs = detail::admissible_factor_degrees(r, v.primes);
      if (degs != v.searched_degrees) return false;
      return std::none_of(degs.begin(), degs.end(), [&](int d) { return kronecker_factor(r, d).has_value(); });
    }
    case Cert::None: return false;
  }
  return false;
}

}  // namespace kirillov
