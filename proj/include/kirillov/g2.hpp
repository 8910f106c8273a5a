#pragma once

// Kirillov polynomials for the exceptional Lie algebra g2 in its faithful
// 7-dimensional representation.
//
// The positive-root part of g2 is parametrized as
//   X = a e_{α1} + b e_{α1+α2} + c e_{2α1+α2} + d e_{3α1+α2} + e e_{3α1+2α2} + f e_{α2},
// with α1 the short simple root. Parameters are indexed 0..5 in the order a..f.

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kirillov/bigint.hpp"
#include "kirillov/errors.hpp"
#include "kirillov/field.hpp"
#include "kirillov/intpoly.hpp"
#include "kirillov/irreducibility.hpp"
#include "kirillov/matrix.hpp"
#include "kirillov/multipoly.hpp"
#include "kirillov/parallel.hpp"
#include "kirillov/partition.hpp"
#include "kirillov/report.hpp"
#include "kirillov/typea.hpp"

namespace kirillov::g2 {

inline constexpr std::size_t kDim = 7;
inline constexpr std::size_t kParams = 6;

using IntMatrix = std::array<std::array<long long, kDim>, kDim>;
using SymMatrix = std::array<std::array<MultiPoly, kDim>, kDim>;
using RankSeq = std::array<int, kDim - 1>;

inline const std::array<std::string, kParams>& root_names() {
  static const std::array<std::string, kParams> names{"α1", "α1+α2", "2α1+α2", "3α1+α2", "3α1+2α2", "α2"};
  return names;
}

namespace detail {

inline IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix r{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t k = 0; k < kDim; ++k)
      for (std::size_t j = 0; j < kDim; ++j) r[i][j] += x[i][k] * y[k][j];
  return r;
}

inline IntMatrix bracket(const IntMatrix& x, const IntMatrix& y) {
  const IntMatrix xy = mul(x, y), yx = mul(y, x);
  IntMatrix r{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r[i][j] = xy[i][j] - yx[i][j];
  return r;
}

inline IntMatrix divide_exact(const IntMatrix& x, long long d) {
  IntMatrix r{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) {
      if (x[i][j] % d != 0) throw InexactDivision("Chevalley bracket not divisible by " + std::to_string(d));
      r[i][j] = x[i][j] / d;
    }
  return r;
}

/// Matrix with the given 1-based entries set.
inline IntMatrix from_units(std::initializer_list<std::tuple<int, int, long long>> entries) {
  IntMatrix m{};
  for (const auto& [i, j, v] : entries) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] += v;
  return m;
}

inline SymMatrix parse_rows(const std::array<std::array<const char*, kDim>, kDim>& rows) {
  SymMatrix m;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) m[i][j] = MultiPoly::parse(rows[i][j]);
  return m;
}

}  // namespace detail

/// Images of the positive-root Chevalley basis elements, indexed like the parameters a..f.
struct G2Basis {
  std::array<IntMatrix, kParams> e;

  const IntMatrix& alpha1() const { return e[0]; }
  const IntMatrix& alpha2() const { return e[5]; }
};

/// ξ(e_{α1}) = e_{1,2} + 2e_{3,4} + e_{4,5} + e_{6,7}, ξ(e_{α2}) = e_{2,3} + e_{5,6}, and
///   e_{α1+α2} = [e_{α1}, e_{α2}],          e_{2α1+α2} = ½ [e_{α1+α2}, e_{α1}],
///   e_{3α1+α2} = ⅓ [e_{2α1+α2}, e_{α1}],   e_{3α1+2α2} = [e_{3α1+α2}, e_{α2}].
inline G2Basis build_chevalley() {
  using detail::bracket;
  using detail::divide_exact;
  G2Basis b;
  const IntMatrix a1 = detail::from_units({{1, 2, 1}, {3, 4, 2}, {4, 5, 1}, {6, 7, 1}});
  const IntMatrix a2 = detail::from_units({{2, 3, 1}, {5, 6, 1}});
  const IntMatrix a1a2 = bracket(a1, a2);
  const IntMatrix two_a1a2 = divide_exact(bracket(a1a2, a1), 2);
  const IntMatrix three_a1a2 = divide_exact(bracket(two_a1a2, a1), 3);
  const IntMatrix three_a1_two_a2 = bracket(three_a1a2, a2);
  b.e = {a1, a1a2, two_a1a2, three_a1a2, three_a1_two_a2, a2};
  return b;
}

/// Σ_k params[k] e_k with integer parameters.
inline IntMatrix combine(const G2Basis& basis, const std::array<long long, kParams>& params) {
  IntMatrix m{};
  for (std::size_t k = 0; k < kParams; ++k)
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) m[i][j] += params[k] * basis.e[k][i][j];
  return m;
}

/// Generic X with the parameters as indeterminates.
inline SymMatrix symbolic_x(const G2Basis& basis) {
  SymMatrix m;
  for (std::size_t k = 0; k < kParams; ++k) {
    const MultiPoly v = MultiPoly::var(k);
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        if (basis.e[k][i][j] != 0) m[i][j] += MultiPoly(basis.e[k][i][j]) * v;
  }
  return m;
}

inline SymMatrix sym_mul(const SymMatrix& x, const SymMatrix& y) {
  SymMatrix r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t k = 0; k < kDim; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < kDim; ++j)
        if (!y[k][j].is_zero()) r[i][j] += x[i][k] * y[k][j];
    }
  return r;
}

/// The generic X as displayed entrywise.
inline const SymMatrix& displayed_x() {
  static const SymMatrix m = detail::parse_rows({{
      {"0", "a", "b", "2c", "d", "e", "0"},
      {"0", "0", "f", "-2b", "-c", "0", "e"},
      {"0", "0", "0", "2a", "0", "-c", "-d"},
      {"0", "0", "0", "0", "a", "b", "c"},
      {"0", "0", "0", "0", "0", "f", "-b"},
      {"0", "0", "0", "0", "0", "0", "a"},
      {"0", "0", "0", "0", "0", "0", "0"},
  }});
  return m;
}

/// Displayed X^k for k = 2..6, keyed by k.
inline const std::map<int, SymMatrix>& displayed_powers() {
  static const std::map<int, SymMatrix> powers{
      {2, detail::parse_rows({{
              {"0", "0", "af", "0", "ac", "bc+df", "2ae-2bd+2c^2"},
              {"0", "0", "0", "2af", "-2ab", "-2b^2-2cf", "-bc-df"},
              {"0", "0", "0", "0", "2a^2", "2ab", "ac"},
              {"0", "0", "0", "0", "0", "af", "0"},
              {"0", "0", "0", "0", "0", "0", "af"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
          }})},
      {3, detail::parse_rows({{
              {"0", "0", "0", "2a^2f", "0", "0", "0"},
              {"0", "0", "0", "0", "2a^2f", "0", "0"},
              {"0", "0", "0", "0", "0", "2a^2f", "0"},
              {"0", "0", "0", "0", "0", "0", "a^2f"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
          }})},
      {4, detail::parse_rows({{
              {"0", "0", "0", "0", "2a^3f", "2a^2bf", "2a^2cf"},
              {"0", "0", "0", "0", "0", "2a^2f^2", "-2a^2bf"},
              {"0", "0", "0", "0", "0", "0", "2a^3f"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
          }})},
      {5, detail::parse_rows({{
              {"0", "0", "0", "0", "0", "2a^3f^2", "0"},
              {"0", "0", "0", "0", "0", "0", "2a^3f^2"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
          }})},
      {6, detail::parse_rows({{
              {"0", "0", "0", "0", "0", "0", "2a^4f^2"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0"},
          }})},
  };
  return powers;
}

namespace detail {

inline std::size_t count_mismatches(const SymMatrix& got, const SymMatrix& want, std::string& first) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      if (got[i][j] != want[i][j] && bad++ == 0)
        first = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): computed " + got[i][j].to_string() +
                ", displayed " + want[i][j].to_string();
  return bad;
}

}  // namespace detail

/// Checks the generators, exact bracket divisions, strict upper triangularity and the assembled X.
inline VerificationReport verify_construction() {
  VerificationReport report;
  report.title = "g2 Chevalley construction";
  G2Basis basis;
  try {
    basis = build_chevalley();
    report.add("bracket divisions exact", true);
  } catch (const InexactDivision& e) {
    report.add("bracket divisions exact", false, e.what());
    return report;
  }
  report.add("e_α1 generator", basis.alpha1() == detail::from_units({{1, 2, 1}, {3, 4, 2}, {4, 5, 1}, {6, 7, 1}}));
  report.add("e_α2 generator", basis.alpha2() == detail::from_units({{2, 3, 1}, {5, 6, 1}}));
  bool upper = true;
  for (const auto& m : basis.e)
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j <= i; ++j) upper = upper && m[i][j] == 0;
  report.add("basis strictly upper triangular", upper);
  std::string first;
  const std::size_t bad = detail::count_mismatches(symbolic_x(basis), displayed_x(), first);
  report.add("assembled X equals displayed template", bad == 0,
             bad == 0 ? "49 entries" : std::to_string(bad) + " mismatches, first " + first);
  return report;
}

/// Computes X^2..X^6 symbolically and compares them with the displayed matrices.
inline VerificationReport verify_displayed_powers() {
  VerificationReport report;
  report.title = "g2 displayed powers";
  const SymMatrix x = symbolic_x(build_chevalley());
  SymMatrix power = x;
  for (int k = 2; k <= 6; ++k) {
    power = sym_mul(power, x);
    std::string first;
    const std::size_t bad = detail::count_mismatches(power, displayed_powers().at(k), first);
    report.add("X^" + std::to_string(k), bad == 0, bad == 0 ? "49 entries" : std::to_string(bad) + " mismatches, first " + first);
  }
  power = sym_mul(power, x);
  bool zero = true;
  for (const auto& row : power)
    for (const auto& v : row) zero = zero && v.is_zero();
  report.add("X^7 = 0", zero);
  return report;
}

/// The identity f(c^2 - bd) = (b^2 + cf)c - (bc + df)b behind the Case 2 rank analysis.
inline bool case2_identity_holds() {
  const MultiPoly lhs = MultiPoly::parse("f(c^2 - bd)");
  const MultiPoly rhs = MultiPoly::parse("(b^2 + cf)c - (bc + df)b");
  return lhs == rhs;
}

struct G2Params {
  Elem a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
  std::array<Elem, kParams> as_array() const { return {a, b, c, d, e, f}; }
  std::string to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) +
           "," + std::to_string(e) + "," + std::to_string(f) + ")";
  }
};

inline void require_admissible(const FieldCtx& field) {
  if (field.characteristic() <= 3)
    throw BadCharacteristic("characteristic must exceed 3, got " + std::to_string(field.characteristic()));
}

inline FMatrix x_of(const G2Params& params, const FieldCtx& field) {
  require_admissible(field);
  static const G2Basis basis = build_chevalley();
  const auto p = params.as_array();
  FMatrix m(field, kDim);
  for (std::size_t k = 0; k < kParams; ++k) {
    if (p[k] == 0) continue;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        if (basis.e[k][i][j] != 0) m(i, j) = field.add(m(i, j), field.mul(field.from_int(basis.e[k][i][j]), p[k]));
  }
  return m;
}

/// Case 1: af ≠ 0; 2: a = 0, f ≠ 0; 3: a ≠ 0, f = 0; 4: a = f = 0.
inline int case_of(const G2Params& p) {
  if (p.a != 0 && p.f != 0) return 1;
  if (p.a == 0 && p.f != 0) return 2;
  if (p.a != 0) return 3;
  return 4;
}

/// Rank sequence determined by the case-analysis predicates alone.
inline RankSeq predicted_rank_sequence(const G2Params& p, const FieldCtx& field) {
  require_admissible(field);
  const FieldCtx& k = field;
  auto mul = [&](Elem x, Elem y) { return k.mul(x, y); };
  auto sub = [&](Elem x, Elem y) { return k.sub(x, y); };
  auto add = [&](Elem x, Elem y) { return k.add(x, y); };
  auto scale = [&](long long s, Elem x) { return k.mul(k.from_int(s), x); };

  switch (case_of(p)) {
    case 1:
      return {6, 5, 4, 3, 2, 1};
    case 2: {
      const Elem u = add(mul(p.b, p.b), mul(p.c, p.f));  // b^2 + cf
      const Elem v = add(mul(p.b, p.c), mul(p.d, p.f));  // bc + df
      if (u == 0 && v == 0) return {2, 0, 0, 0, 0, 0};
      const Elem w = sub(mul(p.c, p.c), mul(p.b, p.d));  // c^2 - bd
      const Elem disc = sub(mul(v, v), scale(4, mul(u, w)));
      return disc == 0 ? RankSeq{4, 1, 0, 0, 0, 0} : RankSeq{4, 2, 0, 0, 0, 0};
    }
    case 3: {
      const Elem t = add(sub(scale(4, mul(p.a, p.e)), scale(4, mul(p.b, p.d))), scale(3, mul(p.c, p.c)));
      return t == 0 ? RankSeq{4, 1, 0, 0, 0, 0} : RankSeq{4, 2, 0, 0, 0, 0};
    }
    default: {
      int r1 = 0;
      if (p.b != 0 || p.c != 0) r1 = 4;
      else if (p.d != 0 || p.e != 0) r1 = 2;
      int r2 = 0;
      if (p.b != 0) r2 = sub(scale(3, mul(p.c, p.c)), scale(4, mul(p.b, p.d))) == 0 ? 1 : 2;
      else r2 = p.c != 0 ? 1 : 0;
      return {r1, r2, 0, 0, 0, 0};
    }
  }
}

struct CensusReport {
  std::uint32_t q = 0;
  std::map<Partition, std::uint64_t> counts;
  std::map<std::pair<int, RankSeq>, std::uint64_t> cases;
  std::uint64_t total = 0;
  double elapsed_ms = 0;

  std::uint64_t count(const Partition& p) const {
    auto it = counts.find(p);
    return it == counts.end() ? 0 : it->second;
  }
  std::uint64_t case_count(int c, const RankSeq& r) const {
    auto it = cases.find({c, r});
    return it == cases.end() ? 0 : it->second;
  }
};

inline std::string rank_seq_string(const RankSeq& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

/// Enumerates all q^6 parameter tuples, tallying actual Jordan types per partition and
/// per (case, rank sequence). With `validate`, every actual rank sequence is compared
/// with predicted_rank_sequence; a mismatch throws PredicateMismatch naming the tuple.
inline CensusReport g2_census(const FieldCtx& field, unsigned workers = 1,
                              std::uint64_t budget = typea::kDefaultBudget, bool validate = true) {
  require_admissible(field);
  const std::uint64_t q = field.order();
  if (q > 1000 || q * q * q * q * q * q > budget) throw TooLarge("g2 census of q^6 tuples exceeds the budget");
  const auto start = std::chrono::steady_clock::now();

  // Nonzero entries of X as (position, parameter, coefficient in the field).
  struct Term {
    std::size_t pos;
    std::size_t param;
    Elem coeff;
  };
  std::vector<Term> terms;
  const G2Basis basis = build_chevalley();
  for (std::size_t k = 0; k < kParams; ++k)
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        if (basis.e[k][i][j] != 0) terms.push_back({i * kDim + j, k, field.from_int(basis.e[k][i][j])});

  using Key = std::pair<int, RankSeq>;
  std::vector<std::vector<std::pair<Key, std::uint64_t>>> tallies(std::max(1U, workers));

  // Slices are (a, f) pairs, so each slice lies in a single case.
  parallel_slices(q * q, workers, [&](unsigned worker, std::size_t slice) {
    RankKernel kernel(field, kDim);
    RankKernel::Block x{};
    RankSeq ranks{};
    std::array<Elem, kParams> v{};
    v[0] = static_cast<Elem>(slice / q);
    v[5] = static_cast<Elem>(slice % q);
    const int case_id = case_of({v[0], 0, 0, 0, 0, v[5]});
    auto& tally = tallies[worker];
    for (std::uint64_t rest = 0; rest < q * q * q * q; ++rest) {
      std::uint64_t t = rest;
      for (std::size_t k = 4; k >= 1; --k) {
        v[k] = static_cast<Elem>(t % q);
        t /= q;
      }
      x.fill(0);
      for (const auto& term : terms)
        x[term.pos] = field.add(x[term.pos], field.mul(term.coeff, v[term.param]));
      kernel.strict_upper_rank_sequence(x, ranks);
      if (validate) {
        const G2Params p{v[0], v[1], v[2], v[3], v[4], v[5]};
        if (predicted_rank_sequence(p, field) != ranks)
          throw PredicateMismatch("predicted rank sequence differs at " + p.to_string() + " over " + field.name() +
                                  ": actual " + rank_seq_string(ranks) + ", predicted " +
                                  rank_seq_string(predicted_rank_sequence(p, field)));
      }
      bool found = false;
      for (auto& [key, count] : tally)
        if (key.first == case_id && key.second == ranks) {
          ++count;
          found = true;
          break;
        }
      if (!found) tally.push_back({{case_id, ranks}, 1});
    }
  });

  CensusReport report;
  report.q = static_cast<std::uint32_t>(q);
  for (const auto& tally : tallies)
    for (const auto& [key, count] : tally) {
      report.cases[key] += count;
      report.counts[jordan_type_from_ranks(key.second, static_cast<int>(kDim))] += count;
      report.total += count;
    }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// The five nonzero g2 Kirillov polynomials.
inline const std::map<Partition, IntPoly>& theorem_polynomials() {
  static const std::map<Partition, IntPoly> polys = [] {
    const IntPoly qm1{-1, 1};
    std::map<Partition, IntPoly> m;
    m[Partition{7}] = qm1.pow(2).shifted(4);
    m[Partition{3, 3, 1}] = (qm1.pow(2) * IntPoly{1, 2}).shifted(2);
    m[Partition{3, 2, 2}] = (qm1 * IntPoly{1, 2}).shifted(2);
    m[Partition{2, 2, 1, 1, 1}] = qm1 * IntPoly{1, 1, 1};
    m[Partition{1, 1, 1, 1, 1, 1, 1}] = IntPoly{1};
    return m;
  }();
  return polys;
}

/// Number of conjugacy classes of the unipotent radical of the G2 Chevalley group,
/// q^3 + 2q^2 - q - 1. Recorded for reference only; nothing here computes it.
inline IntPoly unipotent_class_count_reference() { return IntPoly{-1, -1, 2, 1}; }

struct CaseCount {
  int case_id = 0;
  RankSeq ranks{};
  std::string label;
  BigInt count;
  bool by_complement = false;  // derived as the remainder of the case total
};

/// Closed-form counts per (case, rank sequence) at q.
inline std::vector<CaseCount> closed_form_case_counts(const BigInt& q) {
  const BigInt qm1 = q - 1;
  const RankSeq regular{6, 5, 4, 3, 2, 1}, r42{4, 2, 0, 0, 0, 0}, r41{4, 1, 0, 0, 0, 0}, r20{2, 0, 0, 0, 0, 0},
      r00{0, 0, 0, 0, 0, 0};
  const BigInt q2 = q * q, q3 = q2 * q, q4 = q3 * q;
  std::vector<CaseCount> out;
  out.push_back({1, regular, "case 1: (q-1)^2 q^4", qm1 * qm1 * q4, false});
  out.push_back({2, r20, "case 2: q^2 (q-1)", q2 * qm1, false});
  out.push_back({2, r41, "case 2: q^3 (q-1) - q^2 (q-1)", q3 * qm1 - q2 * qm1, false});
  out.push_back({2, r42, "case 2 remainder", qm1 * q4 - q2 * qm1 - (q3 * qm1 - q2 * qm1), true});
  out.push_back({3, r41, "case 3: q^3 (q-1)", q3 * qm1, false});
  out.push_back({3, r42, "case 3 remainder", qm1 * q4 - q3 * qm1, true});
  out.push_back({4, r41, "case 4: 2 q^2 (q-1)", 2 * q2 * qm1, false});
  out.push_back({4, r20, "case 4: (q-1)(q+1)", qm1 * (q + 1), false});
  out.push_back({4, r00, "case 4: zero matrix", 1, false});
  out.push_back({4, r42, "case 4 remainder", q4 - 2 * q2 * qm1 - qm1 * (q + 1) - 1, true});
  return out;
}

/// Tallies of the Case 2 discriminant equation (bc+df)^2 - 4(b^2+cf)(c^2-bd) = 0 over a = 0,
/// all b, c, d, e, f, broken down as in the case analysis.
struct Case2EquationTallies {
  std::uint64_t d_nonzero = 0;  // solutions with d ≠ 0
  std::uint64_t d_zero = 0;     // solutions with d = 0
  std::uint64_t f_zero = 0;     // solutions with f = 0
  std::uint64_t f_nonzero = 0;  // solutions with f ≠ 0
  std::uint64_t vanishing = 0;  // f ≠ 0 and b^2 + cf = 0 = bc + df
  // Triples (b, c, d), d ≠ 0, by the number of f solving the equation, against c^2 - bd.
  std::uint64_t nonzero_square_triples = 0;
  std::uint64_t zero_triples = 0;
  std::uint64_t classification_mismatches = 0;
};

inline Case2EquationTallies case2_equation_tallies(const FieldCtx& k) {
  require_admissible(k);
  const Elem q = k.order();
  Case2EquationTallies t;
  for (Elem b = 0; b < q; ++b)
    for (Elem c = 0; c < q; ++c)
      for (Elem d = 0; d < q; ++d) {
        const Elem w = k.sub(k.mul(c, c), k.mul(b, d));
        unsigned f_solutions = 0;
        for (Elem f = 0; f < q; ++f) {
          const Elem u = k.add(k.mul(b, b), k.mul(c, f));
          const Elem v = k.add(k.mul(b, c), k.mul(d, f));
          const bool solves = k.sub(k.mul(v, v), k.mul(k.from_int(4), k.mul(u, w))) == 0;
          if (f != 0 && u == 0 && v == 0) t.vanishing += q;  // e is free
          if (!solves) continue;
          ++f_solutions;
          (d != 0 ? t.d_nonzero : t.d_zero) += q;
          (f != 0 ? t.f_nonzero : t.f_zero) += q;
        }
        if (d == 0) continue;
        const unsigned expected = w == 0 ? 1 : (k.is_square(w) ? 2 : 0);
        if (f_solutions != expected) ++t.classification_mismatches;
        if (w == 0) ++t.zero_triples;
        else if (k.is_square(w)) ++t.nonzero_square_triples;
      }
  return t;
}

/// Case 2 equation tallies against their closed forms, plus the square classification.
inline VerificationReport case2_equation_report(const FieldCtx& k) {
  VerificationReport report;
  report.title = "case 2 equation over " + k.name();
  const Case2EquationTallies t = case2_equation_tallies(k);
  const std::uint64_t q = k.order(), q2 = q * q, q3 = q2 * q;
  auto check = [&](const std::string& name, std::uint64_t got, std::uint64_t want) {
    report.add(name, got == want, std::to_string(got) + " vs " + std::to_string(want));
  };
  check("solutions, d != 0: q^3 (q-1)", t.d_nonzero, q3 * (q - 1));
  check("solutions, d = 0: q^3 + q^2 (q-1)", t.d_zero, q3 + q2 * (q - 1));
  check("solutions, f = 0: q^3 + q^2 (q-1)", t.f_zero, q3 + q2 * (q - 1));
  check("solutions, f != 0: q^3 (q-1)", t.f_nonzero, q3 * (q - 1));
  check("all solutions: q^3 (q-1) + q^3 + q^2 (q-1)", t.d_nonzero + t.d_zero, q3 * (q - 1) + q3 + q2 * (q - 1));
  check("b^2 + cf = 0 = bc + df with f != 0: q^2 (q-1)", t.vanishing, q2 * (q - 1));
  check("triples with c^2 - bd a nonzero square: q (q-1)^2 / 2", t.nonzero_square_triples, q * (q - 1) * (q - 1) / 2);
  check("triples with c^2 - bd = 0: q (q-1)", t.zero_triples, q * (q - 1));
  check("f-solution counts follow the quadratic character of c^2 - bd", t.classification_mismatches, 0);
  report.add("f(c^2 - bd) = (b^2 + cf)c - (bc + df)b", case2_identity_holds());
  return report;
}

/// Census counts against the closed forms and the five polynomials at q.
inline VerificationReport census_report(const CensusReport& census) {
  VerificationReport report;
  report.title = "g2 census over GF(" + std::to_string(census.q) + ")";
  const BigInt q = census.q;
  for (const auto& [lambda, poly] : theorem_polynomials()) {
    const BigInt expected = poly.eval(q);
    report.add("P_" + lambda.to_string(), BigInt(census.count(lambda)) == expected,
               "census " + std::to_string(census.count(lambda)) + ", polynomial " + expected.str());
  }
  std::size_t stray = 0;
  for (const auto& [lambda, count] : census.counts)
    if (!theorem_polynomials().contains(lambda)) stray += count;
  report.add("no other Jordan types", stray == 0, std::to_string(stray) + " matrices of other types");
  report.add("total = q^6", BigInt(census.total) == boost::multiprecision::pow(q, 6), std::to_string(census.total));
  for (const auto& cc : closed_form_case_counts(q)) {
    const BigInt got = census.case_count(cc.case_id, cc.ranks);
    report.add(cc.label + " " + rank_seq_string(cc.ranks), got == cc.count,
               "census " + got.str() + ", closed form " + cc.count.str());
  }
  // (4,2,0,...) counted directly versus the complement of the other four types.
  const BigInt direct = census.count(Partition{3, 3, 1});
  BigInt complement = boost::multiprecision::pow(q, 6);
  for (const auto& [lambda, poly] : theorem_polynomials())
    if (lambda != Partition{3, 3, 1}) complement -= census.count(lambda);
  report.add("P_3,3,1 direct equals complement", direct == complement, direct.str() + " vs " + complement.str());
  return report;
}

struct Interpolation {
  std::map<Partition, IntPoly> polynomials;
  IntPoly complement_331;  // q^6 minus the other four interpolated polynomials
  std::vector<CensusReport> censuses;
};

/// Interpolates per-partition census counts at the given field orders.
/// Seven points determine every polynomial of degree ≤ 6.
inline Interpolation g2_interpolate(const std::vector<std::uint64_t>& orders, unsigned workers = 1,
                                    std::uint64_t budget = typea::kDefaultBudget) {
  constexpr std::size_t kPoints = 7;
  if (orders.size() < kPoints)
    throw InsufficientPoints("need at least " + std::to_string(kPoints) + " field orders, got " +
                             std::to_string(orders.size()));
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      if (orders[i] == orders[j]) throw DuplicateAbscissa("field order " + std::to_string(orders[i]) + " repeated");
  Interpolation out;
  for (auto q : orders) out.censuses.push_back(g2_census(make_field(q), workers, budget));

  std::map<Partition, std::vector<std::pair<BigInt, BigInt>>> points;
  for (const auto& [lambda, poly] : theorem_polynomials()) points[lambda];
  for (const auto& c : out.censuses)
    for (const auto& [lambda, count] : c.counts) points[lambda];
  for (const auto& c : out.censuses)
    for (auto& [lambda, pts] : points) pts.emplace_back(BigInt(c.q), BigInt(c.count(lambda)));
  for (const auto& [lambda, pts] : points) out.polynomials[lambda] = poly_interpolate(pts);

  out.complement_331 = IntPoly::monomial(6);
  for (const auto& [lambda, poly] : out.polynomials)
    if (lambda != Partition{3, 3, 1}) out.complement_331 -= poly;
  return out;
}

/// Six field orders: every type other than (7) has degree at most 5 and is
/// interpolated from the six points; P_7 is then q^6 minus the others.
inline Interpolation g2_interpolate_reduced(const std::vector<std::uint64_t>& orders, unsigned workers = 1,
                                            std::uint64_t budget = typea::kDefaultBudget) {
  constexpr std::size_t kPoints = 6;
  if (orders.size() != kPoints)
    throw InsufficientPoints("reduced interpolation takes exactly " + std::to_string(kPoints) + " field orders, got " +
                             std::to_string(orders.size()));
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      if (orders[i] == orders[j]) throw DuplicateAbscissa("field order " + std::to_string(orders[i]) + " repeated");
  Interpolation out;
  for (auto q : orders) out.censuses.push_back(g2_census(make_field(q), workers, budget));

  const Partition regular{7};
  std::map<Partition, std::vector<std::pair<BigInt, BigInt>>> points;
  for (const auto& [lambda, poly] : theorem_polynomials()) points[lambda];
  for (const auto& c : out.censuses)
    for (const auto& [lambda, count] : c.counts) points[lambda];
  points.erase(regular);
  for (const auto& c : out.censuses)
    for (auto& [lambda, pts] : points) pts.emplace_back(BigInt(c.q), BigInt(c.count(lambda)));
  IntPoly rest = IntPoly::monomial(6);
  for (const auto& [lambda, pts] : points) {
    out.polynomials[lambda] = poly_interpolate(pts);
    rest -= out.polynomials[lambda];
  }
  out.polynomials[regular] = rest;
  out.complement_331 = IntPoly::monomial(6);
  for (const auto& [lambda, poly] : out.polynomials)
    if (lambda != Partition{3, 3, 1}) out.complement_331 -= poly;
  return out;
}

inline VerificationReport interpolation_report(const Interpolation& result) {
  VerificationReport report;
  report.title = "g2 interpolation";
  for (const auto& [lambda, expected] : theorem_polynomials()) {
    const auto it = result.polynomials.find(lambda);
    const IntPoly got = it == result.polynomials.end() ? IntPoly{} : it->second;
    report.add("P_" + lambda.to_string(), got == expected, got.to_string());
  }
  for (const auto& [lambda, poly] : result.polynomials)
    if (!theorem_polynomials().contains(lambda))
      report.add("P_" + lambda.to_string() + " vanishes", poly.is_zero(), poly.to_string());
  report.add("complement route for P_3,3,1", result.complement_331 == theorem_polynomials().at(Partition{3, 3, 1}),
             result.complement_331.to_string());
  for (const auto& [lambda, poly] : theorem_polynomials()) {
    const SplitForm s = split_qfactors(poly);
    bool positive = s.r.coeff(0) == 1;
    for (const auto& c : s.r.coeffs()) positive = positive && c > 0;
    const auto verdict = irreducibility(s.r);
    report.add("R_" + lambda.to_string() + " structure", positive && !verdict.reducible(),
               "R = " + s.r.to_string() + ", " + verdict.describe());
  }
  return report;
}

/// Fewer than seven field orders: checks the census points against the five
/// polynomials instead of recovering them.
inline VerificationReport fit_report(const std::vector<CensusReport>& censuses) {
  VerificationReport report;
  report.title = "g2 polynomial fit";
  for (const auto& c : censuses) {
    bool ok = true;
    for (const auto& [lambda, poly] : theorem_polynomials()) ok = ok && BigInt(c.count(lambda)) == poly.eval(BigInt(c.q));
    report.add("q=" + std::to_string(c.q) + " lies on the degree-6 polynomials", ok);
  }
  return report;
}

struct SpringerRow {
  std::string orbit;
  std::pair<int, int> diagram;  // (short root weight, long root weight)
  std::array<long long, kParams> representative;
  std::string representative_text;
  Partition partition;
  int dimension = 0;
};

inline const std::vector<SpringerRow>& springer_table() {
  static const std::vector<SpringerRow> rows{
      {"0", {0, 0}, {0, 0, 0, 0, 0, 0}, "0", {1, 1, 1, 1, 1, 1, 1}, 1},
      {"A1", {0, 1}, {0, 0, 0, 0, 1, 0}, "e_{3α1+2α2}", {2, 2, 1, 1, 1}, 1},
      {"~A1", {1, 0}, {0, 0, 1, 0, 0, 0}, "e_{2α1+α2}", {3, 2, 2}, 2},
      {"A1+~A1", {0, 2}, {1, 0, 1, 0, 0, 0}, "e_{α1}+e_{2α1+α2}", {3, 3, 1}, 2},
      {"G2", {2, 2}, {1, 0, 0, 0, 0, 1}, "e_{α1}+e_{α2}", {7}, 1},
  };
  return rows;
}

/// Representatives' Jordan types over GF(5), leading coefficients against the
/// tabulated dimensions, and the type A analogue with hook dimensions.
inline VerificationReport springer_check(int type_a_n_max = 8) {
  VerificationReport report;
  report.title = "Springer leading coefficients";
  const FieldCtx f5 = make_prime_field(5);
  for (const auto& row : springer_table()) {
    G2Params p;
    std::array<Elem*, kParams> slots{&p.a, &p.b, &p.c, &p.d, &p.e, &p.f};
    for (std::size_t k = 0; k < kParams; ++k) *slots[k] = f5.from_int(row.representative[k]);
    const auto ranks = rank_sequence(x_of(p, f5));
    const Partition jt = jordan_type_from_ranks(ranks, static_cast<int>(kDim));
    report.add(row.orbit + " representative Jordan type", jt == row.partition,
               row.representative_text + " -> " + jt.to_string());
    const IntPoly& poly = theorem_polynomials().at(row.partition);
    report.add(row.orbit + " leading coefficient", poly.lead() == row.dimension,
               "lead(P_" + row.partition.to_string() + ") = " + poly.lead().str() + ", dim " +
                   std::to_string(row.dimension));
  }
  std::size_t checked = 0, bad = 0;
  for (int n = 1; n <= type_a_n_max; ++n)
    for (const auto& lambda : partitions_of(n)) {
      ++checked;
      if (typea::kirillov_polynomial(lambda).lead() != hook_dimension(lambda)) ++bad;
    }
  report.add("type A leading coefficients equal hook dimensions (n <= " + std::to_string(type_a_n_max) + ")",
             bad == 0, std::to_string(checked) + " partitions, " + std::to_string(bad) + " failures");
  return report;
}

}  // namespace kirillov::g2
