#pragma once

// Kirillov polynomials of type A: P_λ(q) counts strictly upper triangular
// n x n matrices over GF(q) with Jordan type λ.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <mutex>
#include <string>
#include <vector>

#include "kirillov/bigint.hpp"
#include "kirillov/errors.hpp"
#include "kirillov/field.hpp"
#include "kirillov/intpoly.hpp"
#include "kirillov/irreducibility.hpp"
#include "kirillov/matrix.hpp"
#include "kirillov/parallel.hpp"
#include "kirillov/partition.hpp"
#include "kirillov/report.hpp"

namespace kirillov::typea {

namespace detail {

struct Memo {
  std::mutex mutex;
  std::map<Partition, IntPoly> table;
};

inline Memo& memo() {
  static Memo m;
  return m;
}

}  // namespace detail

/// P_λ(q) = Σ_j (q^{n - λ'_{y_j}} - q^{n - 1 - λ'_{y_j - 1}}) P_{λ↓j}(q) over removable
/// cells (x_j, y_j), where the subtracted term is absent for y_j = 1. P_∅ = 1.
inline IntPoly kirillov_polynomial(const Partition& lambda) {
  auto& m = detail::memo();
  {
    std::lock_guard lock(m.mutex);
    if (auto it = m.table.find(lambda); it != m.table.end()) return it->second;
  }
  IntPoly result;
  if (lambda.empty()) {
    result = IntPoly::constant(1);
  } else {
    const int n = lambda.size();
    const Partition conj = dual(lambda);
    const auto cells = removable_cells(lambda);
    for (const auto& cell : cells) {
      const auto y = static_cast<std::size_t>(cell.col);
      IntPoly weight = IntPoly::monomial(static_cast<std::size_t>(n - conj.part(y)));
      if (y > 1) weight -= IntPoly::monomial(static_cast<std::size_t>(n - 1 - conj.part(y - 1)));
      result += weight * kirillov_polynomial(remove_cell(lambda, cell.index));
    }
  }
  std::lock_guard lock(m.mutex);
  return m.table.emplace(lambda, std::move(result)).first->second;
}

/// Closed-form predictions for the q^a (q-1)^b R factorization of P_λ.
struct ValuationProfile {
  long long a = 0;
  long long b = 0;
  long long deg_r = 0;
  BigInt lead_r = 1;
  friend bool operator==(const ValuationProfile&, const ValuationProfile&) = default;
};

inline ValuationProfile valuation_profile(const Partition& lambda) {
  const long long n = lambda.size();
  const long long big_n = static_cast<long long>(lambda.length());
  const Partition conj = dual(lambda);
  const std::size_t conj_len = conj.length();
  long long adjacent = 0;  // Σ_{i=1}^{N'-1} λ'_i λ'_{i+1}
  for (std::size_t i = 1; i < conj_len; ++i) adjacent += static_cast<long long>(conj.part(i)) * conj.part(i + 1);
  long long tail = 0;  // Σ_{i=2}^{N'} C(λ'_i + 1, 2)
  for (std::size_t i = 2; i <= conj_len; ++i) tail += static_cast<long long>(conj.part(i) + 1) * conj.part(i) / 2;

  ValuationProfile v;
  v.a = n * (n - 1) / 2 - big_n * (big_n - 1) / 2 - adjacent;
  v.b = n - big_n;
  v.deg_r = adjacent - tail;
  v.lead_r = hook_dimension(lambda);
  return v;
}

inline ValuationProfile observed_profile(const SplitForm& s) {
  return {static_cast<long long>(s.a), static_cast<long long>(s.b), s.r.degree(), s.r.lead()};
}

using Census = std::map<Partition, std::uint64_t>;

/// Default limit on the number of matrices a census may enumerate.
inline constexpr std::uint64_t kDefaultBudget = 1ULL << 28;

/// Tallies the Jordan types of all strictly upper triangular n x n matrices over the field.
inline Census brute_force_census(int n, const FieldCtx& field, unsigned workers = 1,
                                 std::uint64_t budget = kDefaultBudget) {
  if (n < 0) throw Error("census dimension must be non-negative");
  if (static_cast<std::size_t>(n) > RankKernel::kMaxDim) throw TooLarge("census dimension too large");
  const std::size_t m = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t q = field.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > budget / q + 1) throw TooLarge("census exceeds the enumeration budget");
    total *= q;
  }
  if (total > budget) throw TooLarge("census exceeds the enumeration budget");

  // Free positions in row-major order; the leading (up to) two are fixed per slice.
  std::vector<std::size_t> positions;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) positions.push_back(static_cast<std::size_t>(i * n + j));
  const std::size_t fixed = std::min<std::size_t>(2, m);
  std::uint64_t slices = 1;
  for (std::size_t i = 0; i < fixed; ++i) slices *= q;

  struct Tally {
    std::vector<std::pair<std::vector<int>, std::uint64_t>> by_ranks;
    void add(const std::vector<int>& r) {
      for (auto& [key, count] : by_ranks)
        if (key == r) {
          ++count;
          return;
        }
      by_ranks.emplace_back(r, 1);
    }
  };
  std::vector<Tally> tallies(std::max(1U, workers));
  parallel_slices(slices, workers, [&](unsigned worker, std::size_t slice) {
    RankKernel kernel(field, static_cast<std::size_t>(n));
    RankKernel::Block x{};
    std::vector<int> ranks(n > 1 ? static_cast<std::size_t>(n - 1) : 0);
    std::uint64_t s = slice;
    for (std::size_t i = fixed; i-- > 0;) {
      x[positions[i]] = static_cast<Elem>(s % q);
      s /= q;
    }
    std::vector<Elem> digits(m - fixed, 0);
    for (;;) {
      for (std::size_t i = 0; i < digits.size(); ++i) x[positions[fixed + i]] = digits[i];
      kernel.strict_upper_rank_sequence(x, ranks);
      tallies[worker].add(ranks);
      std::size_t k = digits.size();
      while (k > 0 && ++digits[k - 1] == q) digits[--k] = 0;
      if (k == 0) break;
    }
  });

  Census census;
  for (const auto& t : tallies)
    for (const auto& [ranks, count] : t.by_ranks) census[jordan_type_from_ranks(ranks, n)] += count;
  return census;
}

/// One transcribed row of the n = 4 unitriangular conjugacy-class table.
struct VlaRow {
  std::string type;  // six entries over {θ, •, 0}, ordered (3,4) < (2,3) < (2,4) < (1,2) < (1,3) < (1,4)
  Partition jordan;
  unsigned q_exponent = 0;   // q^(6 - dim centralizer)
  unsigned qm1_exponent = 0;  // exponent of (q - 1) in the class-type count

  IntPoly count() const { return (IntPoly{-1, 1}.pow(qm1_exponent)).shifted(q_exponent); }
  unsigned bullets() const {
    unsigned k = 0;
    for (std::size_t pos = type.find("•"); pos != std::string::npos; pos = type.find("•", pos + 1)) ++k;
    return k;
  }
};

inline const std::vector<VlaRow>& vla_rows_n4() {
  static const std::vector<VlaRow> rows{
      {"θ,θ,θ,θ,θ,θ", {1, 1, 1, 1}, 0, 0},
      {"θ,θ,θ,θ,θ,•", {2, 1, 1}, 0, 1},
      {"θ,θ,•,θ,θ,0", {2, 1, 1}, 1, 1},
      {"θ,•,0,θ,0,θ", {2, 1, 1}, 2, 1},
      {"•,θ,0,θ,θ,0", {2, 1, 1}, 2, 1},
      {"•,θ,0,•,•,0", {3, 1}, 2, 3},
      {"θ,θ,θ,θ,•,0", {2, 1, 1}, 1, 1},
      {"θ,θ,•,θ,•,0", {2, 2}, 1, 2},
      {"θ,•,0,θ,0,•", {2, 2}, 2, 2},
      {"•,θ,0,θ,•,0", {3, 1}, 2, 2},
      {"•,•,0,θ,0,0", {3, 1}, 3, 2},
      {"θ,θ,θ,•,0,0", {2, 1, 1}, 2, 1},
      {"θ,θ,•,•,0,0", {3, 1}, 2, 2},
      {"θ,•,0,•,0,0", {3, 1}, 3, 2},
      {"•,θ,0,•,θ,0", {2, 2}, 2, 2},
      {"•,•,0,•,0,0", {4}, 3, 3},
  };
  return rows;
}

/// Reconciles the n = 4 table with the recursion and the class count 2q^3 + q^2 - 2q.
inline VerificationReport vla_table_n4() {
  VerificationReport report;
  report.title = "n = 4 conjugacy-class table";
  const auto& rows = vla_rows_n4();
  report.add("row count", rows.size() == 16, std::to_string(rows.size()) + " rows");

  bool exponents_ok = true;
  for (const auto& r : rows) exponents_ok = exponents_ok && r.bullets() == r.qm1_exponent;
  report.add("(q-1) exponent equals bullet count in every row", exponents_ok);

  IntPoly all;
  for (const auto& lambda : partitions_of(4)) {
    IntPoly sum;
    for (const auto& r : rows)
      if (r.jordan == lambda) sum += r.count();
    const IntPoly expected = kirillov_polynomial(lambda);
    all += sum;
    report.add("P_" + lambda.to_string() + " from table", sum == expected,
               "table: " + sum.to_string() + "; recursion: " + expected.to_string());
  }
  report.add("table counts sum to q^6", all == IntPoly::monomial(6), all.to_string());

  IntPoly classes;
  for (const auto& r : rows) classes += IntPoly{-1, 1}.pow(r.bullets());
  const IntPoly expected_classes{0, -2, 1, 2};
  report.add("number of classes", classes == expected_classes,
             "table: " + classes.to_string() + "; expected: " + expected_classes.to_string());
  return report;
}

struct ScanEntry {
  Partition lambda;
  SplitForm split;
  IrreducibilityVerdict verdict;
};

/// Splits every P_λ with 1 ≤ |λ| ≤ n_max and decides irreducibility of each R_λ.
inline std::vector<ScanEntry> reducibility_scan(int n_max, unsigned workers = 1) {
  std::vector<ScanEntry> entries;
  for (int n = 1; n <= n_max; ++n)
    for (auto& lambda : partitions_of(n)) entries.push_back({lambda, split_qfactors(kirillov_polynomial(lambda)), {}});
  parallel_slices(entries.size(), workers, [&](unsigned, std::size_t i) {
    entries[i].verdict = irreducibility(entries[i].split.r);
  });
  return entries;
}

/// The reducible R_λ with |λ| ≤ 10 and their factorizations, as transcribed.
inline const std::map<Partition, std::vector<IntPoly>>& documented_factorizations() {
  static const std::map<Partition, std::vector<IntPoly>> table = [] {
    const IntPoly two_q_plus_1{1, 2};
    const IntPoly octic{1, 5, 18, 47, 100, 171, 219, 195, 84};
    std::map<Partition, std::vector<IntPoly>> m;
    m[Partition{3, 2, 1}] = {two_q_plus_1, IntPoly{1, 3, 8, 8}};
    m[Partition{4, 3, 1}] = {IntPoly{1, 4, 5}, IntPoly{1, 3, 10, 14}};
    m[Partition{5, 3, 1}] = {two_q_plus_1, IntPoly{1, 6, 23, 57, 81}};
    m[Partition{4, 4, 1}] = {two_q_plus_1, IntPoly{1, 5, 18, 39, 42}};
    m[Partition{4, 3, 2}] = {two_q_plus_1, octic};
    m[Partition{3, 3, 2, 1}] = {two_q_plus_1, octic};
    m[Partition{4, 2, 2, 1}] = {IntPoly{1, 2, 3}, IntPoly{1, 5, 15, 38, 73, 111, 72}};
    m[Partition{7, 3}] = {IntPoly{1, 5}, IntPoly{1, 4, 15}};
    m[Partition{4, 4, 2}] = {two_q_plus_1, IntPoly{1, 6, 24, 62, 126, 180, 126}};
    return m;
  }();
  return table;
}

/// Compares a scan with the documented factorizations: exactly those R_λ are
/// reducible, with the documented factors, and every other verdict carries a
/// certificate that re-checks.
inline VerificationReport scan_report(const std::vector<ScanEntry>& entries) {
  VerificationReport report;
  report.title = "reducibility scan";
  std::set<Partition> reducible;
  std::size_t certified = 0, uncertified = 0;
  int n_max = 0;
  for (const auto& e : entries) {
    n_max = std::max(n_max, e.lambda.size());
    if (!verify_verdict(e.split.r, e.verdict)) {
      ++uncertified;
      report.add("certificate for R_" + e.lambda.to_string(), false, e.verdict.describe());
    } else if (!e.verdict.reducible()) {
      ++certified;
    }
    if (e.verdict.reducible()) reducible.insert(e.lambda);
  }
  std::set<Partition> expected;
  for (const auto& [lambda, factors] : documented_factorizations())
    if (lambda.size() <= n_max) expected.insert(lambda);
  std::string found;
  for (const auto& l : reducible) found += (found.empty() ? "" : " ") + l.to_string();
  report.add("reducible set", reducible == expected, std::to_string(reducible.size()) + " reducible: " + found);
  for (const auto& e : entries) {
    const auto it = documented_factorizations().find(e.lambda);
    if (it == documented_factorizations().end()) continue;
    IntPoly product{1};
    for (const auto& f : it->second) product = product * f;
    auto documented = it->second;
    std::sort(documented.begin(), documented.end());
    std::string got, want;
    for (const auto& f : e.verdict.factors) got += "(" + f.to_string() + ")";
    for (const auto& f : documented) want += "(" + f.to_string() + ")";
    const bool ok = product == e.split.r && e.verdict.reducible() && e.verdict.factors == documented;
    report.add("R_" + e.lambda.to_string() + " factorization", ok,
               ok ? got : "computed " + got + ", documented " + want);
  }
  report.add("irreducibility certificates", uncertified == 0,
             std::to_string(certified) + " certified irreducible or unit, " + std::to_string(uncertified) + " failed");
  return report;
}

/// Structure checks for all λ with |λ| ≤ n_max: split exponents, degree and leading
/// coefficient of R against the closed forms, R(0) = 1, positive coefficients,
/// and Σ_λ P_λ = q^C(n,2).
inline VerificationReport structure_report(int n_max) {
  VerificationReport report;
  report.title = "type A structure";
  for (int n = 1; n <= n_max; ++n) {
    IntPoly total;
    std::size_t bad = 0;
    std::string first_bad;
    for (const auto& lambda : partitions_of(n)) {
      const IntPoly p = kirillov_polynomial(lambda);
      total += p;
      const SplitForm s = split_qfactors(p);
      bool ok = observed_profile(s) == valuation_profile(lambda) && s.r.coeff(0) == 1;
      for (const auto& c : s.r.coeffs()) ok = ok && c > 0;
      ok = ok && s.reconstruct() == p;
      if (!ok && bad++ == 0) first_bad = lambda.to_string();
    }
    report.add("n=" + std::to_string(n) + " split structure", bad == 0,
               bad == 0 ? std::to_string(partitions_of(n).size()) + " partitions" : "first failure: " + first_bad);
    report.add("n=" + std::to_string(n) + " conservation", total == IntPoly::monomial(static_cast<std::size_t>(n * (n - 1) / 2)),
               "sum = " + total.to_string());
  }
  return report;
}

/// Brute-force census against pointwise evaluation of the recursion.
inline VerificationReport census_report(int n, const FieldCtx& field, unsigned workers = 1,
                                        std::uint64_t budget = kDefaultBudget) {
  VerificationReport report;
  report.title = "census n=" + std::to_string(n) + " over " + field.name();
  const Census census = brute_force_census(n, field, workers, budget);
  const BigInt q = field.order();
  BigInt total = 0;
  for (const auto& lambda : partitions_of(n)) {
    const auto it = census.find(lambda);
    const BigInt counted = it == census.end() ? 0 : it->second;
    const BigInt expected = kirillov_polynomial(lambda).eval(q);
    total += counted;
    report.add(lambda.to_string(), counted == expected, "census " + counted.str() + ", P(q) " + expected.str());
  }
  report.add("total", total == boost::multiprecision::pow(q, static_cast<unsigned>(n * (n - 1) / 2)), total.str());
  return report;
}

}  // namespace kirillov::typea
