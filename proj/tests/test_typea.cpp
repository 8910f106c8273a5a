#include <gtest/gtest.h>

#include "kirillov/typea.hpp"
#include "oracles.hpp"

using namespace kirillov;
using namespace kirillov::typea;

namespace {

const IntPoly kQm1{-1, 1};

/// Census of strictly upper triangular n x n matrices over GF(p) with the oracle's own rank routine.
std::map<std::vector<int>, std::uint64_t> oracle_census(int n, long long p) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::map<std::vector<int>, std::uint64_t> counts;
  std::vector<long long> digits(slots.size(), 0);
  for (;;) {
    oracle::Mat x(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (std::size_t k = 0; k < slots.size(); ++k) x[slots[k].first][slots[k].second] = digits[k];
    ++counts[oracle::jordan_type(x, p)];
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return counts;
}

}  // namespace

TEST(Recursion, FourByFourGoldenSet) {
  EXPECT_EQ(kirillov_polynomial({4}), kQm1.pow(3).shifted(3));
  EXPECT_EQ(kirillov_polynomial({3, 1}), (kQm1.pow(2) * IntPoly{1, 3}).shifted(2));
  EXPECT_EQ(kirillov_polynomial({2, 2}), (kQm1.pow(2) * IntPoly{1, 2}).shifted(1));
  EXPECT_EQ(kirillov_polynomial({2, 1, 1}), (kQm1 * IntPoly{1, 2, 3}));
  EXPECT_EQ(kirillov_polynomial({1, 1, 1, 1}), IntPoly{1});
}

TEST(Recursion, ExpandedSevenCellExample) {
  EXPECT_EQ(kirillov_polynomial({3, 2, 1, 1}),
            IntPoly::parse("-q^5 - 2q^6 - 3q^7 - 3q^8 + 4q^9 + 25q^10 + 11q^11 - 23q^12 - 43q^13 + 35q^14"));
}

TEST(Recursion, SmallCases) {
  EXPECT_EQ(kirillov_polynomial({}), IntPoly{1});
  EXPECT_EQ(kirillov_polynomial({1}), IntPoly{1});
  EXPECT_EQ(kirillov_polynomial({2}), kQm1);
  EXPECT_EQ(kirillov_polynomial({1, 1}), IntPoly{1});
}

TEST(Recursion, Conservation) {
  for (int n = 0; n <= 12; ++n) {
    IntPoly sum;
    for (const auto& lambda : partitions_of(n)) sum += kirillov_polynomial(lambda);
    EXPECT_EQ(sum, IntPoly::monomial(static_cast<std::size_t>(n * (n - 1) / 2))) << "n=" << n;
  }
}

TEST(Census, Examples) {
  const Census c2 = brute_force_census(2, make_field(2));
  EXPECT_EQ(c2, (Census{{Partition{2}, 1}, {Partition{1, 1}, 1}}));
  EXPECT_EQ(brute_force_census(4, make_field(2)).at(Partition{3, 1}), 28U);
  std::uint64_t total = 0;
  for (const auto& [lambda, count] : brute_force_census(4, make_field(3))) total += count;
  EXPECT_EQ(total, 729U);
}

TEST(Census, MatchesIndependentOracle) {
  for (int n = 1; n <= 4; ++n)
    for (long long p : {2, 3, 5}) {
      if (n == 4 && p == 5) continue;
      const Census got = brute_force_census(n, make_prime_field(static_cast<std::uint64_t>(p)));
      std::map<std::vector<int>, std::uint64_t> flat;
      for (const auto& [lambda, count] : got) flat[lambda.parts()] = count;
      EXPECT_EQ(flat, oracle_census(n, p)) << "n=" << n << " p=" << p;
    }
}

TEST(Census, EqualsRecursionUpToFive) {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t q : {2, 3, 4, 5}) {
      const auto report = census_report(n, make_field(q));
      EXPECT_TRUE(report.all_passed()) << report.title;
    }
}

TEST(Census, EqualsRecursionSixOverGf2) { EXPECT_TRUE(census_report(6, make_field(2)).all_passed()); }

TEST(Census, WorkerCountDoesNotChangeCounts) {
  const FieldCtx f = make_field(3);
  EXPECT_EQ(brute_force_census(5, f, 1), brute_force_census(5, f, 3));
}

TEST(Census, BudgetIsEnforced) { EXPECT_THROW(brute_force_census(6, make_field(5), 1, 1000), TooLarge); }

TEST(Profile, Examples) {
  const auto p22 = valuation_profile({2, 2});
  EXPECT_EQ(p22.a, 1U);
  EXPECT_EQ(p22.b, 2U);
  EXPECT_EQ(p22.deg_r, 1);
  EXPECT_EQ(p22.lead_r, 2);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(valuation_profile(Partition{n}).b, static_cast<unsigned>(n - 1));
  const auto ones = valuation_profile({1, 1, 1, 1, 1});
  EXPECT_EQ(std::make_tuple(ones.a, ones.b, ones.deg_r), std::make_tuple(0U, 0U, 0));
  EXPECT_EQ(ones.lead_r, 1);
}

TEST(Profile, StructureThroughTen) {
  const auto report = structure_report(10);
  for (const auto& e : report.entries) EXPECT_TRUE(e.passed) << e.name << ": " << e.detail;
}

TEST(Profile, StructureBeyondTen) {
  // Beyond the documented range the same closed forms keep holding.
  const auto report = structure_report(14);
  EXPECT_TRUE(report.all_passed());
}

TEST(VlaTable, IdentitiesHold) {
  const auto report = vla_table_n4();
  for (const auto& e : report.entries) EXPECT_TRUE(e.passed) << e.name << ": " << e.detail;
}

TEST(VlaTable, TwoByTwoRowsSumAsDisplayed) {
  IntPoly sum;
  int rows = 0;
  for (const auto& r : vla_rows_n4())
    if (r.jordan == Partition{2, 2}) {
      sum += r.count();
      ++rows;
    }
  EXPECT_EQ(rows, 3);
  EXPECT_EQ(sum, (kQm1.pow(2) * IntPoly{1, 2}).shifted(1));
  int regular = 0;
  for (const auto& r : vla_rows_n4()) regular += r.jordan == Partition{4};
  EXPECT_EQ(regular, 1);
}

TEST(Scan, NothingReducibleUpToFive) {
  for (const auto& e : reducibility_scan(5)) EXPECT_FALSE(e.verdict.reducible()) << e.lambda.to_string();
}

TEST(Scan, SevenThreeFactorization) {
  const auto v = irreducibility(split_qfactors(kirillov_polynomial({7, 3})).r);
  ASSERT_TRUE(v.reducible());
  EXPECT_EQ(v.factors, (std::vector<IntPoly>{IntPoly{1, 5}, IntPoly{1, 4, 15}}));
}

TEST(Scan, ReducibleSetThroughTen) {
  std::set<Partition> reducible;
  for (const auto& e : reducibility_scan(10)) {
    EXPECT_TRUE(verify_verdict(e.split.r, e.verdict)) << e.lambda.to_string();
    if (e.verdict.reducible()) reducible.insert(e.lambda);
  }
  const std::set<Partition> expected{{3, 2, 1}, {4, 3, 1}, {5, 3, 1}, {4, 4, 1},  {4, 3, 2},
                                     {4, 2, 2, 1}, {3, 3, 2, 1}, {7, 3}, {4, 4, 2}};
  EXPECT_EQ(reducible, expected);
}

TEST(Scan, DocumentedFactorizationsThroughTen) {
  const auto report = scan_report(reducibility_scan(10));
  for (const auto& e : report.entries) EXPECT_TRUE(e.passed) << e.name << ": " << e.detail;
}

TEST(Scan, DocumentedEqualityOfTheTwoNineCellFactors) {
  EXPECT_EQ(split_qfactors(kirillov_polynomial({4, 3, 2})).r, split_qfactors(kirillov_polynomial({3, 3, 2, 1})).r);
}
