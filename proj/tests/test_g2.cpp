#include <random>

#include <gtest/gtest.h>

#include "kirillov/g2.hpp"
#include "oracles.hpp"

using namespace kirillov;
using namespace kirillov::g2;

namespace {

const IntPoly kQm1{-1, 1};

void expect_passed(const VerificationReport& r) {
  for (const auto& e : r.entries) EXPECT_TRUE(e.passed) << r.title << " / " << e.name << ": " << e.detail;
}

RankSeq ranks_of(const G2Params& p, const FieldCtx& f) {
  const auto v = rank_sequence(x_of(p, f));
  RankSeq r{};
  std::copy(v.begin(), v.end(), r.begin());
  return r;
}

}  // namespace

TEST(Chevalley, Generators) {
  const G2Basis b = build_chevalley();
  IntMatrix a1{}, a2{};
  a1[0][1] = 1;
  a1[2][3] = 2;
  a1[3][4] = 1;
  a1[5][6] = 1;
  a2[1][2] = 1;
  a2[4][5] = 1;
  EXPECT_EQ(b.alpha1(), a1);
  EXPECT_EQ(b.alpha2(), a2);
}

TEST(Chevalley, AssembledXMatchesTemplateEntrywise) {
  const G2Basis b = build_chevalley();
  std::mt19937 rng(1);
  std::uniform_int_distribution<long long> pick(-9, 9);
  for (int t = 0; t < 100; ++t) {
    const std::array<long long, kParams> p{pick(rng), pick(rng), pick(rng), pick(rng), pick(rng), pick(rng)};
    const IntMatrix x = combine(b, p);
    const oracle::Mat want = oracle::g2_template(p[0], p[1], p[2], p[3], p[4], p[5]);
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) EXPECT_EQ(x[i][j], want[i][j]) << i + 1 << "," << j + 1;
  }
  EXPECT_EQ(symbolic_x(b)[0][3], MultiPoly::parse("2c"));
  EXPECT_EQ(symbolic_x(b)[1][3], MultiPoly::parse("-2b"));
}

TEST(Chevalley, ConstructionReport) { expect_passed(verify_construction()); }

TEST(Chevalley, DisplayedPowers) { expect_passed(verify_displayed_powers()); }

TEST(Chevalley, CubeShape) {
  const auto& x3 = displayed_powers().at(3);
  int nonzero = 0, two_a2f = 0, a2f = 0;
  for (const auto& row : x3)
    for (const auto& v : row) {
      if (v.is_zero()) continue;
      ++nonzero;
      two_a2f += v == MultiPoly::parse("2a^2f");
      a2f += v == MultiPoly::parse("a^2f");
      EXPECT_TRUE(v.substitute(0, 0).is_zero());
    }
  EXPECT_EQ(nonzero, 4);
  EXPECT_EQ(two_a2f, 3);
  EXPECT_EQ(a2f, 1);
  const auto& x6 = displayed_powers().at(6);
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      EXPECT_EQ(x6[i][j].is_zero(), !(i == 0 && j == 6));
  EXPECT_EQ(x6[0][6], MultiPoly::parse("2a^4f^2"));
}

TEST(Chevalley, Case2Identity) { EXPECT_TRUE(case2_identity_holds()); }

TEST(XOf, Examples) {
  const FieldCtx f5 = make_field(5);
  EXPECT_TRUE(x_of({}, f5).is_zero());
  const FMatrix x = x_of({1, 0, 0, 0, 0, 1}, f5);
  EXPECT_EQ(x(2, 3), 2U);
  EXPECT_EQ(x(1, 2), 1U);
  EXPECT_THROW(x_of({1, 0, 0, 0, 0, 1}, make_field(3)), BadCharacteristic);
  EXPECT_THROW(x_of({}, make_field(2)), BadCharacteristic);
  EXPECT_THROW(x_of({}, make_field(9)), BadCharacteristic);
}

TEST(XOf, NilpotentOverEveryTestedField) {
  std::mt19937 rng(3);
  for (std::uint64_t q : {5, 7, 11, 13, 25, 49, 125}) {
    const FieldCtx f = make_field(q);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(q - 1));
    for (int t = 0; t < 50; ++t) {
      const FMatrix x = x_of({pick(rng), pick(rng), pick(rng), pick(rng), pick(rng), pick(rng)}, f);
      EXPECT_TRUE(mat_pow(x, 7).is_zero());
    }
  }
}

TEST(Predicted, Examples) {
  const FieldCtx f5 = make_field(5);
  for (Elem b = 0; b < 5; ++b)
    for (Elem e = 0; e < 5; ++e)
      EXPECT_EQ(predicted_rank_sequence({1, b, 2, 3, e, 1}, f5), (RankSeq{6, 5, 4, 3, 2, 1}));
  EXPECT_EQ(predicted_rank_sequence({0, 0, 0, 0, 1, 1}, f5), (RankSeq{2, 0, 0, 0, 0, 0}));
  EXPECT_EQ(predicted_rank_sequence({0, 0, 0, 1, 0, 0}, f5), (RankSeq{2, 0, 0, 0, 0, 0}));
  EXPECT_THROW(predicted_rank_sequence({}, make_field(3)), BadCharacteristic);
}

TEST(Predicted, MatchesComputedRanksOnRandomTuplesOverExtensions) {
  std::mt19937 rng(4);
  for (std::uint64_t q : {25, 49, 125}) {
    const FieldCtx f = make_field(q);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(q - 1));
    for (int t = 0; t < 3000; ++t) {
      G2Params p{pick(rng), pick(rng), pick(rng), pick(rng), pick(rng), pick(rng)};
      // Force the rarer cases often.
      if (t % 4 == 1) p.a = 0;
      if (t % 4 == 2) p.f = 0;
      if (t % 4 == 3) p.a = p.f = 0;
      EXPECT_EQ(predicted_rank_sequence(p, f), ranks_of(p, f)) << p.to_string() << " over " << f.name();
    }
  }
}

TEST(Census, Gf5AgainstIndependentOracle) {
  // Census computed from the displayed template with the oracle's own elimination.
  std::map<std::vector<int>, std::uint64_t> want;
  const long long p = 5;
  for (long long a = 0; a < p; ++a)
    for (long long b = 0; b < p; ++b)
      for (long long c = 0; c < p; ++c)
        for (long long d = 0; d < p; ++d)
          for (long long e = 0; e < p; ++e)
            for (long long f = 0; f < p; ++f) ++want[oracle::jordan_type(oracle::g2_template(a, b, c, d, e, f), p)];
  const CensusReport got = g2_census(make_field(5));
  std::map<std::vector<int>, std::uint64_t> flat;
  for (const auto& [lambda, count] : got.counts) flat[lambda.parts()] = count;
  EXPECT_EQ(flat, want);
}

TEST(Census, Gf5Counts) {
  const CensusReport c = g2_census(make_field(5));
  EXPECT_EQ(c.count({7}), 10000U);
  EXPECT_EQ(c.count({3, 3, 1}), 4400U);
  EXPECT_EQ(c.count({3, 2, 2}), 1100U);
  EXPECT_EQ(c.count({2, 2, 1, 1, 1}), 124U);
  EXPECT_EQ(c.count({1, 1, 1, 1, 1, 1, 1}), 1U);
  EXPECT_EQ(c.total, 15625U);
  EXPECT_EQ(c.case_count(1, {6, 5, 4, 3, 2, 1}), 10000U);
  expect_passed(census_report(c));
}

TEST(Census, TheoremAndClosedFormsForSmallPrimes) {
  for (std::uint64_t q : {7, 11}) {
    const CensusReport c = g2_census(make_field(q));
    EXPECT_EQ(c.total, q * q * q * q * q * q);
    expect_passed(census_report(c));
  }
}

TEST(Census, WorkerCountDoesNotChangeTheReport) {
  const FieldCtx f = make_field(7);
  const CensusReport one = g2_census(f, 1), three = g2_census(f, 3);
  EXPECT_EQ(one.counts, three.counts);
  EXPECT_EQ(one.cases, three.cases);
}

TEST(Census, RejectsSmallCharacteristicAndBudget) {
  EXPECT_THROW(g2_census(make_field(3)), BadCharacteristic);
  EXPECT_THROW(g2_census(make_field(7), 1, 1000), TooLarge);
}

TEST(ClosedForms, Examples) {
  const auto forms = closed_form_case_counts(BigInt(5));
  auto find = [&](int case_id, const RankSeq& r) {
    for (const auto& f : forms)
      if (f.case_id == case_id && f.ranks == r) return f.count;
    return BigInt(-1);
  };
  EXPECT_EQ(find(2, {2, 0, 0, 0, 0, 0}), 100);
  EXPECT_EQ(find(4, {2, 0, 0, 0, 0, 0}), 24);
  EXPECT_EQ(find(3, {4, 1, 0, 0, 0, 0}), 500);
  BigInt total = 0;
  for (const auto& f : forms) total += f.count;
  EXPECT_EQ(total, 15625);
}

TEST(Case2Equation, TalliesAndSquareClassification) {
  for (std::uint64_t q : {5, 7, 25}) expect_passed(case2_equation_report(make_field(q)));
}

TEST(Theorem, PolynomialsSumToQ6AndSplitIntoIrreducibles) {
  IntPoly sum;
  for (const auto& [lambda, p] : theorem_polynomials()) {
    sum += p;
    const SplitForm s = split_qfactors(p);
    EXPECT_EQ(s.r.coeff(0), 1);
    for (const auto& c : s.r.coeffs()) EXPECT_GT(c, 0);
    EXPECT_FALSE(irreducibility(s.r).reducible());
  }
  EXPECT_EQ(sum, IntPoly::monomial(6));
  EXPECT_EQ(theorem_polynomials().at({3, 3, 1}), (kQm1.pow(2) * IntPoly{1, 2}).shifted(2));
  EXPECT_EQ(theorem_polynomials().at({2, 2, 1, 1, 1}), (kQm1 * IntPoly{1, 1, 1}));
}

TEST(Interpolation, RequiresSevenDistinctOrders) {
  EXPECT_THROW(g2_interpolate({5, 7, 11}), InsufficientPoints);
  EXPECT_THROW(g2_interpolate({5, 7, 11, 13, 17, 19, 19}), DuplicateAbscissa);
}

TEST(Interpolation, ReducedModeRecoversAllFive) {
  const Interpolation r = g2_interpolate_reduced({5, 7, 11, 13, 17, 19});
  expect_passed(interpolation_report(r));
  expect_passed(fit_report(r.censuses));
  for (const auto& [lambda, p] : theorem_polynomials()) EXPECT_EQ(r.polynomials.at(lambda), p) << lambda.to_string();
}

TEST(Springer, Table) {
  expect_passed(springer_check());
  const auto& rows = springer_table();
  ASSERT_EQ(rows.size(), 5U);
  EXPECT_EQ(rows.back().orbit, "G2");
  EXPECT_EQ(rows.back().partition, Partition{7});
  EXPECT_EQ(theorem_polynomials().at(rows[2].partition).lead(), 2);
}

TEST(Reference, UnipotentClassCount) {
  EXPECT_EQ(unipotent_class_count_reference(), IntPoly::parse("q^3 + 2q^2 - q - 1"));
}
