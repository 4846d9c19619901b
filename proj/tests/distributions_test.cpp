#include <gtest/gtest.h>

#include <cmath>

#include "fishburn/distributions.hpp"
#include "fishburn/oracle.hpp"
#include "json.hpp"

namespace fishburn::dist {
namespace {

namespace bmp = boost::multiprecision;
using Tag = LambdaSpec::Tag;

double d(const Real& x) { return static_cast<double>(x); }

TEST(Distributions, TablesMatchBruteForce) {
  for (Tag t : {Tag::all, Tag::zero_one}) {
    const auto spec = LambdaSpec::named(t);
    for (Family f : {Family::row_fishburn, Family::fishburn, Family::self_dual})
      for (Stat s : {Stat::first_row, Stat::diagonal, Stat::ones, Stat::twos}) {
        const int n = 6;
        const auto ms = oracle::enumerate(f, spec, n);
        const auto hist = oracle::histogram(ms, oracle::to_matrix_stat(s));
        const mpz_class total = oracle::total_weight(ms);
        const auto table = distribution(f, s, spec, n);
        EXPECT_EQ(table.total, total);
        ASSERT_EQ(table.support.size(), hist.size()) << to_string(f) << " " << to_string(s);
        std::size_t i = 0;
        for (const auto& [v, c] : hist) {
          EXPECT_EQ(table.support[i], v);
          EXPECT_EQ(table.counts[i], c);
          mpq_class p(c, total);
          p.canonicalize();
          EXPECT_EQ(table.pmf[i], p);
          ++i;
        }
      }
  }
}

TEST(Distributions, FirstRowTableAtSeven) {
  const auto t = distribution(Family::fishburn, Stat::first_row, LambdaSpec::named(Tag::all), 7);
  const std::vector<long> want = {217, 380, 270, 110, 30, 6, 1};
  ASSERT_EQ(t.counts.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(t.counts[i], want[i]);
  EXPECT_EQ(t.total, 1014);
  EXPECT_EQ(t.probability(1), mpq_class(217, 1014));
  EXPECT_EQ(t.probability(9), 0);
}

TEST(Distributions, MomentsMatchTable) {
  const auto spec = LambdaSpec::named(Tag::all);
  for (Family f : {Family::row_fishburn, Family::fishburn, Family::self_dual})
    for (Stat s : {Stat::first_row, Stat::diagonal, Stat::ones}) {
      const auto t = distribution(f, s, spec, 20);
      mpq_class mean = 0, second = 0;
      for (std::size_t i = 0; i < t.support.size(); ++i) {
        mean += t.support[i] * t.pmf[i];
        second += t.support[i] * t.support[i] * t.pmf[i];
      }
      const auto m = moments(f, s, spec, 20);
      EXPECT_EQ(m.mean, mean);
      EXPECT_EQ(m.variance, second - mean * mean);
      EXPECT_EQ(t.mean, mean);
      EXPECT_EQ(m.total, t.total);
    }
}

TEST(Distributions, AffineTransforms) {
  const auto t = distribution(Family::fishburn, Stat::ones, LambdaSpec::named(Tag::all), 10);
  const auto a = affine(t, mpq_class(-1, 2), 5, "(n-Z)/2");
  EXPECT_EQ(a.variable, "(n-Z)/2");
  EXPECT_EQ(a.mean, 5 - t.mean / 2);
  EXPECT_EQ(a.variance, t.variance / 4);
  for (std::size_t i = 1; i < a.support.size(); ++i) EXPECT_LT(a.support[i - 1], a.support[i]);
  const auto m = affine(moments(Family::fishburn, Stat::ones, LambdaSpec::named(Tag::all), 10), 3, 1);
  EXPECT_EQ(m.mean, 3 * t.mean + 1);
  EXPECT_EQ(m.variance, 9 * t.variance);
}

TEST(Distributions, EmptySizeThrows) {
  // No matrix with only even entries has odd size.
  EXPECT_THROW(distribution(Family::fishburn, Stat::first_row, LambdaSpec::parse("0,2"), 5), std::domain_error);
}

TEST(LimitLaws, ZeroTruncatedPoisson) {
  const Real tau = asym::log2();
  const auto law = LimitLaw::ztp(tau);
  Real total = 0;
  for (const auto& [k, p] : law.pmf_table()) {
    EXPECT_GE(k, 1);
    total += p;
  }
  EXPECT_LT(bmp::abs(total - 1), Real("1e-14"));
  // τ^k / (k! (e^τ - 1)) with e^τ - 1 = 1
  EXPECT_NEAR(d(law.pmf(3)), std::pow(std::log(2.0), 3) / 6, 1e-15);
  EXPECT_EQ(law.pmf(0), 0);
  EXPECT_EQ(law.pmf(mpq_class(1, 2)), 0);
  const double l2 = std::log(2.0);
  EXPECT_NEAR(d(law.law_mean()), 2 * l2, 1e-14);
  EXPECT_NEAR(d(law.law_variance()), 2 * l2 * (1 - l2), 1e-14);
}

TEST(LimitLaws, PoissonAndConvolution) {
  const auto p = LimitLaw::poisson(Real(2));
  EXPECT_NEAR(d(p.pmf(0)), std::exp(-2.0), 1e-15);
  EXPECT_NEAR(d(p.pmf(4)), std::exp(-2.0) * 16 / 24, 1e-15);
  const auto c = LimitLaw::convolution({{2, Real("0.5")}, {4, Real("0.25")}});
  Real total = 0, mean = 0;
  for (const auto& [v, q] : c.pmf_table()) {
    EXPECT_EQ(v % 2, 0);
    total += q;
    mean += v * q;
  }
  EXPECT_LT(bmp::abs(total - 1), Real("1e-12"));
  EXPECT_NEAR(d(mean), 2 * 0.5 + 4 * 0.25, 1e-10);
  EXPECT_NEAR(d(c.law_mean()), 2.0, 1e-15);
  EXPECT_NEAR(d(c.law_variance()), 4 * 0.5 + 16 * 0.25, 1e-15);
  EXPECT_NEAR(d(c.pmf(0)), std::exp(-0.75), 1e-15);
}

TEST(LimitLaws, NormalCdf) {
  const auto n = LimitLaw::normal(Real(3), Real(4));
  EXPECT_NEAR(d(n.cdf(Real(3))), 0.5, 1e-15);
  EXPECT_NEAR(d(n.cdf(Real(5))), 0.841344746068543, 1e-14);
  EXPECT_NEAR(d(n.cdf(Real(-1))), 0.0227501319481792, 1e-14);
  EXPECT_THROW(n.pmf(1), std::logic_error);
  EXPECT_FALSE(n.lattice());
}

TEST(LimitLaws, CompareExactMatchIsZero) {
  DistributionTable t;
  t.support = {0};
  t.counts = {1};
  t.pmf = {1};
  t.total = 1;
  t.mean = 0;
  t.variance = 0;
  const auto m = compare(t, LimitLaw::degenerate(0));
  EXPECT_EQ(m.sup_distance, 0);
  EXPECT_EQ(m.total_variation, 0);
  EXPECT_EQ(m.deficiency, 0);
  // Mass of the law outside the support counts too.
  const auto p = compare(t, LimitLaw::poisson(Real(1)));
  EXPECT_NEAR(d(p.sup_distance), 1 - std::exp(-1.0), 1e-14);
  EXPECT_NEAR(d(p.total_variation), 1 - std::exp(-1.0), 1e-12);
}

TEST(LimitLaws, Predictions) {
  const auto all = LambdaSpec::named(Tag::all);
  const auto p = limit_law_for(Family::row_fishburn, Stat::first_row, all, 50);
  EXPECT_EQ(p.law.kind, LawKind::ztp);
  const auto ones = limit_law_for(Family::row_fishburn, Stat::ones, all, 50);
  EXPECT_EQ(ones.law.kind, LawKind::poisson);
  EXPECT_NEAR(d(ones.law.tau), M_PI * M_PI / 12, 1e-15);
  EXPECT_EQ(ones.scale, mpq_class(-1, 2));
  EXPECT_NEAR(d(limit_law_for(Family::fishburn, Stat::ones, all, 50).law.tau), M_PI * M_PI / 6, 1e-15);
  EXPECT_EQ(limit_law_for(Family::fishburn, Stat::ones, LambdaSpec::named(Tag::zero_one), 50).law.kind,
            LawKind::degenerate);
  const auto diag = limit_law_for(Family::fishburn, Stat::diagonal, all, 50);
  EXPECT_NEAR(d(diag.law.mean), 2 * std::log(50.0), 1e-14);
  EXPECT_EQ(limit_law_for(Family::self_dual, Stat::ones, all, 50).law.kind, LawKind::convolution);
  EXPECT_THROW(limit_law_for(Family::fishburn, Stat::twos, all, 50), UncoveredRegime);
  EXPECT_THROW(limit_law_for(Family::fishburn, Stat::twos, LambdaSpec::parse("0,2,4"), 50), UncoveredRegime);
  EXPECT_THROW(limit_law_for(Family::row_fishburn, Stat::twos, LambdaSpec::parse("0,2,3"), 50), UncoveredRegime);
}

TEST(LimitLaws, RowFishburnOnesMean) {
  const auto m = affine(moments(Family::row_fishburn, Stat::ones, LambdaSpec::named(Tag::all), 150), mpq_class(-1, 2),
                        75);
  EXPECT_NEAR(m.mean.get_d() / (M_PI * M_PI / 12), 1.0, 0.15);
}

TEST(LimitLaws, SupDistanceDecreases) {
  const auto all = LambdaSpec::named(Tag::all);
  for (Family f : {Family::row_fishburn, Family::fishburn})
    for (Stat s : {Stat::first_row, Stat::ones}) {
      const auto a = compare(f, s, all, 20), b = compare(f, s, all, 40);
      EXPECT_LT(b.metrics.sup_distance, a.metrics.sup_distance) << to_string(f) << " " << to_string(s);
    }
}

TEST(LimitLaws, OddGapOneMeanTrend) {
  // Λ = 1 + z² + z³: the mean of (n - 2Z)/3 approaches τ√n from below with a bounded offset.
  const auto spec = LambdaSpec::parse("l:0,1,1");
  EXPECT_EQ(smallest_odd_gap(spec), 1);
  double previous = 0;
  for (int n : {50, 100, 150}) {
    const auto c = compare(Family::fishburn, Stat::twos, spec, n);
    const double ratio = c.table.mean.get_d() / d(c.prediction.law.law_mean());
    EXPECT_GT(ratio, previous) << n;
    EXPECT_LT(ratio, 1.0);
    previous = ratio;
  }
  EXPECT_GT(previous, 0.75);
}

TEST(LimitLaws, ParityReport) {
  const auto rep = parity_report(LambdaSpec::parse("l:0,1,0,1,1"), {30, 31, 60});
  EXPECT_EQ(rep.m, 2);
  ASSERT_EQ(rep.rows.size(), 3u);
  EXPECT_TRUE(rep.rows[0].even);
  EXPECT_FALSE(rep.rows[1].even);
  EXPECT_NEAR(d(rep.prediction_even.law.tau), M_PI * M_PI / 6, 1e-15);
  EXPECT_LT(rep.rows[2].metrics.total_variation, rep.rows[0].metrics.total_variation);
  EXPECT_THROW(parity_report(LambdaSpec::named(Tag::all), {10}), std::invalid_argument);
}

TEST(Distributions, JsonAndCsv) {
  const auto c = compare(Family::row_fishburn, Stat::first_row, LambdaSpec::named(Tag::all), 12);
  const auto j = nlohmann::json::parse(to_json(c));
  EXPECT_EQ(j["schema"], "fishburn.distribution/1");
  EXPECT_EQ(j["rows"].size(), c.table.support.size());
  EXPECT_EQ(j["law"]["kind"], "ztp");
  EXPECT_EQ(to_json(c), to_json(compare(Family::row_fishburn, Stat::first_row, LambdaSpec::named(Tag::all), 12)));
  const std::string csv = to_csv(c.table, c.prediction.law);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "value,exact,limit");
}

}  // namespace
}  // namespace fishburn::dist
