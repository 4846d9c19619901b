#include <gtest/gtest.h>

#include <cmath>

#include "fishburn/asymptotics.hpp"
#include "fishburn/families.hpp"

namespace fishburn::asym {
namespace {

namespace bmp = boost::multiprecision;

const long double kPi = 3.141592653589793238462643383279502884L;
const long double kE = 2.718281828459045235360287471352662498L;
const long double kLog2 = 0.693147180559945309417232121458176568L;

void expect_close(const Real& got, long double want, long double rel = 1e-15L) {
  EXPECT_NEAR(static_cast<long double>(got) / want, 1.0L, rel) << got << " vs " << double(want);
}

mpz_class to_mpz(const Real& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDN);
  return z;
}

TEST(Constants, MathematicalConstants) {
  expect_close(pi(), kPi);
  expect_close(e(), kE);
  expect_close(log2(), kLog2);
  expect_close(gamma(Real(5)), 24);
  expect_close(gamma(Real(1) / 2), std::sqrt(kPi));
  EXPECT_EQ(to_real(mpq_class(3, 4)), Real("0.75"));
}

TEST(Constants, AgreeingDigits) {
  EXPECT_NEAR(agreeing_digits(Real(1), Real("1.000001")), 6, 0.01);
  EXPECT_EQ(agreeing_digits(Real(2), Real(2)), 50);
}

TEST(Constants, CentralConstants) {
  const auto c = central();
  expect_close(c.mu, 12 * kLog2 / (kPi * kPi));
  expect_close(c.xi, kPi * kPi / 12);
  expect_close(c.sigma, std::sqrt(6 * (24 * kLog2 * kLog2 - kPi * kPi)) / (kPi * kPi));
  expect_close(c.tau_aux, 2 * kLog2 * kLog2 - kPi * kPi / 12);
}

TEST(Constants, ZagierPair) {
  const auto f = constants_fishburn(1, 1);
  expect_close(f.c, 12 * std::sqrt(6.0L) / (kPi * kPi) * std::exp(kPi * kPi / 12));
  expect_close(f.rho, 6 / (kE * kPi * kPi));
  EXPECT_EQ(f.n_power, 1);
  EXPECT_FALSE(f.half_exponent);
}

TEST(Constants, RowFishburnCorollary) {
  for (auto [l1, l2] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 2}, std::pair{3, 7}}) {
    const auto f = constants_row_fishburn(l1, l2);
    const long double a = l1, b = l2;
    expect_close(f.c, 12 / std::pow(kPi, 1.5L) * std::exp(kPi * kPi / 12 * (b / (a * a) - 0.5L)));
    expect_close(f.rho, 12 * a / (kE * kPi * kPi));
    EXPECT_EQ(f.n_power, Real(1) / 2);
  }
}

TEST(Constants, GeneralFrameworkPoleGivesBoundOnly) {
  EXPECT_TRUE(constants_general(1, -1, 0, 1, Real(1) / 2).bound_only);
  EXPECT_FALSE(constants_general(1, 0, 0, 1, Real(1) / 2).bound_only);
}

TEST(Constants, FractionalFamily) {
  const auto f = constants_fractional(3, 1);
  const long double w = 1.0L / 3;
  expect_close(f.c, std::sqrt(kPi) / std::tgamma(1 - w) * std::pow(kPi * kPi / 12, w - 1) * std::exp(-kPi * kPi / 72));
  expect_close(f.rho, 36 / (kE * kPi * kPi));
  EXPECT_NEAR(double(f.n_power), 0.5 - 1.0 / 3, 1e-15);
}

TEST(Constants, ExtensionFramework) {
  const auto s = constants_self_dual(1, 1);
  expect_close(s.c, 6 / std::pow(kPi, 1.5L) * std::exp(kPi * kPi / 24 - 0.25L + 1.5L * kLog2 * kLog2 / (kPi * kPi)));
  expect_close(s.beta, std::sqrt(6.0L) * kLog2 / kPi);
  expect_close(s.rho, 6 / (kE * kPi * kPi));
  EXPECT_TRUE(s.half_exponent);
  // d1 = e3 = 0 violates the positivity condition.
  EXPECT_THROW(constants_ext(1, 0, 0, 0, 1, 0, 0), DomainError);
}

TEST(Constants, SmallestEntryTwoParity) {
  const auto f = constants_small2(1, 0, 1, 1, 2);
  ASSERT_TRUE(f.even.has_value());
  ASSERT_TRUE(f.odd.has_value());
  EXPECT_EQ(f.beta, 0);
  EXPECT_NE(f.c_at(10), f.c_at(11));
  EXPECT_EQ(f.n_power_at(10), f.even->n_power);
  EXPECT_EQ(f.n_power_at(11), f.odd->n_power);
  const auto no1 = constants_small2(1, 1, 1, 1, 1);
  expect_close(no1.beta, kPi / (2 * std::sqrt(3.0L)));
}

TEST(Constants, LogValueMatchesDirectEvaluation) {
  const auto f = constants_fishburn(1, 1);
  for (long n : {10L, 57L, 300L}) {
    const Real direct = bmp::log(f.c) + n * bmp::log(f.rho) + (n + 1) * bmp::log(Real(n));
    EXPECT_LT(bmp::abs(f.log_value(n) - direct), Real("1e-40"));
  }
  const auto s = constants_self_dual(1, 1);
  const long n = 40;
  const Real direct = bmp::log(s.c) + s.beta * bmp::sqrt(Real(n)) + Real(n) / 2 * bmp::log(s.rho) +
                      (Real(n) / 2 + s.n_power) * bmp::log(Real(n));
  EXPECT_LT(bmp::abs(s.log_value(n) - direct), Real("1e-40"));
  EXPECT_LT(bmp::abs(bmp::log(s.value(n)) - direct), Real("1e-40"));
}

TEST(Constants, EveryCatalogueIdHasAForm) {
  for (const auto& id : constants_ids()) {
    const auto f = constants_for(id);
    EXPECT_GT(f.rho, 0) << id;
  }
  EXPECT_THROW(constants_for("A000001"), std::exception);
}

TEST(Constants, RefinedCoefficients) {
  expect_close(refined_a158690_coefficient(1), -kPi * kPi / 288);
  expect_close(refined_a158690_coefficient(2), kPi * kPi * kPi * kPi / (288 * 288 * 2));
  const long double p2 = kPi * kPi;
  expect_close(refined_blr_coefficient(1), p2 * (p2 + 66) / 1728);
  expect_close(refined_blr_coefficient(2), p2 * p2 * (p2 * p2 - 12 * p2 - 3420) / 5971968);
  EXPECT_NEAR(double(refined_blr_coefficient(3)), -0.0337801, 1e-6);
  EXPECT_THROW(refined_blr_coefficient(4), std::invalid_argument);
}

TEST(Constants, RefinedExpansionApproachesExactTerms) {
  const auto a = catalog_terms("A158690", 61);
  double previous = 1;
  for (int n : {20, 40, 60}) {
    const Real exact = to_real(a[std::size_t(n)]) / to_real(factorial(n));
    const double err = double(bmp::abs(refined_a158690(n, 3) / exact - 1));
    EXPECT_LT(err, previous);
    previous = err;
  }
  EXPECT_LT(previous, 1e-9);
  const auto b = catalog_terms("A179525", 61);
  EXPECT_LT(double(bmp::abs(refined_blr(60, 4) / to_real(b[60]) - 1)), 1e-5);
}

TEST(Constants, SuperexponentialFormOfThePrototype) {
  const long double nu1 = (24 - kPi * kPi) / 288;
  expect_close(a158690_nu(1), nu1);
  expect_close(a158690_nu(2), nu1 * nu1 / 2);
  EXPECT_THROW(a158690_nu(3), std::invalid_argument);
  const auto a = catalog_terms("A158690", 61);
  double previous = 1;
  for (int n : {20, 40, 60}) {
    const Real exact = to_real(a[std::size_t(n)]) / to_real(factorial(n));
    const double err = double(bmp::abs(a158690_nu_form(n) / exact - 1));
    EXPECT_LT(err, previous);
    // O(n^-3) remainder
    EXPECT_LT(err * n * n * n, 0.01) << n;
    previous = err;
  }
}

TEST(Constants, RichardsonRecoversQuadraticModel) {
  const Real h[3] = {Real(1) / 100, Real(1) / 150, Real(1) / 200};
  Real r[3];
  for (int i = 0; i < 3; ++i) r[i] = 2 + 3 * h[i] - 5 * h[i] * h[i];
  Real limit, a;
  richardson3(h, r, limit, a);
  EXPECT_LT(bmp::abs(limit - 2), Real("1e-40"));
  EXPECT_LT(bmp::abs(a - 3), Real("1e-38"));
}

TEST(Constants, RatioSequenceOnSyntheticTerms) {
  // exact = form (1 + 2/n) gives limit 1, correction 2 and exponent 1.
  const auto f = constants_fishburn(1, 1);
  std::vector<mpz_class> exact(401);
  for (long n = 1; n <= 400; ++n) exact[std::size_t(n)] = to_mpz(f.value(n) * (1 + Real(2) / n));
  const auto rep = ratio_sequence(exact, f, {200, 300, 400}, CorrectionScale::inverse_n);
  EXPECT_LT(bmp::abs(rep.extrapolated_limit - 1), Real("1e-30"));
  EXPECT_LT(bmp::abs(rep.leading_correction - 2), Real("1e-25"));
}

TEST(Constants, FishburnRatiosApproachOne) {
  const IntSeries s = fishburn_gf(LambdaSpec::named(LambdaSpec::Tag::all), 120);
  const std::vector<mpz_class> exact(s.coeffs().begin(), s.coeffs().end());
  const auto rep = ratio_sequence(exact, constants_for("A022493"), {60, 90, 120});
  EXPECT_LT(bmp::abs(rep.extrapolated_limit - 1), Real("1e-3"));
  EXPECT_NEAR(double(rep.fitted_exponent), 1.0, 0.2);
}

}  // namespace
}  // namespace fishburn::asym
