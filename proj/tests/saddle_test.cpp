#include <gtest/gtest.h>

#include <cmath>

#include "fishburn/families.hpp"
#include "fishburn/saddle.hpp"

namespace fishburn::saddle {
namespace {

double log_of(const mpz_class& z) {
  long e = 0;
  const double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(d) + double(e) * std::log(2.0);
}

// Exact [z^n] of each product Π_{j<=k}(e^{jz}-1), as logs, and of their sum.
struct Exact {
  int n;
  std::vector<double> log_k;
  double log_total;
  explicit Exact(int n_) : n(n_) {
    const auto products = a158690_products(n);
    mpz_class total = 0;
    for (const auto& p : products) {
      log_k.push_back(p[n] == 0 ? -INFINITY : log_of(p[n]) - std::lgamma(n + 1.0));
      total += p[n];
    }
    log_total = log_of(total) - std::lgamma(n + 1.0);
  }
};

TEST(Saddle, Dilogarithm) {
  const double l2 = std::log(2.0);
  EXPECT_NEAR(dilog(0.5), M_PI * M_PI / 12 - l2 * l2 / 2, 1e-14);
  EXPECT_NEAR(dilog(1.0), M_PI * M_PI / 6, 1e-14);
  EXPECT_NEAR(dilog(0.0), 0.0, 1e-16);
  // Euler reflection: Li₂(x) + Li₂(1-x) = π²/6 - log x log(1-x)
  for (double x : {0.1, 0.3, 0.77, 0.95})
    EXPECT_NEAR(dilog(x) + dilog(1 - x), M_PI * M_PI / 6 - std::log(x) * std::log(1 - x), 1e-13) << x;
}

TEST(Saddle, IntegralFunctionDerivative) {
  // I'(x) = x / (1 - e^{-x}), I(0) = 0
  EXPECT_NEAR(I_func(0.0), 0.0, 1e-15);
  for (double x : {0.01, 0.5, 1.0, 3.0, 6.0}) {
    const double h = 1e-5;
    EXPECT_NEAR((I_func(x + h) - I_func(x - h)) / (2 * h), x / (1 - std::exp(-x)), 1e-7) << x;
  }
}

TEST(Saddle, G0AndDerivatives) {
  for (double x : {1e-6, 1e-3, 0.4, 2.0, 8.0}) {
    EXPECT_NEAR(g0(x), x / -std::expm1(-x), 1e-12) << x;
    const double h = 1e-4;
    EXPECT_NEAR(g1(x), (g0(x + h) - g0(x - h)) / (2 * h), 1e-7) << x;
    EXPECT_NEAR(g2(x), (g1(x + h) - g1(x - h)) / (2 * h), 1e-7) << x;
  }
  EXPECT_NEAR(g0(0.0), 1.0, 1e-15);
  EXPECT_NEAR(g1(0.0), 0.5, 1e-15);
}

TEST(Saddle, EulerMaclaurinErrorShrinks) {
  double previous = INFINITY;
  for (long k : {1L, 10L, 50L, 200L}) {
    const double r = 0.5 / k;
    const double err = std::abs(em_log_product(k, r) - log_product(k, r));
    EXPECT_LT(err, previous / 10) << k;
    previous = err;
  }
  EXPECT_LT(previous, 1e-8);
  EXPECT_THROW(em_log_product(10, 0.7), std::domain_error);
}

TEST(Saddle, CentralConstants) {
  const auto c = central();
  const double l2 = std::log(2.0), p2 = M_PI * M_PI;
  EXPECT_NEAR(c.mu, 12 * l2 / p2, 1e-15);
  EXPECT_NEAR(c.xi, p2 / 12, 1e-15);
  EXPECT_NEAR(c.sigma, std::sqrt(6 * (24 * l2 * l2 - p2)) / p2, 1e-15);
}

TEST(Saddle, OptimumMatchesClosedForms) {
  const auto c = central();
  const auto o = optimum();
  EXPECT_NEAR(o.mu, c.mu, 1e-10);
  EXPECT_NEAR(o.xi, c.xi, 1e-10);
  EXPECT_NEAR(o.sigma, c.sigma, 1e-8);
  EXPECT_NEAR(std::exp(o.phi_max), 12 / (M_E * M_PI * M_PI), 1e-10);
  EXPECT_NEAR(o.dvarrho_dq, c.xi1, 1e-6);
  for (double q : {0.5, 0.7, 0.95}) EXPECT_LT(phi_surface(q).phi, o.phi_max) << q;
  EXPECT_THROW(phi_surface(1.0), std::exception);
}

TEST(Saddle, SolverResidualsInsideWindow) {
  for (long n : {50L, 100L, 200L}) {
    long first = 0, last = 0;
    window_range(n, first, last);
    double lo = 0, hi = 0;
    window(n, lo, hi);
    EXPECT_GE(double(first), std::floor(lo));
    EXPECT_LE(double(last), std::ceil(hi));
    for (long k = first; k <= last; ++k) {
      const auto s = solve_saddle(n, k);
      EXPECT_LE(std::abs(s.residual), 1e-9 * double(n)) << n << " " << k;
      // Σ g0(j r) = n is the defining equation.
      double sum = 0;
      for (long j = 1; j <= k; ++j) sum += g0(double(j) * s.r);
      EXPECT_NEAR(sum, double(n), 1e-8 * double(n));
    }
  }
  EXPECT_THROW(solve_saddle(10, 10), std::exception);
}

TEST(Saddle, SaddleRadiusScalesLikeXiOverN) {
  const auto c = central();
  const long n = 800;
  const auto s = solve_saddle(n, std::lround(c.mu * double(n)));
  EXPECT_NEAR(double(n) * s.r, c.xi, 0.01);
  EXPECT_NEAR(s.upsilon[1] / double(n), M_PI * M_PI * c.sigma * c.sigma / 6, 0.01);
}

TEST(Saddle, OffCentreArcExponent) {
  // k² r θ₀² / (2π²) = κ n^{1/4} with κ = 216 (log 2)² / π⁴ > 1
  const auto c = central();
  const long n = 800;
  const auto s = solve_saddle(n, std::lround(c.mu * double(n)));
  const double kappa = 216 * std::pow(std::log(2.0), 2) / std::pow(M_PI, 4);
  const double k = double(s.k);
  EXPECT_NEAR(k * k * s.r * s.theta0 * s.theta0 / (2 * M_PI * M_PI) / std::pow(double(n), 0.25), kappa, 0.02);
  EXPECT_GT(kappa, 1.0);
}

TEST(Saddle, CentralTermAgainstExact) {
  const auto c = central();
  for (int n : {100, 200}) {
    const Exact ex(n);
    const long k = std::lround(c.mu * n);
    const double ratio = std::exp(ex.log_k[std::size_t(k)] - ank_approx(n, k).log);
    EXPECT_NEAR(ratio, 1.0, 0.02) << n;
  }
}

TEST(Saddle, WindowSumAgainstExact) {
  const Exact ex(100);
  EXPECT_LE(std::abs(std::expm1(an_approx(100).log - ex.log_total)), 0.05);
  EXPECT_THROW(an_approx(10), std::exception);
}

TEST(Saddle, GaussianShape) {
  const auto c = central();
  const int n = 200;
  const Exact ex(n);
  const double mean = c.mu * n, sd = c.sigma * std::sqrt(double(n));
  for (int k = 1; k < n; ++k) {
    const double x = (k - mean) / sd;
    if (std::abs(x) > 2) continue;
    const double gauss = std::exp(-x * x / 2) / (sd * std::sqrt(2 * M_PI));
    EXPECT_NEAR(std::exp(ex.log_k[std::size_t(k)] - ex.log_total) / gauss, 1.0, 0.1) << k;
  }
}

TEST(Saddle, ProfileCsv) {
  const auto rows = profile(60);
  ASSERT_FALSE(rows.empty());
  const std::string csv = profile_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')).find("k,"), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), long(rows.size()) + 1);
}

TEST(Saddle, BoundsHoldOnRandomSamples) {
  const auto rep = check_bounds(random_samples(1000, 2024));
  EXPECT_GE(rep.checked, 1000);
  EXPECT_EQ(rep.violations, 0);
  EXPECT_LE(rep.worst_ratio, 1.0);
  // Deterministic for a fixed seed.
  const auto a = random_samples(10, 5), b = random_samples(10, 5);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].theta, b[i].theta);
}

TEST(Saddle, LogSumExp) {
  EXPECT_NEAR(log_sum_exp({std::log(2.0), std::log(3.0)}), std::log(5.0), 1e-15);
  EXPECT_NEAR(log_sum_exp({1000.0, 1000.0}), 1000.0 + std::log(2.0), 1e-12);
}

TEST(Saddle, ExtendedPrototypeAgainstExact) {
  // [z^n] Σ_k e^{kz} Π_{j<=k} (e^{j z²} - 1), computed exactly with rational series.
  const int n = 60;
  const std::function<TruncatedSeries(int)> d = [&](int k) { return exp_linear(k, n); };
  const std::function<TruncatedSeries(int)> f = [&](int j) { return exp_linear(j, n).dilate(2).add_constant(-1); };
  const TruncatedSeries s = sum_product<TruncatedSeries>(d, f, TruncatedSeries::one(n), 1);
  const double exact = std::log(s[n].get_d());
  long first = 0, last = 0;
  const double approx = an_approx_ext(n, &first, &last).log;
  EXPECT_LT(first, last);
  EXPECT_NEAR(std::exp(approx - exact), 1.0, 0.03);
}

}  // namespace
}  // namespace fishburn::saddle
