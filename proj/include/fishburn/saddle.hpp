#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fishburn::saddle {

struct SaddleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Li₂(x) = Σ x^k/k² for 0 <= x <= 1.
double dilog(double x);
// I(x) = ∫_0^x t/(1-e^{-t}) dt = x²/2 + Li₂(1 - e^{-x}).
double I_func(double x);
// x/(1-e^{-x}) and its first two derivatives, stable near 0.
double g0(double x);
double g1(double x);
double g2(double x);

// Σ_{j<=k} log(e^{jr}-1) by direct summation.
double log_product(long k, double r);
// Euler-Maclaurin approximation through the B₂ term; needs k r <= 2π - 0.1.
double em_log_product(long k, double r);

struct Constants {
  double mu, xi, sigma, tau_aux, xi1, xi2, xi3;
};
// Closed forms.
Constants central();

struct SaddleState {
  long n = 0, k = 0;
  double r = 0;
  double upsilon[3] = {0, 0, 0};  // r d/dr applied 1, 2, 3 times to log A_k at r
  double residual = 0;            // υ1 - n
  int iterations = 0;
  double k_minus = 0, k_plus = 0;
  double theta0 = 0;
};

// Window μn ± √2 σ n^{5/8}.
void window(long n, double& k_minus, double& k_plus);
// Integer k inside the window, clipped to [1, n-1].
void window_range(long n, long& first, long& last);

// Solves Σ_{j<=k} g0(j r) = n for r > 0; requires 1 <= k < n.
SaddleState solve_saddle(long n, long k);

struct LogValue {
  double log;
  int sign = 1;
};
// log of r^{-n} A_k(r) / sqrt(2π υ2) at the saddle; k must lie in the window.
LogValue ank_approx(long n, long k);
// Same without the window restriction.
LogValue ank_approx_any(long n, long k);
// Σ over the window, accumulated in log space in fixed order; approximates [z^n] Σ_k A_k(z).
LogValue an_approx(long n);

struct ProfileRow {
  long k;
  double log_approx;
  double r;
  double residual;
};
std::vector<ProfileRow> profile(long n);
std::string profile_csv(const std::vector<ProfileRow>& rows, const std::vector<double>& log_exact = {});

struct PhiEvaluation {
  double q, varrho, phi;
};
// Solves I(q ϱ) = ϱ for ϱ > 0; q in (0, 1).
PhiEvaluation phi_surface(double q);
// Maximises φ over q numerically; σ from the curvature, dϱ/dq at the optimum equals ξ₁.
struct Optimum {
  double mu, xi, phi_max, sigma, dvarrho_dq;
};
Optimum optimum();

struct BoundSample {
  double radius, theta;
  long k;  // 0: only the single-factor bound is checked
};
struct BoundsReport {
  long checked = 0;
  long violations = 0;
  double worst_ratio = 0;  // max of lhs/rhs
};
// Checks |e^z-1| <= (e^{|z|}-1) e^{-|z|θ²/π²} and |A_k(z)| <= A_k(|z|) e^{-k(k+1)|z|θ²/(2π²)}.
BoundsReport check_bounds(const std::vector<BoundSample>& samples);
std::vector<BoundSample> random_samples(std::size_t count, std::uint64_t seed);

// Extended prototype Σ_k e^{kz} Π_{j<=k} (e^{j z²}-1).
struct ExtSaddleState {
  long n = 0, k = 0;
  double r = 0, upsilon2 = 0, residual = 0;
};
ExtSaddleState solve_saddle_ext(long n, long k);
LogValue ank_approx_ext(long n, long k);
// Sums every k whose term exceeds e^{-40} times the largest; returns the k range used.
LogValue an_approx_ext(long n, long* k_first = nullptr, long* k_last = nullptr);

// log(Σ exp(x_i)) in the given order.
double log_sum_exp(const std::vector<double>& xs);

}  // namespace fishburn::saddle
