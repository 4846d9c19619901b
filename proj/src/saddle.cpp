#include "fishburn/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace fishburn::saddle {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLog2 = std::numbers::ln2;
}  // namespace

double dilog(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("dilog needs 0 <= x <= 1");
  if (x == 1.0) return kPi * kPi / 6;
  if (x > 0.5) return kPi * kPi / 6 - std::log(x) * std::log1p(-x) - dilog(1.0 - x);
  double sum = 0, p = x;
  for (int k = 1; k < 200 && p > 1e-18; ++k, p *= x) sum += p / (double(k) * k);
  return sum;
}

double I_func(double x) {
  if (x < 0) throw std::domain_error("I needs x >= 0");
  return x * x / 2 + dilog(-std::expm1(-x));
}

double g0(double x) {
  if (std::abs(x) < 1e-4) return 1 + x / 2 + x * x / 12;
  return x / -std::expm1(-x);
}

double g1(double x) {
  if (std::abs(x) < 1e-3) return 0.5 + x / 6 - x * x * x / 180;
  const double u = std::exp(-x), d = -std::expm1(-x);
  return (d - x * u) / (d * d);
}

double g2(double x) {
  if (std::abs(x) < 1e-2) return 1.0 / 6 - x * x / 60 + x * x * x * x / 2016;
  const double u = std::exp(-x), d = -std::expm1(-x);
  return u * (x * d - 2 * d + 2 * x * u) / (d * d * d);
}

double log_product(long k, double r) {
  if (k < 1 || !(r > 0)) throw std::domain_error("log_product needs k >= 1, r > 0");
  double s = 0;
  for (long j = 1; j <= k; ++j) s += std::log(std::expm1(double(j) * r));
  return s;
}

double em_log_product(long k, double r) {
  if (k < 1 || !(r > 0)) throw std::domain_error("em_log_product needs k >= 1, r > 0");
  const double kr = double(k) * r;
  if (kr > 2 * kPi - 0.1) throw std::domain_error("k r exceeds the Euler-Maclaurin range");
  const double em1 = std::expm1(kr);
  return double(k) * std::log(em1) - I_func(kr) / r + 0.5 * std::log(2 * kPi * em1 / r) +
         r * (em1 + 2) / (24 * em1);
}

Constants central() {
  Constants c;
  const double p2 = kPi * kPi, p4 = p2 * p2, p6 = p4 * p2, l2 = kLog2;
  c.mu = 12 * l2 / p2;
  c.xi = p2 / 12;
  c.sigma = std::sqrt(6 * (24 * l2 * l2 - p2)) / p2;
  const double t = 2 * l2 * l2 - p2 / 12;
  c.tau_aux = t;
  c.xi1 = -p4 * l2 / (72 * t);
  c.xi2 = -p4 * (2 * l2 - 1) / (288 * t);
  c.xi3 = p6 * (288 * t * t + l2 * p4 + 24 * p2 * t - p4) / (248832 * t * t * t);
  return c;
}

void window(long n, double& k_minus, double& k_plus) {
  const Constants c = central();
  const double half = std::sqrt(2.0) * c.sigma * std::pow(double(n), 0.625);
  k_minus = c.mu * double(n) - half;
  k_plus = c.mu * double(n) + half;
}

void window_range(long n, long& first, long& last) {
  double lo, hi;
  window(n, lo, hi);
  first = std::max(1L, long(std::ceil(lo)));
  last = std::min(n - 1, long(std::floor(hi)));
}

namespace {

// Safeguarded Newton on an increasing function with f(lo) < 0 < f(hi).
template <class F, class DF>
double monotone_root(F f, DF df, double lo, double hi, double x, double tol, int& iterations) {
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
  for (iterations = 1; iterations <= 200; ++iterations) {
    const double fx = f(x);
    if (std::abs(fx) <= tol) return x;
    (fx < 0 ? lo : hi) = x;
    double next = x - fx / df(x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi) return next;
    x = next;
  }
  throw SaddleError("root finder did not converge in 200 iterations");
}

double upsilon1(long k, double r) {
  double s = 0;
  for (long j = 1; j <= k; ++j) s += g0(double(j) * r);
  return s;
}

double upsilon1_prime(long k, double r) {
  double s = 0;
  for (long j = 1; j <= k; ++j) s += double(j) * g1(double(j) * r);
  return s;
}

}  // namespace

SaddleState solve_saddle(long n, long k) {
  if (!(k >= 1 && k < n)) throw std::domain_error("solve_saddle needs 1 <= k < n");
  SaddleState st;
  st.n = n;
  st.k = k;
  const double N = double(n);
  double lo = 1e-15, hi = 2 * kPi / double(k) - 1e-9;
  while (upsilon1(k, hi) < N) hi *= 2;
  double guess = 0;
  try {
    guess = phi_surface(double(k) / N).varrho / N;
  } catch (const std::exception&) {
    guess = 0;
  }
  auto f = [&](double r) { return upsilon1(k, r) - N; };
  auto df = [&](double r) { return upsilon1_prime(k, r); };
  st.r = monotone_root(f, df, lo, hi, guess, 1e-12 * N, st.iterations);
  st.residual = f(st.r);
  if (std::abs(st.residual) > 1e-9 * N) throw SaddleError("saddle residual above 1e-9 n");
  double u2 = 0, u3 = 0;
  for (long j = 1; j <= k; ++j) {
    const double x = double(j) * st.r;
    const double a = x * g1(x);
    u2 += a;
    u3 += a + x * x * g2(x);
  }
  st.upsilon[0] = st.residual + N;
  st.upsilon[1] = u2;
  st.upsilon[2] = u3;
  window(n, st.k_minus, st.k_plus);
  st.theta0 = 6 * std::pow(N, -0.375);
  return st;
}

LogValue ank_approx_any(long n, long k) {
  const SaddleState st = solve_saddle(n, k);
  return {-double(n) * std::log(st.r) + log_product(k, st.r) - 0.5 * std::log(2 * kPi * st.upsilon[1]), 1};
}

LogValue ank_approx(long n, long k) {
  long first, last;
  window_range(n, first, last);
  if (k < first || k > last) throw std::domain_error("k outside the central window");
  return ank_approx_any(n, k);
}

double log_sum_exp(const std::vector<double>& xs) {
  if (xs.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(xs.begin(), xs.end());
  double s = 0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

LogValue an_approx(long n) {
  if (n < 20) throw std::domain_error("an_approx needs n >= 20");
  long first, last;
  window_range(n, first, last);
  std::vector<double> logs;
  for (long k = first; k <= last; ++k) logs.push_back(ank_approx_any(n, k).log);
  return {log_sum_exp(logs), 1};
}

std::vector<ProfileRow> profile(long n) {
  long first, last;
  window_range(n, first, last);
  std::vector<ProfileRow> rows;
  for (long k = first; k <= last; ++k) {
    const SaddleState st = solve_saddle(n, k);
    rows.push_back({k, ank_approx_any(n, k).log, st.r, st.residual});
  }
  return rows;
}

std::string profile_csv(const std::vector<ProfileRow>& rows, const std::vector<double>& log_exact) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << "k,log_approx" << (log_exact.empty() ? "" : ",log_exact") << ",r,residual\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << rows[i].k << ',' << rows[i].log_approx;
    if (!log_exact.empty()) out << ',' << log_exact.at(i);
    out << ',' << rows[i].r << ',' << rows[i].residual << '\n';
  }
  return out.str();
}

PhiEvaluation phi_surface(double q) {
  if (!(q > 0 && q < 1)) throw std::domain_error("phi_surface needs 0 < q < 1");
  auto h = [q](double v) { return I_func(q * v) - v; };
  auto dh = [q](double v) { return q * g0(q * v) - 1; };
  double lo = std::min(1e-6, 2 * (1 - q) / (q * q));
  if (!(h(lo) < 0)) throw std::domain_error("phi_surface: no bracketing interval");
  double hi = 1;
  while (h(hi) <= 0) hi *= 2;
  int it = 0;
  // Start right of the convex minimum so Newton approaches from above.
  const double v = monotone_root(h, dh, lo, hi, hi, 1e-15, it);
  PhiEvaluation e;
  e.q = q;
  e.varrho = v;
  e.phi = -std::log(v) + q * std::log(std::expm1(q * v)) - 1;
  return e;
}

Optimum optimum() {
  // dφ/dq = log(e^{qϱ(q)} - 1), decreasing in q.
  auto slope = [](double q) { return std::log(std::expm1(q * phi_surface(q).varrho)); };
  double lo = 0.05, hi = 0.999;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) > 0 ? lo : hi) = mid;
  }
  Optimum o;
  o.mu = 0.5 * (lo + hi);
  const PhiEvaluation e = phi_surface(o.mu);
  o.xi = e.varrho;
  o.phi_max = e.phi;
  const double x = o.mu * o.xi, g = g0(x);
  o.dvarrho_dq = g * o.xi / (1 - o.mu * g);
  // φ'' = e^x/(e^x-1) (ϱ + q ϱ'), σ² = -1/φ''.
  const double second = std::exp(x) / std::expm1(x) * (o.xi + o.mu * o.dvarrho_dq);
  o.sigma = std::sqrt(-1 / second);
  return o;
}

BoundsReport check_bounds(const std::vector<BoundSample>& samples) {
  BoundsReport rep;
  auto log_abs_em1 = [](std::complex<double> z) {
    const double re = std::expm1(z.real()) * std::cos(z.imag()) - 2 * std::pow(std::sin(z.imag() / 2), 2);
    const double im = std::exp(z.real()) * std::sin(z.imag());
    return 0.5 * std::log(re * re + im * im);
  };
  for (const auto& s : samples) {
    const std::complex<double> z = std::polar(s.radius, s.theta);
    const double t2 = s.theta * s.theta;
    double lhs = log_abs_em1(z);
    double rhs = std::log(std::expm1(s.radius)) - s.radius * t2 / (kPi * kPi);
    ++rep.checked;
    rep.worst_ratio = std::max(rep.worst_ratio, std::exp(lhs - rhs));
    if (lhs > rhs + 1e-12) ++rep.violations;
    if (s.k >= 1) {
      lhs = 0;
      rhs = 0;
      for (long j = 1; j <= s.k; ++j) {
        lhs += log_abs_em1(double(j) * z);
        rhs += std::log(std::expm1(double(j) * s.radius));
      }
      rhs -= double(s.k) * double(s.k + 1) * s.radius * t2 / (2 * kPi * kPi);
      ++rep.checked;
      rep.worst_ratio = std::max(rep.worst_ratio, std::exp(lhs - rhs));
      if (lhs > rhs + 1e-10 * std::max(1.0, std::abs(rhs))) ++rep.violations;
    }
  }
  return rep;
}

std::vector<BoundSample> random_samples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> radius(1e-3, 4.0), theta(-kPi, kPi);
  std::uniform_int_distribution<long> k(0, 60);
  std::vector<BoundSample> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back({radius(gen), theta(gen), k(gen)});
  return out;
}

ExtSaddleState solve_saddle_ext(long n, long k) {
  if (!(k >= 1 && 2 * k < n)) throw std::domain_error("extended saddle needs 1 <= k < n/2");
  const double N = double(n);
  auto u1 = [k](double r) {
    double s = double(k) * r;
    for (long j = 1; j <= k; ++j) s += 2 * g0(double(j) * r * r);
    return s;
  };
  auto du1 = [k](double r) {
    double s = double(k);
    for (long j = 1; j <= k; ++j) s += 4 * double(j) * r * g1(double(j) * r * r);
    return s;
  };
  double hi = 1;
  while (u1(hi) < N) hi *= 2;
  ExtSaddleState st;
  st.n = n;
  st.k = k;
  int it = 0;
  st.r = monotone_root([&](double r) { return u1(r) - N; }, du1, 1e-15, hi, 0.5 * hi, 1e-12 * N, it);
  st.residual = u1(st.r) - N;
  if (std::abs(st.residual) > 1e-9 * N) throw SaddleError("saddle residual above 1e-9 n");
  st.upsilon2 = st.r * du1(st.r);
  return st;
}

LogValue ank_approx_ext(long n, long k) {
  const ExtSaddleState st = solve_saddle_ext(n, k);
  double lp = double(k) * st.r;
  for (long j = 1; j <= k; ++j) lp += std::log(std::expm1(double(j) * st.r * st.r));
  return {-double(n) * std::log(st.r) + lp - 0.5 * std::log(2 * kPi * st.upsilon2), 1};
}

LogValue an_approx_ext(long n, long* k_first, long* k_last) {
  if (n < 5) throw std::domain_error("an_approx_ext needs n >= 5");
  std::vector<double> logs;
  for (long k = 1; 2 * k < n; ++k) logs.push_back(ank_approx_ext(n, k).log);
  const double m = *std::max_element(logs.begin(), logs.end());
  std::vector<double> kept;
  long first = -1, last = -1;
  for (std::size_t i = 0; i < logs.size(); ++i)
    if (logs[i] >= m - 40) {
      kept.push_back(logs[i]);
      if (first < 0) first = long(i) + 1;
      last = long(i) + 1;
    }
  if (k_first) *k_first = first;
  if (k_last) *k_last = last;
  return {log_sum_exp(kept), 1};
}

}  // namespace fishburn::saddle
