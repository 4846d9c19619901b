#include "fishburn/asymptotics.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <map>

namespace fishburn::asym {

namespace bmp = boost::multiprecision;

Real pi() { return boost::math::constants::pi<Real>(); }
Real e() { return boost::math::constants::e<Real>(); }
Real log2() { return boost::math::constants::ln_two<Real>(); }

Real gamma(const Real& x) {
  Real r;
  mpfr_gamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

namespace {
Real lgamma_real(const Real& x) {
  Real r;
  int sign = 0;
  mpfr_lgamma(r.backend().data(), &sign, x.backend().data(), MPFR_RNDN);
  return r;
}

bool gamma_pole(const Real& x) { return x <= 0 && bmp::floor(x) == x; }

Real sq(const Real& x) { return x * x; }
}  // namespace

Real to_real(const mpz_class& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real to_real(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

double agreeing_digits(const Real& a, const Real& b) {
  if (a == b) return 50.0;
  const Real scale = bmp::max(bmp::abs(a), bmp::abs(b));
  const Real rel = bmp::abs(a - b) / scale;
  return std::min(50.0, static_cast<double>(-bmp::log10(rel)));
}

// ---------------------------------------------------------------- AsymptoticForm

Real AsymptoticForm::c_at(long n) const {
  if (n % 2 == 0 && even) return even->c;
  if (n % 2 != 0 && odd) return odd->c;
  return c;
}

Real AsymptoticForm::n_power_at(long n) const {
  if (n % 2 == 0 && even) return even->n_power;
  if (n % 2 != 0 && odd) return odd->n_power;
  return n_power;
}

Real AsymptoticForm::log_value(long n) const {
  const Real cn = c_at(n);
  if (cn <= 0) throw DomainError("form has a vanishing constant and is a bound only");
  const Real N(n);
  const Real ln = bmp::log(N);
  if (half_exponent)
    return bmp::log(cn) + beta * bmp::sqrt(N) + N / 2 * bmp::log(rho) + (N / 2 + n_power_at(n)) * ln;
  return bmp::log(cn) + beta * bmp::sqrt(N) + N * bmp::log(rho) + (N + n_power_at(n)) * ln;
}

Real AsymptoticForm::value(long n) const { return bmp::exp(log_value(n)); }

CentralConstants central() {
  CentralConstants k;
  const Real p2 = sq(pi());
  k.mu = 12 / p2 * log2();
  k.xi = p2 / 12;
  k.sigma = bmp::sqrt(6 * (24 * sq(log2()) - p2)) / p2;
  k.tau_aux = 2 * sq(log2()) - p2 / 12;
  return k;
}

// ---------------------------------------------------------------- framework with e1 ≠ 0

AsymptoticForm constants_general(int alpha, const Real& omega, const Real& d1, const Real& e1,
                                 const Real& e2) {
  if (alpha < 1) throw DomainError("alpha must be a positive integer");
  if (e1 == 0) throw DomainError("e1 = 0: use the extended constants");
  const Real a(alpha), P = pi();
  AsymptoticForm f;
  f.rho = 12 * e1 / (e() * a * sq(P));
  f.n_power = a * (Real(1) / 2 + omega);
  f.source = "sum-product framework";
  if (gamma_pole(1 + omega)) {
    f.c = 0;
    f.bound_only = true;
    return f;
  }
  const Real inner = 2 * bmp::sqrt(Real(6)) / (bmp::sqrt(a * P) * gamma(1 + omega)) *
                     bmp::pow(12 / (a * sq(P)), omega);
  f.c = bmp::sqrt(Real(6)) / (a * P) * bmp::pow(inner, alpha) * bmp::pow(Real(2), d1 / e1) *
        bmp::exp(a * sq(P) / 12 * (e2 / sq(e1) - Real(1) / 2));
  return f;
}

AsymptoticForm constants_proto(int alpha, const Real& omega) {
  AsymptoticForm f = constants_general(alpha, omega, 0, 1, Real(1) / 2);
  f.source = "exponential prototype";
  return f;
}

AsymptoticForm constants_row_fishburn(const Real& lambda1, const Real& lambda2) {
  if (lambda1 <= 0) throw DomainError("lambda1 = 0: use the smallest-entry-2 constants");
  AsymptoticForm f = constants_general(1, 0, 0, lambda1, lambda2);
  f.source = "row-Fishburn corollary";
  return f;
}

AsymptoticForm constants_fishburn(const Real& lambda1, const Real& lambda2) {
  if (lambda1 <= 0) throw DomainError("lambda1 = 0: use the smallest-entry-2 constants");
  AsymptoticForm f = constants_general(2, 0, lambda1, lambda1, lambda2);
  f.source = "Fishburn corollary";
  return f;
}

AsymptoticForm constants_fractional(const Real& p, const Real& s) {
  if (!(s > 0 && s < p)) throw DomainError("fractional exponents need 0 < s < p");
  AsymptoticForm f = constants_general(1, -s / p, 0, p, p * (p - 1) / 2);
  f.source = "fractional exponent family";
  return f;
}

AsymptoticForm constants_r_fishburn(const Real& r) {
  if (r <= 0) throw DomainError("r must be positive");
  AsymptoticForm f = constants_fishburn(r, r * (r + 1) / 2);
  f.source = "r-Fishburn numbers";
  return f;
}

// ---------------------------------------------------------------- framework with e1 = 0

AsymptoticForm constants_ext(int alpha, const Real& omega, const Real& d1, const Real& d2,
                             const Real& e2, const Real& e3, const Real& e4) {
  if (alpha < 1) throw DomainError("alpha must be a positive integer");
  if (e2 <= 0) throw DomainError("the extended constants need e2 > 0");
  const Real a(alpha), P = pi(), L2 = log2();
  if (a * e3 * sq(P) + 12 * d1 * e2 * L2 <= 0)
    throw DomainError("beta vanishes; use the parity-aware smallest-entry-2 constants");
  AsymptoticForm f;
  f.half_exponent = true;
  f.beta = bmp::sqrt(Real(6)) * d1 * L2 / (bmp::sqrt(e2 * a) * P) +
           bmp::sqrt(a) * e3 * P / (2 * bmp::sqrt(Real(6)) * bmp::pow(e2, Real(3) / 2));
  f.rho = 6 * e2 / (e() * sq(P) * a);
  f.n_power = a / 2 + a * omega;
  f.source = "extended sum-product framework";
  if (gamma_pole(1 + omega)) {
    f.c = 0;
    f.bound_only = true;
    return f;
  }
  const Real inner = bmp::sqrt(12 / (a * P)) * bmp::pow(6 / (a * sq(P)), omega) / gamma(1 + omega);
  const Real two_power = -sq(d1) / (2 * e2) - 3 * d1 * e3 / (4 * sq(e2)) + d2 / e2;
  const Real exponent = -sq(d1) / (4 * a * e2) -
                        a * sq(P) / 12 * (7 * sq(e3) / (8 * e2 * e2 * e2) - e4 / sq(e2) + Real(1) / 2) +
                        3 * sq(d1) / (2 * e2 * a * sq(P)) * sq(L2);
  f.c = bmp::sqrt(Real(3)) / (bmp::sqrt(Real(2)) * a * P) * bmp::pow(inner, alpha) *
        bmp::pow(Real(2), two_power) * bmp::exp(exponent);
  return f;
}

AsymptoticForm constants_ext_proto(int alpha, const Real& omega) {
  // d = e^z, e = e^{z²}
  AsymptoticForm f = constants_ext(alpha, omega, 1, Real(1) / 2, 1, 0, Real(1) / 2);
  f.source = "extended exponential prototype";
  return f;
}

AsymptoticForm constants_self_dual(const Real& lambda1, const Real& lambda2) {
  if (lambda1 <= 0) throw DomainError("self-dual constants need lambda1 > 0");
  AsymptoticForm f = constants_ext(1, 0, lambda1, lambda2, lambda1, 0, lambda2);
  f.source = "self-dual corollary";
  return f;
}

AsymptoticForm constants_small2(const Real& lambda2, const Real& lambda3, const Real& lambda4,
                                const Real& lambda_odd, int m) {
  if (lambda2 <= 0) throw DomainError("smallest-entry-2 constants need lambda2 > 0");
  if (m < 1) throw DomainError("m must be at least 1");
  if (lambda_odd <= 0) throw DomainError("no odd entry: divide all entries by 2 and use the lambda1 > 0 case");
  if (m == 1) {
    AsymptoticForm f = constants_ext(2, 0, 0, lambda2, lambda2, lambda_odd, lambda4);
    f.source = "smallest entry 2, m = 1";
    return f;
  }
  const Real P = pi();
  AsymptoticForm f;
  f.half_exponent = true;
  f.rho = 3 * lambda2 / (e() * sq(P));
  f.beta = lambda3 * P / (2 * bmp::sqrt(Real(3)) * bmp::pow(lambda2, Real(3) / 2));
  const Real common = bmp::exp(sq(P) / 6 * (lambda4 / sq(lambda2) - Real(1) / 2));
  const Real c_even = 6 * bmp::sqrt(Real(6)) / sq(P) * common;
  const Real c_odd = bmp::sqrt(Real(2)) * bmp::pow(P, 2 * m - 3) / bmp::pow(Real(3), m - 2) * lambda_odd /
                     bmp::pow(lambda2, Real(m) + Real(1) / 2) * common;
  f.c = c_even;
  f.n_power = 1;
  f.even = ParityBranch{c_even, Real(1)};
  f.odd = ParityBranch{c_odd, Real(5) / 2 - m};
  f.source = "smallest entry 2, m >= 2, parity split";
  return f;
}

// ---------------------------------------------------------------- catalogue

namespace {

AsymptoticForm literal(const Real& c, const Real& rho, const Real& n_power, const std::string& src) {
  AsymptoticForm f;
  f.c = c;
  f.rho = rho;
  f.n_power = n_power;
  f.source = src;
  return f;
}

AsymptoticForm relabel(AsymptoticForm f, const std::string& src) {
  f.source = src;
  return f;
}

const std::map<std::string, AsymptoticForm (*)()>& table() {
  static const std::map<std::string, AsymptoticForm (*)()> t = {
      {"A022493", [] { return constants_fishburn(1, 1); }},
      {"A138265", [] { return constants_fishburn(1, 0); }},
      {"A289317", [] { return constants_fishburn(1, 0); }},
      {"A289312", [] { return constants_fishburn(2, 2); }},
      {"A079144", [] { return relabel(constants_general(2, 0, 1, 1, Real(1) / 2), "d = e = e^z, alpha = 2"); }},
      {"A207651", [] { return relabel(constants_fishburn(1, 1), "negligible partition product"); }},
      {"A179525", [] { return constants_row_fishburn(1, 0); }},
      {"A289316", [] { return constants_row_fishburn(1, 0); }},
      {"A207433", [] { return constants_row_fishburn(1, 1); }},
      {"A158691", [] { return constants_row_fishburn(1, 1); }},
      {"A289313", [] { return constants_row_fishburn(2, 2); }},
      {"A158690", [] { return constants_proto(1, 0); }},
      {"A196194", [] { return constants_general(1, 0, Real(-1) / 2, 1, Real(1) / 2); }},
      {"A207214", [] { return constants_general(1, 0, 1, 1, Real(1) / 2); }},
      {"A207386", [] { return constants_general(1, 0, 0, 1, 0); }},
      {"A207397", [] { return constants_general(1, 0, 0, 1, -1); }},
      {"A207556", [] { return constants_general(1, 0, 1, 1, 0); }},
      {"A207652", [] { return relabel(constants_row_fishburn(1, 0), "negligible partition product"); }},
      {"A207653", [] { return relabel(constants_row_fishburn(1, 1), "negligible partition product"); }},
      {"A207434",
       [] {
         AsymptoticForm f = constants_row_fishburn(1, 0);
         f.n_power = Real(3) / 2;
         f.source = "n times the primitive row-Fishburn count";
         return f;
       }},
      // e(z) = 1 + z f(z) and e(z) = f(z) after truncation: (e1, e2) = (1, 1) and (1, 2)
      {"A186737", [] { return relabel(constants_general(1, 0, 0, 1, 1), "recursive, e = 1 + z f"); }},
      {"A224885", [] { return relabel(constants_general(1, 0, 0, 1, 2), "recursive, e = f"); }},
      {"A035378",
       [] {
         const Real P = pi();
         return literal(48 * bmp::sqrt(Real(3)) / sq(P) * bmp::exp(sq(P) / 48), 24 / (e() * sq(P)), 1,
                        "paired grouping");
       }},
      {"A207557",
       [] {
         // [z^{n+1}] of Σ_{k>=1} (1+z)^{2k+1} Π ((1+z)^{2j-1}-1)²: d = e = (1+z)², ω = -1/2
         AsymptoticForm f0 = constants_general(2, Real(-1) / 2, 2, 2, 1);
         AsymptoticForm f = f0;
         f.c = f0.c * e() * f0.rho;
         f.n_power = f0.n_power + 1;
         f.source = "Rogers-Fine transform, index shift";
         return f;
       }},
      {"A215066", [] { return constants_general(1, Real(-1) / 2, 0, 2, 2); }},
      {"A209832", [] { return constants_general(1, Real(-1) / 2, 1, 2, 2); }},
      {"A214687", [] { return constants_general(1, Real(-1) / 2, 2, 2, 2); }},
      {"A207569", [] { return constants_fractional(2, 1); }},
      {"A207570", [] { return constants_fractional(3, 2); }},
      {"A207571", [] { return constants_fractional(3, 1); }},
      {"self-dual", [] { return constants_self_dual(1, 1); }},
      {"primitive-self-dual", [] { return constants_self_dual(1, 0); }},
      {"no-one", [] { return constants_small2(1, 1, 1, 1, 1); }},
  };
  return t;
}

}  // namespace

AsymptoticForm constants_for(const std::string& id) {
  auto it = table().find(id);
  if (it == table().end()) throw std::invalid_argument("no asymptotic form for " + id);
  return it->second();
}

std::vector<std::string> constants_ids() {
  std::vector<std::string> ids;
  for (const auto& [k, v] : table()) ids.push_back(k);
  return ids;
}

// ---------------------------------------------------------------- refined expansions

Real refined_a158690_coefficient(int j) {
  if (j < 1) throw std::invalid_argument("coefficient index starts at 1");
  Real c = 1;
  for (int i = 1; i <= j; ++i) c = c * (-sq(pi()) / 288) / i;
  return c;
}

Real refined_a158690(long n, int m) {
  if (m < 1 || n < m) throw std::invalid_argument("refined expansion needs n >= m >= 1");
  const Real P = pi();
  Real sum = 1, falling = 1;
  for (int j = 1; j < m; ++j) {
    falling *= Real(n - j + 1);
    sum += refined_a158690_coefficient(j) / falling;
  }
  const Real c = 6 * bmp::sqrt(Real(2)) / sq(P), rho = 12 / sq(P);
  return c * bmp::exp(Real(n) * bmp::log(rho) + lgamma_real(Real(n + 1))) * sum;
}

Real a158690_nu(int j) {
  const Real nu1 = (24 - sq(pi())) / 288;
  switch (j) {
    case 1: return nu1;
    case 2: return nu1 * nu1 / 2;
  }
  throw std::invalid_argument("only nu_1 and nu_2 are available");
}

Real a158690_nu_form(long n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const Real P = pi(), N = Real(n);
  const Real c = 12 / bmp::pow(P, Real("1.5")), rho = 12 / (bmp::exp(Real(1)) * sq(P));
  const Real sum = 1 + a158690_nu(1) / N + a158690_nu(2) / (N * N);
  return c * bmp::exp(N * bmp::log(rho) + (N + Real("0.5")) * bmp::log(N)) * sum;
}

Real refined_blr_coefficient(int j) {
  const Real p2 = sq(pi()), p4 = p2 * p2, p6 = p4 * p2, p8 = p4 * p4;
  switch (j) {
    case 1: return p2 * (p2 + 66) / 1728;
    case 2: return p4 * (p4 - 12 * p2 - 3420) / 5971968;
    case 3:
      return -p4 * (95 * p8 + 9360 * p6 - 232416 * p4 - 27051840 * p2 + Real(709171200)) /
             Real("1238347284480");
  }
  throw std::invalid_argument("only c_1, c_2, c_3 are available");
}

Real refined_blr(long n, int m) {
  if (m < 1 || m > 4 || n < 1) throw std::invalid_argument("refined expansion needs 1 <= m <= 4, n >= 1");
  const Real P = pi();
  Real sum = 1;
  for (int j = 1; j < m; ++j) sum += refined_blr_coefficient(j) / bmp::pow(Real(n), j);
  const Real c = 6 * bmp::sqrt(Real(2)) / sq(P) * bmp::exp(-sq(P) / 24), rho = 12 / sq(P);
  return c * bmp::exp(Real(n) * bmp::log(rho) + lgamma_real(Real(n + 1))) * sum;
}

// ---------------------------------------------------------------- convergence

void richardson3(const Real h[3], const Real r[3], Real& limit, Real& a) {
  // Solve r_i = L + a h_i + b h_i² by divided differences.
  const Real d01 = (r[1] - r[0]) / (h[1] - h[0]);
  const Real d12 = (r[2] - r[1]) / (h[2] - h[1]);
  const Real b = (d12 - d01) / (h[2] - h[0]);
  a = d01 - b * (h[0] + h[1]);
  limit = r[0] - a * h[0] - b * h[0] * h[0];
}

ConvergenceReport ratio_sequence(const std::vector<mpz_class>& exact, const AsymptoticForm& form,
                                 const std::vector<long>& n_values, std::optional<CorrectionScale> scale,
                                 bool factorial_scaled) {
  if (n_values.size() < 3) throw std::invalid_argument("extrapolation needs at least three n values");
  ConvergenceReport rep;
  rep.n_values = n_values;
  rep.scale = scale.value_or(form.half_exponent ? CorrectionScale::inverse_sqrt_n : CorrectionScale::inverse_n);
  for (long n : n_values) {
    if (n < 1 || std::size_t(n) >= exact.size()) throw std::invalid_argument("n outside the exact range");
    if (sgn(exact[std::size_t(n)]) <= 0) throw std::invalid_argument("nonpositive coefficient at n = " + std::to_string(n));
    Real la = bmp::log(to_real(exact[std::size_t(n)]));
    if (factorial_scaled) la -= lgamma_real(Real(n + 1));
    rep.ratios.push_back(bmp::exp(la - form.log_value(n)));
  }
  std::vector<std::size_t> idx(n_values.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return n_values[x] < n_values[y]; });
  Real h[3], r[3];
  long ns[3];
  for (int i = 0; i < 3; ++i) {
    const std::size_t k = idx[idx.size() - 3 + i];
    ns[i] = n_values[k];
    h[i] = rep.scale == CorrectionScale::inverse_n ? Real(1) / ns[i] : 1 / bmp::sqrt(Real(ns[i]));
    r[i] = rep.ratios[k];
  }
  richardson3(h, r, rep.extrapolated_limit, rep.leading_correction);
  const Real g1 = bmp::abs(r[1] - rep.extrapolated_limit), g2 = bmp::abs(r[2] - rep.extrapolated_limit);
  rep.fitted_exponent = (g1 > 0 && g2 > 0) ? bmp::log(g1 / g2) / bmp::log(Real(ns[2]) / ns[1]) : Real(0);
  return rep;
}

}  // namespace fishburn::asym
