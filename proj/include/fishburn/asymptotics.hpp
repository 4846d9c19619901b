#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fishburn::asym {

using Real = boost::multiprecision::mpfr_float_50;

Real pi();
Real e();
Real log2();
Real gamma(const Real& x);
Real to_real(const mpz_class& z);
Real to_real(const mpq_class& q);
// Significant decimal digits on which a and b agree.
double agreeing_digits(const Real& a, const Real& b);

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Exponents for one parity class: c e^{β√n} ρ^{n/2} n^{n/2+θ}.
struct ParityBranch {
  Real c;
  Real n_power;
};

// c e^{β√n} ρ^{θ_n n} n^{g(n)} with θ_n = 1, g(n) = n + n_power, or, when half_exponent is
// set, θ_n = 1/2 and g(n) = n/2 + n_power.
struct AsymptoticForm {
  Real c;
  Real rho;
  Real beta = 0;
  Real n_power;
  bool half_exponent = false;
  bool bound_only = false;  // c vanishes because the Gamma factor has a pole
  std::optional<ParityBranch> even, odd;
  std::string source;

  // log of the form at n; parity branches are used when present.
  Real log_value(long n) const;
  Real value(long n) const;
  Real c_at(long n) const;
  Real n_power_at(long n) const;
};

struct CentralConstants {
  Real mu;      // (12/π²) log 2
  Real xi;      // π²/12
  Real sigma;   // π^{-2} sqrt(6(24 log²2 - π²))
  Real tau_aux; // 2 log²2 - π²/12
};
CentralConstants central();

// Sum-product framework with e'(0) = e1 ≠ 0.
AsymptoticForm constants_general(int alpha, const Real& omega, const Real& d1, const Real& e1,
                                 const Real& e2);
// Σ_k Π_{j<=k} (e^{(j+ω)z} - 1)^α.
AsymptoticForm constants_proto(int alpha, const Real& omega);
AsymptoticForm constants_row_fishburn(const Real& lambda1, const Real& lambda2);
AsymptoticForm constants_fishburn(const Real& lambda1, const Real& lambda2);
// Σ_k Π ((1+z)^{pj-s} - 1), 0 < s < p.
AsymptoticForm constants_fractional(const Real& p, const Real& s);
// r-Fishburn numbers Σ_k Π (1 - (1-z)^{rj}).
AsymptoticForm constants_r_fishburn(const Real& r);

// Framework with e1 = 0 and e2 > 0.
AsymptoticForm constants_ext(int alpha, const Real& omega, const Real& d1, const Real& d2,
                             const Real& e2, const Real& e3, const Real& e4);
// Σ_k e^{kz} Π (e^{(j+ω)z²} - 1)^α.
AsymptoticForm constants_ext_proto(int alpha, const Real& omega);
AsymptoticForm constants_self_dual(const Real& lambda1, const Real& lambda2);
// Fishburn matrices whose smallest nonzero entry is 2; lambda_odd = λ_{2m+1}.
AsymptoticForm constants_small2(const Real& lambda2, const Real& lambda3, const Real& lambda4,
                                const Real& lambda_odd, int m);

// Forms of every catalogued sequence with a known leading term; throws for unknown ids.
AsymptoticForm constants_for(const std::string& id);
std::vector<std::string> constants_ids();

// [z^n] of the prototype: c ρ^n n! (1 + Σ_{j<m} c_j / n^{(j)}) with falling factorials.
Real refined_a158690_coefficient(int j);
Real refined_a158690(long n, int m);
// Same sequence as c ρ^n n^{n+1/2} (1 + ν₁/n + ν₂/n²) with ν₁ = (24-π²)/288, ν₂ = ν₁²/2.
Real a158690_nu(int j);
Real a158690_nu_form(long n);
// Primitive row-Fishburn numbers: c ρ^n n! (1 + Σ_{j<m} c_j / n^j), m <= 4.
Real refined_blr_coefficient(int j);
Real refined_blr(long n, int m);

enum class CorrectionScale { inverse_n, inverse_sqrt_n };

struct ConvergenceReport {
  std::vector<long> n_values;
  std::vector<Real> ratios;
  Real extrapolated_limit;
  Real leading_correction;   // a in r_n = L + a h + b h², h = 1/n or 1/√n
  Real fitted_exponent;      // from |r_n - L| over the two largest n
  CorrectionScale scale = CorrectionScale::inverse_n;
};

// exact[n] is the n-th term; with factorial_scaled it holds n! a_n. Uses the three largest n
// for the extrapolation; the scale defaults to 1/√n for half-exponent forms.
ConvergenceReport ratio_sequence(const std::vector<mpz_class>& exact, const AsymptoticForm& form,
                                 const std::vector<long>& n_values,
                                 std::optional<CorrectionScale> scale = std::nullopt,
                                 bool factorial_scaled = false);
// Richardson fit of r = L + a h + b h² through three points.
void richardson3(const Real h[3], const Real r[3], Real& limit, Real& a);

}  // namespace fishburn::asym
