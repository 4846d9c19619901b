#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "fishburn/asymptotics.hpp"
#include "fishburn/families.hpp"

namespace fishburn::dist {

using Real = asym::Real;

struct UncoveredRegime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact law of a statistic at fixed n, possibly after an affine change of variable.
struct DistributionTable {
  Family family = Family::fishburn;
  Stat stat = Stat::first_row;
  std::string lambda;
  int n = 0;
  std::string variable = "X";     // e.g. "(n-Z)/2"
  std::vector<mpq_class> support;  // increasing
  std::vector<mpz_class> counts;   // matrices (with weights) per support value
  std::vector<mpq_class> pmf;
  mpz_class total;
  mpq_class mean, variance;

  mpq_class probability(const mpq_class& x) const;
};

// Normalised coefficient of z^n in the bivariate generating function; throws
// std::domain_error when there are no matrices of size n.
DistributionTable distribution(Family f, Stat s, const LambdaSpec& spec, int n);
// Value x becomes scale x + shift.
DistributionTable affine(const DistributionTable& t, const mpq_class& scale, const mpq_class& shift,
                         const std::string& variable);

// Mean and variance from the w = v-1 jet, cheaper than the full table.
struct Moments {
  int n = 0;
  mpz_class total;
  mpq_class mean, variance;
};
Moments moments(Family f, Stat s, const LambdaSpec& spec, int n);
// Moments of scale X + shift.
Moments affine(const Moments& m, const mpq_class& scale, const mpq_class& shift);

enum class LawKind { ztp, poisson, normal, degenerate, convolution };
std::string to_string(LawKind k);

struct PoissonComponent {
  long multiplier;  // the law of multiplier * Poisson(rate)
  Real rate;
};

struct LimitLaw {
  LawKind kind = LawKind::degenerate;
  Real tau;             // ztp and poisson
  Real mean, variance;  // normal
  mpq_class point;      // degenerate
  std::vector<PoissonComponent> components;
  std::string description;

  static LimitLaw ztp(const Real& tau);
  static LimitLaw poisson(const Real& tau);
  static LimitLaw normal(const Real& mean, const Real& variance);
  static LimitLaw degenerate(const mpq_class& point);
  static LimitLaw convolution(std::vector<PoissonComponent> components);

  bool lattice() const { return kind != LawKind::normal; }
  // Point mass of a lattice law; zero off the lattice.
  Real pmf(const mpq_class& x) const;
  // Lattice points carrying all but 1e-12 of the mass (1e-15 for single Poisson laws).
  std::vector<std::pair<long, Real>> pmf_table() const;
  Real cdf(const Real& x) const;  // normal only
  Real law_mean() const;
  Real law_variance() const;
};

// The predicted law applies to T = scale * statistic + shift.
struct Prediction {
  LimitLaw law;
  mpq_class scale = 1, shift = 0;
  std::string variable = "X";
};
// Known limit laws for each family, statistic and Λ; throws UncoveredRegime elsewhere.
Prediction limit_law_for(Family f, Stat s, const LambdaSpec& spec, int n);

struct Metrics {
  Real sup_distance, total_variation, mean_gap, variance_gap;
  Real deficiency = 0;  // 1 - P(T = point) for degenerate laws
};
// Lattice laws compare point masses; normal laws are binned on cells between midpoints of
// consecutive support values, the outer cells extending to infinity.
Metrics compare(const DistributionTable& t, const LimitLaw& law);
// distribution + limit_law_for + affine + compare.
struct Comparison {
  DistributionTable table;  // transformed
  Prediction prediction;
  Metrics metrics;
};
Comparison compare(Family f, Stat s, const LambdaSpec& spec, int n);

// Per-value columns: value, exact pmf, limit mass (normal: bin mass).
std::string to_csv(const DistributionTable& t, const LimitLaw& law);
std::string to_json(const Comparison& c);

// Λ with λ1 = 0 and λ2 > 0: m is the smallest i >= 1 with λ_{2i+1} > 0, or 0 when no odd
// entry is allowed.
int smallest_odd_gap(const LambdaSpec& spec);

struct ParityRow {
  int n = 0;
  bool even = true;
  Metrics metrics;            // transformed number of 2s against the predicted law
  mpq_class mean;             // of the transformed variable
  Real predicted_mean;
};
struct ParityReport {
  int m = 0;
  Prediction prediction_even, prediction_odd;
  std::vector<ParityRow> rows;
};
// Fishburn matrices with smallest entry 2, number of 2s, for each n.
ParityReport parity_report(const LambdaSpec& spec, const std::vector<int>& ns);

}  // namespace fishburn::dist
