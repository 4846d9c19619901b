#include "fishburn/distributions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace fishburn::dist {

namespace bmp = boost::multiprecision;
using asym::to_real;

mpq_class DistributionTable::probability(const mpq_class& x) const {
  auto it = std::lower_bound(support.begin(), support.end(), x);
  if (it == support.end() || *it != x) return 0;
  return pmf[std::size_t(it - support.begin())];
}

namespace {

void fill_moments(DistributionTable& t) {
  t.mean = 0;
  mpq_class second = 0;
  for (std::size_t i = 0; i < t.support.size(); ++i) {
    t.mean += t.support[i] * t.pmf[i];
    second += t.support[i] * t.support[i] * t.pmf[i];
  }
  t.variance = second - t.mean * t.mean;
}

}  // namespace

DistributionTable distribution(Family f, Stat s, const LambdaSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  const auto poly = stat_gf(f, s, spec, n).extract_zn(n);
  DistributionTable t;
  t.family = f;
  t.stat = s;
  t.lambda = spec.name();
  t.n = n;
  t.total = 0;
  for (const auto& c : poly) t.total += c;
  if (t.total == 0)
    throw std::domain_error("no " + to_string(f) + " matrices of size " + std::to_string(n) + " for Λ = " +
                            spec.name());
  for (std::size_t m = 0; m < poly.size(); ++m)
    if (poly[m] != 0) {
      t.support.emplace_back(long(m));
      t.counts.push_back(poly[m]);
      t.pmf.push_back(mpq_class(poly[m], t.total));
    }
  for (auto& p : t.pmf) p.canonicalize();
  fill_moments(t);
  return t;
}

DistributionTable affine(const DistributionTable& t, const mpq_class& scale, const mpq_class& shift,
                         const std::string& variable) {
  if (scale == 0) throw std::invalid_argument("affine scale must be nonzero");
  DistributionTable r = t;
  r.variable = variable;
  std::vector<std::size_t> idx(t.support.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  if (scale < 0) std::reverse(idx.begin(), idx.end());
  r.support.clear();
  r.counts.clear();
  r.pmf.clear();
  for (std::size_t i : idx) {
    r.support.push_back(scale * t.support[i] + shift);
    r.counts.push_back(t.counts[i]);
    r.pmf.push_back(t.pmf[i]);
  }
  fill_moments(r);
  return r;
}

Moments moments(Family f, Stat s, const LambdaSpec& spec, int n) {
  const auto jet = stat_gf_jet(f, s, spec, n, 2).extract_zn(n);
  auto at = [&](std::size_t i) { return i < jet.size() ? jet[i] : mpz_class(0); };
  Moments m;
  m.n = n;
  m.total = at(0);
  if (m.total == 0) throw std::domain_error("no matrices of size " + std::to_string(n));
  m.mean = mpq_class(at(1), m.total);
  m.mean.canonicalize();
  mpq_class second = mpq_class(2 * at(2), m.total) + m.mean;
  second.canonicalize();
  m.variance = second - m.mean * m.mean;
  return m;
}

Moments affine(const Moments& m, const mpq_class& scale, const mpq_class& shift) {
  Moments r = m;
  r.mean = scale * m.mean + shift;
  r.variance = scale * scale * m.variance;
  return r;
}

std::string to_string(LawKind k) {
  switch (k) {
    case LawKind::ztp: return "ztp";
    case LawKind::poisson: return "poisson";
    case LawKind::normal: return "normal";
    case LawKind::degenerate: return "degenerate";
    case LawKind::convolution: return "convolution";
  }
  return "?";
}

namespace {

std::string fmt(const Real& x) { return x.str(12); }

// Poisson(rate) masses at 0, 1, ... until the remaining mass is below eps.
std::vector<Real> poisson_masses(const Real& rate, const Real& eps) {
  std::vector<Real> out;
  Real p = bmp::exp(-rate), acc = 0;
  for (long k = 0; k < 100000; ++k) {
    out.push_back(p);
    acc += p;
    if (1 - acc < eps && Real(k) > rate) break;
    p = p * rate / Real(k + 1);
  }
  return out;
}

bool is_integer(const mpq_class& x) { return x.get_den() == 1; }

Real normal_cdf(const Real& mean, const Real& var, const Real& x) {
  Real z = (mean - x) / bmp::sqrt(2 * var);
  Real r;
  mpfr_erfc(r.backend().data(), z.backend().data(), MPFR_RNDN);
  return r / 2;
}

}  // namespace

LimitLaw LimitLaw::ztp(const Real& tau) {
  if (tau <= 0) throw std::invalid_argument("ZTP parameter must be positive");
  LimitLaw l;
  l.kind = LawKind::ztp;
  l.tau = tau;
  l.description = "ZTP(" + fmt(tau) + ")";
  return l;
}

LimitLaw LimitLaw::poisson(const Real& tau) {
  if (tau <= 0) throw std::invalid_argument("Poisson parameter must be positive");
  LimitLaw l;
  l.kind = LawKind::poisson;
  l.tau = tau;
  l.description = "Poisson(" + fmt(tau) + ")";
  return l;
}

LimitLaw LimitLaw::normal(const Real& mean, const Real& variance) {
  if (variance <= 0) throw std::invalid_argument("normal variance must be positive");
  LimitLaw l;
  l.kind = LawKind::normal;
  l.mean = mean;
  l.variance = variance;
  l.description = "Normal(" + fmt(mean) + ", " + fmt(variance) + ")";
  return l;
}

LimitLaw LimitLaw::degenerate(const mpq_class& point) {
  LimitLaw l;
  l.kind = LawKind::degenerate;
  l.point = point;
  l.description = "degenerate at " + point.get_str();
  return l;
}

LimitLaw LimitLaw::convolution(std::vector<PoissonComponent> components) {
  if (components.empty()) throw std::invalid_argument("empty convolution");
  LimitLaw l;
  l.kind = LawKind::convolution;
  l.description.clear();
  for (const auto& c : components) {
    if (c.multiplier < 1 || c.rate <= 0) throw std::invalid_argument("bad convolution component");
    l.description += (l.description.empty() ? "" : " * ") + std::to_string(c.multiplier) + "*Poisson(" + fmt(c.rate) + ")";
  }
  l.components = std::move(components);
  return l;
}

std::vector<std::pair<long, Real>> LimitLaw::pmf_table() const {
  std::vector<std::pair<long, Real>> out;
  switch (kind) {
    case LawKind::normal: throw std::logic_error("normal law has no point masses");
    case LawKind::degenerate:
      if (is_integer(point)) out.emplace_back(point.get_num().get_si(), Real(1));
      return out;
    case LawKind::poisson: {
      auto m = poisson_masses(tau, Real("1e-15"));
      for (std::size_t k = 0; k < m.size(); ++k) out.emplace_back(long(k), m[k]);
      return out;
    }
    case LawKind::ztp: {
      auto m = poisson_masses(tau, Real("1e-15"));
      const Real norm = 1 - bmp::exp(-tau);
      for (std::size_t k = 1; k < m.size(); ++k) out.emplace_back(long(k), m[k] / norm);
      return out;
    }
    case LawKind::convolution: {
      std::map<long, Real> acc{{0, Real(1)}};
      for (const auto& c : components) {
        auto m = poisson_masses(c.rate, Real("1e-13"));
        std::map<long, Real> next;
        for (const auto& [v, p] : acc)
          for (std::size_t k = 0; k < m.size(); ++k) next[v + c.multiplier * long(k)] += p * m[k];
        acc = std::move(next);
      }
      for (auto& [v, p] : acc) out.emplace_back(v, p);
      return out;
    }
  }
  return out;
}

Real LimitLaw::pmf(const mpq_class& x) const {
  if (kind == LawKind::normal) throw std::logic_error("normal law has no point masses");
  if (kind == LawKind::degenerate) return x == point ? Real(1) : Real(0);
  if (!is_integer(x) || x < 0) return 0;
  const long k = x.get_num().get_si();
  if (kind == LawKind::poisson || kind == LawKind::ztp) {
    if (kind == LawKind::ztp && k == 0) return 0;
    Real lp = -tau + Real(k) * bmp::log(tau) - bmp::lgamma(Real(k + 1));
    if (kind == LawKind::ztp) lp -= bmp::log(1 - bmp::exp(-tau));
    return bmp::exp(lp);
  }
  for (const auto& [v, p] : pmf_table())
    if (v == k) return p;
  return 0;
}

Real LimitLaw::cdf(const Real& x) const {
  if (kind != LawKind::normal) throw std::logic_error("cdf is provided for normal laws");
  return normal_cdf(mean, variance, x);
}

Real LimitLaw::law_mean() const {
  switch (kind) {
    case LawKind::ztp: return tau * bmp::exp(tau) / bmp::expm1(tau);
    case LawKind::poisson: return tau;
    case LawKind::normal: return mean;
    case LawKind::degenerate: return to_real(point);
    case LawKind::convolution: {
      Real s = 0;
      for (const auto& c : components) s += Real(c.multiplier) * c.rate;
      return s;
    }
  }
  return 0;
}

Real LimitLaw::law_variance() const {
  switch (kind) {
    case LawKind::ztp: {
      const Real e = bmp::exp(tau), d = bmp::expm1(tau);
      return tau * e * (d - tau) / (d * d);
    }
    case LawKind::poisson: return tau;
    case LawKind::normal: return variance;
    case LawKind::degenerate: return 0;
    case LawKind::convolution: {
      Real s = 0;
      for (const auto& c : components) s += Real(c.multiplier * c.multiplier) * c.rate;
      return s;
    }
  }
  return 0;
}

int smallest_odd_gap(const LambdaSpec& spec) {
  for (int i = 1; i <= 64; ++i)
    if (spec.lambda(2 * i + 1) > 0) return i;
  return 0;
}

Prediction limit_law_for(Family f, Stat s, const LambdaSpec& spec, int n) {
  if (n < 2) throw std::invalid_argument("limit laws need n >= 2");
  const Real l1(spec.lambda(1)), l2(spec.lambda(2)), pi2 = asym::pi() * asym::pi();
  const Real logn = bmp::log(Real(n));
  Prediction p;
  if (l1 > 0) {
    switch (s) {
      case Stat::first_row:
        p.law = f == Family::row_fishburn ? LimitLaw::ztp(asym::log2()) : LimitLaw::normal(logn, logn);
        return p;
      case Stat::diagonal:
        if (f == Family::fishburn) {
          p.law = LimitLaw::normal(2 * logn, 2 * logn);
        } else {
          p.law = LimitLaw::normal(logn, logn);
          if (f == Family::self_dual) {
            p.scale = mpq_class(1, 2);
            p.variable = "Y/2";
          }
        }
        return p;
      case Stat::ones:
        if (f == Family::self_dual) {
          p.scale = -1;
          p.shift = n;
          p.variable = "n-Z";
          p.law = l2 > 0 ? LimitLaw::convolution({{2, l2 / l1 * asym::log2()}, {4, l2 * pi2 / (12 * l1 * l1)}})
                         : LimitLaw::degenerate(0);
        } else {
          p.scale = mpq_class(-1, 2);
          p.shift = mpq_class(n, 2);
          p.variable = "(n-Z)/2";
          const Real div = f == Family::row_fishburn ? 12 : 6;
          p.law = l2 > 0 ? LimitLaw::poisson(l2 * pi2 / (div * l1 * l1)) : LimitLaw::degenerate(0);
        }
        return p;
      case Stat::twos: break;
    }
    throw UncoveredRegime("no predicted law for the number of 2s when λ1 > 0");
  }
  if (l2 <= 0) throw UncoveredRegime("limit laws need λ1 > 0 or λ2 > 0");
  if (f != Family::fishburn) throw UncoveredRegime("λ1 = 0 is covered for Fishburn matrices only");
  const int m = smallest_odd_gap(spec);
  if (m == 0) throw UncoveredRegime("λ1 = 0 needs an allowed odd entry");
  switch (s) {
    case Stat::first_row: p.law = LimitLaw::normal(logn, logn); return p;
    case Stat::diagonal: p.law = LimitLaw::normal(2 * logn, 2 * logn); return p;
    case Stat::twos: {
      const Real l3(spec.lambda(3)), l4(spec.lambda(4));
      if (m == 1) {
        const Real tau = l3 * asym::pi() / (2 * bmp::sqrt(Real(3)) * bmp::pow(l2, Real(3) / 2));
        p.scale = mpq_class(-2, 3);
        p.shift = mpq_class(n, 3);
        p.variable = "(n-2Z)/3";
        p.law = LimitLaw::normal(tau * bmp::sqrt(Real(n)), tau * bmp::sqrt(Real(n)));
        return p;
      }
      p.scale = mpq_class(-1, 2);
      if (n % 2 == 0) {
        p.shift = mpq_class(n, 4);
        p.variable = "(n/2-Z)/2";
      } else {
        p.shift = mpq_class(n - 2 * m - 1, 4);
        p.variable = "((n-2m-1)/2-Z)/2";
      }
      p.law = l4 > 0 ? LimitLaw::poisson(l4 * pi2 / (6 * l2 * l2)) : LimitLaw::degenerate(0);
      return p;
    }
    case Stat::ones: break;
  }
  throw UncoveredRegime("no 1s occur when λ1 = 0");
}

Metrics compare(const DistributionTable& t, const LimitLaw& law) {
  Metrics m;
  m.sup_distance = 0;
  Real abs_sum = 0;
  if (law.lattice()) {
    std::map<mpq_class, Real> q;
    for (const auto& [v, p] : law.pmf_table()) q[mpq_class(v)] = p;
    Real covered = 0;
    for (std::size_t i = 0; i < t.support.size(); ++i) {
      auto it = q.find(t.support[i]);
      const Real qi = it == q.end() ? Real(0) : it->second;
      const Real d = bmp::abs(to_real(t.pmf[i]) - qi);
      m.sup_distance = bmp::max(m.sup_distance, d);
      abs_sum += d;
      covered += qi;
    }
    Real outside = 0;
    for (const auto& [v, p] : q)
      if (!std::binary_search(t.support.begin(), t.support.end(), v)) {
        m.sup_distance = bmp::max(m.sup_distance, p);
        outside += p;
      }
    m.total_variation = (abs_sum + outside) / 2;
    if (law.kind == LawKind::degenerate) m.deficiency = 1 - to_real(t.probability(law.point));
  } else {
    const std::size_t k = t.support.size();
    Real lo_cdf = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Real hi_cdf = i + 1 < k ? law.cdf(to_real((t.support[i] + t.support[i + 1]) / 2)) : Real(1);
      const Real d = bmp::abs(to_real(t.pmf[i]) - (hi_cdf - lo_cdf));
      m.sup_distance = bmp::max(m.sup_distance, d);
      abs_sum += d;
      lo_cdf = hi_cdf;
    }
    m.total_variation = abs_sum / 2;
  }
  m.mean_gap = bmp::abs(to_real(t.mean) - law.law_mean());
  m.variance_gap = bmp::abs(to_real(t.variance) - law.law_variance());
  return m;
}

Comparison compare(Family f, Stat s, const LambdaSpec& spec, int n) {
  Comparison c;
  c.prediction = limit_law_for(f, s, spec, n);
  c.table = affine(distribution(f, s, spec, n), c.prediction.scale, c.prediction.shift, c.prediction.variable);
  c.metrics = compare(c.table, c.prediction.law);
  return c;
}

namespace {

std::vector<Real> limit_column(const DistributionTable& t, const LimitLaw& law) {
  std::vector<Real> out;
  if (law.lattice()) {
    std::map<mpq_class, Real> q;
    for (const auto& [v, p] : law.pmf_table()) q[mpq_class(v)] = p;
    for (const auto& x : t.support) {
      auto it = q.find(x);
      out.push_back(it == q.end() ? Real(0) : it->second);
    }
    return out;
  }
  Real lo = 0;
  for (std::size_t i = 0; i < t.support.size(); ++i) {
    const Real hi = i + 1 < t.support.size() ? law.cdf(to_real((t.support[i] + t.support[i + 1]) / 2)) : Real(1);
    out.push_back(hi - lo);
    lo = hi;
  }
  return out;
}

double round12(const Real& x) { return std::stod(x.str(12)); }

}  // namespace

std::string to_csv(const DistributionTable& t, const LimitLaw& law) {
  const auto lim = limit_column(t, law);
  std::ostringstream out;
  out << "value,exact,limit\n";
  for (std::size_t i = 0; i < t.support.size(); ++i)
    out << t.support[i].get_str() << ',' << fmt(to_real(t.pmf[i])) << ',' << fmt(lim[i]) << '\n';
  return out.str();
}

std::string to_json(const Comparison& c) {
  using nlohmann::json;
  const auto lim = limit_column(c.table, c.prediction.law);
  json rows = json::array();
  for (std::size_t i = 0; i < c.table.support.size(); ++i)
    rows.push_back({{"value", c.table.support[i].get_str()},
                    {"count", c.table.counts[i].get_str()},
                    {"exact", round12(to_real(c.table.pmf[i]))},
                    {"limit", round12(lim[i])}});
  json j = {{"schema", "fishburn.distribution/1"},
            {"family", to_string(c.table.family)},
            {"stat", to_string(c.table.stat)},
            {"lambda", c.table.lambda},
            {"n", c.table.n},
            {"variable", c.table.variable},
            {"total", c.table.total.get_str()},
            {"mean", c.table.mean.get_str()},
            {"mean_decimal", round12(to_real(c.table.mean))},
            {"variance_decimal", round12(to_real(c.table.variance))},
            {"law",
             {{"kind", to_string(c.prediction.law.kind)},
              {"description", c.prediction.law.description},
              {"mean", round12(c.prediction.law.law_mean())},
              {"variance", round12(c.prediction.law.law_variance())}}},
            {"metrics",
             {{"sup_distance", round12(c.metrics.sup_distance)},
              {"total_variation", round12(c.metrics.total_variation)},
              {"mean_gap", round12(c.metrics.mean_gap)},
              {"variance_gap", round12(c.metrics.variance_gap)},
              {"deficiency", round12(c.metrics.deficiency)}}},
            {"rows", rows}};
  return j.dump(2);
}

ParityReport parity_report(const LambdaSpec& spec, const std::vector<int>& ns) {
  if (spec.lambda(1) != 0 || spec.lambda(2) <= 0)
    throw std::invalid_argument("parity report needs λ1 = 0 and λ2 > 0");
  ParityReport rep;
  rep.m = smallest_odd_gap(spec);
  if (rep.m == 0) throw UncoveredRegime("λ1 = 0 needs an allowed odd entry");
  for (int n : ns) {
    Comparison c = compare(Family::fishburn, Stat::twos, spec, n);
    (n % 2 == 0 ? rep.prediction_even : rep.prediction_odd) = c.prediction;
    ParityRow row;
    row.n = n;
    row.even = n % 2 == 0;
    row.metrics = c.metrics;
    row.mean = c.table.mean;
    row.predicted_mean = c.prediction.law.law_mean();
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace fishburn::dist
