#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fishburn/acceptance.hpp"
#include "fishburn/asymptotics.hpp"
#include "fishburn/distributions.hpp"
#include "fishburn/families.hpp"
#include "fishburn/oeis.hpp"
#include "fishburn/oracle.hpp"
#include "fishburn/saddle.hpp"
#include "json.hpp"

using namespace fishburn;
using nlohmann::ordered_json;

namespace {

constexpr int kMaxOrder = 2000;
constexpr int kMaxDistributionN = 400;
constexpr int kMaxSaddleN = 400;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string format = "table";
  std::string output;
  int digits = 12;
};

std::string fmt(double x, int digits) {
  std::ostringstream o;
  o << std::setprecision(digits) << x;
  return o.str();
}

std::string fmt(const asym::Real& x, int digits) { return x.str(digits); }

std::string fmt(const mpq_class& q) { return q.get_den() == 1 ? q.get_num().get_str() : q.get_str(); }

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + c.output);
  f << text;
}

// Rows of string cells rendered as an aligned table, CSV, or a JSON array of objects.
std::string render(const Common& c, const std::string& schema, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows, ordered_json meta = ordered_json::object()) {
  std::ostringstream o;
  if (c.format == "csv") {
    for (std::size_t i = 0; i < header.size(); ++i) o << (i ? "," : "") << header[i];
    o << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) o << (i ? "," : "") << r[i];
      o << "\n";
    }
  } else if (c.format == "json") {
    ordered_json j = {{"schema", schema}};
    for (auto it = meta.begin(); it != meta.end(); ++it) j[it.key()] = it.value();
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row = ordered_json::object();
      for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = r[i];
      j["rows"].push_back(row);
    }
    o << j.dump(2) << "\n";
  } else {
    for (auto it = meta.begin(); it != meta.end(); ++it)
      o << "# " << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
        << "\n";
    std::vector<std::size_t> w(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) o << (i ? "  " : "") << std::setw(int(w[i])) << r[i];
      o << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
  return o.str();
}

LambdaSpec parse_lambda(const std::string& s) {
  try {
    return LambdaSpec::parse(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Family parse_family_arg(const std::string& s) {
  try {
    return parse_family(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Stat parse_stat_arg(const std::string& s) {
  try {
    return parse_stat(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw UsageError("unknown sequence " + id);
}

// Leading-term form of a family, or a UsageError naming the uncovered regime.
asym::AsymptoticForm family_form(Family f, const LambdaSpec& spec, std::string& theorem) {
  const long l1 = spec.lambda(1), l2 = spec.lambda(2);
  if (l1 > 0) {
    switch (f) {
      case Family::row_fishburn: theorem = "row-Fishburn corollary"; return asym::constants_row_fishburn(l1, l2);
      case Family::fishburn: theorem = "Fishburn corollary"; return asym::constants_fishburn(l1, l2);
      case Family::self_dual: theorem = "self-dual corollary"; return asym::constants_self_dual(l1, l2);
    }
  }
  if (f == Family::fishburn && l2 > 0) {
    const int m = dist::smallest_odd_gap(spec);
    if (m > 0) {
      theorem = "smallest entry 2, m = " + std::to_string(m);
      return asym::constants_small2(l2, spec.lambda(3), spec.lambda(4), spec.lambda(2 * m + 1), m);
    }
    throw UsageError("uncovered regime: every entry is even; divide the entries by 2 and use the Fishburn corollary");
  }
  throw UsageError("uncovered regime: lambda_1 = 0 is only covered for Fishburn matrices with lambda_2 > 0");
}

ordered_json form_json(const asym::AsymptoticForm& a, int d) {
  ordered_json j = {{"c", fmt(a.c, d)},
                    {"rho", fmt(a.rho, d)},
                    {"beta", fmt(a.beta, d)},
                    {"n_power", fmt(a.n_power, d)},
                    {"half_exponent", a.half_exponent},
                    {"bound_only", a.bound_only}};
  if (a.even) j["even"] = {{"c", fmt(a.even->c, d)}, {"n_power", fmt(a.even->n_power, d)}};
  if (a.odd) j["odd"] = {{"c", fmt(a.odd->c, d)}, {"n_power", fmt(a.odd->n_power, d)}};
  j["source"] = a.source;
  return j;
}

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad n-list item '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty n-list");
  return out;
}

// ---------------------------------------------------------------- subcommands

struct Selection {
  std::string family = "fishburn", lambda = "all", sequence;
};

int cmd_enumerate(const Common& c, const Selection& s, int n_max, bool dump) {
  if (n_max < 0 || n_max > kMaxOrder) throw UsageError("--n-max must lie in [0, " + std::to_string(kMaxOrder) + "]");
  std::vector<mpz_class> terms;
  long offset = 0;
  std::string label;
  if (!s.sequence.empty()) {
    const auto& e = catalog_entry(s.sequence);
    offset = e.offset;
    terms = catalog_terms(e.id, n_max + 1);
    label = e.id;
  } else {
    const auto spec = parse_lambda(s.lambda);
    const Family f = parse_family_arg(s.family);
    if (dump) {
      if (n_max > oracle::kMaxSize) throw UsageError("--dump needs --n-max <= " + std::to_string(oracle::kMaxSize));
      emit(c, oracle::dump_json(oracle::enumerate(f, spec, n_max)));
      return 0;
    }
    const IntSeries gf = family_gf(f, spec, n_max);
    terms.assign(gf.coeffs().begin(), gf.coeffs().end());
    label = to_string(f) + " lambda=" + spec.name();
  }
  if (c.format == "table") {
    std::string line;
    for (const auto& t : terms) line += (line.empty() ? "" : " ") + t.get_str();
    emit(c, line + "\n");
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < terms.size(); ++i) rows.push_back({std::to_string(offset + long(i)), terms[i].get_str()});
  emit(c, render(c, "fishburn.enumerate/1", {"n", "a_n"}, rows, {{"series", label}}));
  return 0;
}

int cmd_asymptote(const Common& c, const Selection& s) {
  asym::AsymptoticForm form;
  std::string theorem, label;
  if (!s.sequence.empty()) {
    try {
      form = asym::constants_for(s.sequence);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    theorem = form.source;
    label = s.sequence;
  } else {
    const auto spec = parse_lambda(s.lambda);
    const Family f = parse_family_arg(s.family);
    form = family_form(f, spec, theorem);
    label = to_string(f) + " lambda=" + spec.name();
  }
  ordered_json j = {{"schema", "fishburn.asymptote/1"}, {"series", label}, {"theorem", theorem}};
  const auto fj = form_json(form, c.digits);
  for (auto it = fj.begin(); it != fj.end(); ++it) j[it.key()] = it.value();
  if (c.format == "json") {
    emit(c, j.dump(2) + "\n");
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "schema")
      rows.push_back({it.key(), it.value().is_string() ? it.value().get<std::string>() : it.value().dump()});
  emit(c, render(c, "fishburn.asymptote/1", {"field", "value"}, rows));
  return 0;
}

int cmd_converge(const Common& c, const Selection& s, const std::string& n_list, const std::string& scale) {
  const auto ns = parse_list(n_list);
  const long n_max = *std::max_element(ns.begin(), ns.end());
  if (ns.size() < 3) throw UsageError("--n-list needs at least three values");
  if (*std::min_element(ns.begin(), ns.end()) < 1 || n_max > kMaxOrder)
    throw UsageError("n values must lie in [1, " + std::to_string(kMaxOrder) + "]");
  std::vector<mpz_class> exact;
  asym::AsymptoticForm form;
  bool factorial_scaled = false;
  std::string label, theorem;
  if (!s.sequence.empty()) {
    const auto& e = catalog_entry(s.sequence);
    if (e.offset != 0) throw UsageError("converge needs a sequence indexed from 0");
    form = asym::constants_for(e.id);
    exact = catalog_terms(e.id, int(n_max) + 1);
    factorial_scaled = e.factorial_scaled;
    label = e.id;
    theorem = form.source;
  } else {
    const auto spec = parse_lambda(s.lambda);
    const Family f = parse_family_arg(s.family);
    form = family_form(f, spec, theorem);
    const IntSeries gf = family_gf(f, spec, int(n_max));
    exact.assign(gf.coeffs().begin(), gf.coeffs().end());
    label = to_string(f) + " lambda=" + spec.name();
  }
  std::optional<asym::CorrectionScale> sc;
  if (scale == "1/n") sc = asym::CorrectionScale::inverse_n;
  else if (scale == "1/sqrt(n)") sc = asym::CorrectionScale::inverse_sqrt_n;
  else if (scale != "auto") throw UsageError("--scale must be auto, 1/n or 1/sqrt(n)");
  const auto rep = asym::ratio_sequence(exact, form, ns, sc, factorial_scaled);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < rep.n_values.size(); ++i)
    rows.push_back({std::to_string(rep.n_values[i]), fmt(rep.ratios[i], c.digits)});
  ordered_json meta = {
      {"series", label},
      {"theorem", theorem},
      {"scale", rep.scale == asym::CorrectionScale::inverse_n ? "1/n" : "1/sqrt(n)"},
      {"extrapolated_limit", fmt(rep.extrapolated_limit, c.digits)},
      {"leading_correction", fmt(rep.leading_correction, c.digits)},
      {"fitted_exponent", fmt(rep.fitted_exponent, c.digits)}};
  emit(c, render(c, "fishburn.converge/1", {"n", "ratio"}, rows, meta));
  return 0;
}

int cmd_distribution(const Common& c, const Selection& s, const std::string& stat, int n) {
  if (n < 1 || n > kMaxDistributionN) throw UsageError("--n must lie in [1, " + std::to_string(kMaxDistributionN) + "]");
  const auto spec = parse_lambda(s.lambda);
  const Family f = parse_family_arg(s.family);
  const Stat st = parse_stat_arg(stat);
  std::optional<dist::Comparison> cmp;
  std::string note;
  try {
    cmp = dist::compare(f, st, spec, n);
  } catch (const dist::UncoveredRegime& e) {
    note = e.what();
  }
  const auto raw = dist::distribution(f, st, spec, n);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < raw.support.size(); ++i) {
    std::vector<std::string> row = {fmt(raw.support[i]), raw.counts[i].get_str(), fmt(raw.pmf[i].get_d(), c.digits)};
    if (cmp) {
      const auto& t = cmp->table;
      // The transformed table may be reversed; find the image of this value.
      const mpq_class image = cmp->prediction.scale * raw.support[i] + cmp->prediction.shift;
      row.push_back(fmt(image));
      if (cmp->prediction.law.lattice()) {
        row.push_back(fmt(cmp->prediction.law.pmf(image), c.digits));
      } else {
        std::size_t j = 0;
        while (j < t.support.size() && t.support[j] != image) ++j;
        const auto& law = cmp->prediction.law;
        const asym::Real lo = j == 0 ? asym::Real(-1e300) : asym::to_real(mpq_class((t.support[j - 1] + t.support[j]) / 2));
        const asym::Real hi = j + 1 >= t.support.size() ? asym::Real(1e300)
                                                        : asym::to_real(mpq_class((t.support[j] + t.support[j + 1]) / 2));
        row.push_back(fmt(law.cdf(hi) - law.cdf(lo), c.digits));
      }
    }
    rows.push_back(row);
  }
  std::vector<std::string> header = {"value", "count", "pmf"};
  ordered_json meta = {{"family", to_string(f)}, {"stat", to_string(st)}, {"lambda", spec.name()}, {"n", n},
                       {"total", raw.total.get_str()}, {"mean", fmt(raw.mean.get_d(), c.digits)},
                       {"variance", fmt(raw.variance.get_d(), c.digits)}};
  if (cmp) {
    header.push_back(cmp->prediction.variable);
    header.push_back("limit");
    const auto& m = cmp->metrics;
    meta["limit_law"] = cmp->prediction.law.description;
    meta["sup_distance"] = fmt(m.sup_distance, c.digits);
    meta["total_variation"] = fmt(m.total_variation, c.digits);
    meta["mean_gap"] = fmt(m.mean_gap, c.digits);
    meta["variance_gap"] = fmt(m.variance_gap, c.digits);
  } else {
    meta["limit_law"] = "none: " + note;
  }
  emit(c, render(c, "fishburn.distribution/1", header, rows, meta));
  return 0;
}

int cmd_saddle(const Common& c, int n, bool show_profile) {
  if (n < 20 || n > kMaxSaddleN) throw UsageError("--n must lie in [20, " + std::to_string(kMaxSaddleN) + "]");
  const auto products = a158690_products(n);
  auto log_exact_k = [&](long k) -> double {
    const mpz_class& v = products[std::size_t(k)][n];
    if (v == 0) return -INFINITY;
    long e = 0;
    const double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(d) + double(e) * std::log(2.0) - std::lgamma(n + 1.0);
  };
  mpz_class total = 0;
  for (const auto& p : products) total += p[n];
  long e2 = 0;
  const double d = mpz_get_d_2exp(&e2, total.get_mpz_t());
  const double log_exact = std::log(d) + double(e2) * std::log(2.0) - std::lgamma(n + 1.0);
  const double log_approx = saddle::an_approx(n).log;
  long first = 0, last = 0;
  saddle::window_range(n, first, last);
  mpz_class inside = 0;
  for (long k = first; k <= last; ++k) inside += products[std::size_t(k)][n];
  ordered_json meta = {{"n", n},
                       {"window", std::to_string(first) + ".." + std::to_string(last)},
                       {"log_an_exact", fmt(log_exact, c.digits)},
                       {"log_an_approx", fmt(log_approx, c.digits)},
                       {"relative_error", fmt(std::expm1(log_approx - log_exact), c.digits)},
                       {"tail_mass", fmt(mpq_class(total - inside, total).get_d(), c.digits)}};
  std::vector<std::vector<std::string>> rows;
  if (show_profile) {
    for (const auto& r : saddle::profile(n)) {
      const double ex = log_exact_k(r.k);
      rows.push_back({std::to_string(r.k), fmt(r.r, c.digits), fmt(r.residual, c.digits), fmt(r.log_approx, c.digits),
                      fmt(ex, c.digits), fmt(std::expm1(r.log_approx - ex), c.digits)});
    }
  }
  emit(c, render(c, "fishburn.saddle/1", {"k", "r", "residual", "log_approx", "log_exact", "relative_error"}, rows, meta));
  return 0;
}

int cmd_verify(const Common& c, bool full, bool verbose, const std::string& self) {
  std::vector<acceptance::CriterionResult> results;
  acceptance::Options opt;
  opt.cli_path = self;
  auto report = [&](acceptance::CriterionResult r) {
    if (c.format != "json") std::cout << acceptance::format(r, verbose) << std::flush;
    results.push_back(std::move(r));
  };
  const int last = full ? 11 : 5;
  for (int id = 1; id <= last; ++id) report(acceptance::run(id, opt));
  if (!full) report(acceptance::run_limit_law_exact());
  report(acceptance::run_oeis_offline());
  bool ok = true;
  for (const auto& r : results) ok = ok && r.pass;
  if (c.format == "json") emit(c, acceptance::to_json(results) + "\n");
  else std::cout << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
  return ok ? 0 : 1;
}

int cmd_oeis(const Common& c, const std::string& id, const std::string& mode, const std::string& cache_dir) {
  oeis::FetchOptions opt;
  try {
    opt.mode = oeis::parse_mode(mode);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  opt.cache_dir = cache_dir;
  opt = oeis::from_environment(opt);
  const auto& e = catalog_entry(id);
  const auto seq = oeis::fetch(id, opt);
  const auto computed = catalog_terms(id, int(seq.last() - e.offset + 1));
  const auto cc = oeis::cross_check(computed, e.offset, seq);
  ordered_json meta = {{"id", id},
                       {"source", oeis::to_string(seq.source)},
                       {"terms", std::to_string(seq.first()) + ".." + std::to_string(seq.last())},
                       {"match", cc.match}};
  std::vector<std::vector<std::string>> rows;
  if (!cc.match)
    rows.push_back({std::to_string(cc.first_mismatch), cc.expected.get_str(), cc.computed.get_str()});
  emit(c, render(c, "fishburn.oeis/1", {"index", "oeis", "computed"}, rows, meta));
  return cc.match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fishburn matrix enumeration, asymptotics and limit laws"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    sub->add_option("-o,--output", common.output, "write to a file instead of stdout");
    sub->add_option("--digits", common.digits, "significant digits of floating output")
        ->check(CLI::Range(1, 40))
        ->capture_default_str();
  };
  const std::string lambda_help =
      "entry multiset: all, 01, 012, odd, even+, even, no1; a value list such as 0,1,3; or l:λ1,λ2,... "
      "giving the multiplicities of 1, 2, ...";
  Selection sel;
  auto add_selection = [&](CLI::App* sub, bool allow_sequence) {
    sub->add_option("--family", sel.family, "row-fishburn, fishburn or self-dual")->capture_default_str();
    sub->add_option("--lambda", sel.lambda, lambda_help)->capture_default_str();
    if (allow_sequence) sub->add_option("--sequence", sel.sequence, "catalogued OEIS id instead of a family");
  };

  int n_max = 10;
  bool dump = false;
  auto* en = app.add_subcommand("enumerate", "exact coefficients 0..N");
  add_selection(en, true);
  en->add_option("--n-max", n_max, "largest n")->required();
  en->add_flag("--dump", dump, "print every matrix of size N as JSON lines (N <= 8)");
  add_common(en);

  auto* as = app.add_subcommand("asymptote", "leading-term constants (c, rho, beta, n_power)");
  add_selection(as, true);
  add_common(as);

  std::string n_list = "100,150,200", scale = "auto";
  auto* cv = app.add_subcommand("converge", "ratios of exact terms to the leading term, with extrapolation");
  add_selection(cv, true);
  cv->add_option("--n-list", n_list, "comma-separated n values")->capture_default_str();
  cv->add_option("--scale", scale, "correction model: auto, 1/n or 1/sqrt(n)")->capture_default_str();
  add_common(cv);

  std::string stat = "first_row";
  int n = 30;
  auto* ds = app.add_subcommand("distribution", "exact law of a statistic and its predicted limit");
  add_selection(ds, false);
  ds->add_option("--stat", stat, "first_row, diagonal, ones or twos")->capture_default_str();
  ds->add_option("--n", n, "matrix size")->capture_default_str();
  add_common(ds);

  bool show_profile = false;
  int saddle_n = 100;
  auto* sd = app.add_subcommand("saddle", "saddle-point approximation of [z^n] sum_k prod (e^{jz}-1)");
  sd->add_option("--n", saddle_n, "coefficient index")->capture_default_str();
  sd->add_flag("--profile", show_profile, "per-k window profile against exact values");
  add_common(sd);

  bool full = false, verbose = false;
  auto* vf = app.add_subcommand("verify", "acceptance checks; exit 1 on any failure");
  vf->add_flag("--full", full, "also run the asymptotic and distributional criteria");
  vf->add_flag("-v,--verbose", verbose, "list every check");
  add_common(vf);

  std::string oeis_id, mode = "offline", cache_dir;
  auto* oe = app.add_subcommand("oeis", "cross-check a catalogued sequence against OEIS terms");
  oe->add_option("--id", oeis_id, "A-number")->required();
  oe->add_option("--mode", mode, "offline, cached or network")->capture_default_str();
  oe->add_option("--cache-dir", cache_dir, "b-file cache directory (FORGE_OEIS_CACHE overrides)");
  add_common(oe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*en) return cmd_enumerate(common, sel, n_max, dump);
    if (*as) return cmd_asymptote(common, sel);
    if (*cv) return cmd_converge(common, sel, n_list, scale);
    if (*ds) return cmd_distribution(common, sel, stat, n);
    if (*sd) return cmd_saddle(common, saddle_n, show_profile);
    if (*vf) return cmd_verify(common, full, verbose, argv[0]);
    if (*oe) return cmd_oeis(common, oeis_id, mode, cache_dir);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
