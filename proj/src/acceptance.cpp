#include "fishburn/acceptance.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>

#include "fishburn/asymptotics.hpp"
#include "fishburn/distributions.hpp"
#include "fishburn/families.hpp"
#include "fishburn/oeis.hpp"
#include "fishburn/oracle.hpp"
#include "fishburn/saddle.hpp"
#include "json.hpp"

namespace fishburn::acceptance {

namespace bmp = boost::multiprecision;
using asym::Real;
using Tag = LambdaSpec::Tag;

namespace {

std::string join(const std::vector<mpz_class>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return s;
}

std::string num(double x, int digits = 6) {
  std::ostringstream o;
  o << std::setprecision(digits) << x;
  return o.str();
}

std::string num(const Real& x, int digits = 6) { return x.str(digits); }

void add(CriterionResult& r, std::string name, bool pass, std::string detail) {
  r.checks.push_back({std::move(name), pass, std::move(detail)});
}

void finish(CriterionResult& r) {
  r.pass = !r.checks.empty();
  for (const auto& c : r.checks) r.pass = r.pass && c.pass;
}

std::vector<mpz_class> prefix(const IntSeries& s, int count) {
  std::vector<mpz_class> v;
  for (int i = 0; i < count; ++i) v.push_back(s[i]);
  return v;
}

std::vector<mpz_class> ints(std::initializer_list<long> xs) {
  std::vector<mpz_class> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// ---------------------------------------------------------------- 1

void exact_prefixes(CriterionResult& r) {
  const auto all = LambdaSpec::named(Tag::all), prim = LambdaSpec::named(Tag::zero_one);
  struct Row {
    std::string name;
    std::function<IntSeries(int)> gf;
    std::vector<mpz_class> printed;
  };
  const std::vector<Row> rows = {
      {"Fishburn", [&](int n) { return fishburn_gf(all, n); }, ints({1, 1, 2, 5, 15, 53, 217})},
      {"row-Fishburn", [&](int n) { return row_fishburn_gf(all, n); }, ints({1, 1, 3, 12, 61, 380, 2815})},
      {"primitive row-Fishburn", [&](int n) { return row_fishburn_gf(prim, n); }, ints({1, 1, 2, 7, 33, 197, 1419})},
      {"self-dual", [&](int n) { return self_dual_gf(all, n); }, ints({1, 1, 2, 3, 7, 13, 33})},
      {"primitive self-dual", [&](int n) { return self_dual_gf(prim, n); }, ints({1, 1, 1, 2, 3, 6, 13})},
      {"A186737", [](int n) { return recursive_gf(RecursiveKind::A186737, n).series; }, ints({1, 1, 3, 14, 82, 563})},
      {"A224885", [](int n) { return recursive_gf(RecursiveKind::A224885, n).series; }, ints({1, 1, 2, 15, 143, 1552})},
  };
  for (const auto& row : rows) {
    const int count = int(row.printed.size());
    const auto got = prefix(row.gf(count - 1), count);
    add(r, row.name, got == row.printed, "computed " + join(got) + " printed " + join(row.printed));
  }
}

// ---------------------------------------------------------------- 2

void oracle_equivalence(CriterionResult& r) {
  constexpr int kN = 7;
  const Stat stats[] = {Stat::first_row, Stat::diagonal, Stat::ones, Stat::twos};
  for (Tag tag : {Tag::all, Tag::zero_one}) {
    const auto spec = LambdaSpec::named(tag);
    for (Family f : {Family::row_fishburn, Family::fishburn, Family::self_dual}) {
      const IntSeries counts = family_gf(f, spec, kN);
      std::vector<BivariateSeries> gfs;
      for (Stat s : stats) gfs.push_back(stat_gf(f, s, spec, kN));
      long mismatches = 0, compared = 0;
      std::string first;
      for (int n = 0; n <= kN; ++n) {
        const auto ms = oracle::enumerate(f, spec, n);
        ++compared;
        if (oracle::total_weight(ms) != counts[n]) {
          ++mismatches;
          if (first.empty()) first = "count at n=" + std::to_string(n);
        }
        for (std::size_t i = 0; i < 4; ++i) {
          const auto hist = oracle::histogram(ms, oracle::to_matrix_stat(stats[i]));
          const auto poly = gfs[i].extract_zn(n);
          std::map<long, mpz_class> from_gf;
          for (std::size_t m = 0; m < poly.size(); ++m)
            if (poly[m] != 0) from_gf[long(m)] = poly[m];
          ++compared;
          if (hist != from_gf) {
            ++mismatches;
            if (first.empty()) first = to_string(stats[i]) + " at n=" + std::to_string(n);
          }
        }
      }
      add(r, to_string(f) + " Λ=" + spec.name(), mismatches == 0,
          std::to_string(compared) + " comparisons, " + std::to_string(mismatches) + " mismatches" +
              (first.empty() ? "" : ", first " + first));
    }
  }
}

// ---------------------------------------------------------------- 3

void identities(CriterionResult& r) {
  for (Tag tag : {Tag::all, Tag::zero_one, Tag::even_plus}) {
    const auto rep = verify_andrews_jelinek(LambdaSpec::named(tag), 60);
    add(r, "Andrews-Jelinek Λ=" + LambdaSpec::named(tag).name(), rep.equal,
        "order 60" + (rep.equal ? std::string() : ", first mismatch " + std::to_string(rep.first_mismatch)));
  }
  const auto g = verify_glaisher(30);
  add(r, "Glaisher T_n, n <= 30", g.equal && g.T.size() == 31,
      std::to_string(g.T.size()) + " terms, T_30 = " + (g.T.empty() ? "?" : g.T.back().get_str()));
  for (const auto& rep : verify_a158690_forms(25))
    add(r, "A158690 form: " + rep.name, rep.equal, "order 25");
  const auto p = verify_a035378_pairing(30);
  add(r, "A035378 pairing", p.equal, "order 30");
  const auto q = verify_a207557_rogers_fine(30);
  add(r, "A207557 Rogers-Fine", q.equal, "order 30");
}

// ---------------------------------------------------------------- 4

void table5(CriterionResult& r) {
  // Printed rows n = 1..7, entries k = 1..n.
  const std::vector<std::vector<long>> first_row = {{1},
                                                    {1, 1},
                                                    {2, 2, 1},
                                                    {5, 6, 3, 1},
                                                    {15, 21, 12, 4, 1},
                                                    {53, 84, 54, 20, 5, 1},
                                                    {217, 380, 270, 110, 30, 6, 1}};
  const std::vector<std::vector<long>> diagonal = {{1},
                                                   {0, 2},
                                                   {0, 1, 4},
                                                   {0, 2, 5, 8},
                                                   {0, 5, 14, 18, 16},
                                                   {0, 15, 47, 67, 56, 32},
                                                   {0, 53, 183, 287, 267, 160, 64}};
  const auto all = LambdaSpec::named(Tag::all);
  const IntSeries fish = fishburn_gf(all, 7);
  for (auto [stat, printed] : {std::pair{Stat::first_row, &first_row}, std::pair{Stat::diagonal, &diagonal}}) {
    const auto gf = stat_gf(Family::fishburn, stat, all, 7);
    bool ok = true;
    std::string where;
    for (int n = 1; n <= 7; ++n) {
      const auto poly = gf.extract_zn(n);
      mpz_class sum = 0;
      for (int k = 1; k <= n; ++k) {
        const mpz_class got = std::size_t(k) < poly.size() ? poly[std::size_t(k)] : mpz_class(0);
        sum += got;
        if (got != (*printed)[std::size_t(n - 1)][std::size_t(k - 1)] && ok) {
          ok = false;
          where = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " computed " + got.get_str();
        }
      }
      if (poly.size() > 0 && poly[0] != 0 && ok) {
        ok = false;
        where = "mass at k=0 for n=" + std::to_string(n);
      }
      if (sum != fish[n] && ok) {
        ok = false;
        where = "row sum at n=" + std::to_string(n);
      }
    }
    add(r, to_string(stat) + " table", ok, ok ? "rows 1..7 equal, row 7 sums to " + fish[7].get_str() : where);
  }
  add(r, "Fishburn number at n=7", fish[7] == 1014, fish[7].get_str());
}

// ---------------------------------------------------------------- 5

void constants(CriterionResult& r) {
  const Real P = asym::pi(), E = asym::e(), L2 = asym::log2(), p2 = P * P;
  const Real s6 = bmp::sqrt(Real(6)), s3 = bmp::sqrt(Real(3)), s2 = bmp::sqrt(Real(2));
  const Real p32 = bmp::pow(P, Real(3) / 2);
  auto close = [&](const std::string& name, const Real& got, const Real& want, double digits) {
    const double d = asym::agreeing_digits(got, want);
    add(r, name, d >= digits, num(got, 15) + " vs " + num(want, 15) + " (" + num(d, 3) + " digits)");
  };
  auto printed = [&](const std::string& name, const Real& got, const std::string& text) {
    // Every printed decimal must agree, whether the printed value was rounded or truncated.
    const auto dot = text.find('.');
    const int decimals = dot == std::string::npos ? 0 : int(text.size() - dot - 1);
    const Real unit = bmp::pow(Real(10), -decimals);
    const Real diff = got - Real(text);
    add(r, name, diff > -unit / 2 && diff < unit, num(got, 15) + " printed " + text);
  };

  const asym::CentralConstants k = asym::central();
  const saddle::Optimum o = saddle::optimum();
  close("mu closed form vs numeric optimum", k.mu, Real(o.mu), 12);
  close("xi closed form vs numeric optimum", k.xi, Real(o.xi), 12);
  close("sigma closed form vs curvature", k.sigma, Real(o.sigma), 10);
  close("mu = 12 log 2 / pi^2", k.mu, 12 * L2 / p2, 40);
  close("xi = pi^2 / 12", k.xi, p2 / 12, 40);
  printed("sigma", k.sigma, "0.31988");

  struct Pair {
    std::string id;
    Real c, rho;
  };
  const Real rho_r = 12 / (E * p2), rho_f = 6 / (E * p2);
  const std::vector<Pair> pairs = {
      // row-Fishburn table
      {"A179525", 12 / p32 * bmp::exp(-p2 / 24), rho_r},
      {"A289316", 12 / p32 * bmp::exp(-p2 / 24), rho_r},
      {"A207433", 12 / p32 * bmp::exp(p2 / 24), rho_r},
      {"A158691", 12 / p32 * bmp::exp(p2 / 24), rho_r},
      {"A289313", 12 / p32, 24 / (E * p2)},
      // (α, ω) = (1, 0) table
      {"A158690", 12 / p32, rho_r},
      {"A196194", 6 * s2 / p32, rho_r},
      {"A207214", 24 / p32, rho_r},
      {"A207386", 12 / p32 * bmp::exp(-p2 / 24), rho_r},
      {"A207397", 12 / p32 * bmp::exp(-p2 / 8), rho_r},
      {"A207556", 24 / p32 * bmp::exp(-p2 / 24), rho_r},
      // Fishburn table
      {"A022493", 12 * s6 / p2 * bmp::exp(p2 / 12), rho_f},
      {"A138265", 12 * s6 / p2 * bmp::exp(-p2 / 12), rho_f},
      {"A289317", 12 * s6 / p2 * bmp::exp(-p2 / 12), rho_f},
      {"A289312", 12 * s6 / p2, 12 / (E * p2)},
      // further examples
      {"A207652", 12 / p32 * bmp::exp(-p2 / 24), rho_r},
      {"A207653", 12 / p32 * bmp::exp(p2 / 24), rho_r},
      {"A207434", 12 / p32 * bmp::exp(-p2 / 24), rho_r},
      {"A186737", 12 / p32 * bmp::exp(p2 / 24), rho_r},
      {"A224885", 12 / p32 * bmp::exp(p2 / 8), rho_r},
      {"A079144", 12 * s6 / p2, rho_f},
      {"A207651", 12 * s6 / p2 * bmp::exp(p2 / 12), rho_f},
      {"A035378", 48 * s3 / p2 * bmp::exp(p2 / 48), 24 / (E * p2)},
      {"A215066", 2 * s3 / P, 24 / (E * p2)},
      {"A209832", 2 * s6 / P, 24 / (E * p2)},
      {"A214687", 4 * s3 / P, 24 / (E * p2)},
      {"A207569", 2 * s3 / P * bmp::exp(-p2 / 48), 24 / (E * p2)},
      {"A207570", asym::gamma(Real(2) / 3) * bmp::pow(Real(3), Real(5) / 6) / (bmp::pow(Real(2), Real(1) / 3) *
                  bmp::pow(P, Real(7) / 6)) * bmp::exp(-p2 / 72), 36 / (E * p2)},
      {"A207571", bmp::pow(Real(12), Real(2) / 3) / (bmp::pow(P, Real(5) / 6) * asym::gamma(Real(2) / 3)) *
                  bmp::exp(-p2 / 72), 36 / (E * p2)},
      {"A207557", 24 * s6 / (p2 * P) * bmp::exp(-p2 / 24), rho_r},
  };
  for (const auto& p : pairs) {
    const auto f = asym::constants_for(p.id);
    const double dc = asym::agreeing_digits(f.c, p.c), dr = asym::agreeing_digits(f.rho, p.rho);
    add(r, p.id + " (c, rho)", dc >= 40 && dr >= 40,
        "c " + num(f.c, 12) + " rho " + num(f.rho, 12) + " (" + num(std::min(dc, dr), 3) + " digits)");
  }
  // Zagier, primitive row-Fishburn and prototype statements.
  close("Zagier c", asym::constants_fishburn(1, 1).c, 12 * s6 / p2 * bmp::exp(p2 / 12), 40);
  close("Zagier rho", asym::constants_fishburn(1, 1).rho, rho_f, 40);
  close("primitive row-Fishburn c", asym::constants_row_fishburn(1, 0).c, 12 / p32 * bmp::exp(-p2 / 24), 40);
  close("prototype c", asym::constants_proto(1, 0).c, 12 / p32, 40);
  close("prototype rho", asym::constants_proto(1, 0).rho, rho_r, 40);

  const auto sd = asym::constants_self_dual(1, 1), psd = asym::constants_self_dual(1, 0);
  printed("self-dual c", sd.c, "1.361951039");
  printed("primitive self-dual c", psd.c, "0.299");

  // Specialisation coherence, 12 digits.
  for (auto [p, s] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    const Real w = Real(s) / p;
    const auto f = asym::constants_fractional(p, s);
    const Real want = bmp::sqrt(P) / asym::gamma(1 - w) * bmp::pow(p2 / 12, w - 1) * bmp::exp(-p2 / (24 * p));
    close("fractional p=" + std::to_string(p) + " s=" + std::to_string(s) + " vs general", f.c, want, 12);
  }
  close("r-Fishburn r=1 vs Fishburn", asym::constants_r_fishburn(1).c, asym::constants_fishburn(1, 1).c, 12);
  close("r-Fishburn r=3 closed form", asym::constants_r_fishburn(3).c, 12 * s6 / p2 * bmp::exp(p2 / 36), 12);
  for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 0}, std::pair{2, 3}}) {
    const Real l1 = a, l2 = b;
    const Real want = 3 * s2 / p32 * bmp::pow(Real(2), l2 / l1 - l1 / 2) *
                      bmp::exp(-l1 / 4 - p2 / 12 * (Real(1) / 2 - l2 / (l1 * l1)) + 3 * l1 * L2 * L2 / (2 * p2));
    close("self-dual (" + std::to_string(a) + "," + std::to_string(b) + ") via extension", asym::constants_self_dual(l1, l2).c,
          want, 12);
  }
  const auto no1 = asym::constants_for("no-one");
  close("no-1 c via smallest-entry-2", no1.c, 3 * s6 / p2 * bmp::exp(-p2 / 16), 12);
  close("no-1 beta", no1.beta, P / (2 * s3), 12);
  close("no-1 rho", no1.rho, 3 / (E * p2), 12);
  for (int alpha : {1, 2}) {
    const Real a = alpha;
    const Real want = s3 / (s2 * a * P) * bmp::pow(bmp::sqrt(12 / (a * P)), alpha) *
                      bmp::exp(-1 / (4 * a) + 3 * L2 * L2 / (2 * a * p2));
    close("extension prototype alpha=" + std::to_string(alpha), asym::constants_ext_proto(alpha, 0).c, want, 12);
  }
  // n! = √(2π) n^{n+1/2} e^{-n}(1 + O(1/n)) links the refined and leading forms.
  close("refined prototype c vs leading c", 6 * s2 / p2 * bmp::sqrt(2 * P), asym::constants_proto(1, 0).c, 12);
  close("refined primitive row-Fishburn c vs leading c", 6 * s2 / p2 * bmp::exp(-p2 / 24) * bmp::sqrt(2 * P),
        asym::constants_row_fishburn(1, 0).c, 12);
  for (auto [l1, l2] : {std::pair{1, 1}, std::pair{2, 5}, std::pair{3, 1}}) {
    const Real a = l1, b = l2;
    close("Fishburn corollary (" + std::to_string(l1) + "," + std::to_string(l2) + ")", asym::constants_fishburn(a, b).c,
          12 * s6 / p2 * bmp::exp(p2 / 6 * (b / (a * a) - Real(1) / 2)), 12);
    close("row-Fishburn corollary (" + std::to_string(l1) + "," + std::to_string(l2) + ")",
          asym::constants_row_fishburn(a, b).c, 12 / p32 * bmp::exp(p2 / 12 * (b / (a * a) - Real(1) / 2)), 12);
  }
}

// ---------------------------------------------------------------- 6

void convergence(CriterionResult& r) {
  const IntSeries f = fishburn_gf(LambdaSpec::named(Tag::all), 200);
  std::vector<mpz_class> v(f.coeffs().begin(), f.coeffs().end());
  const auto rep = asym::ratio_sequence(v, asym::constants_for("A022493"), {100, 150, 200},
                                        asym::CorrectionScale::inverse_n);
  std::string rs;
  for (const auto& x : rep.ratios) rs += num(x, 8) + " ";
  const Real gap = bmp::abs(rep.extrapolated_limit - 1);
  add(r, "Richardson limit within 1e-3 of 1", gap <= Real("1e-3"),
      "ratios " + rs + "limit " + num(rep.extrapolated_limit, 10) + " gap " + num(gap, 3));
}

// ---------------------------------------------------------------- 7

void refined_decay(CriterionResult& r) {
  const auto a = catalog_terms("A158690", 101);
  auto err = [&](long n) -> Real {
    const Real exact = asym::to_real(a[std::size_t(n)]) / asym::to_real(factorial(int(n)));
    return bmp::abs(asym::refined_a158690(n, 3) / exact - 1);
  };
  const Real e50 = err(50), e100 = err(100), ratio = e100 / e50;
  add(r, "err(100)/err(50) in [0.06, 0.25]", ratio >= Real("0.06") && ratio <= Real("0.25"),
      "err(50) " + num(e50, 4) + " err(100) " + num(e100, 4) + " ratio " + num(ratio, 5));
}

// ---------------------------------------------------------------- 8, 9

double log_mpz(const mpz_class& z) {
  long e = 0;
  const double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(d) + double(e) * std::log(2.0);
}

struct PrototypeExact {
  std::vector<IntSeries> products;  // n! [z^n] A_k
  mpz_class total(int n) const {
    mpz_class t = 0;
    for (const auto& p : products) t += p[n];
    return t;
  }
  mpz_class at(int n, int k) const { return std::size_t(k) < products.size() ? products[std::size_t(k)][n] : mpz_class(0); }
};

void saddle_channel(CriterionResult& r) {
  const PrototypeExact ex{a158690_products(200)};
  auto rel_err = [&](int n) {
    const double exact = log_mpz(ex.total(n)) - std::lgamma(double(n) + 1);
    return std::abs(std::expm1(saddle::an_approx(n).log - exact));
  };
  const double e50 = rel_err(50), e100 = rel_err(100), e200 = rel_err(200);
  add(r, "relative error at n=100 <= 0.05", e100 <= 0.05, num(e100, 4));
  add(r, "relative error at n=200 below n=50", e200 < e50, "n=50 " + num(e50, 4) + ", n=200 " + num(e200, 4));
  long first, last;
  saddle::window_range(120, first, last);
  mpz_class inside = 0;
  for (long k = first; k <= last; ++k) inside += ex.at(120, int(k));
  const mpz_class total = ex.total(120);
  const double tail = mpq_class(total - inside, total).get_d();
  add(r, "window tail mass at n=120 <= 1e-3", tail <= 1e-3,
      num(tail, 4) + " outside k in [" + std::to_string(first) + ", " + std::to_string(last) + "]");
  double worst = 0;
  long states = 0;
  for (long n : {50L, 100L, 120L, 200L}) {
    saddle::window_range(n, first, last);
    for (long k = first; k <= last; ++k, ++states)
      worst = std::max(worst, std::abs(saddle::solve_saddle(n, k).residual) / double(n));
  }
  add(r, "saddle residuals <= 1e-9 n", worst <= 1e-9,
      std::to_string(states) + " states, worst residual/n " + num(worst, 3));
}

double llt_distance(const PrototypeExact& ex, int n) {
  const auto c = saddle::central();
  const double mean = c.mu * n, var = c.sigma * c.sigma * n;
  std::vector<double> q(std::size_t(n) + 1);
  double qs = 0;
  for (int k = 0; k <= n; ++k) qs += q[std::size_t(k)] = std::exp(-(k - mean) * (k - mean) / (2 * var));
  const mpz_class total = ex.total(n);
  double sup = 0;
  for (int k = 0; k <= n; ++k)
    sup = std::max(sup, std::abs(mpq_class(ex.at(n, k), total).get_d() - q[std::size_t(k)] / qs));
  return sup;
}

void local_limit(CriterionResult& r) {
  const PrototypeExact ex{a158690_products(120)};
  const double d60 = llt_distance(ex, 60), d120 = llt_distance(ex, 120);
  add(r, "sup distance to N(mu n, sigma^2 n) decreases", d120 < d60,
      "n=60 " + num(d60, 5) + ", n=120 " + num(d120, 5));
}

// ---------------------------------------------------------------- 10

struct Cell {
  Family family;
  Stat stat;
  std::string lambda;
};

std::vector<Cell> law_cells() {
  std::vector<Cell> cells;
  for (Family f : {Family::row_fishburn, Family::fishburn, Family::self_dual})
    for (Stat s : {Stat::first_row, Stat::diagonal, Stat::ones}) cells.push_back({f, s, "all"});
  for (const char* l : {"l:0,1,1", "l:0,1,0,1,1"})
    for (Stat s : {Stat::first_row, Stat::diagonal, Stat::twos}) cells.push_back({Family::fishburn, s, l});
  return cells;
}

void ztp_moments(CriterionResult& r) {
  const auto law = dist::LimitLaw::ztp(asym::log2());
  const Real L2 = asym::log2();
  Real m = 0, s = 0;
  for (const auto& [k, p] : law.pmf_table()) {
    m += Real(k) * p;
    s += Real(k) * Real(k) * p;
  }
  const Real want_mean = 2 * L2, want_var = 2 * L2 * (1 - L2);
  const double d1 = std::min(asym::agreeing_digits(law.law_mean(), want_mean), asym::agreeing_digits(m, want_mean));
  const double d2 =
      std::min(asym::agreeing_digits(law.law_variance(), want_var), asym::agreeing_digits(s - m * m, want_var));
  add(r, "ZTP(log 2) mean = 2 log 2", d1 >= 12, num(law.law_mean(), 15) + " (" + num(d1, 3) + " digits)");
  add(r, "ZTP(log 2) variance = 2 log 2 (1 - log 2)", d2 >= 12,
      num(law.law_variance(), 15) + " (" + num(d2, 3) + " digits)");
}

void exact_normalisation(CriterionResult& r, int n) {
  for (const auto& c : law_cells()) {
    const auto spec = LambdaSpec::parse(c.lambda);
    const auto t = dist::distribution(c.family, c.stat, spec, n);
    mpq_class sum = 0;
    for (const auto& p : t.pmf) sum += p;
    const IntSeries counts = family_gf(c.family, spec, n);
    add(r, "normalisation " + to_string(c.family) + "/" + to_string(c.stat) + " Λ=" + c.lambda,
        sum == 1 && t.total == counts[n], "n=" + std::to_string(n) + " total " + t.total.get_str());
  }
}

void limit_laws(CriterionResult& r) {
  for (const auto& c : law_cells()) {
    const auto spec = LambdaSpec::parse(c.lambda);
    const auto a = dist::compare(c.family, c.stat, spec, 30), b = dist::compare(c.family, c.stat, spec, 60);
    add(r, to_string(c.family) + "/" + to_string(c.stat) + " Λ=" + c.lambda + " vs " + to_string(b.prediction.law.kind),
        b.metrics.sup_distance < a.metrics.sup_distance,
        "sup n=30 " + num(a.metrics.sup_distance, 5) + ", n=60 " + num(b.metrics.sup_distance, 5));
  }
  ztp_moments(r);
  const auto m = dist::affine(dist::moments(Family::row_fishburn, Stat::ones, LambdaSpec::named(Tag::all), 150),
                              mpq_class(-1, 2), mpq_class(75));
  const double target = M_PI * M_PI / 12, got = m.mean.get_d();
  add(r, "row-Fishburn mean of (n-Z)/2 at n=150 within 15% of pi^2/12", std::abs(got / target - 1) <= 0.15,
      num(got, 8) + " vs " + num(target, 8));
}

// ---------------------------------------------------------------- 11

void parity(CriterionResult& r) {
  const auto spec = LambdaSpec::parse("l:0,1,0,1,1");
  const IntSeries f = fishburn_gf(spec, 400);
  std::vector<mpz_class> v(f.coeffs().begin(), f.coeffs().end());
  const auto form = asym::constants_small2(1, 0, 1, 1, 2);
  for (bool even : {true, false}) {
    const std::vector<long> ns = even ? std::vector<long>{300, 350, 400} : std::vector<long>{299, 349, 399};
    const auto rep = asym::ratio_sequence(v, form, ns, asym::CorrectionScale::inverse_sqrt_n);
    const Real gap = bmp::abs(rep.extrapolated_limit - 1);
    std::string rs;
    for (const auto& x : rep.ratios) rs += num(x, 7) + " ";
    add(r, std::string(even ? "even" : "odd") + " ratio extrapolates within 5%", gap <= Real("0.05"),
        "ratios " + rs + "limit " + num(rep.extrapolated_limit, 7));
  }
  const auto rep = dist::parity_report(spec, {30, 60});
  add(r, "Z_n* TV distance to Poisson(pi^2/6) decreases", rep.rows[1].metrics.total_variation < rep.rows[0].metrics.total_variation,
      "n=30 " + num(rep.rows[0].metrics.total_variation, 5) + ", n=60 " + num(rep.rows[1].metrics.total_variation, 5));
}

// ---------------------------------------------------------------- 12

void offline_verify(CriterionResult& r, const Options& opt) {
  if (opt.cli_path.empty()) {
    add(r, "offline verify", false, "no CLI path configured");
    return;
  }
  const std::string cmd = "FORGE_OFFLINE=1 '" + opt.cli_path + "' verify > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const int code = status == -1 ? -1 : WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  add(r, "verify with FORGE_OFFLINE=1 exits 0", code == 0, "exit status " + std::to_string(code));
}

}  // namespace

std::string title(int id) {
  switch (id) {
    case 1: return "exact series prefixes";
    case 2: return "oracle equivalence, n <= 7";
    case 3: return "identity suite";
    case 4: return "first-row and diagonal tables";
    case 5: return "asymptotic constants";
    case 6: return "Fishburn ratio convergence";
    case 7: return "refined expansion decay";
    case 8: return "saddle-point channel";
    case 9: return "local limit profile";
    case 10: return "limit-law trends";
    case 11: return "parity behaviour, smallest entry 2";
    case 12: return "offline verify";
  }
  throw std::invalid_argument("criteria are numbered 1 to 12");
}

CriterionResult run(int id, const Options& opt) {
  CriterionResult r;
  r.id = id;
  r.title = title(id);
  const auto t0 = std::chrono::steady_clock::now();
  double budget = 0;
  try {
    switch (id) {
      case 1: exact_prefixes(r); budget = 1; break;
      case 2: oracle_equivalence(r); budget = 30; break;
      case 3: identities(r); budget = 120; break;
      case 4: table5(r); break;
      case 5: constants(r); break;
      case 6: convergence(r); budget = 300; break;
      case 7: refined_decay(r); break;
      case 8: saddle_channel(r); break;
      case 9: local_limit(r); break;
      case 10: limit_laws(r); break;
      case 11: parity(r); break;
      case 12: offline_verify(r, opt); break;
    }
  } catch (const std::exception& e) {
    add(r, "exception", false, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget > 0) add(r, "runtime below " + num(budget) + " s", r.seconds < budget, num(r.seconds, 3) + " s");
  finish(r);
  return r;
}

CriterionResult run_limit_law_exact() {
  CriterionResult r;
  r.id = 10;
  r.title = "limit-law trends, exact parts";
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ztp_moments(r);
    exact_normalisation(r, 30);
  } catch (const std::exception& e) {
    add(r, "exception", false, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  finish(r);
  return r;
}

CriterionResult run_oeis_offline() {
  CriterionResult r;
  r.id = 0;
  r.title = "OEIS cross-checks, embedded terms";
  const auto t0 = std::chrono::steady_clock::now();
  oeis::FetchOptions opt;
  opt.mode = oeis::Mode::offline;
  opt.network_allowed = false;
  for (const auto& entry : catalog()) {
    try {
      const auto seq = oeis::fetch(entry.id, opt);
      const long count = seq.last() - entry.offset + 1;
      const auto terms = catalog_terms(entry.id, int(count));
      const auto cc = oeis::cross_check(terms, entry.offset, seq);
      add(r, entry.id, cc.match,
          cc.match ? "indices " + std::to_string(cc.overlap_first) + ".." + std::to_string(cc.overlap_last)
                   : "mismatch at " + std::to_string(cc.first_mismatch) + ": expected " + cc.expected.get_str() +
                         " computed " + cc.computed.get_str());
    } catch (const std::exception& e) {
      add(r, entry.id, false, e.what());
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  finish(r);
  return r;
}

std::string format(const CriterionResult& r, bool verbose) {
  std::ostringstream o;
  o << (r.id > 0 ? "CRITERION " + std::to_string(r.id) : std::string("SUITE")) << ": " << (r.pass ? "PASS" : "FAIL") << " " << r.title << " (" << std::fixed
    << std::setprecision(2) << r.seconds << " s)\n";
  for (const auto& c : r.checks)
    if (verbose || !c.pass) o << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
  return o.str();
}

std::string to_json(const std::vector<CriterionResult>& rs) {
  using nlohmann::json;
  json out = {{"schema", "fishburn.verify/1"}, {"criteria", json::array()}};
  bool all = true;
  for (const auto& r : rs) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out["criteria"].push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"seconds", r.seconds}, {"checks", checks}});
    all = all && r.pass;
  }
  out["pass"] = all;
  return out.dump(2);
}

}  // namespace fishburn::acceptance
