#include "fishburn/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fishburn {

using Bv = BivariateSeries;

std::string to_string(Family f) {
  switch (f) {
    case Family::row_fishburn: return "row-fishburn";
    case Family::fishburn: return "fishburn";
    case Family::self_dual: return "self-dual";
  }
  return "?";
}

std::string to_string(Stat s) {
  switch (s) {
    case Stat::first_row: return "first_row";
    case Stat::diagonal: return "diagonal";
    case Stat::ones: return "ones";
    case Stat::twos: return "twos";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "row-fishburn" || s == "row") return Family::row_fishburn;
  if (s == "fishburn") return Family::fishburn;
  if (s == "self-dual" || s == "selfdual") return Family::self_dual;
  throw std::invalid_argument("unknown family: " + s);
}

Stat parse_stat(const std::string& s) {
  if (s == "first_row" || s == "first-row") return Stat::first_row;
  if (s == "diagonal") return Stat::diagonal;
  if (s == "ones") return Stat::ones;
  if (s == "twos") return Stat::twos;
  throw std::invalid_argument("unknown statistic: " + s);
}

// ---------------------------------------------------------------- LambdaSpec

LambdaSpec LambdaSpec::named(Tag t) {
  LambdaSpec s;
  s.tag = t;
  return s;
}

LambdaSpec LambdaSpec::custom(std::vector<long> lambdas) {
  for (long x : lambdas)
    if (x < 0) throw std::invalid_argument("lambda multiplicities must be nonnegative");
  LambdaSpec s;
  s.lambdas = std::move(lambdas);
  while (!s.lambdas.empty() && s.lambdas.back() == 0) s.lambdas.pop_back();
  return s;
}

LambdaSpec LambdaSpec::from_values(const std::vector<long>& values) {
  std::set<long> seen;
  for (long v : values) {
    if (v < 0) throw std::invalid_argument("entry values must be nonnegative");
    if (!seen.insert(v).second) throw std::invalid_argument("repeated entry value");
  }
  if (!seen.count(0)) throw std::invalid_argument("entry set must contain 0");
  std::vector<long> lam(std::size_t(*seen.rbegin()), 0);
  for (long v : seen)
    if (v > 0) lam[std::size_t(v - 1)] = 1;
  return custom(std::move(lam));
}

LambdaSpec LambdaSpec::parse(const std::string& text) {
  if (text == "all") return named(Tag::all);
  if (text == "01" || text == "0-1") return named(Tag::zero_one);
  if (text == "012" || text == "0-1-2") return named(Tag::zero_one_two);
  if (text == "odd") return named(Tag::odd);
  if (text == "even+") return named(Tag::even_plus);
  if (text == "even") return named(Tag::even);
  if (text == "no1") return named(Tag::no_one);
  auto split = [](const std::string& t) {
    std::vector<long> out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad lambda spec item: '" + item + "'");
      }
      if (used != item.size()) throw std::invalid_argument("bad lambda spec item: '" + item + "'");
      out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty lambda spec");
    return out;
  };
  if (text.rfind("l:", 0) == 0) return custom(split(text.substr(2)));
  return from_values(split(text));
}

long LambdaSpec::lambda(int i) const {
  if (i < 0) return 0;
  if (i == 0) return 1;
  switch (tag) {
    case Tag::all: return 1;
    case Tag::zero_one: return i == 1;
    case Tag::zero_one_two: return i <= 2;
    case Tag::odd: return i % 2;
    case Tag::even_plus: return 2;
    case Tag::even: return i % 2 == 0;
    case Tag::no_one: return i >= 2;
    case Tag::custom: return std::size_t(i) <= lambdas.size() ? lambdas[std::size_t(i - 1)] : 0;
  }
  return 0;
}

std::string LambdaSpec::name() const {
  switch (tag) {
    case Tag::all: return "all";
    case Tag::zero_one: return "01";
    case Tag::zero_one_two: return "012";
    case Tag::odd: return "odd";
    case Tag::even_plus: return "even+";
    case Tag::even: return "even";
    case Tag::no_one: return "no1";
    case Tag::custom: break;
  }
  std::string s = "l:";
  for (std::size_t i = 0; i < lambdas.size(); ++i) s += (i ? "," : "") + std::to_string(lambdas[i]);
  return lambdas.empty() ? "l:0" : s;
}

bool LambdaSpec::is_trivial() const { return tag == Tag::custom && lambdas.empty(); }

IntSeries lambda_series(const LambdaSpec& spec, int order) {
  IntSeries s(order);
  for (int i = 0; i <= order; ++i) s.set(i, spec.lambda(i));
  return s;
}

// ---------------------------------------------------------------- univariate families

namespace {

using IntFn = std::function<IntSeries(int)>;

// Running powers b^1, b^2, ... handed out in order.
template <class S>
struct Powers {
  S base, cur;
  explicit Powers(const S& b) : base(b), cur(b) {}
  // next() returns b^1 on the first call, b^2 on the second, ...
  S next() {
    S r = cur;
    cur = cur * base;
    return r;
  }
};

IntSeries one_minus(const IntSeries& s) { return (-s).add_constant(1); }

IntSeries fishburn_direct_raw(const IntSeries& lam) {
  const int n = lam.order();
  Powers<IntSeries> inv(lam.inv());
  return sum_product<IntSeries>(nullptr, [&](int) { return one_minus(inv.next()); }, IntSeries::one(n));
}

IntSeries fishburn_andrews_raw(const IntSeries& lam) {
  const int n = lam.order();
  Powers<IntSeries> d(lam), e(lam);
  IntFn d_part = [&](int) { return d.next(); };
  IntFn factor = [&](int) {
    IntSeries f = e.next().add_constant(-1);
    return f * f;
  };
  return sum_product<IntSeries>(d_part, factor, IntSeries::one(n));
}

}  // namespace

IntSeries sum_product(const SumProductSpec& spec) {
  const int n = spec.d.order();
  if (spec.e.order() != n) throw SeriesError("order mismatch in sum-product spec");
  if (spec.p < 1 || spec.s < 0 || spec.s >= spec.p)
    throw std::invalid_argument("exponent schedule needs p >= 1 and 0 <= s < p");
  if (spec.alpha < 1) throw std::invalid_argument("alpha must be a positive integer");
  if (spec.d[0] != 1 || spec.e[0] != 1) throw SeriesError("d and e need constant term 1");
  IntSeries d_cur = spec.d.pow(spec.omega0);
  IntSeries e_step = spec.e.pow(spec.p), e_cur = spec.e.pow(spec.p - spec.s);
  IntFn d_part = [&](int k) {
    if (k > 0) d_cur = d_cur * spec.d;
    return d_cur;
  };
  IntFn factor = [&](int) {
    IntSeries f = e_cur.add_constant(-1).pow(spec.alpha);
    e_cur = e_cur * e_step;
    return f;
  };
  return sum_product<IntSeries>(d_part, factor, IntSeries::one(n));
}

IntSeries row_fishburn_gf(const LambdaSpec& spec, int order) {
  IntSeries lam = lambda_series(spec, order);
  Powers<IntSeries> e(lam);
  return sum_product<IntSeries>(nullptr, [&](int) { return e.next().add_constant(-1); },
                                IntSeries::one(order));
}

IntSeries fishburn_gf(const LambdaSpec& spec, int order, FishburnForm form) {
  if (spec.is_trivial()) throw SeriesError("Fishburn GF needs a nonzero entry value in the multiset");
  IntSeries lam = lambda_series(spec, order);
  return form == FishburnForm::direct ? fishburn_direct_raw(lam) : fishburn_andrews_raw(lam);
}

IntSeries self_dual_gf(const LambdaSpec& spec, int order) {
  IntSeries lam = lambda_series(spec, order);
  Powers<IntSeries> d(lam), e(lam.dilate(2));
  IntFn d_part = [&](int) { return d.next(); };
  IntFn factor = [&](int) { return e.next().add_constant(-1); };
  return sum_product<IntSeries>(d_part, factor, IntSeries::one(order));
}

IntSeries family_gf(Family f, const LambdaSpec& spec, int order) {
  switch (f) {
    case Family::row_fishburn: return row_fishburn_gf(spec, order);
    case Family::fishburn: return fishburn_gf(spec, order);
    case Family::self_dual: return self_dual_gf(spec, order);
  }
  throw std::invalid_argument("unknown family");
}

// ---------------------------------------------------------------- bivariate families

namespace {

using BvFn = std::function<Bv(int)>;

struct Marker {
  int order;
  int cap;  // -1: full polynomial in v; otherwise jet in w = v - 1

  Bv lift(const IntSeries& s) const { return Bv::from_univariate(s, cap); }
  Bv one() const { return Bv::one(order, cap); }

  // Σ base_n v^{deg(n)} z^n
  Bv mark(const IntSeries& base, const std::function<int(int)>& deg) const {
    Bv r(order, cap);
    for (int i = 0; i <= order; ++i) {
      if (sgn(base[i]) == 0) continue;
      const int d = deg(i);
      Bv::Poly p;
      if (cap < 0) {
        p.assign(std::size_t(d) + 1, mpz_class(0));
        p[d] = base[i];
      } else {
        // (1+w)^d truncated
        const int top = std::min(d, cap);
        p.resize(std::size_t(top) + 1);
        mpz_class b = 1;
        for (int m = 0; m <= top; ++m) {
          p[m] = base[i] * b;
          b = b * (d - m) / (m + 1);
        }
      }
      r.set(i, std::move(p));
    }
    return r;
  }
  Bv homogeneous(const IntSeries& base) const {
    return mark(base, [](int i) { return i; });
  }
  Bv at_index(const IntSeries& base, int index, int power) const {
    return mark(base, [=](int i) { return i == index ? power : 0; });
  }
};

Bv minus_one(const Bv& s) { return s.add_constant(mpz_class(-1)); }

Bv row_stat(Stat st, const IntSeries& lam, const Marker& mk) {
  const Bv one = mk.one();
  switch (st) {
    case Stat::first_row: {
      Bv lv = mk.homogeneous(lam);
      Powers<Bv> d(lv);
      Powers<IntSeries> e(lam);
      BvFn d_part = [&](int) { return minus_one(d.next()); };
      BvFn factor = [&](int) { return mk.lift(e.next().add_constant(-1)); };
      return sum_product<Bv>(d_part, factor, one).add_constant(mpz_class(1));
    }
    case Stat::diagonal: {
      Bv lv = mk.homogeneous(lam);
      IntSeries prev = IntSeries::one(mk.order);
      BvFn factor = [&](int) {
        Bv f = minus_one(lv * mk.lift(prev));
        prev = prev * lam;
        return f;
      };
      return sum_product<Bv>(nullptr, factor, one);
    }
    case Stat::ones:
    case Stat::twos: {
      Bv m = mk.at_index(lam, st == Stat::ones ? 1 : 2, 1);
      Powers<Bv> e(m);
      return sum_product<Bv>(nullptr, [&](int) { return minus_one(e.next()); }, one);
    }
  }
  throw std::invalid_argument("unsupported statistic");
}

Bv fishburn_stat(Stat st, const IntSeries& lam, const Marker& mk) {
  const Bv one = mk.one();
  switch (st) {
    case Stat::first_row:
    case Stat::diagonal: {
      Bv lv = mk.homogeneous(lam);
      IntSeries prev = IntSeries::one(mk.order), dk = IntSeries::one(mk.order);
      BvFn d_part = [&](int k) {
        if (k > 0) dk = dk * lam;
        return mk.lift(dk);
      };
      BvFn factor = [&](int) {
        Bv a = minus_one(lv * mk.lift(prev));
        prev = prev * lam;
        if (st == Stat::diagonal) return a * a;
        return a * mk.lift(prev.add_constant(-1));
      };
      return lv * sum_product<Bv>(d_part, factor, one);
    }
    case Stat::ones:
    case Stat::twos: {
      Bv m = mk.at_index(lam, st == Stat::ones ? 1 : 2, 1);
      Powers<Bv> d(m), e(m);
      BvFn d_part = [&](int) { return d.next(); };
      BvFn factor = [&](int) {
        Bv f = minus_one(e.next());
        return f * f;
      };
      return sum_product<Bv>(d_part, factor, one);
    }
  }
  throw std::invalid_argument("unsupported statistic");
}

Bv self_dual_stat(Stat st, const IntSeries& lam, const Marker& mk) {
  const Bv one = mk.one();
  const IntSeries lam2 = lam.dilate(2);
  switch (st) {
    case Stat::first_row:
    case Stat::diagonal: {
      Bv lv = mk.homogeneous(lam);
      // Λ(v z²) for the first row, Λ(v² z²) for the diagonal
      Bv inner = st == Stat::first_row ? mk.mark(lam2, [](int i) { return i / 2; })
                                       : mk.homogeneous(lam2);
      IntSeries prev = IntSeries::one(mk.order), dk = IntSeries::one(mk.order);
      BvFn d_part = [&](int k) {
        if (k > 0) dk = dk * lam;
        return mk.lift(dk);
      };
      BvFn factor = [&](int) {
        Bv f = minus_one(inner * mk.lift(prev));
        prev = prev * lam2;
        return f;
      };
      return lv * sum_product<Bv>(d_part, factor, one);
    }
    case Stat::ones:
    case Stat::twos: {
      const int idx = st == Stat::ones ? 1 : 2;
      Bv m = mk.at_index(lam, idx, 1);
      Bv m2 = mk.at_index(lam2, 2 * idx, 2);
      Powers<Bv> d(m), e(m2);
      BvFn d_part = [&](int) { return d.next(); };
      BvFn factor = [&](int) { return minus_one(e.next()); };
      return sum_product<Bv>(d_part, factor, one);
    }
  }
  throw std::invalid_argument("unsupported statistic");
}

Bv build_stat(Family f, Stat st, const LambdaSpec& spec, int order, int cap) {
  if (st == Stat::ones && spec.lambda(1) == 0)
    throw std::invalid_argument("the ones statistic needs lambda_1 > 0");
  if (f == Family::fishburn && spec.is_trivial())
    throw SeriesError("Fishburn GF needs a nonzero entry value in the multiset");
  Marker mk{order, cap};
  IntSeries lam = lambda_series(spec, order);
  switch (f) {
    case Family::row_fishburn: return row_stat(st, lam, mk);
    case Family::fishburn: return fishburn_stat(st, lam, mk);
    case Family::self_dual: return self_dual_stat(st, lam, mk);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

BivariateSeries stat_gf(Family f, Stat s, const LambdaSpec& spec, int order) {
  return build_stat(f, s, spec, order, -1);
}

BivariateSeries stat_gf_jet(Family f, Stat s, const LambdaSpec& spec, int order, int cap) {
  if (cap < 0) throw std::invalid_argument("jet degree must be nonnegative");
  return build_stat(f, s, spec, order, cap);
}

BivariateSeries fishburn_stat_direct(Stat st, const LambdaSpec& spec, int order) {
  Marker mk{order, -1};
  IntSeries lam = lambda_series(spec, order);
  IntSeries lam_inv = lam.inv();
  const Bv one = mk.one();
  switch (st) {
    case Stat::first_row: {
      Bv lv_inv = mk.homogeneous(lam_inv);
      IntSeries prev = IntSeries::one(order);  // Λ^{1-j}
      BvFn factor = [&](int) {
        Bv f = -(lv_inv * mk.lift(prev));
        prev = prev * lam_inv;
        return f.add_constant(mpz_class(1));
      };
      return sum_product<Bv>(nullptr, factor, one);
    }
    case Stat::diagonal: {
      Bv lv = mk.homogeneous(lam);
      Powers<IntSeries> inv(lam_inv);
      BvFn factor = [&](int) { return lv - mk.lift(inv.next()); };
      Bv a = minus_one(lv);
      return lv + a * a * sum_product<Bv>(nullptr, factor, one);
    }
    case Stat::ones:
    case Stat::twos: {
      if (st == Stat::ones && spec.lambda(1) == 0)
        throw std::invalid_argument("the ones statistic needs lambda_1 > 0");
      Bv m = mk.at_index(lam, st == Stat::ones ? 1 : 2, 1);
      Powers<Bv> inv(m.inv());
      BvFn factor = [&](int) { return (-inv.next()).add_constant(mpz_class(1)); };
      return sum_product<Bv>(nullptr, factor, one);
    }
  }
  throw std::invalid_argument("unsupported statistic");
}

BivariateSeries fishburn_diagonal_direct_as_printed(const LambdaSpec& spec, int order) {
  return fishburn_stat_direct(Stat::diagonal, spec, order).add_constant(mpz_class(1));
}

// ---------------------------------------------------------------- recursive families

RecursiveResult recursive_gf(RecursiveKind kind, int order) {
  auto step = [&](const IntSeries& f) -> IntSeries {
    if (kind == RecursiveKind::A186737) {
      IntSeries g = f.shift_up(1).add_constant(1);
      Powers<IntSeries> e(g);
      return sum_product<IntSeries>(nullptr, [&](int) { return e.next().add_constant(-1); },
                                    IntSeries::one(order));
    }
    Powers<IntSeries> e(f);
    IntSeries s = sum_product<IntSeries>(nullptr, [&](int) { return e.next().add_constant(-1); },
                                         IntSeries::one(order));
    return (s - f + IntSeries::monomial(1, 1, order)).add_constant(1);
  };
  RecursiveResult r;
  r.series = IntSeries::one(order);
  for (int it = 0; it <= order; ++it) {
    IntSeries next = step(r.series);
    ++r.iterations;
    // iteration m fixes coefficients 0..m
    for (int i = 0; i < it && i <= order; ++i)
      if (next[i] != r.series[i]) throw SeriesError("recursive GF iteration changed a settled coefficient");
    r.series = next;
  }
  r.stabilized = step(r.series) == r.series;
  return r;
}

// ---------------------------------------------------------------- variants

Variant parse_variant(const std::string& s) {
  static const std::vector<std::pair<std::string, Variant>> names = {
      {"A207652", Variant::A207652},
      {"A207653", Variant::A207653},
      {"A207651", Variant::A207651},
      {"A207434", Variant::A207434},
      {"A035378", Variant::A035378},
      {"A035378-dual", Variant::A035378_dual},
      {"A035378-paired", Variant::A035378_paired},
      {"A207557", Variant::A207557},
      {"A207557-rogers-fine", Variant::A207557_rogers_fine},
      {"A079144", Variant::A079144},
      {"A079144-andrews", Variant::A079144_andrews},
      {"A158690", Variant::A158690},
  };
  for (const auto& [k, v] : names)
    if (k == s) return v;
  throw std::invalid_argument("unknown variant: " + s);
}

namespace {

IntSeries binom_pow(int base_sign, int e, int order) {  // (1 + base_sign z)^e
  IntSeries b(order);
  b.set(0, 1);
  if (order >= 1) b.set(1, base_sign);
  return b.pow(e);
}

IntSeries one_minus_zpow(int m, int order) {  // 1 - z^m
  return (-IntSeries::monomial(1, m, order)).add_constant(1);
}

EgfSeries egf_exp(long j, int order) { return EgfSeries::exp_linear(j, order); }

IntSeries a035378_grouped(int order) {
  IntSeries zm1(order);  // z - 1
  zm1.set(0, -1);
  if (order >= 1) zm1.set(1, 1);
  Powers<IntSeries> p(zm1);
  IntSeries s = sum_product<IntSeries>(nullptr, [&](int) { return one_minus(p.next()); },
                                       IntSeries::one(order), 2);
  return s.add_constant(-1);
}

IntSeries a035378_dual(int order) {
  IntSeries zm1(order);
  zm1.set(0, -1);
  if (order >= 1) zm1.set(1, 1);
  IntSeries u = zm1.inv();
  Powers<IntSeries> d(u), e(u);
  IntFn d_part = [&](int) { return d.next(); };
  IntFn factor = [&](int) {
    IntSeries f = one_minus(e.next());
    return f * f;
  };
  return sum_product<IntSeries>(d_part, factor, IntSeries::one(order), 2).add_constant(-1);
}

IntSeries a035378_paired(int order) {
  IntSeries y = one_minus_zpow(1, order).inv();
  IntSeries y2 = y * y;
  IntSeries yodd = y;  // y^{2k+1}
  IntSeries ylo = y, yhi = y2;  // y^{2k-1}, y^{2k}
  IntFn d_part = [&](int k) {
    if (k > 0) yodd = yodd * y2;
    IntSeries t = yodd.add_constant(1);
    return yodd * (y * t * t).add_constant(-1);
  };
  IntFn factor = [&](int) {
    IntSeries a = ylo.add_constant(1), b = yhi.add_constant(-1);
    ylo = ylo * y2;
    yhi = yhi * y2;
    return a * a * b * b;
  };
  return sum_product<IntSeries>(d_part, factor, IntSeries::one(order)).add_constant(-1);
}

IntSeries a207557(int order) {
  IntSeries ip2 = binom_pow(1, -2, order);  // (1+z)^{-2}
  IntSeries dk = IntSeries::one(order), step = IntSeries::one(order);
  IntSeries e2 = binom_pow(1, 2, order), ecur = binom_pow(1, 1, order);
  IntFn d_part = [&](int k) {
    if (k > 0) {
      dk = dk * step;  // (1+z)^{-k(k-1)} = (1+z)^{-(k-1)(k-2)} (1+z)^{-2(k-1)}
      step = step * ip2;
    }
    return dk;
  };
  IntFn factor = [&](int) {
    IntSeries f = ecur.add_constant(-1);
    ecur = ecur * e2;
    return f;
  };
  return sum_product<IntSeries>(d_part, factor, IntSeries::one(order));
}

IntSeries a207557_rogers_fine(int order) {
  const int m = order + 1;
  IntSeries one_p = binom_pow(1, 1, m), e2 = binom_pow(1, 2, m);
  IntSeries dk = one_p, ecur = one_p;  // (1+z)^{2k+1}, (1+z)^{2j-1}
  IntFn d_part = [&](int k) {
    if (k > 0) dk = dk * e2;
    return dk;
  };
  IntFn factor = [&](int) {
    IntSeries f = ecur.add_constant(-1);
    ecur = ecur * e2;
    return f * f;
  };
  IntSeries s = sum_product<IntSeries>(d_part, factor, IntSeries::one(m)) - one_p;
  return s.shift_down(1).add_constant(1);
}

EgfSeries a079144_direct(int order) {
  Powers<EgfSeries> p(egf_exp(-1, order));
  return sum_product<EgfSeries>(nullptr, [&](int) { return (-p.next()).add_constant(1); },
                                EgfSeries::one(order));
}

EgfSeries a079144_andrews(int order) {
  const EgfSeries e = egf_exp(1, order);
  Powers<EgfSeries> d(e), f(e);
  std::function<EgfSeries(int)> d_part = [&](int) { return d.next(); };
  std::function<EgfSeries(int)> factor = [&](int) {
    EgfSeries t = f.next().add_constant(-1);
    return t * t;
  };
  return sum_product<EgfSeries>(d_part, factor, EgfSeries::one(order));
}

EgfSeries a158690_egf(int order) {
  Powers<EgfSeries> p(egf_exp(1, order));
  return sum_product<EgfSeries>(nullptr, [&](int) { return p.next().add_constant(-1); },
                                EgfSeries::one(order));
}

IdentityReport compare(const std::string& name, const IntSeries& a, const IntSeries& b) {
  IdentityReport r;
  r.name = name;
  r.order = a.order();
  r.equal = true;
  for (int i = 0; i <= a.order(); ++i)
    if (a[i] != b[i]) {
      r.equal = false;
      r.first_mismatch = i;
      break;
    }
  return r;
}

}  // namespace

TruncatedSeries variant_gf(Variant v, int order) {
  auto q = [](const IntSeries& s) { return s.cast<mpq_class>(); };
  switch (v) {
    case Variant::A207652:
    case Variant::A207651: {
      const bool plus = v == Variant::A207652;
      IntSeries base = binom_pow(plus ? 1 : -1, 1, order), cur = base;
      int j = 0;
      return q(sum_product<IntSeries>(
          nullptr,
          [&](int) {
            ++j;
            IntSeries f = plus ? cur.add_constant(-1) : one_minus(cur);
            cur = cur * base;
            return f * one_minus_zpow(j, order).inv();
          },
          IntSeries::one(order)));
    }
    case Variant::A207653: {
      IntSeries base = binom_pow(-1, 1, order), sq = base * base, cur = base;
      int j = 0;
      return q(sum_product<IntSeries>(
          nullptr,
          [&](int) {
            ++j;
            IntSeries f = one_minus(cur);
            cur = cur * sq;
            return f * one_minus_zpow(2 * j - 1, order).inv();
          },
          IntSeries::one(order)));
    }
    case Variant::A207434: {
      IntSeries a = row_fishburn_gf(LambdaSpec::named(LambdaSpec::Tag::zero_one), order);
      return q(a.derivative().shift_up(1) * a.inv());
    }
    case Variant::A035378: return q(a035378_grouped(order));
    case Variant::A035378_dual: return q(a035378_dual(order));
    case Variant::A035378_paired: return q(a035378_paired(order));
    case Variant::A207557: return q(a207557(order));
    case Variant::A207557_rogers_fine: return q(a207557_rogers_fine(order));
    case Variant::A079144: return a079144_direct(order).to_ordinary();
    case Variant::A079144_andrews: return a079144_andrews(order).to_ordinary();
    case Variant::A158690: return a158690_egf(order).to_ordinary();
  }
  throw std::invalid_argument("unknown variant");
}

std::vector<IntSeries> a158690_products(int order) {
  std::vector<IntSeries> out;
  EgfSeries prod = EgfSeries::one(order);
  out.push_back(prod.scaled());
  for (int j = 1; j <= order; ++j) {
    prod = prod * egf_exp(j, order).add_constant(-1);
    out.push_back(prod.scaled());
  }
  return out;
}

// ---------------------------------------------------------------- identity checks

IdentityReport verify_andrews_jelinek(const LambdaSpec& spec, int order) {
  IntSeries lam = lambda_series(spec, order);
  return compare("andrews-jelinek " + spec.name(), fishburn_direct_raw(lam), fishburn_andrews_raw(lam));
}

GlaisherPair verify_glaisher(int m) {
  GlaisherPair g;
  const int top = 2 * m + 1;
  TruncatedSeries sin2(top), cos3(top);
  mpq_class t2 = 1, t3 = 1;  // running (c z)^n / n! coefficients
  for (int n = 0; n <= top; ++n) {
    if (n % 2 == 1) sin2.set(n, ((n / 2) % 2 ? -1 : 1) * t2);
    else cos3.set(n, ((n / 2) % 2 ? -1 : 1) * t3);
    t2 = t2 * 2 / (n + 1);
    t3 = t3 * 3 / (n + 1);
  }
  TruncatedSeries ratio = sin2 * cos3.inv() * mpq_class(1, 2);
  mpz_class f = 1;
  for (int n = 0; n <= top; ++n) {
    if (n) f *= n;
    if (n % 2 == 1) {
      mpq_class t = ratio[n] * f;
      if (t.get_den() != 1) throw SeriesError("Glaisher T-number is not integral");
      g.T.push_back(t.get_num());
    }
  }
  EgfSeries gz = a079144_direct(m);
  g.lhs = exp_linear(mpq_class(-1, 24), m) * gz.to_ordinary();
  for (int n = 0; n <= m; ++n) {
    mpz_class t = 0, binom = 1, p24;
    for (int i = 0; i <= n; ++i) {
      mpz_ui_pow_ui(p24.get_mpz_t(), 24, static_cast<unsigned long>(n - i));
      mpz_class term = binom * p24 * gz.scaled(n - i);
      t += (i % 2) ? mpz_class(-term) : term;
      binom = binom * (n - i) / (i + 1);
    }
    g.T_prime.push_back(t);
  }
  g.equal = g.T == g.T_prime;
  return g;
}

std::vector<IdentityReport> verify_a158690_forms(int order) {
  const int n = order;
  const IntSeries a = a158690_egf(n).scaled();
  std::vector<IdentityReport> out;

  {  // Σ Π (1 - e^{-(2j-1)z})
    const EgfSeries step = egf_exp(-2, n);
    EgfSeries cur = egf_exp(-1, n);
    EgfSeries s = sum_product<EgfSeries>(
        nullptr,
        [&](int) {
          EgfSeries f = (-cur).add_constant(1);
          cur = cur * step;
          return f;
        },
        EgfSeries::one(n));
    out.push_back(compare("odd exponents", a, s.scaled()));
  }
  {  // Σ e^{-(k+1)z} Π (1 - e^{-2jz})
    Powers<EgfSeries> d(egf_exp(-1, n)), e(egf_exp(-2, n));
    std::function<EgfSeries(int)> d_part = [&](int) { return d.next(); };
    std::function<EgfSeries(int)> factor = [&](int) { return (-e.next()).add_constant(1); };
    out.push_back(compare("shifted even exponents", a, sum_product<EgfSeries>(d_part, factor, EgfSeries::one(n)).scaled()));
  }
  {  // Σ e^{(2k+1)z} Π_{j<=2k} (e^{jz} - 1)
    Powers<EgfSeries> e(egf_exp(1, n));
    const EgfSeries e2 = egf_exp(2, n);
    EgfSeries dk = egf_exp(1, n);
    std::function<EgfSeries(int)> d_part = [&](int k) {
      if (k > 0) dk = dk * e2;
      return dk;
    };
    std::function<EgfSeries(int)> factor = [&](int) {
      EgfSeries f1 = e.next().add_constant(-1);
      return f1 * e.next().add_constant(-1);
    };
    out.push_back(compare("even products", a, sum_product<EgfSeries>(d_part, factor, EgfSeries::one(n)).scaled()));
  }
  {  // (1 + Σ e^{(k+1)z} Π (e^{jz} - 1)) / 2
    Powers<EgfSeries> d(egf_exp(1, n)), e(egf_exp(1, n));
    std::function<EgfSeries(int)> d_part = [&](int) { return d.next(); };
    std::function<EgfSeries(int)> factor = [&](int) { return e.next().add_constant(-1); };
    IntSeries s = sum_product<EgfSeries>(d_part, factor, EgfSeries::one(n)).add_constant(1).scaled();
    out.push_back(compare("half sum", a * mpz_class(2), s));
  }
  {  // a_n = (-1)^n/2 [z^n] R(e^{-z}),  R(q) = 1 + Σ (-1)^k q^{k+1} Π (1 - q^j)
    Powers<EgfSeries> d(egf_exp(-1, n)), e(egf_exp(-1, n));
    std::function<EgfSeries(int)> d_part = [&](int k) { return k % 2 ? -d.next() : d.next(); };
    std::function<EgfSeries(int)> factor = [&](int) { return (-e.next()).add_constant(1); };
    IntSeries r = sum_product<EgfSeries>(d_part, factor, EgfSeries::one(n)).add_constant(1).scaled();
    IntSeries signed_r(n);
    for (int i = 0; i <= n; ++i) signed_r.set(i, i % 2 ? mpz_class(-r[i]) : r[i]);
    out.push_back(compare("ramanujan R", a * mpz_class(2), signed_r));
  }
  return out;
}

IdentityReport verify_a035378_pairing(int order) {
  IntSeries a = a035378_grouped(order);
  IdentityReport r1 = compare("A035378 dual form", a, a035378_dual(order));
  IdentityReport r2 = compare("A035378 paired form", a, a035378_paired(order));
  IdentityReport r = r1.equal ? r2 : r1;
  r.name = "A035378 pairing";
  return r;
}

IdentityReport verify_a207557_rogers_fine(int order) {
  return compare("A207557 rogers-fine", a207557(order), a207557_rogers_fine(order));
}

IdentityReport verify_primitive_duality(int order) {
  IntSeries all = row_fishburn_gf(LambdaSpec::named(LambdaSpec::Tag::all), order);
  IntSeries prim = row_fishburn_gf(LambdaSpec::named(LambdaSpec::Tag::zero_one), order);
  IdentityReport r1 = compare("z -> z/(1+z)", all.mobius(-1), prim);
  IdentityReport r2 = compare("z -> z/(1-z)", prim.mobius(1), all);
  IdentityReport r = r1.equal ? r2 : r1;
  r.name = "primitive duality";
  return r;
}

// ---------------------------------------------------------------- catalog

namespace {

using Lt = LambdaSpec::Tag;

IntSeries egf_sum(int order, const std::function<EgfSeries(int)>& d_part,
                  const std::function<EgfSeries(int)>& factor) {
  return sum_product<EgfSeries>(d_part, factor, EgfSeries::one(order)).scaled();
}

// Σ_k d_k Π (e^{(2j-1)z} - 1)
IntSeries egf_odd_family(int order, const std::function<EgfSeries(int)>& d_part) {
  const EgfSeries e2 = egf_exp(2, order);
  EgfSeries cur = egf_exp(1, order);
  return egf_sum(order, d_part, [&](int) {
    EgfSeries f = cur.add_constant(-1);
    cur = cur * e2;
    return f;
  });
}

IntSeries fractional_family(int p, int s, int order) {
  SumProductSpec sp{binom_pow(1, 0, order), binom_pow(1, 1, order), 1, 0, p, s};
  return sum_product(sp);
}

IntSeries row_with_e(const IntSeries& e) {
  Powers<IntSeries> p(e);
  return sum_product<IntSeries>(nullptr, [&](int) { return p.next().add_constant(-1); },
                                IntSeries::one(e.order()));
}

std::vector<mpz_class> triangle(const BivariateSeries& f, int count) {
  std::vector<mpz_class> out;
  for (int n = 1; n <= f.order() && int(out.size()) < count; ++n)
    for (int k = 1; k <= n && int(out.size()) < count; ++k) out.push_back(f.extract_znvm(n, k));
  return out;
}

std::vector<mpz_class> to_terms(const IntSeries& s, int offset, int count) {
  std::vector<mpz_class> out;
  for (int i = offset; i < offset + count; ++i) out.push_back(s[i]);
  return out;
}

std::vector<mpz_class> rational_scaled(const TruncatedSeries& s, int count) {
  std::vector<mpz_class> out;
  mpz_class f = 1;
  for (int i = 0; i < count; ++i) {
    if (i) f *= i;
    mpq_class t = s[i] * f;
    if (t.get_den() != 1) throw SeriesError("factorial-scaled coefficient is not an integer");
    out.push_back(t.get_num());
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"A022493", 0, false, false, "Fishburn numbers"},
      {"A158690", 0, true, false, "n! [z^n] sum prod (e^{jz}-1)"},
      {"A179525", 0, false, false, "primitive row-Fishburn"},
      {"A158691", 0, false, false, "row-Fishburn"},
      {"A207433", 0, false, false, "row-Fishburn, entries {0,1,2}"},
      {"A289313", 0, false, false, "row-Fishburn, Lambda (1+z)/(1-z)"},
      {"A289316", 0, false, false, "row-Fishburn, entries 0 and odd"},
      {"A289317", 0, false, false, "Fishburn, entries 0 and odd"},
      {"A289312", 0, false, false, "Fishburn, Lambda (1+z)/(1-z)"},
      {"A138265", 0, false, false, "primitive Fishburn"},
      {"A079144", 0, true, false, "labelled interval orders"},
      {"A175579", 1, false, true, "Fishburn first-row triangle"},
      {"A182319", 1, false, true, "primitive row-Fishburn diagonal triangle"},
      {"A186737", 0, false, false, "recursive sum-product"},
      {"A224885", 0, false, false, "recursive sum-product"},
      {"A207652", 0, false, false, "sum prod ((1+z)^j-1)/(1-z^j)"},
      {"A207653", 0, false, false, "sum prod (1-(1-z)^{2j-1})/(1-z^{2j-1})"},
      {"A207651", 0, false, false, "sum prod (1-(1-z)^j)/(1-z^j)"},
      {"A207434", 1, false, false, "n [z^n] log of primitive row-Fishburn GF"},
      {"A035378", 0, false, false, "sum_{k>=1} prod (1-(z-1)^j)"},
      {"A207557", 0, false, false, "sum (1+z)^{-k(k-1)} prod ((1+z)^{2j-1}-1)"},
      {"A215066", 0, true, false, "sum prod (e^{(2j-1)z}-1)"},
      {"A209832", 0, true, false, "sum e^{(k+1)z} prod (e^{(2j-1)z}-1)"},
      {"A214687", 0, true, false, "sum e^{2kz} prod (e^{(2j-1)z}-1)"},
      {"A207569", 0, false, false, "sum prod ((1+z)^{2j-1}-1)"},
      {"A207570", 0, false, false, "sum prod ((1+z)^{3j-2}-1)"},
      {"A207571", 0, false, false, "sum prod ((1+z)^{3j-1}-1)"},
      {"A196194", 0, true, false, "sum (z/(e^z-1))^k prod (e^{jz}-1)"},
      {"A207214", 0, true, false, "sum e^{kz} prod (e^{jz}-1)"},
      {"A207386", 0, false, false, "sum prod (((1+z)/(1+z^3))^j-1)"},
      {"A207397", 0, false, false, "sum prod (((1+z)/(1+z^2))^j-1)"},
      {"A207556", 0, false, false, "sum (1+z)^k prod ((1+z)^j-1)"},
      {"A002439", 0, false, false, "Glaisher T-numbers"},
      {"A003406", 0, false, false, "coefficients of R(q)"},
  };
  return entries;
}

std::vector<mpz_class> catalog_terms(const std::string& id, int count) {
  const int n = count + 1;  // enough order for offset-1 sequences too
  auto row = [&](Lt t) { return to_terms(row_fishburn_gf(LambdaSpec::named(t), n), 0, count); };
  auto fish = [&](Lt t) { return to_terms(fishburn_gf(LambdaSpec::named(t), n), 0, count); };
  auto ints = [&](const TruncatedSeries& s, int offset) {
    std::vector<mpz_class> out;
    for (int i = offset; i < offset + count; ++i) out.push_back(s[i].get_num());
    return out;
  };
  if (id == "A022493") return fish(Lt::all);
  if (id == "A158690") return to_terms(a158690_egf(n).scaled(), 0, count);
  if (id == "A179525") return row(Lt::zero_one);
  if (id == "A158691") return row(Lt::all);
  if (id == "A207433") return row(Lt::zero_one_two);
  if (id == "A289313") return row(Lt::even_plus);
  if (id == "A289316") return row(Lt::odd);
  if (id == "A289317") return fish(Lt::odd);
  if (id == "A289312") return fish(Lt::even_plus);
  if (id == "A138265") return fish(Lt::zero_one);
  if (id == "A079144") return to_terms(a079144_direct(n).scaled(), 0, count);
  if (id == "A175579" || id == "A182319") {
    int rows = 1;
    while (rows * (rows + 1) / 2 < count) ++rows;
    const bool fr = id == "A175579";
    return triangle(stat_gf(fr ? Family::fishburn : Family::row_fishburn, fr ? Stat::first_row : Stat::diagonal,
                            LambdaSpec::named(fr ? Lt::all : Lt::zero_one), rows),
                    count);
  }
  if (id == "A186737") return to_terms(recursive_gf(RecursiveKind::A186737, n).series, 0, count);
  if (id == "A224885") return to_terms(recursive_gf(RecursiveKind::A224885, n).series, 0, count);
  if (id == "A207652") return ints(variant_gf(Variant::A207652, n), 0);
  if (id == "A207653") return ints(variant_gf(Variant::A207653, n), 0);
  if (id == "A207651") return ints(variant_gf(Variant::A207651, n), 0);
  if (id == "A207434") return ints(variant_gf(Variant::A207434, n), 1);
  if (id == "A035378") return ints(variant_gf(Variant::A035378, n), 0);
  if (id == "A207557") return ints(variant_gf(Variant::A207557, n), 0);
  if (id == "A215066") return to_terms(egf_odd_family(n, nullptr), 0, count);
  if (id == "A209832") {
    Powers<EgfSeries> d(egf_exp(1, n));
    return to_terms(egf_odd_family(n, [&](int) { return d.next(); }), 0, count);
  }
  if (id == "A214687") {
    const EgfSeries e2 = egf_exp(2, n);
    EgfSeries dk = EgfSeries::one(n);
    return to_terms(egf_odd_family(n, [&](int k) {
                      if (k > 0) dk = dk * e2;
                      return dk;
                    }),
                    0, count);
  }
  if (id == "A207569") return to_terms(fractional_family(2, 1, n), 0, count);
  if (id == "A207570") return to_terms(fractional_family(3, 2, n), 0, count);
  if (id == "A207571") return to_terms(fractional_family(3, 1, n), 0, count);
  if (id == "A196194") {
    // d(z) = z/(e^z - 1) has Bernoulli coefficients, so this one runs over the rationals
    std::vector<mpq_class> b = bernoulli(n);
    TruncatedSeries d(n), e = exp_linear(1, n);
    mpz_class f = 1;
    for (int i = 0; i <= n; ++i) {
      if (i) f *= i;
      d.set(i, b[i] / f);
    }
    Powers<TruncatedSeries> dp(d), ep(e);
    std::function<TruncatedSeries(int)> d_part = [&](int k) {
      return k == 0 ? TruncatedSeries::one(n) : dp.next();
    };
    std::function<TruncatedSeries(int)> factor = [&](int) { return ep.next().add_constant(-1); };
    return rational_scaled(sum_product<TruncatedSeries>(d_part, factor, TruncatedSeries::one(n)), count);
  }
  if (id == "A207214") {
    const EgfSeries e = egf_exp(1, n);
    EgfSeries dk = EgfSeries::one(n);
    Powers<EgfSeries> ep(e);
    return to_terms(egf_sum(
                        n,
                        [&](int k) {
                          if (k > 0) dk = dk * e;
                          return dk;
                        },
                        [&](int) { return ep.next().add_constant(-1); }),
                    0, count);
  }
  if (id == "A207386" || id == "A207397") {
    IntSeries num = binom_pow(1, 1, n);
    IntSeries den = IntSeries::monomial(1, id == "A207386" ? 3 : 2, n).add_constant(1);
    return to_terms(row_with_e(num * den.inv()), 0, count);
  }
  if (id == "A207556") {
    SumProductSpec sp{binom_pow(1, 1, n), binom_pow(1, 1, n), 1, 0, 1, 0};
    return to_terms(sum_product(sp), 0, count);
  }
  if (id == "A002439") return verify_glaisher(count - 1).T;
  if (id == "A003406") {
    // Σ_k q^{k(k+1)/2} / Π_{j<=k} (1 + q^j)
    IntSeries prod = IntSeries::one(n), total(n);
    for (int k = 0; k * (k + 1) / 2 <= n; ++k) {
      if (k > 0) prod = prod * IntSeries::monomial(1, k, n).add_constant(1).inv();
      total += prod.shift_up(k * (k + 1) / 2);
    }
    return to_terms(total, 0, count);
  }
  throw std::invalid_argument("sequence not in catalog: " + id);
}

}  // namespace fishburn
