#include "fishburn/series.hpp"

#include <algorithm>
#include <cstring>

static_assert(GMP_NUMB_BITS == 64, "limb packing assumes 64-bit limbs without nails");

namespace fishburn {

namespace detail {

namespace {

std::size_t bit_length(const mpz_class& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

// OR the magnitude of x into buf at bit offset off.
void place(std::vector<mp_limb_t>& buf, std::size_t off, const mpz_class& x) {
  const mp_limb_t* src = mpz_limbs_read(x.get_mpz_t());
  const std::size_t n = mpz_size(x.get_mpz_t());
  const std::size_t w = off / 64, sh = off % 64;
  for (std::size_t t = 0; t < n; ++t) {
    buf[w + t] |= src[t] << sh;
    if (sh) buf[w + t + 1] |= src[t] >> (64 - sh);
  }
}

void from_limbs(mpz_class& z, const std::vector<mp_limb_t>& buf) {
  std::size_t n = buf.size();
  while (n > 0 && buf[n - 1] == 0) --n;
  if (n == 0) {
    z = 0;
    return;
  }
  mp_limb_t* dst = mpz_limbs_write(z.get_mpz_t(), mp_size_t(n));
  std::memcpy(dst, buf.data(), n * sizeof(mp_limb_t));
  mpz_limbs_finish(z.get_mpz_t(), mp_size_t(n));
}

void pack(const std::vector<mpz_class>& a, std::size_t n, std::size_t bits, mpz_class& out) {
  const std::size_t limbs = (n * bits) / 64 + 2 + bits / 64;
  std::vector<mp_limb_t> pos(limbs, 0), neg;
  for (std::size_t i = 0; i < n; ++i) {
    int s = sgn(a[i]);
    if (s > 0) {
      place(pos, i * bits, a[i]);
    } else if (s < 0) {
      if (neg.empty()) neg.assign(limbs, 0);
      place(neg, i * bits, a[i]);
    }
  }
  from_limbs(out, pos);
  if (!neg.empty()) {
    mpz_class m;
    from_limbs(m, neg);
    out -= m;
  }
}

// Balanced-digit decoding of z in base 2^bits.
void unpack(mpz_class z, std::size_t bits, std::vector<mpz_class>& c, std::size_t nc) {
  const bool negative = sgn(z) < 0;
  if (negative) z = -z;
  const mp_limb_t* src = mpz_limbs_read(z.get_mpz_t());
  const std::size_t zn = mpz_size(z.get_mpz_t());
  const std::size_t wlen = bits / 64 + 1;
  std::vector<mp_limb_t> tmp(wlen);
  mpz_class half, full, chunk;
  mpz_setbit(half.get_mpz_t(), bits - 1);
  mpz_setbit(full.get_mpz_t(), bits);
  bool carry = false;
  for (std::size_t i = 0; i < nc; ++i) {
    const std::size_t off = i * bits, w = off / 64, sh = off % 64;
    if (w >= zn && !carry) {
      for (std::size_t j = i; j < nc; ++j) c[j] = 0;
      return;
    }
    for (std::size_t t = 0; t < wlen; ++t) {
      mp_limb_t lo = (w + t < zn) ? src[w + t] : 0;
      mp_limb_t hi = (sh && w + t + 1 < zn) ? src[w + t + 1] : 0;
      tmp[t] = sh ? ((lo >> sh) | (hi << (64 - sh))) : lo;
    }
    const std::size_t rem = bits % 64;
    if (rem) tmp[wlen - 1] &= (mp_limb_t(1) << rem) - 1;
    else tmp[wlen - 1] = 0;
    from_limbs(chunk, tmp);
    if (carry) chunk += 1;
    if (chunk >= half) {
      chunk -= full;
      carry = true;
    } else {
      carry = false;
    }
    c[i] = negative ? mpz_class(-chunk) : chunk;
  }
}

template <class T>
void schoolbook(const std::vector<T>& a, std::size_t va, std::size_t la, const std::vector<T>& b,
                std::size_t vb, std::size_t lb, std::vector<T>& c, std::size_t nc) {
  for (std::size_t i = va; i < la; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = vb; j < lb && i + j < nc; ++j)
      if (sgn(b[j]) != 0) c[i + j] += a[i] * b[j];
  }
}

template <class T>
std::pair<std::size_t, std::size_t> support(const std::vector<T>& a, std::size_t limit) {
  std::size_t lo = 0, hi = std::min(a.size(), limit);
  while (lo < hi && sgn(a[lo]) == 0) ++lo;
  while (hi > lo && sgn(a[hi - 1]) == 0) --hi;
  return {lo, hi};
}

}  // namespace

void mul_coeffs(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                std::vector<mpz_class>& c, std::size_t nc) {
  c.assign(nc, mpz_class(0));
  auto [va, la] = support(a, nc);
  auto [vb, lb] = support(b, nc);
  if (va >= la || vb >= lb || va + vb >= nc) return;
  la = std::min(la, nc - vb);
  lb = std::min(lb, nc - va);
  const std::size_t na = la - va, nb = lb - vb;
  if (std::min(na, nb) <= 12) {
    schoolbook(a, va, la, b, vb, lb, c, nc);
    return;
  }
  std::size_t ba = 0, bb = 0;
  for (std::size_t i = va; i < la; ++i) ba = std::max(ba, bit_length(a[i]));
  for (std::size_t j = vb; j < lb; ++j) bb = std::max(bb, bit_length(b[j]));
  std::size_t terms = std::min(na, nb), tb = 0;
  while (terms) {
    ++tb;
    terms >>= 1;
  }
  const std::size_t bits = ba + bb + tb + 2;
  std::vector<mpz_class> as(a.begin() + va, a.begin() + la), bs(b.begin() + vb, b.begin() + lb);
  mpz_class x, y;
  pack(as, na, bits, x);
  pack(bs, nb, bits, y);
  x *= y;
  const std::size_t nout = std::min(nc - va - vb, na + nb - 1);
  std::vector<mpz_class> out(nout);
  unpack(x, bits, out, nout);
  for (std::size_t i = 0; i < nout; ++i) c[va + vb + i] = std::move(out[i]);
}

void mul_coeffs(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                std::vector<mpq_class>& c, std::size_t nc) {
  auto common = [nc](const std::vector<mpq_class>& s, std::vector<mpz_class>& num) {
    mpz_class den = 1;
    const std::size_t n = std::min(s.size(), nc);
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(s[i]) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s[i].get_den_mpz_t());
    num.assign(n, mpz_class(0));
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(s[i]) != 0) num[i] = s[i].get_num() * (den / s[i].get_den());
    return den;
  };
  std::vector<mpz_class> an, bn, cn;
  mpz_class da = common(a, an), db = common(b, bn);
  mul_coeffs(an, bn, cn, nc);
  const mpz_class d = da * db;
  c.assign(nc, mpq_class(0));
  for (std::size_t i = 0; i < nc; ++i) {
    if (sgn(cn[i]) == 0) continue;
    c[i] = mpq_class(cn[i], d);
    c[i].canonicalize();
  }
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw SeriesError("inexact integer division in integer series");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

TruncatedSeries make(const std::vector<mpq_class>& coeffs, int order) {
  return TruncatedSeries(coeffs, order);
}

TruncatedSeries exp_linear(const mpq_class& c, int order) {
  TruncatedSeries s(order);
  mpq_class t = 1;
  for (int n = 0; n <= order; ++n) {
    s.set(n, t);
    t *= c;
    t /= n + 1;
  }
  return s;
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

std::vector<mpq_class> bernoulli(int m) {
  if (m < 0) throw SeriesError("negative Bernoulli index");
  std::vector<mpq_class> b(std::size_t(m) + 1);
  b[0] = 1;
  for (int n = 1; n <= m; ++n) {
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(n+1, k)
    for (int k = 0; k < n; ++k) {
      acc += binom * b[k];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    b[n] = -acc / (n + 1);
  }
  return b;
}

EgfSeries EgfSeries::exp_linear(long j, int order) {
  IntSeries s(order);
  mpz_class p = 1;
  for (int n = 0; n <= order; ++n) {
    s.set(n, p);
    p *= j;
  }
  return EgfSeries(std::move(s));
}

EgfSeries EgfSeries::from_ordinary(const IntSeries& s) {
  IntSeries r(s.order());
  mpz_class f = 1;
  for (int n = 0; n <= s.order(); ++n) {
    if (n) f *= n;
    r.set(n, s[n] * f);
  }
  return EgfSeries(std::move(r));
}

TruncatedSeries EgfSeries::to_ordinary() const {
  TruncatedSeries r(order());
  mpz_class f = 1;
  for (int n = 0; n <= order(); ++n) {
    if (n) f *= n;
    mpq_class q(b_[n], f);
    q.canonicalize();
    r.set(n, q);
  }
  return r;
}

// Binomial convolution through an ordinary product: scale both sides by N!/i!.
EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
  if (a.order() != b.order()) throw SeriesError("order mismatch in EGF product");
  const int n = a.order();
  std::vector<mpz_class> w(std::size_t(n) + 1);  // w[i] = N!/i!
  w[n] = 1;
  for (int i = n; i > 0; --i) w[i - 1] = w[i] * i;
  std::vector<mpz_class> as(w.size()), bs(w.size()), cs;
  for (int i = 0; i <= n; ++i) {
    if (sgn(a.b_[i])) as[i] = a.b_[i] * w[i];
    if (sgn(b.b_[i])) bs[i] = b.b_[i] * w[i];
  }
  detail::mul_coeffs(as, bs, cs, w.size());
  const mpz_class nf2 = w[0] * w[0];
  IntSeries r(n);
  mpz_class f = 1;
  for (int m = 0; m <= n; ++m) {
    if (m) f *= m;
    if (sgn(cs[m])) r.set(m, detail::exact_div(cs[m] * f, nf2));
  }
  return EgfSeries(std::move(r));
}

EgfSeries EgfSeries::pow(long k) const {
  if (k < 0) throw SeriesError("negative power of an EGF series");
  EgfSeries result = one(order()), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

BivariateSeries::BivariateSeries(int order, int cap) : cap_(cap) {
  if (order < 0) throw SeriesError("negative truncation order");
  c_.resize(std::size_t(order) + 1);
}

BivariateSeries BivariateSeries::from_univariate(const IntSeries& s, int cap) {
  BivariateSeries r(s.order(), cap);
  for (int n = 0; n <= s.order(); ++n)
    if (sgn(s[n])) r.c_[n] = Poly{s[n]};
  return r;
}

BivariateSeries BivariateSeries::one(int order, int cap) {
  return from_univariate(IntSeries::one(order), cap);
}

void BivariateSeries::normalize(Poly& p) const {
  if (cap_ >= 0 && p.size() > std::size_t(cap_) + 1) p.resize(std::size_t(cap_) + 1);
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void BivariateSeries::set(int n, Poly p) {
  normalize(p);
  c_.at(std::size_t(n)) = std::move(p);
}

int BivariateSeries::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].empty()) return int(i);
  return order() + 1;
}

void BivariateSeries::same_shape(const BivariateSeries& o) const {
  if (o.order() != order()) throw SeriesError("order mismatch in bivariate series");
  if (o.cap_ != cap_) throw SeriesError("marking-degree cap mismatch in bivariate series");
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
  same_shape(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Poly& p = c_[i];
    const Poly& q = o.c_[i];
    if (q.size() > p.size()) p.resize(q.size());
    for (std::size_t m = 0; m < q.size(); ++m) p[m] += q[m];
    normalize(p);
  }
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
  same_shape(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Poly& p = c_[i];
    const Poly& q = o.c_[i];
    if (q.size() > p.size()) p.resize(q.size());
    for (std::size_t m = 0; m < q.size(); ++m) p[m] -= q[m];
    normalize(p);
  }
  return *this;
}

BivariateSeries BivariateSeries::operator-() const {
  BivariateSeries r(*this);
  for (auto& p : r.c_)
    for (auto& x : p) x = -x;
  return r;
}

BivariateSeries BivariateSeries::add_constant(const mpz_class& v) const {
  BivariateSeries r(*this);
  Poly& p = r.c_[0];
  if (p.empty()) p.resize(1);
  p[0] += v;
  r.normalize(p);
  return r;
}

// Two-level Kronecker substitution: slot(i, m) = i*W + m.
BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  a.same_shape(b);
  const int n = a.order();
  std::size_t da = 0, db = 0;
  for (const auto& p : a.c_) da = std::max(da, p.size());
  for (const auto& p : b.c_) db = std::max(db, p.size());
  BivariateSeries r(n, a.cap_);
  if (da == 0 || db == 0) return r;
  const std::size_t w = da + db - 1;
  const std::size_t slots = std::size_t(n + 1) * w;
  std::vector<mpz_class> fa(slots), fb(slots), fc;
  for (int i = 0; i <= n; ++i) {
    for (std::size_t m = 0; m < a.c_[i].size(); ++m) fa[i * w + m] = a.c_[i][m];
    for (std::size_t m = 0; m < b.c_[i].size(); ++m) fb[i * w + m] = b.c_[i][m];
  }
  detail::mul_coeffs(fa, fb, fc, slots);
  for (int i = 0; i <= n; ++i) {
    BivariateSeries::Poly p(fc.begin() + i * w, fc.begin() + (i + 1) * w);
    r.normalize(p);
    r.c_[i] = std::move(p);
  }
  return r;
}

BivariateSeries BivariateSeries::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  BivariateSeries result = one(order(), cap_), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

// Newton iteration g <- g(2 - f g), doubling correct z-orders each round.
BivariateSeries BivariateSeries::inv() const {
  if (c_[0].size() != 1 || (c_[0][0] != 1 && c_[0][0] != -1))
    throw SeriesError("bivariate inverse needs a unit constant term");
  BivariateSeries g = one(order(), cap_);
  if (c_[0][0] == -1) g = -g;
  for (int prec = 1; prec <= order(); prec *= 2) {
    BivariateSeries e = (*this * g);
    g = g * (-e).add_constant(mpz_class(2));
  }
  return g;
}

BivariateSeries::Poly BivariateSeries::extract_zn(int n) const {
  if (n < 0 || n > order()) throw SeriesError("extraction index beyond truncation order");
  return c_[n];
}

mpz_class BivariateSeries::extract_znvm(int n, int m) const {
  const Poly& p = extract_zn(n);
  return (m >= 0 && std::size_t(m) < p.size()) ? p[m] : mpz_class(0);
}

IntSeries BivariateSeries::at_one() const {
  IntSeries r(order());
  for (int i = 0; i <= order(); ++i) {
    mpz_class s = 0;
    for (const auto& x : c_[i]) s += x;
    r.set(i, s);
  }
  return r;
}

}  // namespace fishburn
