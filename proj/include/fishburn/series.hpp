#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fishburn {

struct SeriesError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {
// Truncated products; c receives coefficients 0..nc-1.
void mul_coeffs(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                std::vector<mpz_class>& c, std::size_t nc);
void mul_coeffs(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                std::vector<mpq_class>& c, std::size_t nc);
// Exact integer quotient; throws if the division leaves a remainder.
mpz_class exact_div(const mpz_class& a, const mpz_class& b);
inline mpq_class exact_div(const mpq_class& a, const mpq_class& b) { return a / b; }
}  // namespace detail

template <class T>
class Series {
 public:
  Series() : c_(1) {}
  explicit Series(int order) : c_(checked(order) + 1) {}
  Series(std::vector<T> coeffs, int order) : c_(std::move(coeffs)) {
    if (order < 0) throw SeriesError("negative truncation order");
    if (c_.size() > std::size_t(order) + 1) throw SeriesError("more coefficients than order allows");
    c_.resize(std::size_t(order) + 1);
  }

  static Series constant(const T& v, int order) {
    Series s(order);
    s.c_[0] = v;
    return s;
  }
  static Series one(int order) { return constant(T(1), order); }
  static Series monomial(const T& v, int deg, int order) {
    Series s(order);
    if (deg < 0) throw SeriesError("negative monomial degree");
    if (deg <= order) s.c_[deg] = v;
    return s;
  }

  int order() const { return int(c_.size()) - 1; }
  const T& operator[](int i) const { return c_.at(std::size_t(i)); }
  void set(int i, const T& v) { c_.at(std::size_t(i)) = v; }
  const std::vector<T>& coeffs() const { return c_; }

  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return int(i);
    return order() + 1;
  }
  bool is_zero() const { return valuation() > order(); }

  bool operator==(const Series& o) const { return c_ == o.c_; }
  bool operator!=(const Series& o) const { return !(*this == o); }

  Series operator-() const {
    Series r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Series& operator+=(const Series& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b) {
    a.same_order(b);
    Series r(a.order());
    detail::mul_coeffs(a.c_, b.c_, r.c_, r.c_.size());
    return r;
  }
  friend Series operator*(Series a, const T& s) {
    for (auto& x : a.c_) x *= s;
    return a;
  }
  friend Series operator*(const T& s, Series a) { return std::move(a) * s; }

  Series add_constant(const T& v) const {
    Series r(*this);
    r.c_[0] += v;
    return r;
  }

  // Reciprocal via the triangular recurrence; integer series need a unit constant term.
  Series inv() const {
    if (sgn(c_[0]) == 0) throw SeriesError("inverse of a series with zero constant term");
    const int n = order();
    Series r(n);
    r.c_[0] = detail::exact_div(T(1), c_[0]);
    T acc;
    for (int m = 1; m <= n; ++m) {
      acc = 0;
      for (int i = 1; i <= m; ++i)
        if (sgn(c_[i]) != 0) acc += c_[i] * r.c_[m - i];
      r.c_[m] = detail::exact_div(T(-acc), c_[0]);
    }
    return r;
  }

  Series pow(long k) const {
    if (k < 0) return inv().pow(-k);
    Series result = one(order());
    Series base = *this;
    bool first = true;
    while (k > 0) {
      if (k & 1) {
        result = first ? base : result * base;
        first = false;
      }
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  // z -> c z
  Series scale(const T& c) const {
    Series r(*this);
    T p(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      r.c_[i] *= p;
      p *= c;
    }
    return r;
  }
  // z -> z^m
  Series dilate(int m) const {
    if (m < 1) throw SeriesError("substitution z -> z^m needs m >= 1");
    Series r(order());
    for (int i = 0; i * m <= order(); ++i) r.c_[std::size_t(i) * m] = c_[i];
    return r;
  }
  // z -> z/(1 - sign*z), sign in {+1,-1}; evaluated by Horner on the substituted series.
  Series mobius(int sign) const {
    if (sign != 1 && sign != -1) throw SeriesError("mobius substitution sign must be +1 or -1");
    const int n = order();
    Series u(n);  // z/(1 - sign z)
    T p(1);
    for (int i = 1; i <= n; ++i) {
      u.c_[i] = p;
      p *= T(sign);
    }
    return compose(u);
  }
  // Composition with a series of positive valuation.
  Series compose(const Series& u) const {
    same_order(u);
    if (sgn(u.c_[0]) != 0) throw SeriesError("substituted series must have valuation >= 1");
    Series r(order());
    for (int i = order(); i >= 0; --i) {
      r = r * u;
      r.c_[0] += c_[i];
    }
    return r;
  }

  // Multiply by z^s keeping the order.
  Series shift_up(int s) const {
    Series r(order());
    for (int i = 0; i + s <= order(); ++i) r.c_[i + s] = c_[i];
    return r;
  }
  // Divide by z^s; the result has order N - s.
  Series shift_down(int s) const {
    if (s < 0 || s > order()) throw SeriesError("shift exceeds order");
    if (valuation() < s) throw SeriesError("series not divisible by requested power of z");
    return Series(std::vector<T>(c_.begin() + s, c_.end()), order() - s);
  }
  Series truncate(int m) const {
    if (m > order()) throw SeriesError("cannot truncate above the current order");
    return Series(std::vector<T>(c_.begin(), c_.begin() + m + 1), m);
  }
  Series derivative() const {
    Series r(order());
    for (int i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * T(i);
    return r;
  }

  template <class U>
  Series<U> cast() const {
    std::vector<U> v(c_.begin(), c_.end());
    return Series<U>(std::move(v), order());
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ' ';
      s += c_[i].get_str();
    }
    return s;
  }

 private:
  static int checked(int order) {
    if (order < 0) throw SeriesError("negative truncation order");
    return order;
  }
  void same_order(const Series& o) const {
    if (o.order() != order())
      throw SeriesError("order mismatch: " + std::to_string(order()) + " vs " +
                        std::to_string(o.order()));
  }
  std::vector<T> c_;
};

using TruncatedSeries = Series<mpq_class>;
using IntSeries = Series<mpz_class>;

TruncatedSeries make(const std::vector<mpq_class>& coeffs, int order);
// Coefficient n equals c^n / n!.
TruncatedSeries exp_linear(const mpq_class& c, int order);
std::vector<mpq_class> bernoulli(int m);
mpz_class factorial(int n);

// Exponential-type series held as scaled integers b_n = n! [z^n] f.
class EgfSeries {
 public:
  explicit EgfSeries(int order) : b_(order) {}
  explicit EgfSeries(IntSeries scaled) : b_(std::move(scaled)) {}
  static EgfSeries one(int order) { return EgfSeries(IntSeries::one(order)); }
  // e^{j z}
  static EgfSeries exp_linear(long j, int order);
  // Polynomial in z with integer coefficients.
  static EgfSeries from_ordinary(const IntSeries& s);

  int order() const { return b_.order(); }
  int valuation() const { return b_.valuation(); }
  const IntSeries& scaled() const { return b_; }
  const mpz_class& scaled(int n) const { return b_[n]; }
  TruncatedSeries to_ordinary() const;

  bool operator==(const EgfSeries& o) const { return b_ == o.b_; }
  EgfSeries operator-() const { return EgfSeries(-b_); }
  friend EgfSeries operator+(const EgfSeries& a, const EgfSeries& b) { return EgfSeries(a.b_ + b.b_); }
  friend EgfSeries operator-(const EgfSeries& a, const EgfSeries& b) { return EgfSeries(a.b_ - b.b_); }
  friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b);
  friend EgfSeries operator*(const EgfSeries& a, const mpz_class& s) { return EgfSeries(a.b_ * s); }
  EgfSeries add_constant(const mpz_class& v) const { return EgfSeries(b_.add_constant(v)); }
  EgfSeries pow(long k) const;
  // z -> c z with integer c
  EgfSeries scale(const mpz_class& c) const { return EgfSeries(b_.scale(c)); }

 private:
  IntSeries b_;
};

// Series in z whose coefficients are integer polynomials in a marking variable.
// With cap >= 0 the marking variable is truncated above degree cap.
class BivariateSeries {
 public:
  using Poly = std::vector<mpz_class>;

  explicit BivariateSeries(int order, int cap = -1);
  static BivariateSeries from_univariate(const IntSeries& s, int cap = -1);
  static BivariateSeries one(int order, int cap = -1);

  int order() const { return int(c_.size()) - 1; }
  int cap() const { return cap_; }
  const Poly& coeff(int n) const { return c_.at(std::size_t(n)); }
  void set(int n, Poly p);
  int valuation() const;
  bool operator==(const BivariateSeries& o) const { return cap_ == o.cap_ && c_ == o.c_; }

  BivariateSeries& operator+=(const BivariateSeries& o);
  BivariateSeries& operator-=(const BivariateSeries& o);
  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  BivariateSeries operator-() const;
  BivariateSeries add_constant(const mpz_class& v) const;
  BivariateSeries pow(long k) const;
  BivariateSeries inv() const;

  // Polynomial coefficient of z^n.
  Poly extract_zn(int n) const;
  mpz_class extract_znvm(int n, int m) const;
  // Marking variable set to 1.
  IntSeries at_one() const;

 private:
  void same_shape(const BivariateSeries& o) const;
  void normalize(Poly& p) const;
  int cap_;
  std::vector<Poly> c_;
};

}  // namespace fishburn
