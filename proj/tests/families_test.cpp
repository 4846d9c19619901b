#include <gtest/gtest.h>

#include <set>

#include "fishburn/families.hpp"

namespace fishburn {
namespace {

using Tag = LambdaSpec::Tag;
using Poly = std::vector<mpz_class>;

// Plain truncated polynomial arithmetic, kept separate from the series library.
Poly mul(const Poly& a, const Poly& b, int n) {
  Poly c(std::size_t(n) + 1);
  for (std::size_t i = 0; i < a.size() && i <= std::size_t(n); ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= std::size_t(n); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly power(const Poly& a, int k, int n) {
  Poly r(std::size_t(n) + 1);
  r[0] = 1;
  for (int i = 0; i < k; ++i) r = mul(r, a, n);
  return r;
}

Poly inverse(const Poly& a, int n) {  // a[0] = ±1
  Poly r(std::size_t(n) + 1);
  r[0] = a[0];
  for (int m = 1; m <= n; ++m) {
    mpz_class acc = 0;
    for (int i = 1; i <= m && std::size_t(i) < a.size(); ++i) acc += a[std::size_t(i)] * r[std::size_t(m - i)];
    r[std::size_t(m)] = -acc * a[0];
  }
  return r;
}

// Σ_k Π_{j<=k} (1 - (1-z)^j)
Poly zagier(int n) {
  Poly total(std::size_t(n) + 1), prod(std::size_t(n) + 1);
  prod[0] = 1;
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= n; ++i) total[std::size_t(i)] += prod[std::size_t(i)];
    Poly f = power({1, -1}, k + 1, n);
    for (auto& x : f) x = -x;
    f[0] += 1;
    prod = mul(prod, f, n);
  }
  return total;
}

// Σ_k Π_{j<=k} (Λ^j - 1) for a polynomial or rational Λ given by its coefficients.
Poly row_form(const Poly& lambda, int n) {
  Poly total(std::size_t(n) + 1), prod(std::size_t(n) + 1);
  prod[0] = 1;
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= n; ++i) total[std::size_t(i)] += prod[std::size_t(i)];
    Poly f = power(lambda, k + 1, n);
    f[0] -= 1;
    prod = mul(prod, f, n);
  }
  return total;
}

// Σ_k Λ(z)^{k+1} Π_{j<=k} (Λ(z²)^j - 1)
Poly self_dual_form(const Poly& lambda, int n) {
  Poly l2(std::size_t(n) + 1);
  for (std::size_t i = 0; i < lambda.size() && 2 * i <= std::size_t(n); ++i) l2[2 * i] = lambda[i];
  Poly total(std::size_t(n) + 1), prod(std::size_t(n) + 1);
  prod[0] = 1;
  for (int k = 0; 2 * k <= n; ++k) {
    const Poly t = mul(power(lambda, k + 1, n), prod, n);
    for (int i = 0; i <= n; ++i) total[std::size_t(i)] += t[std::size_t(i)];
    Poly f = power(l2, k + 1, n);
    f[0] -= 1;
    prod = mul(prod, f, n);
  }
  return total;
}

std::vector<mpz_class> coeffs(const IntSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

Poly values(std::initializer_list<long> xs) {
  Poly p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

TEST(LambdaSpec, NamedTags) {
  const auto all = LambdaSpec::named(Tag::all);
  EXPECT_EQ(all.lambda(0), 1);
  EXPECT_EQ(all.lambda(5), 1);
  EXPECT_EQ(LambdaSpec::named(Tag::zero_one).lambda(2), 0);
  EXPECT_EQ(LambdaSpec::named(Tag::even_plus).lambda(3), 2);
  EXPECT_EQ(LambdaSpec::named(Tag::odd).lambda(4), 0);
  EXPECT_EQ(LambdaSpec::named(Tag::no_one).lambda(1), 0);
  EXPECT_EQ(LambdaSpec::named(Tag::no_one).lambda(2), 1);
}

TEST(LambdaSpec, ParseForms) {
  EXPECT_EQ(LambdaSpec::parse("01").lambda(1), 1);
  EXPECT_EQ(LambdaSpec::parse("01").lambda(2), 0);
  const auto v = LambdaSpec::parse("0,2,4,5");
  EXPECT_EQ(v.lambda(1), 0);
  EXPECT_EQ(v.lambda(2), 1);
  EXPECT_EQ(v.lambda(3), 0);
  EXPECT_EQ(v.lambda(5), 1);
  EXPECT_EQ(v.lambda(6), 0);
  const auto l = LambdaSpec::parse("l:2,0,3");
  EXPECT_EQ(l.lambda(1), 2);
  EXPECT_EQ(l.lambda(3), 3);
  EXPECT_EQ(l.lambda(4), 0);
  EXPECT_THROW(LambdaSpec::parse("x"), std::invalid_argument);
  EXPECT_THROW(LambdaSpec::parse("l:1,a"), std::invalid_argument);
}

TEST(LambdaSpec, SeriesOfNamedTags) {
  const IntSeries s = lambda_series(LambdaSpec::named(Tag::even_plus), 6);
  EXPECT_EQ(coeffs(s), values({1, 2, 2, 2, 2, 2, 2}));  // (1+z)/(1-z)
}

TEST(Families, PrintedPrefixes) {
  const auto all = LambdaSpec::named(Tag::all), prim = LambdaSpec::named(Tag::zero_one);
  EXPECT_EQ(coeffs(fishburn_gf(all, 6)), values({1, 1, 2, 5, 15, 53, 217}));
  EXPECT_EQ(coeffs(row_fishburn_gf(all, 6)), values({1, 1, 3, 12, 61, 380, 2815}));
  EXPECT_EQ(coeffs(row_fishburn_gf(prim, 6)), values({1, 1, 2, 7, 33, 197, 1419}));
  EXPECT_EQ(coeffs(self_dual_gf(all, 6)), values({1, 1, 2, 3, 7, 13, 33}));
  EXPECT_EQ(coeffs(self_dual_gf(prim, 6)), values({1, 1, 1, 2, 3, 6, 13}));
}

TEST(Families, FishburnMatchesZagierForm) {
  const int n = 40;
  EXPECT_EQ(coeffs(fishburn_gf(LambdaSpec::named(Tag::all), n)), zagier(n));
  EXPECT_EQ(coeffs(fishburn_gf(LambdaSpec::named(Tag::all), n, FishburnForm::direct)), zagier(n));
}

TEST(Families, RowFishburnMatchesDirectForm) {
  const int n = 30;
  EXPECT_EQ(coeffs(row_fishburn_gf(LambdaSpec::named(Tag::zero_one), n)), row_form(values({1, 1}), n));
  EXPECT_EQ(coeffs(row_fishburn_gf(LambdaSpec::named(Tag::all), n)), row_form(inverse(values({1, -1}), n), n));
  EXPECT_EQ(coeffs(row_fishburn_gf(LambdaSpec::parse("0,2,3"), n)), row_form(values({1, 0, 1, 1}), n));
}

TEST(Families, SelfDualMatchesDirectForm) {
  const int n = 30;
  EXPECT_EQ(coeffs(self_dual_gf(LambdaSpec::named(Tag::all), n)), self_dual_form(inverse(values({1, -1}), n), n));
  EXPECT_EQ(coeffs(self_dual_gf(LambdaSpec::parse("l:2,1"), n)), self_dual_form(values({1, 2, 1}), n));
}

TEST(Families, FishburnFormsAgreeForOtherLambdas) {
  for (const char* s : {"01", "012", "odd", "even+", "l:0,1,0,1,1", "l:3,0,2"}) {
    const auto spec = LambdaSpec::parse(s);
    EXPECT_EQ(fishburn_gf(spec, 25, FishburnForm::direct), fishburn_gf(spec, 25, FishburnForm::andrews)) << s;
  }
}

TEST(Families, StatisticGfsMarginaliseToCounts) {
  const auto spec = LambdaSpec::named(Tag::all);
  for (Family f : {Family::row_fishburn, Family::fishburn, Family::self_dual})
    for (Stat s : {Stat::first_row, Stat::diagonal, Stat::ones, Stat::twos})
      EXPECT_EQ(stat_gf(f, s, spec, 14).at_one(), family_gf(f, spec, 14)) << to_string(f) << " " << to_string(s);
}

TEST(Families, FirstRowOfSizeFour) {
  // The 15 Fishburn matrices of size 4 have first-row sums 1, 2, 3, 4 with counts 5, 6, 3, 1.
  const auto p = stat_gf(Family::fishburn, Stat::first_row, LambdaSpec::named(Tag::all), 4).extract_zn(4);
  EXPECT_EQ(p, values({0, 5, 6, 3, 1}));
}

TEST(Families, JetMatchesFullGf) {
  // [w^1] of the jet is Σ_m m [v^m].
  const auto spec = LambdaSpec::named(Tag::all);
  const int n = 12;
  const auto full = stat_gf(Family::fishburn, Stat::ones, spec, n);
  const auto jet = stat_gf_jet(Family::fishburn, Stat::ones, spec, n, 2);
  for (int i = 0; i <= n; ++i) {
    const auto p = full.extract_zn(i);
    mpz_class first = 0, second = 0;
    for (std::size_t m = 0; m < p.size(); ++m) {
      first += mpz_class(long(m)) * p[m];
      second += mpz_class(long(m * (m > 0 ? m - 1 : 0) / 2)) * p[m];
    }
    EXPECT_EQ(jet.extract_znvm(i, 1), first) << i;
    EXPECT_EQ(jet.extract_znvm(i, 2), second) << i;
  }
}

TEST(Families, DiagonalDirectFormMatchesAndrewsForm) {
  const auto spec = LambdaSpec::named(Tag::all);
  const auto direct = fishburn_stat_direct(Stat::diagonal, spec, 12);
  const auto printed = fishburn_diagonal_direct_as_printed(spec, 12);
  EXPECT_EQ(direct, stat_gf(Family::fishburn, Stat::diagonal, spec, 12));
  EXPECT_EQ(printed, direct.add_constant(mpz_class(1)));
}

TEST(Families, RecursiveSequences) {
  const auto a = recursive_gf(RecursiveKind::A186737, 8);
  EXPECT_TRUE(a.stabilized);
  EXPECT_EQ(coeffs(a.series), values({1, 1, 3, 14, 82, 563, 4390, 38273, 370090}));
  const auto b = recursive_gf(RecursiveKind::A224885, 5);
  EXPECT_EQ(coeffs(b.series), values({1, 1, 2, 15, 143, 1552}));
}

TEST(Families, Identities) {
  for (Tag t : {Tag::all, Tag::zero_one, Tag::even_plus, Tag::odd}) {
    const auto r = verify_andrews_jelinek(LambdaSpec::named(t), 40);
    EXPECT_TRUE(r.equal) << r.name << " " << r.first_mismatch;
  }
  for (const auto& r : verify_a158690_forms(20)) EXPECT_TRUE(r.equal) << r.name;
  EXPECT_TRUE(verify_a035378_pairing(25).equal);
  EXPECT_TRUE(verify_a207557_rogers_fine(25).equal);
  EXPECT_TRUE(verify_primitive_duality(25).equal);
}

TEST(Families, GlaisherNumbers) {
  const auto g = verify_glaisher(5);
  EXPECT_TRUE(g.equal);
  EXPECT_EQ(g.T, values({1, 23, 1681, 257543, 67637281, 27138236663}));
}

TEST(Families, PrototypeProductsSumToA158690) {
  const auto products = a158690_products(10);
  const auto terms = catalog_terms("A158690", 11);
  for (int n = 0; n <= 10; ++n) {
    mpz_class t = 0;
    for (const auto& p : products) t += p[n];
    EXPECT_EQ(t, terms[std::size_t(n)]) << n;
  }
  // n! [z^n] (e^z - 1) = 1 for n >= 1
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(products[1][n], 1);
}

TEST(Families, LabelledIntervalOrders) {
  // Σ_k Π (1 - e^{-jz}) scaled by n!: 1, 1, 3, 19, 207, 3451
  EXPECT_EQ(catalog_terms("A079144", 6), values({1, 1, 3, 19, 207, 3451}));
}

TEST(Families, CatalogueHasUniqueIds) {
  std::set<std::string> ids;
  for (const auto& e : catalog()) EXPECT_TRUE(ids.insert(e.id).second) << e.id;
  EXPECT_THROW(catalog_terms("A000000", 3), std::exception);
}

}  // namespace
}  // namespace fishburn
