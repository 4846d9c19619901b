#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fishburn/series.hpp"

namespace fishburn {

enum class Family { row_fishburn, fishburn, self_dual };
enum class Stat { first_row, diagonal, ones, twos };
enum class FishburnForm { direct, andrews };

std::string to_string(Family f);
std::string to_string(Stat s);
Family parse_family(const std::string& s);
Stat parse_stat(const std::string& s);

// Entry multiset through its generating function 1 + λ1 z + λ2 z² + ...
struct LambdaSpec {
  enum class Tag { custom, all, zero_one, zero_one_two, odd, even_plus, even, no_one };

  Tag tag = Tag::custom;
  std::vector<long> lambdas;  // λ1, λ2, ... for custom specs; zero beyond the end

  static LambdaSpec named(Tag t);
  static LambdaSpec custom(std::vector<long> lambdas);
  // Set of allowed values, must contain 0: {0,1} -> 1+z.
  static LambdaSpec from_values(const std::vector<long>& values);
  // Tags all, 01, 012, odd, even+, even, no1; a value list "0,2,4,5"; or "l:λ1,λ2,...".
  static LambdaSpec parse(const std::string& text);

  long lambda(int i) const;
  std::string name() const;
  bool is_trivial() const;  // Λ(z) = 1
};

IntSeries lambda_series(const LambdaSpec& spec, int order);

// Σ_{k>=0} d_k · Π_{j<=k} factor(j). d_part is called with k = 0, 1, 2, ... in order, so it may
// keep running state; a null d_part means d_k = 1. The sum stops once the running product's
// valuation exceeds the order. Every block of `group` consecutive factors must raise the
// valuation, otherwise the sum would not terminate.
template <class S>
S sum_product(const std::function<S(int)>& d_part, const std::function<S(int)>& factor,
              const S& one, int group = 1) {
  const int n = one.order();
  S prod = one;
  S total = one - one;
  int block_val = 0;
  for (int k = 0; prod.valuation() <= n; ++k) {
    total = d_part ? total + d_part(k) * prod : total + prod;
    prod = prod * factor(k + 1);
    if ((k + 1) % group == 0) {
      const int v = prod.valuation();
      if (v <= n && v == block_val)
        throw SeriesError("sum-product factor has valuation 0; the sum does not terminate");
      block_val = v;
    }
  }
  return total;
}

// Σ_k d(z)^{k+ω0} Π_{j<=k} (e(z)^{p j - s} - 1)^α with integer data.
struct SumProductSpec {
  IntSeries d;
  IntSeries e;
  int alpha = 1;
  int omega0 = 0;
  int p = 1;
  int s = 0;
};
IntSeries sum_product(const SumProductSpec& spec);

IntSeries family_gf(Family f, const LambdaSpec& spec, int order);
IntSeries row_fishburn_gf(const LambdaSpec& spec, int order);
IntSeries fishburn_gf(const LambdaSpec& spec, int order, FishburnForm form = FishburnForm::andrews);
IntSeries self_dual_gf(const LambdaSpec& spec, int order);

// Bivariate GF, z marking size and v the statistic.
BivariateSeries stat_gf(Family f, Stat s, const LambdaSpec& spec, int order);
// Same GF in w = v - 1 truncated at w^cap; coefficient of w^m is the m-th factorial moment sum / m!.
BivariateSeries stat_gf_jet(Family f, Stat s, const LambdaSpec& spec, int order, int cap);
// Direct (non-Andrews) forms for the Fishburn statistics.
BivariateSeries fishburn_stat_direct(Stat s, const LambdaSpec& spec, int order);
// The diagonal direct form exactly as printed, with a leading 1 + Λ(vz).
BivariateSeries fishburn_diagonal_direct_as_printed(const LambdaSpec& spec, int order);

enum class RecursiveKind { A186737, A224885 };
struct RecursiveResult {
  IntSeries series;
  int iterations = 0;
  bool stabilized = false;
};
RecursiveResult recursive_gf(RecursiveKind kind, int order);

enum class Variant {
  A207652,
  A207653,
  A207651,
  A207434,
  A035378,         // Σ_{k>=1} Π (1-(z-1)^j), grouped in pairs
  A035378_dual,    // Σ_{k>=0} (z-1)^{-k-1} Π (1-(z-1)^{-j})², minus the extra constant
  A035378_paired,  // explicit pairing with factors ((1-z)^{-j} - (-1)^j)²
  A207557,
  A207557_rogers_fine,
  A079144,  // n! scaled
  A079144_andrews,
  A158690,  // n! scaled, defining form
};
Variant parse_variant(const std::string& s);
// Ordinary coefficients; exponential families are returned unscaled as rationals.
TruncatedSeries variant_gf(Variant v, int order);

// n! [z^n] of the prototype Σ_k Π_{j<=k}(e^{jz}-1); entry k of the result holds the k-th product.
std::vector<IntSeries> a158690_products(int order);

struct IdentityReport {
  std::string name;
  int order = 0;
  bool equal = false;
  int first_mismatch = -1;
};

IdentityReport verify_andrews_jelinek(const LambdaSpec& spec, int order);

struct GlaisherPair {
  std::vector<mpz_class> T;        // from sin(2z)/(2cos 3z)
  std::vector<mpz_class> T_prime;  // from e^{-z/24} Σ Π (1-e^{-jz})
  TruncatedSeries lhs;
  bool equal = false;
};
GlaisherPair verify_glaisher(int m);

std::vector<IdentityReport> verify_a158690_forms(int order);
IdentityReport verify_a035378_pairing(int order);
IdentityReport verify_a207557_rogers_fine(int order);
// z -> z/(1+z) maps row-Fishburn (all) onto primitive row-Fishburn; z -> z/(1-z) inverts.
IdentityReport verify_primitive_duality(int order);

// Terms of a catalogued sequence in its indexing, with factorial scaling applied where needed.
struct CatalogEntry {
  std::string id;
  int offset = 0;
  bool factorial_scaled = false;
  bool triangle = false;  // read by rows n >= 1, k = 1..n
  std::string description;
};
const std::vector<CatalogEntry>& catalog();
std::vector<mpz_class> catalog_terms(const std::string& id, int count);

}  // namespace fishburn
