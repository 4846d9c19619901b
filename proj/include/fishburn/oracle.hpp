#pragma once

#include <map>
#include <string>
#include <vector>

#include "fishburn/families.hpp"

namespace fishburn::oracle {

// Largest size the brute-force enumerator accepts.
constexpr int kMaxSize = 8;

struct Matrix {
  int dim = 0;
  std::vector<long> entries;  // dim x dim row-major, zero below the diagonal
  mpz_class weight = 1;       // product of multiplicities of the entries

  long at(int i, int j) const { return entries[std::size_t(i) * dim + j]; }
  long size() const;
};

enum class MatrixStat { first_row, diagonal, ones, twos, dimension };

MatrixStat to_matrix_stat(Stat s);

// All matrices of the family with entries in Λ and entry sum n. Self-dual matrices are
// weighted by the entries on and above the anti-diagonal, matching their generating function.
std::vector<Matrix> enumerate(Family f, const LambdaSpec& spec, int n);

long statistic(const Matrix& m, MatrixStat s);
std::map<long, mpz_class> histogram(const std::vector<Matrix>& ms, MatrixStat s);
mpz_class total_weight(const std::vector<Matrix>& ms);

// One JSON record per matrix: {"dim":k,"rows":[[...],...],"weight":"w"}, one per line.
std::string dump_json(const std::vector<Matrix>& ms);

}  // namespace fishburn::oracle
