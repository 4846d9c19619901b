#include "fishburn/oracle.hpp"

#include "json.hpp"
#include <stdexcept>

namespace fishburn::oracle {

long Matrix::size() const {
  long s = 0;
  for (long e : entries) s += e;
  return s;
}

MatrixStat to_matrix_stat(Stat s) {
  switch (s) {
    case Stat::first_row: return MatrixStat::first_row;
    case Stat::diagonal: return MatrixStat::diagonal;
    case Stat::ones: return MatrixStat::ones;
    case Stat::twos: return MatrixStat::twos;
  }
  throw std::invalid_argument("unknown statistic");
}

namespace {

struct Search {
  int n;
  bool need_columns;
  std::vector<long> allowed;  // positive values with nonzero multiplicity
  const LambdaSpec* spec;
  std::vector<Matrix>* out;

  int dim = 0;
  std::vector<long> cells;

  // Fill cell (i, j) of the current dim with the remaining budget.
  void run(int i, int j, long budget, long row_sum) {
    if (j == dim) {
      if (row_sum == 0) return;
      if (need_columns) {  // column i is complete once row i is done
        long col = 0;
        for (int r = 0; r <= i; ++r) col += cells[std::size_t(r) * dim + i];
        if (col == 0) return;
      }
      if (i + 1 == dim) {
        if (budget == 0) emit();
        return;
      }
      if (budget < dim - i - 1) return;  // each later row needs a nonzero entry
      run(i + 1, i + 1, budget, 0);
      return;
    }
    const std::size_t at = std::size_t(i) * dim + j;
    cells[at] = 0;
    run(i, j + 1, budget, row_sum);
    for (long v : allowed) {
      if (v > budget) break;
      cells[at] = v;
      run(i, j + 1, budget - v, row_sum + v);
    }
    cells[at] = 0;
  }

  void emit() {
    Matrix m;
    m.dim = dim;
    m.entries = cells;
    for (long e : cells)
      if (e > 0) m.weight *= spec->lambda(int(e));
    out->push_back(std::move(m));
  }
};

bool persymmetric(const Matrix& m) {
  const int k = m.dim;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      if (m.at(i, j) != m.at(k - 1 - j, k - 1 - i)) return false;
  return true;
}

mpz_class self_dual_weight(const Matrix& m, const LambdaSpec& spec) {
  mpz_class w = 1;
  const int k = m.dim;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k && i + j <= k - 1; ++j)
      if (m.at(i, j) > 0) w *= spec.lambda(int(m.at(i, j)));
  return w;
}

}  // namespace

std::vector<Matrix> enumerate(Family f, const LambdaSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  if (n > kMaxSize)
    throw std::invalid_argument("brute-force enumeration is limited to size " + std::to_string(kMaxSize));
  std::vector<Matrix> out;
  if (n == 0) {
    out.push_back(Matrix{});
    return out;
  }
  Search s{n, f != Family::row_fishburn, {}, &spec, &out, 0, {}};
  for (long v = 1; v <= n; ++v)
    if (spec.lambda(int(v)) > 0) s.allowed.push_back(v);
  for (int k = 1; k <= n; ++k) {
    s.dim = k;
    s.cells.assign(std::size_t(k) * k, 0);
    s.run(0, 0, n, 0);
  }
  if (f == Family::self_dual) {
    std::vector<Matrix> sd;
    for (auto& m : out)
      if (persymmetric(m)) {
        m.weight = self_dual_weight(m, spec);
        sd.push_back(std::move(m));
      }
    return sd;
  }
  return out;
}

long statistic(const Matrix& m, MatrixStat s) {
  long r = 0;
  switch (s) {
    case MatrixStat::first_row:
      for (int j = 0; j < m.dim; ++j) r += m.at(0, j);
      return r;
    case MatrixStat::diagonal:
      for (int i = 0; i < m.dim; ++i) r += m.at(i, i);
      return r;
    case MatrixStat::ones:
    case MatrixStat::twos: {
      const long target = s == MatrixStat::ones ? 1 : 2;
      for (long e : m.entries) r += e == target;
      return r;
    }
    case MatrixStat::dimension: return m.dim;
  }
  return r;
}

std::map<long, mpz_class> histogram(const std::vector<Matrix>& ms, MatrixStat s) {
  std::map<long, mpz_class> h;
  for (const auto& m : ms) h[statistic(m, s)] += m.weight;
  return h;
}

mpz_class total_weight(const std::vector<Matrix>& ms) {
  mpz_class t = 0;
  for (const auto& m : ms) t += m.weight;
  return t;
}

std::string dump_json(const std::vector<Matrix>& ms) {
  std::string out;
  for (const auto& m : ms) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.dim; ++i) {
      nlohmann::json r = nlohmann::json::array();
      for (int j = 0; j < m.dim; ++j) r.push_back(m.at(i, j));
      rows.push_back(r);
    }
    nlohmann::json rec = {{"dim", m.dim}, {"rows", rows}, {"weight", m.weight.get_str()}};
    out += rec.dump() + "\n";
  }
  return out;
}

}  // namespace fishburn::oracle
