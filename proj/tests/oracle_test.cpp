#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "fishburn/oracle.hpp"
#include "json.hpp"

namespace fishburn::oracle {
namespace {

using Tag = LambdaSpec::Tag;

bool valid(const Matrix& m, Family f, const LambdaSpec& spec, int n) {
  if (m.size() != n) return false;
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) {
      const long e = m.at(i, j);
      if (e < 0 || (j < i && e != 0) || (e > 0 && spec.lambda(int(e)) == 0)) return false;
    }
  for (int i = 0; i < m.dim; ++i) {
    long row = 0, col = 0;
    for (int j = 0; j < m.dim; ++j) {
      row += m.at(i, j);
      col += m.at(j, i);
    }
    if (row == 0 || (f != Family::row_fishburn && col == 0)) return false;
  }
  return true;
}

TEST(Oracle, SmallestSizes) {
  const auto all = LambdaSpec::named(Tag::all);
  EXPECT_EQ(enumerate(Family::fishburn, all, 0).size(), 1u);
  EXPECT_EQ(enumerate(Family::fishburn, all, 1).size(), 1u);
  // [2], diag(1,1)
  EXPECT_EQ(enumerate(Family::fishburn, all, 2).size(), 2u);
  // [2], diag(1,1), [[0,1],[0,1]]
  EXPECT_EQ(enumerate(Family::row_fishburn, all, 2).size(), 3u);
  EXPECT_EQ(enumerate(Family::fishburn, all, 4).size(), 15u);
}

TEST(Oracle, EveryMatrixIsValidAndDistinct) {
  for (Tag t : {Tag::all, Tag::zero_one, Tag::odd}) {
    const auto spec = LambdaSpec::named(t);
    for (Family f : {Family::row_fishburn, Family::fishburn}) {
      const auto ms = enumerate(f, spec, 6);
      std::set<std::vector<long>> seen;
      for (const auto& m : ms) {
        EXPECT_TRUE(valid(m, f, spec, 6));
        auto key = m.entries;
        key.push_back(m.dim);
        EXPECT_TRUE(seen.insert(key).second);
      }
    }
  }
}

TEST(Oracle, SelfDualMatricesArePersymmetric) {
  const auto all = LambdaSpec::named(Tag::all);
  const auto ms = enumerate(Family::self_dual, all, 6);
  EXPECT_EQ(total_weight(ms), 33);
  for (const auto& m : ms)
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j) EXPECT_EQ(m.at(i, j), m.at(m.dim - 1 - j, m.dim - 1 - i));
}

TEST(Oracle, WeightsMultiplyEntryMultiplicities) {
  // Two kinds of 1: the matrix [1] has weight 2 and diag(1,1) has weight 4.
  const auto spec = LambdaSpec::parse("l:2");
  const auto ms = enumerate(Family::fishburn, spec, 2);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].weight, 4);
  EXPECT_EQ(total_weight(enumerate(Family::fishburn, spec, 1)), 2);
}

TEST(Oracle, Statistics) {
  Matrix m;
  m.dim = 3;
  m.entries = {1, 0, 2, 0, 1, 1, 0, 0, 2};
  EXPECT_EQ(statistic(m, MatrixStat::first_row), 3);
  EXPECT_EQ(statistic(m, MatrixStat::diagonal), 4);
  EXPECT_EQ(statistic(m, MatrixStat::ones), 3);
  EXPECT_EQ(statistic(m, MatrixStat::twos), 2);
  EXPECT_EQ(statistic(m, MatrixStat::dimension), 3);
  EXPECT_EQ(m.size(), 7);
}

TEST(Oracle, HistogramOfDimension) {
  // Fishburn matrices of size 3: [3], three of dimension 2, diag(1,1,1).
  const auto h = histogram(enumerate(Family::fishburn, LambdaSpec::named(Tag::all), 3), MatrixStat::dimension);
  const std::map<long, mpz_class> want = {{1, 1}, {2, 3}, {3, 1}};
  EXPECT_EQ(h, want);
}

TEST(Oracle, RejectsLargeSizes) {
  EXPECT_THROW(enumerate(Family::fishburn, LambdaSpec::named(Tag::all), kMaxSize + 1), std::invalid_argument);
  EXPECT_THROW(enumerate(Family::fishburn, LambdaSpec::named(Tag::all), -1), std::invalid_argument);
}

TEST(Oracle, JsonDump) {
  const auto ms = enumerate(Family::fishburn, LambdaSpec::named(Tag::all), 3);
  std::istringstream in(dump_json(ms));
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["rows"].size(), j["dim"].get<std::size_t>());
    EXPECT_EQ(j["weight"], "1");
    ++count;
  }
  EXPECT_EQ(count, ms.size());
}

}  // namespace
}  // namespace fishburn::oracle
