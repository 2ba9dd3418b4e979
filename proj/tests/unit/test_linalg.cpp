#include <biform/linalg.hpp>

#include <gtest/gtest.h>

#include <numeric>

#include "tensor_oracle.hpp"

using namespace biform;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<oracle::Vec> to_vecs(const ExactMatrix& m) {
  std::vector<oracle::Vec> rows(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

// Low-rank random matrix: products of random factors, some rows sparse.
ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<oracle::Vec> a(rows, oracle::Vec(inner)), b(inner, oracle::Vec(cols));
  for (auto& r : a)
    for (auto& x : r) x = ratio(d(rng), 1 + static_cast<long>(rng() % 2));
  for (auto& r : b)
    for (auto& x : r) x = rng() % 3 == 0 ? Rational(0) : Rational(d(rng));
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
      m(i, j) = s;
    }
  return m;
}

}  // namespace

TEST(Rank, Examples) {
  ExactMatrix id(5, 5);
  for (std::size_t i = 0; i < 5; ++i) id(i, i) = 1;
  EXPECT_EQ(rank_exact(id), 5u);
  EXPECT_EQ(rank_exact(from_rows({{2, -4}, {-4, 2}})), 2u);
  EXPECT_EQ(rank_exact(from_rows({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(rank_exact(ExactMatrix(0, 0)), 0u);
  EXPECT_EQ(rank_exact(ExactMatrix(3, 4)), 0u);
  EXPECT_EQ(rank_bareiss(from_rows({{2, -4}, {-4, 2}})), 2u);
  EXPECT_EQ(rank_bareiss(from_rows({{1, 2}, {2, 4}})), 1u);
}

TEST(Rank, FractionsAndWideMatrices) {
  ExactMatrix m(2, 3);
  m(0, 0) = ratio(1, 3);
  m(0, 2) = ratio(2, 7);
  m(1, 0) = ratio(7, 3);
  m(1, 2) = 2;
  EXPECT_EQ(rank_exact(m), 1u);
  m(1, 1) = ratio(-1, 5);
  EXPECT_EQ(rank_exact(m), 2u);
  EXPECT_EQ(rank_exact(m.transposed()), 2u);
}

TEST(Rank, AgreesWithReferenceElimination) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9, inner = 1 + rng() % 6;
    const auto m = random_matrix(rng, rows, cols, inner);
    const auto expected = oracle::rank(to_vecs(m));
    EXPECT_EQ(rank_exact(m), expected);
    EXPECT_EQ(rank_bareiss(m), expected);
    EXPECT_EQ(rank_exact(m.transposed()), expected);
  }
}

TEST(Rank, InvariantUnderRowScalingAndPermutation) {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 2 + rng() % 8, cols = 2 + rng() % 8;
    auto m = random_matrix(rng, rows, cols, 1 + rng() % 5);
    const auto base = rank_exact(m);
    auto scaled = m;
    for (std::size_t i = 0; i < rows; ++i) {
      const long sign = rng() % 2 ? 1 : -1;
      scaled.scale_row(i, ratio(sign * static_cast<long>(1 + rng() % 5), static_cast<long>(1 + rng() % 4)));
    }
    EXPECT_EQ(rank_exact(scaled), base);
    auto permuted = m;
    for (std::size_t i = rows; i > 1; --i) permuted.swap_rows(i - 1, rng() % i);
    EXPECT_EQ(rank_exact(permuted), base);
    EXPECT_EQ(rank_bareiss(permuted), base);
  }
}

TEST(RowDependency, FindsCombination) {
  const auto m = from_rows({{1, 0, 2}, {0, 1, 1}, {2, 3, 7}});
  auto dep = row_dependency(m);
  ASSERT_TRUE(dep.has_value());
  for (std::size_t j = 0; j < 3; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += (*dep)[i] * m(i, j);
    EXPECT_EQ(s, 0);
  }
  EXPECT_TRUE(std::any_of(dep->begin(), dep->end(), [](const Rational& c) { return c != 0; }));
  EXPECT_FALSE(row_dependency(from_rows({{1, 0}, {0, 1}})).has_value());
}

TEST(ExactMatrix, Basics) {
  auto m = from_rows({{1, 2, 3}, {4, 5, 6}});
  auto t = m.transposed();
  EXPECT_EQ(t.rows(), 3u);
  EXPECT_EQ(t(2, 1), 6);
  EXPECT_EQ(t.transposed(), m);
  m.swap_rows(0, 1);
  EXPECT_EQ(m(0, 0), 4);
  m.scale_row(1, ratio(1, 2));
  EXPECT_EQ(m(1, 1), 1);
}
