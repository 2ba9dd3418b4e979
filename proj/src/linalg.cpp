#include <biform/linalg.hpp>

#include <map>
#include <utility>

namespace biform {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

void ExactMatrix::scale_row(std::size_t i, const Rational& s) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) *= s;
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Row i of m scaled by the lcm of its denominators.
std::vector<Integer> integer_row(const ExactMatrix& m, std::size_t i) {
  Integer l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Rational& q = m(i, j);
    if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Rational& q = m(i, j);
    if (q == 0) continue;
    Integer scaled = l / q.get_den();
    out[j] = q.get_num() * scaled;
  }
  return out;
}

SparseRow sparse_integer_row(const ExactMatrix& m, std::size_t i) {
  SparseRow row;
  auto dense = integer_row(m, i);
  for (std::size_t j = 0; j < dense.size(); ++j)
    if (dense[j] != 0) row.emplace_back(j, std::move(dense[j]));
  make_primitive(row);
  return row;
}

// a·x - b·y over the union of supports.
SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t p = 0, q = 0;
  while (p < x.size() || q < y.size()) {
    if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
      out.emplace_back(x[p].first, a * x[p].second);
      ++p;
    } else if (p == x.size() || y[q].first < x[p].first) {
      out.emplace_back(y[q].first, -b * y[q].second);
      ++q;
    } else {
      Integer v = a * x[p].second - b * y[q].second;
      if (v != 0) out.emplace_back(x[p].first, std::move(v));
      ++p;
      ++q;
    }
  }
  return out;
}

}  // namespace

std::size_t rank_exact(const ExactMatrix& m) {
  std::map<std::size_t, SparseRow> pivots;  // leading column -> echelon row
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow row = sparse_integer_row(m, i);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const SparseRow& pivot = it->second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
      Integer a = pivot.front().second / g;
      Integer b = row.front().second / g;
      row = combine(a, row, b, pivot);
      make_primitive(row);
    }
  }
  return pivots.size();
}

std::size_t rank_bareiss(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows);
  for (std::size_t i = 0; i < rows; ++i) a[i] = integer_row(m, i);
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const Integer pivot = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = pivot * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> row_dependency(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Reduce [m | I]; a zero row in the m block carries a dependency.
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + rows, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m(i, j);
    aug[i][cols + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && aug[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (aug[i][c] == 0) continue;
      Rational f = aug[i][c] / aug[r][c];
      for (std::size_t j = c; j < cols + rows; ++j) aug[i][j] -= f * aug[r][j];
    }
    ++r;
  }
  if (r == rows) return std::nullopt;
  return std::vector<Rational>(aug[r].begin() + static_cast<std::ptrdiff_t>(cols), aug[r].end());
}

}  // namespace biform
