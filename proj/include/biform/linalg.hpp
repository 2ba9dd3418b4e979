#pragma once

// Dense exact matrices and rank computation.

#include <biform/rational.hpp>

#include <optional>
#include <vector>

namespace biform {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  void scale_row(std::size_t i, const Rational& s);
  void swap_rows(std::size_t a, std::size_t b);
  ExactMatrix transposed() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact rank. Each row is scaled to a primitive integer vector, then rows
/// are reduced fraction-free (r_i <- p·r_i - a·r_p, followed by division by
/// the row content) with pivots chosen as the first nonzero in column order.
/// Rows are kept sparse, which keeps the block-structured matrices arising
/// from polynomial bases cheap.
std::size_t rank_exact(const ExactMatrix& m);

/// Dense one-step Bareiss elimination over the integers after clearing
/// denominators. Same result as rank_exact; used to cross-check it.
std::size_t rank_bareiss(const ExactMatrix& m);

/// A nonzero c with Σ_i c_i·row_i = 0, if the rows are dependent.
std::optional<std::vector<Rational>> row_dependency(const ExactMatrix& m);

}  // namespace biform
