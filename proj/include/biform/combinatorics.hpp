#pragma once

#include <cstdint>

namespace biform {

/// C(n, k), zero outside 0 <= k <= n.
constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

/// dim of the symmetric (2,2)-forms on an n-simplex: n(n-1)(n²-n+2)/8.
constexpr std::int64_t dim_sym22(std::int64_t n) {
  return n < 0 ? 0 : n * (n - 1) * (n * n - n + 2) / 8;
}

constexpr std::int64_t dim_lambda4(std::int64_t n) { return binomial(n, 4); }

/// dim of the Bianchi kernel on an n-simplex: n²(n+1)(n-1)/12.
constexpr std::int64_t dim_bianchi(std::int64_t n) {
  return n < 0 ? 0 : n * n * (n + 1) * (n - 1) / 12;
}

/// dim of degree-r polynomial Bianchi forms on an n-simplex.
constexpr std::int64_t dim_poly_bianchi(std::int64_t n, std::int64_t r) {
  return binomial(n + r, r) * dim_bianchi(n);
}

/// Shape functions attached to one m-dimensional face at degree r:
/// C(m+1,3)C(r+2,m) + 2C(m+1,4)C(r+3,m).
constexpr std::int64_t bubble_count(std::int64_t m, std::int64_t r) {
  if (m < 0 || r < 0) return 0;
  return binomial(m + 1, 3) * binomial(r + 2, m) + 2 * binomial(m + 1, 4) * binomial(r + 3, m);
}

static_assert(dim_sym22(4) == 21 && dim_bianchi(4) == 20 && dim_lambda4(4) == 1);
static_assert(bubble_count(3, 2) == 36);

}  // namespace biform
