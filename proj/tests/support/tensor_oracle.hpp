#pragma once

// Brute-force reference evaluations for the tests. Nothing here goes through
// the library's form types: a symmetric (2,2)-form is a list of terms
// c·dλ_ab⊙dλ_cd, and every quantity is evaluated straight from the
// coordinate formulas.

#include <biform/rational.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using biform::Rational;
using Vec = std::vector<Rational>;

struct Term {
  int a, b, c, d;
  Rational coeff;
};
using Terms = std::vector<Term>;

// dλ_ij(x, y) = x_i y_j - x_j y_i.
inline Rational dl(int i, int j, const Vec& x, const Vec& y) { return x[i] * y[j] - x[j] * y[i]; }

// (α⊙β)(x,y;z,w) = α(x,y)β(z,w) + β(x,y)α(z,w).
inline Rational eval(const Terms& terms, const Vec& x, const Vec& y, const Vec& z, const Vec& w) {
  Rational s = 0;
  for (const auto& t : terms)
    s += t.coeff * (dl(t.a, t.b, x, y) * dl(t.c, t.d, z, w) + dl(t.c, t.d, x, y) * dl(t.a, t.b, z, w));
  return s;
}

inline int perm_sign(std::array<int, 4> p) {
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

// Wedge of a (2,2)-form as the alternation (1/8)·Σ_σ sgn(σ)·T(v_σ).
inline Rational alternation(const Terms& terms, const std::array<Vec, 4>& v) {
  std::array<int, 4> p{0, 1, 2, 3};
  Rational s = 0;
  do {
    s += perm_sign(p) * eval(terms, v[p[0]], v[p[1]], v[p[2]], v[p[3]]);
  } while (std::next_permutation(p.begin(), p.end()));
  return s / 8;
}

// Determinant of the 4x4 minor of (v_0..v_3) on rows (i,j,k,l), by Leibniz.
inline Rational minor4(const std::array<int, 4>& rows, const std::array<Vec, 4>& v) {
  std::array<int, 4> p{0, 1, 2, 3};
  Rational s = 0;
  do {
    Rational prod = 1;
    for (int c = 0; c < 4; ++c) prod *= v[c][rows[p[c]]];
    s += perm_sign(p) * prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}

inline Terms beta(int i, int j, int k) {
  return {{i, j, j, k, 1}, {j, k, k, i, 1}, {k, i, i, j, 1}};
}

inline Terms gamma(int i, int j, int k, int l) { return {{i, k, l, j, 1}, {i, l, j, k, -1}}; }

inline Terms plus(Terms a, const Terms& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Terms scaled(Terms a, const Rational& s) {
  for (auto& t : a) t.coeff *= s;
  return a;
}

inline Vec unit(int dim, int i) {
  Vec v(dim, Rational(0));
  v[i] = 1;
  return v;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vec random_vec(std::mt19937& rng, int dim, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::uniform_int_distribution<int> den(1, 3);
  Vec v(dim);
  for (auto& x : v) {
    x = Rational(d(rng), den(rng));
    x.canonicalize();
  }
  return v;
}

// Tangent vector of the simplex {0..n}: components summing to zero.
inline Vec random_tangent(std::mt19937& rng, int n) {
  Vec v = random_vec(rng, n + 1);
  Rational s = std::accumulate(v.begin() + 1, v.end(), Rational(0));
  v[0] = -s;
  return v;
}

// Plain Gaussian elimination over the rationals.
inline std::size_t rank(std::vector<Vec> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
