#include <biform/basis.hpp>
#include <biform/combinatorics.hpp>
#include <biform/simplex.hpp>

#include <gtest/gtest.h>

#include <set>

#include "tensor_oracle.hpp"

using namespace biform;

namespace {

PolyDoubleForm with_monomial(int n, std::vector<int> exps, const DoubleForm22& omega, IndexSet cell) {
  MultiIndex alpha(std::move(exps));
  PolyDoubleForm phi(n, alpha.degree(), std::move(cell));
  phi.add(alpha, omega);
  return phi;
}

}  // namespace

TEST(Faces, CountsAndOrder) {
  EXPECT_EQ(faces(3, 2).size(), 4u);
  EXPECT_EQ(faces(4, 3).size(), 5u);
  ASSERT_EQ(faces(2, 2).size(), 1u);
  EXPECT_EQ(faces(2, 2)[0].vertices, IndexSet::full(2));
  EXPECT_EQ(faces(3, 1)[0].vertices, IndexSet({0, 1}));
  EXPECT_EQ(faces(3, 2)[0].dim(), 2);
  EXPECT_THROW(faces(3, 4), Error);
  EXPECT_THROW(faces(3, -1), Error);
  for (int n = 0; n <= 6; ++n) {
    auto all = all_faces(n);
    EXPECT_EQ(static_cast<std::int64_t>(all.size()), (std::int64_t{1} << (n + 1)) - 1);
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LE(all[i - 1].dim(), all[i].dim());
  }
}

TEST(Monomials, CountsAndOrder) {
  EXPECT_EQ(monomials(2, 2).size(), 6u);
  EXPECT_EQ(monomials(3, 1).size(), 4u);
  ASSERT_EQ(monomials(3, 0).size(), 1u);
  EXPECT_EQ(monomials(3, 0)[0], MultiIndex::zero(3));
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; r <= 4; ++r) {
      auto ms = monomials(n, r);
      EXPECT_EQ(static_cast<std::int64_t>(ms.size()), binomial(n + r, r));
      for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_LT(ms[i - 1], ms[i]);
      for (const auto& m : ms) EXPECT_EQ(m.degree(), r);
    }
}

TEST(Monomials, RestrictedToCell) {
  const IndexSet face{1, 3};
  auto on = monomials_on(4, 3, face);
  EXPECT_EQ(on.size(), 4u);
  std::vector<MultiIndex> filtered;
  for (const auto& m : monomials(4, 3))
    if (m.support().subset_of(face)) filtered.push_back(m);
  EXPECT_EQ(on, filtered);
}

TEST(MultiIndex, BasicOperations) {
  MultiIndex a({2, 0, 1});
  EXPECT_EQ(a.degree(), 3);
  EXPECT_EQ(a.support(), IndexSet({0, 2}));
  EXPECT_EQ(a.str(), "l0^2*l2");
  EXPECT_EQ(a.bumped(1), MultiIndex({2, 1, 1}));
  EXPECT_EQ(a.evaluate({ratio(1, 2), ratio(1, 4), ratio(1, 4)}), ratio(1, 16));
  EXPECT_THROW(MultiIndex({1, -1}), Error);
  EXPECT_EQ(MultiIndex::zero(2).str(), "1");
}

TEST(Trace, Examples) {
  const int n = 3;
  const auto b = beta(n, 0, 1, 2);
  const auto phi = with_monomial(n, {0, 0, 0, 0}, b, IndexSet::full(n));

  const auto on_face = trace(phi, IndexSet{0, 1, 2});
  EXPECT_FALSE(vanishes(on_face));
  EXPECT_EQ(on_face.cell(), IndexSet({0, 1, 2}));
  EXPECT_EQ(canonicalize(on_face), canonicalize(with_monomial(n, {0, 0, 0, 0}, b, IndexSet{0, 1, 2})));

  EXPECT_TRUE(vanishes(trace(phi, IndexSet{0, 1, 3})));

  const auto l3 = with_monomial(n, {0, 0, 0, 1}, b, IndexSet::full(n));
  EXPECT_TRUE(vanishes(trace(l3, IndexSet{0, 1, 2})));
  EXPECT_FALSE(vanishes(l3));

  EXPECT_THROW(trace(trace(phi, IndexSet{0, 1, 2}), IndexSet{1, 2, 3}), Error);
}

TEST(Trace, AgreesWithEvaluationOnFaceVectors) {
  const int n = 4, r = 2;
  const auto basis = poly_basis(n, r);
  const IndexSet face{0, 2, 3};
  const auto points = lattice_points(n, r, face);
  const auto tangents = tangent_basis(n, face);
  for (std::size_t k = 0; k < basis.size(); k += 7) {
    auto phi = to_form(basis[k]);
    auto tr = trace(phi, face);
    for (const auto& p : points) {
      const auto& x = tangents[0];
      const auto& y = tangents[1];
      EXPECT_EQ(eval_poly(tr, p, x, y, x, y), eval_poly(phi, p, x, y, x, y)) << describe(basis[k]);
    }
  }
}

TEST(Extend, Examples) {
  const int n = 3;
  const auto b = beta(n, 0, 1, 2);
  const auto local = with_monomial(n, {0, 0, 0, 0}, b, IndexSet{0, 1, 2});
  const auto ext = extend(local, IndexSet::full(n));
  EXPECT_EQ(ext, with_monomial(n, {0, 0, 0, 0}, b, IndexSet::full(n)));
  EXPECT_TRUE(extend(PolyDoubleForm(n, 1, IndexSet{0, 1, 2}), IndexSet::full(n)).is_zero());
  EXPECT_THROW(extend(local, IndexSet{0, 1, 3}), Error);
  const auto outside = with_monomial(n, {0, 0, 0, 1}, b, IndexSet{0, 1, 2});
  EXPECT_THROW(extend(outside, IndexSet::full(n)), Error);
}

TEST(Extend, TraceIsLeftInverseOnBubbles) {
  for (int n = 2; n <= 4; ++n)
    for (int r = 0; r <= 2; ++r)
      for (const auto& f : all_faces(n)) {
        if (f.dim() < 2) continue;
        for (const auto& e : bubble_basis(n, r, f.vertices)) {
          const auto local = to_form(e, f.vertices);
          EXPECT_EQ(canonicalize(trace(extend(local, IndexSet::full(n)), f)), canonicalize(local));
        }
      }
}

TEST(EvalPoly, Examples) {
  const int n = 2;
  const auto b = beta(n, 0, 1, 2);
  std::mt19937 rng(4);
  auto x = oracle::random_tangent(rng, n), y = oracle::random_tangent(rng, n);
  auto z = oracle::random_tangent(rng, n), w = oracle::random_tangent(rng, n);
  const Vector bary{ratio(1, 3), ratio(1, 3), ratio(1, 3)};

  const auto constant = with_monomial(n, {0, 0, 0}, b, IndexSet::full(n));
  EXPECT_EQ(eval_poly(constant, {Rational(1), Rational(0), Rational(0)}, x, y, z, w), eval_double(b, x, y, z, w));

  const auto l0 = with_monomial(n, {1, 0, 0}, b, IndexSet::full(n));
  EXPECT_EQ(eval_poly(l0, bary, x, y, z, w), Rational(ratio(1, 3) * eval_double(b, x, y, z, w)));

  const auto l3 = with_monomial(3, {0, 0, 0, 1}, beta(3, 0, 1, 2), IndexSet::full(3));
  const Vector on_face{ratio(1, 2), ratio(1, 4), ratio(1, 4), Rational(0)};
  Vector x3 = oracle::random_vec(rng, 4);
  EXPECT_EQ(eval_poly(l3, on_face, x3, x3, x3, x3), 0);
  const Vector away{Rational(0), Rational(0), ratio(1, 2), ratio(1, 2)};
  auto t = tangent_basis(3, IndexSet::full(3));
  EXPECT_EQ(eval_poly(l3, away, t[0], t[1], t[0], t[1]), 
            Rational(ratio(1, 2) * eval_double(beta(3, 0, 1, 2), t[0], t[1], t[0], t[1])));
}

TEST(EvalPoly, RejectsPointsOffTheCell) {
  const auto phi = with_monomial(3, {1, 0, 0, 0}, beta(3, 0, 1, 2), IndexSet{0, 1, 2});
  Vector v(4, Rational(0));
  EXPECT_THROW(eval_poly(phi, {ratio(1, 2), ratio(1, 2), Rational(0), Rational(1)}, v, v, v, v), Error);
  EXPECT_THROW(eval_poly(phi, {ratio(1, 2), ratio(1, 4), Rational(0), Rational(0)}, v, v, v, v), Error);
}

TEST(RaiseDegree, PreservesValues) {
  std::mt19937 rng(9);
  const int n = 3;
  const auto b = gamma(n, 0, 2, 1, 3);
  const auto phi = with_monomial(n, {1, 0, 1, 0}, b, IndexSet::full(n));
  const auto up = raise_degree(phi);
  EXPECT_EQ(up.degree(), 3);
  for (const auto& p : lattice_points(n, 3, IndexSet::full(n))) {
    auto x = oracle::random_tangent(rng, n), y = oracle::random_tangent(rng, n);
    EXPECT_EQ(eval_poly(up, p, x, y, y, x), eval_poly(phi, p, x, y, y, x));
  }
}

TEST(Homogenize, MixedDegrees) {
  const int n = 2;
  std::map<MultiIndex, DoubleForm22> terms;
  terms.emplace(MultiIndex::zero(n), beta(n, 0, 1, 2));
  terms.emplace(MultiIndex({1, 0, 0}), Rational(2) * beta(n, 0, 1, 2));
  const auto h = homogenize(n, 2, terms, IndexSet::full(n));
  EXPECT_EQ(h.degree(), 2);
  auto t = tangent_basis(n, IndexSet::full(n));
  const Rational base = eval_double(beta(n, 0, 1, 2), t[0], t[1], t[0], t[1]);
  for (const auto& p : lattice_points(n, 2, IndexSet::full(n)))
    EXPECT_EQ(eval_poly(h, p, t[0], t[1], t[0], t[1]), Rational((1 + 2 * p[0]) * base));
  EXPECT_THROW(homogenize(n, 0, terms, IndexSet::full(n)), Error);
}

TEST(LatticePoints, BarycenterAndGrid) {
  auto bary = lattice_points(3, 0, IndexSet{0, 2, 3});
  ASSERT_EQ(bary.size(), 1u);
  EXPECT_EQ(bary[0], (Vector{ratio(1, 3), Rational(0), ratio(1, 3), ratio(1, 3)}));
  auto grid = lattice_points(2, 2, IndexSet::full(2));
  EXPECT_EQ(grid.size(), 6u);
  std::set<Vector> unique(grid.begin(), grid.end());
  EXPECT_EQ(unique.size(), 6u);
  for (const auto& p : grid) EXPECT_EQ(Rational(p[0] + p[1] + p[2]), 1);
}
