#pragma once

// Faces, barycentric monomials and polynomial-coefficient double forms.
//
// Every object is labelled by global vertex ids in {0..n}. A form living on
// a face F keeps those labels and records F as its `cell`; traces and
// extensions only change which cell a form is attached to.

#include <biform/double_form.hpp>

#include <map>
#include <vector>

namespace biform {

struct Face {
  IndexSet vertices;
  int parent_n = 0;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;
};

/// All C(n+1, m+1) faces of dimension m of T^n, vertex sets in lex order.
std::vector<Face> faces(int n, int m);

/// Every face of T^n of dimension 0..n, by dimension then lex.
std::vector<Face> all_faces(int n);

/// Exponent tuple (α_0, ..., α_n) of λ^α.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> exponents);
  static MultiIndex zero(int n);

  int n() const { return static_cast<int>(exponents_.size()) - 1; }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  IndexSet support() const;

  /// α + e_i, the monomial λ^α·λ_i.
  MultiIndex bumped(int i) const;
  /// λ^α at a barycentric point.
  Rational evaluate(const Vector& point) const;

  std::string str() const;

  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.exponents_ <=> b.exponents_;
  }
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.exponents_ == b.exponents_;
  }

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// All multi-indices of degree exactly r over n+1 variables, lex order.
std::vector<MultiIndex> monomials(int n, int r);

/// Those of monomials(n, r) whose support lies in `cell`.
std::vector<MultiIndex> monomials_on(int n, int r, const IndexSet& cell);

/// Σ_α λ^α ω_α, homogeneous of degree exactly r in the barycentric
/// coordinates, living on the simplex with vertex set `cell`.
class PolyDoubleForm {
 public:
  using Terms = std::map<MultiIndex, DoubleForm22>;

  PolyDoubleForm(int n, int r);
  PolyDoubleForm(int n, int r, IndexSet cell);

  int n() const noexcept { return n_; }
  int degree() const noexcept { return r_; }
  const IndexSet& cell() const noexcept { return cell_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const MultiIndex& alpha, const DoubleForm22& omega);

  PolyDoubleForm& operator+=(const PolyDoubleForm& other);
  PolyDoubleForm& operator*=(const Rational& s);
  friend PolyDoubleForm operator+(PolyDoubleForm a, const PolyDoubleForm& b) { return a += b; }
  friend PolyDoubleForm operator*(const Rational& s, PolyDoubleForm a) { return a *= s; }
  friend bool operator==(const PolyDoubleForm&, const PolyDoubleForm&) = default;

  /// Every vertex used by a monomial support or a coefficient key.
  IndexSet used_vertices() const;

  std::string str() const;

 private:
  int n_;
  int r_;
  IndexSet cell_;
  Terms terms_;
};

/// Same form re-expanded at degree r+1 via multiplication by Σ_{v in cell} λ_v.
PolyDoubleForm raise_degree(const PolyDoubleForm& phi);

/// Mixed-degree terms of degree <= r, each multiplied by (Σλ)^(r - deg).
PolyDoubleForm homogenize(int n, int r, const std::map<MultiIndex, DoubleForm22>& terms,
                          const IndexSet& cell);

/// Canonical representative on phi.cell(): coefficients canonicalized on the
/// cell, zero terms removed. Degree-r monomials are independent on a cell,
/// so two degree-r forms agree there iff their representatives are equal.
PolyDoubleForm canonicalize(const PolyDoubleForm& phi);

bool vanishes(const PolyDoubleForm& phi);

/// Pullback to the face F of phi's cell: λ_i and dλ_i vanish for i outside F.
PolyDoubleForm trace(const PolyDoubleForm& phi, const Face& face);
PolyDoubleForm trace(const PolyDoubleForm& phi, const IndexSet& face);

/// The same barycentric expression read on the larger simplex `target`.
PolyDoubleForm extend(const PolyDoubleForm& phi, const IndexSet& target);

/// Σ_α λ^α(point)·ω_α(x, y; z, w). The point must lie in the affine span of
/// the cell: its coordinates sum to 1 and vanish off the cell.
Rational eval_poly(const PolyDoubleForm& phi, const Vector& point, const Vector& x,
                   const Vector& y, const Vector& z, const Vector& w);

/// α/r for every degree-r multi-index supported on `cell` (the barycenter
/// for r = 0): points that determine a degree-r polynomial on the cell.
std::vector<Vector> lattice_points(int n, int r, const IndexSet& cell);

}  // namespace biform
