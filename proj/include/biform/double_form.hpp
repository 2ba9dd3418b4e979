#pragma once

// Symmetric (2,2)-forms Σ c_{IJ} dλ_I ⊙ dλ_J, with α⊙β = α⊗β + β⊗α.
//
// The symmetric product carries no 1/2: dλ_I ⊙ dλ_I evaluates to
// 2·dλ_I(x,y)·dλ_I(z,w). Literature that normalizes ⊙ differs by that factor.

#include <biform/exterior_algebra.hpp>

#include <map>
#include <utility>

namespace biform {

/// Unordered pair of sorted 2-subsets, smaller subset first.
struct SlotPair {
  IndexSet first;
  IndexSet second;

  SlotPair(IndexSet a, IndexSet b);

  bool diagonal() const { return first == second; }
  friend auto operator<=>(const SlotPair&, const SlotPair&) = default;
  friend bool operator==(const SlotPair&, const SlotPair&) = default;
};

class DoubleForm22 {
 public:
  using Terms = std::map<SlotPair, Rational>;

  explicit DoubleForm22(int n);

  int n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const SlotPair& key) const;

  /// Adds c·dλ_a ⊙ dλ_b for sorted 2-subsets a, b.
  void add(const IndexSet& a, const IndexSet& b, const Rational& c);

  DoubleForm22& operator+=(const DoubleForm22& other);
  DoubleForm22& operator-=(const DoubleForm22& other);
  DoubleForm22& operator*=(const Rational& s);
  friend DoubleForm22 operator+(DoubleForm22 a, const DoubleForm22& b) { return a += b; }
  friend DoubleForm22 operator-(DoubleForm22 a, const DoubleForm22& b) { return a -= b; }
  friend DoubleForm22 operator*(const Rational& s, DoubleForm22 a) { return a *= s; }
  friend DoubleForm22 operator-(DoubleForm22 a) { return a *= Rational(-1); }
  friend bool operator==(const DoubleForm22&, const DoubleForm22&) = default;

  std::string str() const;

 private:
  void require_compatible(const DoubleForm22& other) const;

  int n_;
  Terms terms_;
};

/// a ⊙ b for two 2-forms on the same ambient space.
DoubleForm22 sym_product(const AltForm& a, const AltForm& b);

/// ω(x, y; z, w).
Rational eval_double(const DoubleForm22& omega, const Vector& x, const Vector& y, const Vector& z,
                     const Vector& w);

/// Linear extension of α⊙β ↦ α∧β; diagonal terms map to zero.
AltForm wedge_map(const DoubleForm22& omega);

/// The 4-form viewed as a symmetric (2,2)-form, (iω)(x,y;z,w) = ω(x,y,z,w).
DoubleForm22 inclusion(const AltForm& omega);

/// Tangent-space representative on the simplex `cell`, obtained by
/// canonicalizing each 2-form slot and re-expanding.
DoubleForm22 canonicalize_on(const DoubleForm22& omega, const IndexSet& cell);
DoubleForm22 canonicalize_tangent(const DoubleForm22& omega);

/// True iff the wedge of ω vanishes on the tangent space of `cell`.
bool is_bianchi(const DoubleForm22& omega, const IndexSet& cell);
bool is_bianchi(const DoubleForm22& omega);

struct Splitting {
  DoubleForm22 kernel_part;
  DoubleForm22 lambda4_part;
};

/// ω = kernel_part + lambda4_part with lambda4_part = (1/3)·i(∧ω).
Splitting split(const DoubleForm22& omega);

/// dλ_P ⊙ dλ_Q for all sorted 2-subsets P <= Q of `cell` minus its smallest
/// vertex: coordinates of canonical representatives on that cell.
std::vector<SlotPair> sym_coordinates(const IndexSet& cell);

}  // namespace biform
