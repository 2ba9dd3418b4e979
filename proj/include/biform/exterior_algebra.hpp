#pragma once

// Constant-coefficient alternating forms on the ambient space R^{n+1} spanned
// by the barycentric differentials dλ_0, ..., dλ_n.

#include <biform/rational.hpp>

#include <compare>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace biform {

using Vector = std::vector<Rational>;

/// Strictly increasing tuple of vertex ids.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts the input; throws on repeated ids or negative ids.
  explicit IndexSet(std::vector<int> ids);
  IndexSet(std::initializer_list<int> ids) : IndexSet(std::vector<int>(ids)) {}

  /// {0, 1, ..., n}.
  static IndexSet full(int n);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  int operator[](std::size_t i) const { return ids_[i]; }
  int front() const { return ids_.front(); }
  int back() const { return ids_.back(); }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<int>& ids() const noexcept { return ids_; }

  bool contains(int v) const;
  bool subset_of(const IndexSet& other) const;
  IndexSet united(const IndexSet& other) const;
  IndexSet without(int v) const;

  std::string str() const;

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> ids_;
};

/// All k-element subsets of `from`, in lexicographic order.
std::vector<IndexSet> subsets(const IndexSet& from, std::size_t k);

/// Sign of the permutation sorting `seq`, or 0 when `seq` has a repeated entry.
int permutation_sign(std::span<const int> seq);

/// Sparse k-form Σ c_I dλ_I over sorted k-subsets I of {0..n}. Zero
/// coefficients are never stored, so the zero form has an empty map.
class AltForm {
 public:
  using Terms = std::map<IndexSet, Rational>;

  AltForm(int n, int k);

  int n() const noexcept { return n_; }
  int degree() const noexcept { return k_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const IndexSet& key) const;

  /// Adds c·dλ_key; `key` must be a k-subset of {0..n}.
  void add(const IndexSet& key, const Rational& c);

  AltForm& operator+=(const AltForm& other);
  AltForm& operator-=(const AltForm& other);
  AltForm& operator*=(const Rational& s);
  friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
  friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
  friend AltForm operator*(const Rational& s, AltForm a) { return a *= s; }
  friend AltForm operator-(AltForm a) { return a *= Rational(-1); }
  friend bool operator==(const AltForm&, const AltForm&) = default;

  std::string str() const;

 private:
  void require_compatible(const AltForm& other) const;

  int n_;
  int k_;
  Terms terms_;
};

/// dλ_0, ..., dλ_n.
std::vector<AltForm> basis_one_forms(int n);

/// dλ_{i1} ∧ ... ∧ dλ_{ik} for the indices in the order given, so that
/// d_lambda(n, {2, 0}) = -dλ_{02}.
AltForm d_lambda(int n, std::initializer_list<int> ordered);
AltForm d_lambda(int n, std::span<const int> ordered);

AltForm wedge(const AltForm& a, const AltForm& b);

/// Σ_I c_I det(v[j][I[i]]): each vector has n+1 ambient components.
Rational eval_alt(const AltForm& a, std::span<const Vector> vectors);

/// Representative of `a` restricted to the tangent space of the simplex with
/// vertex set `cell`: substitutes dλ_{c0} = -(Σ_{v in cell, v != c0} dλ_v)
/// for the smallest vertex c0, and drops every term using a vertex outside
/// `cell` (those differentials pull back to zero). Two forms agree on the
/// cell iff their representatives are identical.
AltForm canonicalize_on(const AltForm& a, const IndexSet& cell);

/// canonicalize_on(a, {0..n}).
AltForm canonicalize_tangent(const AltForm& a);

/// e_i - e_{c0} for every non-minimal vertex i of `cell`, as ambient vectors
/// with n+1 components.
std::vector<Vector> tangent_basis(int n, const IndexSet& cell);

/// Standard basis vector e_i of R^{n+1}.
Vector unit_vector(int n, int i);

}  // namespace biform
