#pragma once

// β/γ shape functions and the geometrically decomposed bases built from them.

#include <biform/combinatorics.hpp>
#include <biform/simplex.hpp>

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace biform {

/// β_ijk = dλ_ij⊙dλ_jk + dλ_jk⊙dλ_ki + dλ_ki⊙dλ_ij.
DoubleForm22 beta(int n, int i, int j, int k);

/// γ_ijkl = dλ_ik⊙dλ_lj − dλ_il⊙dλ_jk.
DoubleForm22 gamma(int n, int i, int j, int k, int l);

/// Injected faults, used to show that the certification catches defects.
enum class Fault {
  none,
  gamma_sign_flip,  // second γ term enters with + instead of −
};

DoubleForm22 gamma(int n, int i, int j, int k, int l, Fault fault);

enum class ShapeKind {
  beta,     // β_ijk
  gamma_a,  // γ_iklj for i<j<k<l
  gamma_b,  // γ_iljk for i<j<k<l
};

/// λ^α·ψ with ψ a constant-coefficient β or γ generator.
struct BasisElement {
  ShapeKind kind = ShapeKind::beta;
  IndexSet vertices;  // sorted {i,j,k} or {i,j,k,l}
  MultiIndex monomial = MultiIndex::zero(0);
  int n = 0;

  /// Subscripts in the order the generator is written: (i,j,k), (i,k,l,j)
  /// or (i,l,j,k).
  std::vector<int> subscripts() const;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

BasisElement make_beta(int n, int i, int j, int k, const MultiIndex& monomial);
BasisElement make_gamma(int n, ShapeKind kind, int i, int j, int k, int l,
                        const MultiIndex& monomial);

/// I(φ) = supp(α) ∪ I(ψ).
IndexSet index_set(const BasisElement& e);

/// The constant generator ψ of e as a double form on T^n.
DoubleForm22 generator(const BasisElement& e, Fault fault = Fault::none);

/// λ^α ψ on T^n (or on `cell` when given).
PolyDoubleForm to_form(const BasisElement& e, Fault fault = Fault::none);
PolyDoubleForm to_form(const BasisElement& e, const IndexSet& cell, Fault fault = Fault::none);

/// β_ijk for i<j<k, then γ_iklj, γ_iljk for i<j<k<l, all inside `cell`.
std::vector<BasisElement> constant_basis(int n, const IndexSet& cell);
/// constant_basis on T^n; empty for n < 2.
std::vector<BasisElement> constant_basis(int n);

/// λ^α ψ with |α| = r, monomial lex outermost.
std::vector<BasisElement> poly_basis(int n, int r, const IndexSet& cell);
std::vector<BasisElement> poly_basis(int n, int r);

/// Elements of poly_basis(n, r, cell) with I(φ) = cell.
std::vector<BasisElement> bubble_basis(int n, int r, const IndexSet& cell);
std::vector<BasisElement> bubble_basis(int n, int r);

/// Buckets of poly_basis(n, r) keyed by the unique face F with I(φ) = I(F).
/// Every face of T^n is present, those of dimension < 2 with empty buckets.
std::map<Face, std::vector<BasisElement>> geometric_decomposition(int n, int r);

std::string describe(const BasisElement& e);

}  // namespace biform
