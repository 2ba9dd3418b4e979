#include <biform/basis.hpp>

namespace biform {

namespace {

void require_distinct(std::vector<int> ids, const char* what) {
  try {
    IndexSet check(std::move(ids));
  } catch (const Error&) {
    fail(ErrorCode::invalid_argument, std::string(what) + " needs distinct nonnegative indices");
  }
}

}  // namespace

DoubleForm22 beta(int n, int i, int j, int k) {
  require_distinct({i, j, k}, "beta");
  auto ij = d_lambda(n, {i, j});
  auto jk = d_lambda(n, {j, k});
  auto ki = d_lambda(n, {k, i});
  return sym_product(ij, jk) + sym_product(jk, ki) + sym_product(ki, ij);
}

DoubleForm22 gamma(int n, int i, int j, int k, int l) { return gamma(n, i, j, k, l, Fault::none); }

DoubleForm22 gamma(int n, int i, int j, int k, int l, Fault fault) {
  require_distinct({i, j, k, l}, "gamma");
  DoubleForm22 first = sym_product(d_lambda(n, {i, k}), d_lambda(n, {l, j}));
  DoubleForm22 second = sym_product(d_lambda(n, {i, l}), d_lambda(n, {j, k}));
  return fault == Fault::gamma_sign_flip ? first + second : first - second;
}

std::vector<int> BasisElement::subscripts() const {
  const auto& v = vertices.ids();
  switch (kind) {
    case ShapeKind::beta:
      return {v[0], v[1], v[2]};
    case ShapeKind::gamma_a:
      return {v[0], v[2], v[3], v[1]};
    case ShapeKind::gamma_b:
      return {v[0], v[3], v[1], v[2]};
  }
  return {};
}

BasisElement make_beta(int n, int i, int j, int k, const MultiIndex& monomial) {
  if (monomial.n() != n) fail(ErrorCode::invalid_argument, "monomial has wrong number of variables");
  IndexSet v{i, j, k};
  if (v.back() > n) fail(ErrorCode::invalid_argument, "beta vertex outside {0..n}");
  return BasisElement{ShapeKind::beta, std::move(v), monomial, n};
}

BasisElement make_gamma(int n, ShapeKind kind, int i, int j, int k, int l, const MultiIndex& monomial) {
  if (kind == ShapeKind::beta) fail(ErrorCode::invalid_argument, "make_gamma needs a gamma kind");
  if (monomial.n() != n) fail(ErrorCode::invalid_argument, "monomial has wrong number of variables");
  IndexSet v{i, j, k, l};
  if (v.back() > n) fail(ErrorCode::invalid_argument, "gamma vertex outside {0..n}");
  return BasisElement{kind, std::move(v), monomial, n};
}

IndexSet index_set(const BasisElement& e) { return e.monomial.support().united(e.vertices); }

DoubleForm22 generator(const BasisElement& e, Fault fault) {
  auto s = e.subscripts();
  if (e.kind == ShapeKind::beta) return beta(e.n, s[0], s[1], s[2]);
  return gamma(e.n, s[0], s[1], s[2], s[3], fault);
}

PolyDoubleForm to_form(const BasisElement& e, Fault fault) {
  return to_form(e, IndexSet::full(e.n), fault);
}

PolyDoubleForm to_form(const BasisElement& e, const IndexSet& cell, Fault fault) {
  if (!index_set(e).subset_of(cell))
    fail(ErrorCode::invalid_argument, describe(e) + " does not live on {" + cell.str() + "}");
  PolyDoubleForm phi(e.n, e.monomial.degree(), cell);
  phi.add(e.monomial, generator(e, fault));
  return phi;
}

std::vector<BasisElement> constant_basis(int n, const IndexSet& cell) {
  std::vector<BasisElement> out;
  if (n < 2 || cell.size() < 3) return out;
  const auto one = MultiIndex::zero(n);
  for (const auto& t : subsets(cell, 3)) out.push_back(BasisElement{ShapeKind::beta, t, one, n});
  for (const auto& q : subsets(cell, 4)) {
    out.push_back(BasisElement{ShapeKind::gamma_a, q, one, n});
    out.push_back(BasisElement{ShapeKind::gamma_b, q, one, n});
  }
  return out;
}

std::vector<BasisElement> constant_basis(int n) {
  if (n < 2) return {};
  return constant_basis(n, IndexSet::full(n));
}

std::vector<BasisElement> poly_basis(int n, int r, const IndexSet& cell) {
  if (r < 0) fail(ErrorCode::invalid_argument, "polynomial degree must be >= 0");
  std::vector<BasisElement> out;
  if (n < 2) return out;
  const auto generators = constant_basis(n, cell);
  for (const auto& alpha : monomials_on(n, r, cell))
    for (auto e : generators) {
      e.monomial = alpha;
      out.push_back(std::move(e));
    }
  return out;
}

std::vector<BasisElement> poly_basis(int n, int r) { return poly_basis(n, r, IndexSet::full(n)); }

std::vector<BasisElement> bubble_basis(int n, int r, const IndexSet& cell) {
  std::vector<BasisElement> out;
  for (auto& e : poly_basis(n, r, cell))
    if (index_set(e) == cell) out.push_back(std::move(e));
  return out;
}

std::vector<BasisElement> bubble_basis(int n, int r) { return bubble_basis(n, r, IndexSet::full(n)); }

std::map<Face, std::vector<BasisElement>> geometric_decomposition(int n, int r) {
  std::map<Face, std::vector<BasisElement>> buckets;
  for (auto& f : all_faces(n)) buckets.emplace(std::move(f), std::vector<BasisElement>{});
  for (auto& e : poly_basis(n, r)) buckets.at(Face{index_set(e), n}).push_back(std::move(e));
  return buckets;
}

std::string describe(const BasisElement& e) {
  std::string s;
  if (e.monomial.degree() > 0) s = e.monomial.str() + "*";
  s += e.kind == ShapeKind::beta ? "beta(" : "gamma(";
  auto sub = e.subscripts();
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sub[i]);
  }
  return s + ")";
}

}  // namespace biform
