#include <biform/simplex.hpp>

#include <sstream>

namespace biform {

std::vector<Face> faces(int n, int m) {
  if (n < 0 || m < 0 || m > n)
    fail(ErrorCode::invalid_argument,
         "face dimension " + std::to_string(m) + " out of range for n = " + std::to_string(n));
  std::vector<Face> out;
  for (auto& s : subsets(IndexSet::full(n), static_cast<std::size_t>(m + 1)))
    out.push_back(Face{std::move(s), n});
  return out;
}

std::vector<Face> all_faces(int n) {
  std::vector<Face> out;
  for (int m = 0; m <= n; ++m)
    for (auto& f : faces(n, m)) out.push_back(std::move(f));
  return out;
}

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) fail(ErrorCode::invalid_argument, "multi-index needs at least one variable");
  for (int e : exponents_) {
    if (e < 0) fail(ErrorCode::invalid_argument, "negative exponent in multi-index");
    degree_ += e;
  }
}

MultiIndex MultiIndex::zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n + 1), 0)); }

IndexSet MultiIndex::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0) s.push_back(static_cast<int>(i));
  return IndexSet(std::move(s));
}

MultiIndex MultiIndex::bumped(int i) const {
  auto e = exponents_;
  e.at(static_cast<std::size_t>(i)) += 1;
  return MultiIndex(std::move(e));
}

Rational MultiIndex::evaluate(const Vector& point) const {
  if (point.size() != exponents_.size()) fail(ErrorCode::invalid_argument, "point has wrong length");
  Rational v = 1;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    for (int p = 0; p < exponents_[i]; ++p) v *= point[i];
  return v;
}

std::string MultiIndex::str() const {
  if (degree_ == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "l" << i;
    if (exponents_[i] > 1) os << "^" << exponents_[i];
  }
  return os.str();
}

namespace {

void monomials_rec(std::size_t pos, int remaining, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    monomials_rec(pos + 1, remaining - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials(int n, int r) {
  if (n < 0 || r < 0) fail(ErrorCode::invalid_argument, "monomials needs n >= 0 and r >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(n + 1), 0);
  monomials_rec(0, r, cur, out);
  return out;
}

std::vector<MultiIndex> monomials_on(int n, int r, const IndexSet& cell) {
  if (cell.empty()) return {};
  if (cell.back() > n) fail(ErrorCode::invalid_argument, "cell outside {0..n}");
  // Enumerate over the cell's variables only; zeros elsewhere keep lex order.
  std::vector<MultiIndex> out;
  for (const auto& local : monomials(static_cast<int>(cell.size()) - 1, r)) {
    std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
    for (std::size_t i = 0; i < cell.size(); ++i) e[static_cast<std::size_t>(cell[i])] = local[i];
    out.emplace_back(std::move(e));
  }
  return out;
}

PolyDoubleForm::PolyDoubleForm(int n, int r) : PolyDoubleForm(n, r, IndexSet::full(n)) {}

PolyDoubleForm::PolyDoubleForm(int n, int r, IndexSet cell) : n_(n), r_(r), cell_(std::move(cell)) {
  if (n < 0 || r < 0) fail(ErrorCode::invalid_argument, "PolyDoubleForm needs n >= 0 and r >= 0");
  if (!cell_.empty() && cell_.back() > n) fail(ErrorCode::invalid_argument, "cell outside {0..n}");
}

void PolyDoubleForm::add(const MultiIndex& alpha, const DoubleForm22& omega) {
  if (alpha.degree() != r_)
    fail(ErrorCode::invalid_argument, "monomial " + alpha.str() + " has degree " +
                                          std::to_string(alpha.degree()) + ", expected " + std::to_string(r_));
  if (alpha.n() != n_ || omega.n() != n_) fail(ErrorCode::invalid_argument, "mismatched ambient dimension");
  if (omega.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, omega);
  if (!inserted) {
    it->second += omega;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyDoubleForm& PolyDoubleForm::operator+=(const PolyDoubleForm& other) {
  if (other.n_ != n_ || other.r_ != r_ || other.cell_ != cell_)
    fail(ErrorCode::invalid_argument, "adding forms of different spaces");
  for (const auto& [alpha, omega] : other.terms_) add(alpha, omega);
  return *this;
}

PolyDoubleForm& PolyDoubleForm::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, omega] : terms_) omega *= s;
  return *this;
}

IndexSet PolyDoubleForm::used_vertices() const {
  IndexSet used;
  for (const auto& [alpha, omega] : terms_) {
    used = used.united(alpha.support());
    for (const auto& [key, c] : omega.terms()) used = used.united(key.first).united(key.second);
  }
  return used;
}

std::string PolyDoubleForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, omega] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << alpha.str() << "*(" << omega.str() << ")";
  }
  return os.str();
}

PolyDoubleForm raise_degree(const PolyDoubleForm& phi) {
  PolyDoubleForm out(phi.n(), phi.degree() + 1, phi.cell());
  for (const auto& [alpha, omega] : phi.terms())
    for (int v : phi.cell()) out.add(alpha.bumped(v), omega);
  return out;
}

PolyDoubleForm homogenize(int n, int r, const std::map<MultiIndex, DoubleForm22>& terms,
                          const IndexSet& cell) {
  PolyDoubleForm out(n, r, cell);
  for (const auto& [alpha, omega] : terms) {
    if (alpha.degree() > r) fail(ErrorCode::invalid_argument, "term of degree above " + std::to_string(r));
    PolyDoubleForm piece(n, alpha.degree(), cell);
    piece.add(alpha, omega);
    while (piece.degree() < r) piece = raise_degree(piece);
    out += piece;
  }
  return out;
}

PolyDoubleForm canonicalize(const PolyDoubleForm& phi) {
  PolyDoubleForm out(phi.n(), phi.degree(), phi.cell());
  for (const auto& [alpha, omega] : phi.terms()) {
    if (!alpha.support().subset_of(phi.cell())) continue;
    out.add(alpha, canonicalize_on(omega, phi.cell()));
  }
  return out;
}

bool vanishes(const PolyDoubleForm& phi) { return canonicalize(phi).is_zero(); }

PolyDoubleForm trace(const PolyDoubleForm& phi, const Face& face) { return trace(phi, face.vertices); }

PolyDoubleForm trace(const PolyDoubleForm& phi, const IndexSet& face) {
  if (!face.subset_of(phi.cell()))
    fail(ErrorCode::invalid_argument, "{" + face.str() + "} is not a face of {" + phi.cell().str() + "}");
  PolyDoubleForm out(phi.n(), phi.degree(), face);
  for (const auto& [alpha, omega] : phi.terms()) {
    if (!alpha.support().subset_of(face)) continue;
    DoubleForm22 restricted(phi.n());
    for (const auto& [key, c] : omega.terms())
      if (key.first.subset_of(face) && key.second.subset_of(face)) restricted.add(key.first, key.second, c);
    out.add(alpha, restricted);
  }
  return out;
}

PolyDoubleForm extend(const PolyDoubleForm& phi, const IndexSet& target) {
  if (!phi.used_vertices().subset_of(phi.cell()))
    fail(ErrorCode::invalid_argument, "form uses vertices outside its face {" + phi.cell().str() + "}");
  if (!phi.cell().subset_of(target))
    fail(ErrorCode::invalid_argument, "{" + phi.cell().str() + "} is not a face of {" + target.str() + "}");
  PolyDoubleForm out(phi.n(), phi.degree(), target);
  for (const auto& [alpha, omega] : phi.terms()) out.add(alpha, omega);
  return out;
}

Rational eval_poly(const PolyDoubleForm& phi, const Vector& point, const Vector& x, const Vector& y,
                   const Vector& z, const Vector& w) {
  if (static_cast<int>(point.size()) != phi.n() + 1) fail(ErrorCode::invalid_argument, "point has wrong length");
  Rational sum = 0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i] != 0 && !phi.cell().contains(static_cast<int>(i)))
      fail(ErrorCode::invalid_argument, "point does not lie on the cell {" + phi.cell().str() + "}");
    sum += point[i];
  }
  if (sum != 1) fail(ErrorCode::invalid_argument, "barycentric coordinates sum to " + to_string(sum));
  Rational total = 0;
  for (const auto& [alpha, omega] : phi.terms()) {
    Rational m = alpha.evaluate(point);
    if (m != 0) total += m * eval_double(omega, x, y, z, w);
  }
  return total;
}

std::vector<Vector> lattice_points(int n, int r, const IndexSet& cell) {
  std::vector<Vector> out;
  if (cell.empty()) return out;
  if (r == 0) {
    Vector p(static_cast<std::size_t>(n + 1), Rational(0));
    for (int v : cell) p[static_cast<std::size_t>(v)] = ratio(1, static_cast<long>(cell.size()));
    out.push_back(std::move(p));
    return out;
  }
  for (const auto& alpha : monomials_on(n, r, cell)) {
    Vector p(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) p[static_cast<std::size_t>(i)] = ratio(alpha[static_cast<std::size_t>(i)], r);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace biform
