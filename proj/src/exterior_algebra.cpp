#include <biform/exterior_algebra.hpp>

#include <algorithm>
#include <sstream>

namespace biform {

IndexSet::IndexSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    fail(ErrorCode::invalid_argument, "repeated vertex in index set");
  if (!ids_.empty() && ids_.front() < 0) fail(ErrorCode::invalid_argument, "negative vertex id");
}

IndexSet IndexSet::full(int n) {
  std::vector<int> ids(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) ids[static_cast<std::size_t>(i)] = i;
  return IndexSet(std::move(ids));
}

bool IndexSet::contains(int v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

bool IndexSet::subset_of(const IndexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

IndexSet IndexSet::united(const IndexSet& other) const {
  std::vector<int> out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  return IndexSet(std::move(out));
}

IndexSet IndexSet::without(int v) const {
  std::vector<int> out;
  for (int i : ids_)
    if (i != v) out.push_back(i);
  return IndexSet(std::move(out));
}

std::string IndexSet::str() const {
  // Single-digit labels are concatenated (dl012), larger ones comma-separated.
  const bool compact = ids_.empty() || ids_.back() < 10;
  std::string s;
  for (int i : ids_) {
    if (!compact && !s.empty()) s += ',';
    s += std::to_string(i);
  }
  return s;
}

namespace {

void subsets_rec(const IndexSet& from, std::size_t k, std::size_t start, std::vector<int>& cur,
                 std::vector<IndexSet>& out) {
  if (cur.size() == k) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= from.size(); ++i) {
    cur.push_back(from[i]);
    subsets_rec(from, k, i + 1, cur, out);
    cur.pop_back();
  }
}

Rational determinant(std::vector<Vector> m) {
  const std::size_t k = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && m[p][c] == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < k; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < k; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace

std::vector<IndexSet> subsets(const IndexSet& from, std::size_t k) {
  std::vector<IndexSet> out;
  std::vector<int> cur;
  subsets_rec(from, k, 0, cur, out);
  return out;
}

int permutation_sign(std::span<const int> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) sign = -sign;
    }
  return sign;
}

AltForm::AltForm(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0) fail(ErrorCode::invalid_argument, "AltForm needs n >= 0 and k >= 0");
}

Rational AltForm::coefficient(const IndexSet& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AltForm::add(const IndexSet& key, const Rational& c) {
  if (static_cast<int>(key.size()) != k_)
    fail(ErrorCode::invalid_argument, "key " + key.str() + " has wrong degree");
  if (!key.empty() && key.back() > n_)
    fail(ErrorCode::invalid_argument, "key " + key.str() + " outside {0.." + std::to_string(n_) + "}");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void AltForm::require_compatible(const AltForm& other) const {
  if (n_ != other.n_) fail(ErrorCode::invalid_argument, "mismatched ambient dimension");
  if (k_ != other.k_) fail(ErrorCode::invalid_argument, "mismatched form degree");
}

AltForm& AltForm::operator+=(const AltForm& other) {
  require_compatible(other);
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

AltForm& AltForm::operator-=(const AltForm& other) {
  require_compatible(other);
  for (const auto& [key, c] : other.terms_) add(key, -c);
  return *this;
}

AltForm& AltForm::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

std::string AltForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1) os << a << "*";
    os << "dl" << key.str();
  }
  return os.str();
}

std::vector<AltForm> basis_one_forms(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "basis_one_forms needs n >= 1");
  std::vector<AltForm> out;
  for (int i = 0; i <= n; ++i) {
    AltForm f(n, 1);
    f.add(IndexSet{i}, 1);
    out.push_back(std::move(f));
  }
  return out;
}

AltForm d_lambda(int n, std::initializer_list<int> ordered) {
  return d_lambda(n, std::span<const int>(ordered.begin(), ordered.size()));
}

AltForm d_lambda(int n, std::span<const int> ordered) {
  AltForm f(n, static_cast<int>(ordered.size()));
  int sign = permutation_sign(ordered);
  if (sign == 0) return f;
  f.add(IndexSet(std::vector<int>(ordered.begin(), ordered.end())), sign);
  return f;
}

AltForm wedge(const AltForm& a, const AltForm& b) {
  if (a.n() != b.n()) fail(ErrorCode::invalid_argument, "wedge: mismatched ambient dimension");
  AltForm out(a.n(), a.degree() + b.degree());
  std::vector<int> seq;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      seq.assign(ka.begin(), ka.end());
      seq.insert(seq.end(), kb.begin(), kb.end());
      int sign = permutation_sign(seq);
      if (sign == 0) continue;
      out.add(IndexSet(seq), sign * ca * cb);
    }
  return out;
}

Rational eval_alt(const AltForm& a, std::span<const Vector> vectors) {
  if (static_cast<int>(vectors.size()) != a.degree())
    fail(ErrorCode::invalid_argument, "eval_alt: expected " + std::to_string(a.degree()) + " vectors");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != a.n() + 1)
      fail(ErrorCode::invalid_argument, "eval_alt: vector has wrong length");
  Rational total = 0;
  const std::size_t k = vectors.size();
  std::vector<Vector> minor(k, Vector(k));
  for (const auto& [key, c] : a.terms()) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = vectors[j][static_cast<std::size_t>(key[i])];
    total += c * determinant(minor);
  }
  return total;
}

AltForm canonicalize_on(const AltForm& a, const IndexSet& cell) {
  AltForm out(a.n(), a.degree());
  if (cell.empty()) return out;
  const int base = cell.front();
  std::vector<int> seq;
  for (const auto& [key, c] : a.terms()) {
    if (!key.subset_of(cell)) continue;
    if (!key.contains(base)) {
      out.add(key, c);
      continue;
    }
    IndexSet rest = key.without(base);
    for (int v : cell) {
      if (v == base || rest.contains(v)) continue;
      seq.assign(1, v);
      seq.insert(seq.end(), rest.begin(), rest.end());
      out.add(IndexSet(seq), -c * permutation_sign(seq));
    }
  }
  return out;
}

AltForm canonicalize_tangent(const AltForm& a) { return canonicalize_on(a, IndexSet::full(a.n())); }

Vector unit_vector(int n, int i) {
  Vector v(static_cast<std::size_t>(n + 1), Rational(0));
  v.at(static_cast<std::size_t>(i)) = 1;
  return v;
}

std::vector<Vector> tangent_basis(int n, const IndexSet& cell) {
  std::vector<Vector> out;
  if (cell.empty()) return out;
  for (std::size_t i = 1; i < cell.size(); ++i) {
    Vector v = unit_vector(n, cell[i]);
    v[static_cast<std::size_t>(cell.front())] = -1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace biform
