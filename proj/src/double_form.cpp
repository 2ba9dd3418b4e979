#include <biform/double_form.hpp>

#include <sstream>

namespace biform {

namespace {

void require_two_subset(const IndexSet& s, int n) {
  if (s.size() != 2) fail(ErrorCode::invalid_argument, "double form slot " + s.str() + " is not a 2-subset");
  if (s.back() > n)
    fail(ErrorCode::invalid_argument, "double form slot " + s.str() + " outside {0.." + std::to_string(n) + "}");
}

void require_length(const Vector& v, int n) {
  if (static_cast<int>(v.size()) != n + 1)
    fail(ErrorCode::invalid_argument, "eval_double: vector has wrong length");
}

// dλ_{ij}(x, y) = x_i y_j - x_j y_i.
Rational eval_pair(const IndexSet& s, const Vector& x, const Vector& y) {
  auto i = static_cast<std::size_t>(s[0]);
  auto j = static_cast<std::size_t>(s[1]);
  return x[i] * y[j] - x[j] * y[i];
}

AltForm two_form(int n, const IndexSet& s) {
  AltForm f(n, 2);
  f.add(s, 1);
  return f;
}

}  // namespace

SlotPair::SlotPair(IndexSet a, IndexSet b) {
  if (b < a) std::swap(a, b);
  first = std::move(a);
  second = std::move(b);
}

DoubleForm22::DoubleForm22(int n) : n_(n) {
  if (n < 0) fail(ErrorCode::invalid_argument, "DoubleForm22 needs n >= 0");
}

Rational DoubleForm22::coefficient(const SlotPair& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DoubleForm22::add(const IndexSet& a, const IndexSet& b, const Rational& c) {
  require_two_subset(a, n_);
  require_two_subset(b, n_);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(SlotPair(a, b), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void DoubleForm22::require_compatible(const DoubleForm22& other) const {
  if (n_ != other.n_) fail(ErrorCode::invalid_argument, "mismatched ambient dimension");
}

DoubleForm22& DoubleForm22::operator+=(const DoubleForm22& other) {
  require_compatible(other);
  for (const auto& [key, c] : other.terms_) add(key.first, key.second, c);
  return *this;
}

DoubleForm22& DoubleForm22::operator-=(const DoubleForm22& other) {
  require_compatible(other);
  for (const auto& [key, c] : other.terms_) add(key.first, key.second, -c);
  return *this;
}

DoubleForm22& DoubleForm22::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

std::string DoubleForm22::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1) os << a << "*";
    os << "dl" << key.first.str() << ".dl" << key.second.str();
  }
  return os.str();
}

DoubleForm22 sym_product(const AltForm& a, const AltForm& b) {
  if (a.n() != b.n()) fail(ErrorCode::invalid_argument, "sym_product: mismatched ambient dimension");
  if (a.degree() != 2 || b.degree() != 2) fail(ErrorCode::invalid_argument, "sym_product needs two 2-forms");
  DoubleForm22 out(a.n());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) out.add(p, q, cp * cq);
  return out;
}

Rational eval_double(const DoubleForm22& omega, const Vector& x, const Vector& y, const Vector& z,
                     const Vector& w) {
  for (const Vector* v : {&x, &y, &z, &w}) require_length(*v, omega.n());
  Rational total = 0;
  for (const auto& [key, c] : omega.terms()) {
    Rational a_xy = eval_pair(key.first, x, y);
    Rational a_zw = eval_pair(key.first, z, w);
    if (key.diagonal()) {
      total += 2 * c * a_xy * a_zw;
    } else {
      total += c * (a_xy * eval_pair(key.second, z, w) + eval_pair(key.second, x, y) * a_zw);
    }
  }
  return total;
}

AltForm wedge_map(const DoubleForm22& omega) {
  AltForm out(omega.n(), 4);
  for (const auto& [key, c] : omega.terms()) {
    if (key.diagonal()) continue;
    const std::vector<int> seq{key.first[0], key.first[1], key.second[0], key.second[1]};
    int sign = permutation_sign(seq);
    if (sign != 0) out.add(IndexSet(seq), sign * c);
  }
  return out;
}

DoubleForm22 inclusion(const AltForm& omega) {
  if (omega.degree() != 4) fail(ErrorCode::invalid_argument, "inclusion needs a 4-form");
  const int n = omega.n();
  DoubleForm22 out(n);
  for (const auto& [key, c] : omega.terms()) {
    const int a = key[0], b = key[1], cc = key[2], d = key[3];
    // i(α1∧α2∧α3∧α4) = α12⊙α34 + α13⊙α42 + α14⊙α23
    DoubleForm22 t = sym_product(d_lambda(n, {a, b}), d_lambda(n, {cc, d}));
    t += sym_product(d_lambda(n, {a, cc}), d_lambda(n, {d, b}));
    t += sym_product(d_lambda(n, {a, d}), d_lambda(n, {b, cc}));
    t *= c;
    out += t;
  }
  return out;
}

DoubleForm22 canonicalize_on(const DoubleForm22& omega, const IndexSet& cell) {
  const int n = omega.n();
  DoubleForm22 out(n);
  for (const auto& [key, c] : omega.terms()) {
    if (!key.first.subset_of(cell) || !key.second.subset_of(cell)) continue;
    AltForm a = canonicalize_on(two_form(n, key.first), cell);
    AltForm b = key.diagonal() ? a : canonicalize_on(two_form(n, key.second), cell);
    DoubleForm22 t = sym_product(a, b);
    t *= c;
    out += t;
  }
  return out;
}

DoubleForm22 canonicalize_tangent(const DoubleForm22& omega) {
  return canonicalize_on(omega, IndexSet::full(omega.n()));
}

bool is_bianchi(const DoubleForm22& omega, const IndexSet& cell) {
  return canonicalize_on(wedge_map(omega), cell).is_zero();
}

bool is_bianchi(const DoubleForm22& omega) { return is_bianchi(omega, IndexSet::full(omega.n())); }

Splitting split(const DoubleForm22& omega) {
  DoubleForm22 lambda4 = inclusion(wedge_map(omega));
  lambda4 *= ratio(1, 3);
  return {omega - lambda4, lambda4};
}

std::vector<SlotPair> sym_coordinates(const IndexSet& cell) {
  std::vector<SlotPair> out;
  if (cell.size() < 3) return out;
  auto pairs = subsets(cell.without(cell.front()), 2);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = p; q < pairs.size(); ++q) out.emplace_back(pairs[p], pairs[q]);
  return out;
}

}  // namespace biform
