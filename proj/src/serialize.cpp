#include <biform/serialize.hpp>

namespace biform {

using nlohmann::json;

namespace {

json ids_json(const IndexSet& s) { return json(s.ids()); }

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::parse_error, std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(ErrorCode::parse_error, std::string(what) + " must contain integers, got " + v.dump());
    out.push_back(v.get<int>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::parse_error, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) fail(ErrorCode::parse_error, std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

void check_schema(const json& j) {
  if (j.is_object() && j.contains("schema") && j["schema"] != kSchema)
    fail(ErrorCode::parse_error, "unsupported schema " + j["schema"].dump());
}

Rational coefficient_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  fail(ErrorCode::parse_error, "coefficient must be an integer or a \"p/q\" string, got " + v.dump());
}

// Signed sorted 2-subset from an ordered pair.
std::pair<IndexSet, int> slot_from_json(const json& j, int n, const char* what) {
  auto ids = int_list(j, what);
  if (ids.size() != 2) fail(ErrorCode::parse_error, std::string(what) + " must have two entries");
  if (ids[0] < 0 || ids[1] < 0 || ids[0] > n || ids[1] > n)
    fail(ErrorCode::parse_error, std::string(what) + " outside {0.." + std::to_string(n) + "}");
  const int sign = permutation_sign(ids);
  if (sign == 0) return {IndexSet{}, 0};
  return {IndexSet(ids), sign};
}

json form_body(const DoubleForm22& omega) {
  json terms = json::array();
  for (const auto& [key, c] : omega.terms())
    terms.push_back({{"left", ids_json(key.first)}, {"right", ids_json(key.second)}, {"coeff", to_string(c)}});
  return {{"n", omega.n()}, {"terms", terms}};
}

}  // namespace

json to_json(const BasisElement& e) {
  const auto I = index_set(e);
  return {{"kind", e.kind == ShapeKind::beta ? "beta" : "gamma"},
          {"indices", e.subscripts()},
          {"monomial", e.monomial.exponents()},
          {"I", ids_json(I)},
          {"face", ids_json(I)}};
}

BasisElement basis_element_from_json(const json& j, int n) {
  const auto& kind = field(j, "kind");
  const auto sub = int_list(field(j, "indices"), "indices");
  const auto exps = int_list(field(j, "monomial"), "monomial");
  if (static_cast<int>(exps.size()) != n + 1)
    fail(ErrorCode::parse_error, "monomial must have " + std::to_string(n + 1) + " exponents");
  MultiIndex alpha(exps);
  BasisElement e;
  if (kind == "beta") {
    if (sub.size() != 3) fail(ErrorCode::parse_error, "beta needs three indices");
    e = make_beta(n, sub[0], sub[1], sub[2], alpha);
  } else if (kind == "gamma") {
    if (sub.size() != 4) fail(ErrorCode::parse_error, "gamma needs four indices");
    IndexSet s(sub);
    e = make_gamma(n, ShapeKind::gamma_a, s[0], s[1], s[2], s[3], alpha);
    if (e.subscripts() != sub) {
      e.kind = ShapeKind::gamma_b;
      if (e.subscripts() != sub)
        fail(ErrorCode::parse_error, "gamma indices must read i,k,l,j or i,l,j,k for i<j<k<l");
    }
  } else {
    fail(ErrorCode::parse_error, "unknown kind " + kind.dump());
  }
  if (e.kind == ShapeKind::beta && e.subscripts() != sub)
    fail(ErrorCode::parse_error, "beta indices must be increasing");
  if (j.contains("I") && IndexSet(int_list(j["I"], "I")) != index_set(e))
    fail(ErrorCode::parse_error, "\"I\" does not match the element");
  return e;
}

json basis_to_json(int n, int r, const std::optional<IndexSet>& face) {
  if (n < 2) fail(ErrorCode::invalid_argument, "basis needs n >= 2");
  if (r < 0) fail(ErrorCode::invalid_argument, "polynomial degree must be >= 0");
  if (face) {
    if (face->empty() || face->back() > n)
      fail(ErrorCode::invalid_argument, "face {" + face->str() + "} is not a face of T^" + std::to_string(n));
  }
  json elements = json::array();
  for (const auto& e : poly_basis(n, r))
    if (!face || index_set(e).subset_of(*face)) elements.push_back(to_json(e));
  return {{"schema", kSchema},
          {"n", n},
          {"r", r},
          {"trace_face", face ? ids_json(*face) : json(nullptr)},
          {"count", elements.size()},
          {"elements", elements}};
}

std::vector<BasisElement> basis_from_json(const json& j) {
  check_schema(j);
  const int n = int_field(j, "n");
  std::vector<BasisElement> out;
  const auto& elems = field(j, "elements");
  if (!elems.is_array()) fail(ErrorCode::parse_error, "\"elements\" must be an array");
  for (const auto& e : elems) out.push_back(basis_element_from_json(e, n));
  return out;
}

json to_json(const DoubleForm22& omega) {
  json j = form_body(omega);
  j["schema"] = kSchema;
  return j;
}

DoubleForm22 double_form_from_json(const json& j) {
  check_schema(j);
  const int n = int_field(j, "n");
  if (n < 1 || n > 64) fail(ErrorCode::parse_error, "\"n\" must lie in 1..64");
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) fail(ErrorCode::parse_error, "\"terms\" must be an array");
  DoubleForm22 omega(n);
  for (const auto& t : terms) {
    auto [left, sl] = slot_from_json(field(t, "left"), n, "left");
    auto [right, sr] = slot_from_json(field(t, "right"), n, "right");
    Rational c = coefficient_from_json(field(t, "coeff"));
    if (sl == 0 || sr == 0) continue;
    omega.add(left, right, sl * sr * c);
  }
  return omega;
}

json to_json(const Splitting& s) {
  return {{"schema", kSchema},
          {"n", s.kernel_part.n()},
          {"kernel_part", form_body(s.kernel_part)},
          {"lambda4_part", form_body(s.lambda4_part)},
          {"kernel_wedge_zero", wedge_map(s.kernel_part).is_zero()}};
}

Splitting splitting_from_json(const json& j) {
  check_schema(j);
  return {double_form_from_json(field(j, "kernel_part")), double_form_from_json(field(j, "lambda4_part"))};
}

json to_json(const Report& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"id", c.id},
                      {"statement", c.statement},
                      {"n", c.n},
                      {"r", c.r < 0 ? json(nullptr) : json(c.r)},
                      {"status", to_string(c.status)},
                      {"detail", c.detail},
                      {"payload", c.payload}});
  return {{"schema", kSchema}, {"passed", report.passed()}, {"checks", checks}};
}

json to_json(const DofTable& table) {
  json faces = json::array();
  for (const auto& rec : table.records)
    faces.push_back({{"face", ids_json(rec.face)}, {"dim", rec.dim}, {"count", rec.count}, {"cells", rec.owning_cells}});
  return {{"schema", kSchema}, {"r", table.r}, {"faces", faces}, {"total", table.total}};
}

json to_json(const ContinuityReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"face", ids_json(e.face)},
                       {"cells", {e.cell_a, e.cell_b}},
                       {"shape_functions", e.shape_functions},
                       {"probes", e.probes},
                       {"matched", e.matched},
                       {"mismatch", e.mismatch}});
  return {{"passed", report.passed()}, {"entries", entries}};
}

json dims_to_json(int n, int r) {
  json per_dim = json::array();
  std::int64_t partition = 0;
  for (int m = 0; m <= n; ++m) {
    const auto count = binomial(n + 1, m + 1);
    partition += count * bubble_count(m, r);
    per_dim.push_back({{"m", m}, {"faces", count}, {"bubble_count", bubble_count(m, r)}});
  }
  return {{"schema", kSchema},
          {"n", n},
          {"r", r},
          {"dim_sym", dim_sym22(n)},
          {"dim_lambda4", dim_lambda4(n)},
          {"dim_bianchi", dim_bianchi(n)},
          {"dim_poly_bianchi", dim_poly_bianchi(n, r)},
          {"bubble_count", bubble_count(n, r)},
          {"faces", per_dim},
          {"partition_sum", partition},
          {"partition_identity", partition == dim_poly_bianchi(n, r)}};
}

}  // namespace biform
