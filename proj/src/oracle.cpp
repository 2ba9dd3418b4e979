#include <biform/oracle.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace biform {

namespace {

std::size_t checked_dim(const IndexSet& cell) { return cell.empty() ? 0 : cell.size() - 1; }

void require_family(const std::vector<PolyDoubleForm>& forms) {
  for (const auto& f : forms)
    if (f.n() != forms.front().n() || f.degree() != forms.front().degree() || f.cell() != forms.front().cell())
      fail(ErrorCode::invalid_argument, "forms in one matrix must share n, r and cell");
}

}  // namespace

ExactMatrix coefficient_matrix(const std::vector<PolyDoubleForm>& forms) {
  if (forms.empty()) return ExactMatrix(0, 0);
  require_family(forms);
  const auto& head = forms.front();
  const auto monos = monomials_on(head.n(), head.degree(), head.cell());
  const auto coords = sym_coordinates(head.cell());
  std::map<MultiIndex, std::size_t> mono_index;
  for (std::size_t i = 0; i < monos.size(); ++i) mono_index.emplace(monos[i], i);
  std::map<SlotPair, std::size_t> coord_index;
  for (std::size_t i = 0; i < coords.size(); ++i) coord_index.emplace(coords[i], i);

  ExactMatrix m(forms.size(), monos.size() * coords.size());
  for (std::size_t row = 0; row < forms.size(); ++row) {
    const auto canon = canonicalize(forms[row]);
    for (const auto& [alpha, omega] : canon.terms()) {
      const std::size_t base = mono_index.at(alpha) * coords.size();
      for (const auto& [key, c] : omega.terms()) m(row, base + coord_index.at(key)) = c;
    }
  }
  return m;
}

std::vector<ProbeTuple> full_probe_tuples(int n, const IndexSet& cell) {
  const auto t = tangent_basis(n, cell);
  std::vector<ProbeTuple> out;
  for (const auto& a : t)
    for (const auto& b : t)
      for (const auto& c : t)
        for (const auto& d : t) out.push_back({a, b, c, d});
  return out;
}

std::vector<ProbeTuple> reduced_probe_tuples(int n, const IndexSet& cell) {
  const auto t = tangent_basis(n, cell);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b) pairs.emplace_back(a, b);
  std::vector<ProbeTuple> out;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = p; q < pairs.size(); ++q)
      out.push_back({t[pairs[p].first], t[pairs[p].second], t[pairs[q].first], t[pairs[q].second]});
  return out;
}

ExactMatrix evaluation_matrix(const std::vector<PolyDoubleForm>& forms, const std::vector<Vector>& points,
                              const std::vector<ProbeTuple>& tuples) {
  if (forms.empty()) return ExactMatrix(0, points.size() * tuples.size());
  require_family(forms);
  const auto& head = forms.front();
  const auto m = static_cast<std::int64_t>(checked_dim(head.cell()));
  const auto needed = binomial(m + head.degree(), head.degree()) * dim_sym22(m);
  const auto probes = static_cast<std::int64_t>(points.size() * tuples.size());
  if (probes < needed)
    fail(ErrorCode::invalid_argument, "insufficient probes: " + std::to_string(probes) + " < " +
                                          std::to_string(needed) + " needed to resolve the space");
  ExactMatrix out(forms.size(), points.size() * tuples.size());
  for (std::size_t row = 0; row < forms.size(); ++row) {
    std::size_t col = 0;
    for (const auto& p : points)
      for (const auto& t : tuples) out(row, col++) = eval_poly(forms[row], p, t[0], t[1], t[2], t[3]);
  }
  return out;
}

ExactMatrix evaluation_matrix(const std::vector<PolyDoubleForm>& forms) {
  if (forms.empty()) return ExactMatrix(0, 0);
  const auto& head = forms.front();
  return evaluation_matrix(forms, lattice_points(head.n(), head.degree(), head.cell()),
                           reduced_probe_tuples(head.n(), head.cell()));
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skip:
      return "skip";
  }
  return "?";
}

namespace {

struct CheckSpec {
  const char* id;
  const char* statement;
};

// One entry per structural claim; order is the report order.
const std::vector<CheckSpec>& specs() {
  static const std::vector<CheckSpec> all = {
      {"wedge_inclusion", "wedge(i(w)) = 3w for every basis 4-form w"},
      {"wedge_surjective", "the wedge map from symmetric (2,2)-forms onto 4-forms is surjective"},
      {"sym_splitting", "symmetric (2,2)-forms split as Bianchi kernel plus included 4-forms"},
      {"dim_sym", "dim of symmetric (2,2)-forms is n(n-1)(n^2-n+2)/8"},
      {"dim_bianchi", "dim of the Bianchi kernel is n^2(n+1)(n-1)/12"},
      {"kernel_membership", "every beta and gamma generator wedges to zero"},
      {"face_vanishing", "beta_ijk and gamma_ijkl vanish on faces not containing their vertices"},
      {"generator_symmetries", "beta is fully symmetric; gamma has its eight pair symmetries"},
      {"gamma_cyclic", "gamma_ijkl + gamma_iklj + gamma_iljk = 0"},
      {"triangle_bubble", "on a triangle the symmetric space is one-dimensional and beta = 3 w.w"},
      {"tet_trace_surjective", "the trace onto the four triangles of a tetrahedron is onto, kernel dim 2"},
      {"gamma_independence", "gamma_iklj, gamma_iljk evaluate to [[2,-4],[-4,2]] and are independent"},
      {"constant_basis_count", "the constant basis has C(n+1,3) + 2C(n+1,4) elements"},
      {"constant_basis_independent", "the constant basis is linearly independent"},
      {"constant_basis_spans", "the constant basis lies in and spans the Bianchi kernel"},
      {"face_constant_basis", "traces of generators supported on a face form the constant basis there"},
      {"poly_basis", "monomial multiples of the constant basis form a basis of degree-r forms"},
      {"face_poly_basis", "traces of elements with I(phi) in I(F) form the degree-r basis on F"},
      {"trace_characterization", "tr_F phi is nonzero iff I(phi) is contained in I(F)"},
      {"boundary_vanishing", "phi vanishes on the boundary iff I(phi) is every vertex"},
      {"bubble_basis", "elements with I(phi) = all vertices form a basis of the bubble space"},
      {"bubble_count", "the bubble basis has C(n+1,3)C(r+2,n) + 2C(n+1,4)C(r+3,n) elements"},
      {"face_bubble_basis", "on each m-face the bubble basis has the m-dimensional count"},
      {"extension_left_inverse", "tr_F(E_F(phi)) = phi for every bubble function on F"},
      {"geometric_decomposition", "the basis is the disjoint union of extended face bubble bases"},
      {"oracle_equivalence", "coefficient and evaluation matrices have equal ranks"},
  };
  return all;
}

const CheckSpec& spec_for(const std::string& id) {
  for (const auto& s : specs())
    if (id == s.id) return s;
  fail(ErrorCode::invalid_argument, "unknown check " + id);
}

class Recorder {
 public:
  Recorder(Report& report, int n, int r) : report_(report), n_(n), r_(r) {}

  CheckResult& open(const std::string& id) {
    const auto& s = spec_for(id);
    report_.checks.push_back(CheckResult{s.id, s.statement, n_, r_, CheckStatus::pass, {}, {}});
    return report_.checks.back();
  }

 private:
  Report& report_;
  int n_;
  int r_;
};

void mark_failed(CheckResult& c, const std::string& detail) {
  if (c.status != CheckStatus::fail) {
    c.status = CheckStatus::fail;
    c.detail = detail;
  }
}

std::string expected_got(std::int64_t expected, std::int64_t got) {
  return "expected " + std::to_string(expected) + ", got " + std::to_string(got);
}

void expect_count(CheckResult& c, const std::string& what, std::int64_t expected, std::int64_t got) {
  if (expected != got) {
    mark_failed(c, what + ": " + expected_got(expected, got));
  } else if (c.status == CheckStatus::pass && c.detail.empty()) {
    c.detail = what + ": " + std::to_string(got) + " = " + std::to_string(expected);
  }
}

std::vector<std::string> rational_payload(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

// Records the dependency among the rows of `m` (labelled by `names`) on failure.
void attach_dependency(CheckResult& c, const ExactMatrix& m, const std::vector<std::string>& names) {
  auto dep = row_dependency(m);
  if (!dep) return;
  for (std::size_t i = 0; i < dep->size(); ++i)
    if ((*dep)[i] != 0) c.payload.push_back(to_string((*dep)[i]) + " * " + names[i]);
}

std::int64_t rank_of(const std::vector<PolyDoubleForm>& forms) {
  return static_cast<std::int64_t>(rank_exact(coefficient_matrix(forms)));
}

PolyDoubleForm constant_form(const DoubleForm22& omega, const IndexSet& cell) {
  PolyDoubleForm phi(omega.n(), 0, cell);
  phi.add(MultiIndex::zero(omega.n()), omega);
  return phi;
}

std::vector<PolyDoubleForm> forms_of(const std::vector<BasisElement>& elems, const IndexSet& cell,
                                     Fault fault) {
  std::vector<PolyDoubleForm> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(to_form(e, cell, fault));
  return out;
}

std::vector<std::string> names_of(const std::vector<BasisElement>& elems) {
  std::vector<std::string> out;
  for (const auto& e : elems) out.push_back(describe(e));
  return out;
}

// Canonical coordinates of 4-forms on T^n: one column per 4-subset of {1..n}.
ExactMatrix four_form_matrix(const std::vector<AltForm>& forms, int n) {
  const auto cols = subsets(IndexSet::full(n).without(0), 4);
  std::map<IndexSet, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  ExactMatrix m(forms.size(), cols.size());
  for (std::size_t row = 0; row < forms.size(); ++row) {
    const auto canon = canonicalize_tangent(forms[row]);
    for (const auto& [key, c] : canon.terms()) m(row, index.at(key)) = c;
  }
  return m;
}

DoubleForm22 slot_form(int n, const SlotPair& key) {
  DoubleForm22 w(n);
  w.add(key.first, key.second, 1);
  return w;
}

std::string slot_name(const SlotPair& key) { return "dl" + key.first.str() + ".dl" + key.second.str(); }

// (σ applied to a tuple of vertex ids) for every permutation of the tuple.
void for_each_permutation(std::vector<int> ids, const std::function<void(const std::vector<int>&)>& f) {
  std::sort(ids.begin(), ids.end());
  do {
    f(ids);
  } while (std::next_permutation(ids.begin(), ids.end()));
}

// ---------------------------------------------------------------------------
// Constant-coefficient checks on T^n.

void constant_checks(int n, const CertifyOptions& opt, Report& report) {
  Recorder rec(report, n, -1);
  const IndexSet cell = IndexSet::full(n);
  const Fault fault = opt.fault;
  const auto coords = sym_coordinates(cell);

  {
    auto& c = rec.open("wedge_inclusion");
    std::size_t tested = 0;
    for (const auto& key : subsets(cell, 4)) {
      AltForm w(n, 4);
      w.add(key, 1);
      ++tested;
      if (wedge_map(inclusion(w)) != Rational(3) * w) {
        mark_failed(c, "fails on dl" + key.str());
        c.payload.push_back(wedge_map(inclusion(w)).str());
      }
    }
    if (c.status == CheckStatus::pass)
      c.detail = tested ? std::to_string(tested) + " basis 4-forms" : "no 4-forms in dimension " + std::to_string(n);
  }

  std::vector<AltForm> wedges;
  for (const auto& key : coords) wedges.push_back(wedge_map(slot_form(n, key)));
  const ExactMatrix wedge_matrix = four_form_matrix(wedges, n);
  const auto wedge_rank = static_cast<std::int64_t>(rank_exact(wedge_matrix));

  {
    auto& c = rec.open("wedge_surjective");
    expect_count(c, "rank of wedge map", dim_lambda4(n), wedge_rank);
  }

  {
    auto& c = rec.open("sym_splitting");
    for (const auto& key : coords) {
      const auto w = slot_form(n, key);
      const auto parts = split(w);
      const bool ok = parts.kernel_part + parts.lambda4_part == w && is_bianchi(parts.kernel_part, cell) &&
                      split(parts.kernel_part).lambda4_part.is_zero() &&
                      parts.lambda4_part == ratio(1, 3) * inclusion(wedge_map(w));
      if (!ok) {
        mark_failed(c, "splitting fails on " + slot_name(key));
        c.payload.push_back(parts.kernel_part.str());
      }
    }
    std::vector<PolyDoubleForm> kernel_parts, lambda4_parts;
    for (const auto& key : coords) {
      const auto parts = split(slot_form(n, key));
      kernel_parts.push_back(constant_form(parts.kernel_part, cell));
      lambda4_parts.push_back(constant_form(parts.lambda4_part, cell));
    }
    // The two images have complementary dimensions, so the sum is direct.
    expect_count(c, "rank of kernel parts", dim_bianchi(n), rank_of(kernel_parts));
    expect_count(c, "rank of 4-form parts", dim_lambda4(n), rank_of(lambda4_parts));
  }

  {
    auto& c = rec.open("dim_sym");
    // Full ⊙ spanning set over all ambient 2-subsets, canonicalized.
    const auto pairs = subsets(cell, 2);
    std::vector<PolyDoubleForm> spanning;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (std::size_t q = p; q < pairs.size(); ++q)
        spanning.push_back(constant_form(slot_form(n, SlotPair(pairs[p], pairs[q])), cell));
    expect_count(c, "rank of symmetric products", dim_sym22(n), rank_of(spanning));
    if (static_cast<std::int64_t>(coords.size()) != dim_sym22(n))
      mark_failed(c, "coordinate count " + expected_got(dim_sym22(n), static_cast<std::int64_t>(coords.size())));
  }

  const std::int64_t kernel_dim = static_cast<std::int64_t>(coords.size()) - wedge_rank;
  {
    auto& c = rec.open("dim_bianchi");
    expect_count(c, "nullity of wedge map", dim_bianchi(n), kernel_dim);
  }

  {
    auto& c = rec.open("kernel_membership");
    std::size_t tested = 0;
    for (const auto& t : subsets(cell, 3))
      for_each_permutation(t.ids(), [&](const std::vector<int>& s) {
        ++tested;
        auto w = wedge_map(beta(n, s[0], s[1], s[2]));
        if (!w.is_zero()) {
          mark_failed(c, "beta wedge nonzero");
          c.payload.push_back("beta(" + IndexSet(s).str() + "): " + w.str());
        }
      });
    for (const auto& q : subsets(cell, 4))
      for_each_permutation(q.ids(), [&](const std::vector<int>& s) {
        ++tested;
        auto w = wedge_map(gamma(n, s[0], s[1], s[2], s[3], fault));
        if (!w.is_zero()) {
          mark_failed(c, "gamma(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                             std::to_string(s[2]) + "," + std::to_string(s[3]) + ") wedge is " + w.str());
        }
      });
    if (c.status == CheckStatus::pass) c.detail = std::to_string(tested) + " ordered generators";
  }

  const auto all_f = all_faces(n);
  {
    auto& c = rec.open("face_vanishing");
    for (const auto& e : constant_basis(n)) {
      const auto phi = to_form(e, fault);
      for (const auto& f : all_f) {
        const bool contains = e.vertices.subset_of(f.vertices);
        if (!contains && !vanishes(trace(phi, f))) {
          mark_failed(c, describe(e) + " does not vanish on {" + f.vertices.str() + "}");
          c.payload.push_back(canonicalize(trace(phi, f)).str());
        }
      }
    }
  }

  {
    auto& c = rec.open("generator_symmetries");
    for (const auto& t : subsets(cell, 3)) {
      const auto ref = beta(n, t[0], t[1], t[2]);
      for_each_permutation(t.ids(), [&](const std::vector<int>& s) {
        if (beta(n, s[0], s[1], s[2]) != ref) mark_failed(c, "beta(" + IndexSet(s).str() + ") differs");
      });
    }
    for (const auto& q : subsets(cell, 4))
      for_each_permutation(q.ids(), [&](const std::vector<int>& s) {
        const int i = s[0], j = s[1], k = s[2], l = s[3];
        const auto ref = gamma(n, i, j, k, l, fault);
        const std::vector<std::array<int, 4>> images = {{j, i, k, l}, {i, j, l, k}, {j, i, l, k}, {k, l, i, j},
                                                        {k, l, j, i}, {l, k, i, j}, {l, k, j, i}};
        for (const auto& im : images)
          if (gamma(n, im[0], im[1], im[2], im[3], fault) != ref) {
            mark_failed(c, "gamma relabeling differs");
            c.payload.push_back("gamma(" + std::to_string(i) + std::to_string(j) + std::to_string(k) +
                                std::to_string(l) + ")");
            break;
          }
      });
  }

  {
    auto& c = rec.open("gamma_cyclic");
    std::size_t tested = 0;
    for (const auto& q : subsets(cell, 4))
      for_each_permutation(q.ids(), [&](const std::vector<int>& s) {
        const int i = s[0], j = s[1], k = s[2], l = s[3];
        ++tested;
        auto sum = gamma(n, i, j, k, l, fault) + gamma(n, i, k, l, j, fault) + gamma(n, i, l, j, k, fault);
        if (!sum.is_zero()) {
          mark_failed(c, "cyclic sum nonzero");
          if (c.payload.size() < 8)
            c.payload.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
                                std::to_string(l) + "): " + sum.str());
        }
      });
    if (c.status == CheckStatus::pass) c.detail = std::to_string(tested) + " ordered quadruples";
  }

  {
    auto& c = rec.open("triangle_bubble");
    for (const auto& t : subsets(cell, 3)) {
      if (sym_coordinates(t).size() != 1) mark_failed(c, "symmetric space on {" + t.str() + "} is not 1-dimensional");
      const auto tr = canonicalize(trace(constant_form(beta(n, t[0], t[1], t[2]), cell), t));
      AltForm w = canonicalize_on(d_lambda(n, {t[0], t[1]}), t);
      const auto expected = canonicalize(constant_form(ratio(3, 1) * sym_product(w, w), t));
      if (tr.is_zero() || tr != expected) {
        mark_failed(c, "beta(" + t.str() + ") on its triangle is not 3 w.w");
        c.payload.push_back(tr.str());
      }
    }
  }

  {
    auto& c = rec.open("tet_trace_surjective");
    std::size_t tets = 0;
    for (const auto& q : subsets(cell, 4)) {
      ++tets;
      const auto tris = subsets(q, 3);
      const auto tet_coords = sym_coordinates(q);
      ExactMatrix m(tet_coords.size(), tris.size());
      for (std::size_t row = 0; row < tet_coords.size(); ++row) {
        const auto phi = constant_form(slot_form(n, tet_coords[row]), q);
        for (std::size_t col = 0; col < tris.size(); ++col) {
          const auto tr = canonicalize(trace(phi, tris[col]));
          const auto only = sym_coordinates(tris[col]).front();
          m(row, col) = tr.is_zero() ? Rational(0) : tr.terms().begin()->second.coefficient(only);
        }
      }
      const auto rank = static_cast<std::int64_t>(rank_exact(m));
      if (rank != 4) mark_failed(c, "trace rank on {" + q.str() + "}: " + expected_got(4, rank));
      if (static_cast<std::int64_t>(tet_coords.size()) - rank != 2)
        mark_failed(c, "kernel on {" + q.str() + "}: " +
                           expected_got(2, static_cast<std::int64_t>(tet_coords.size()) - rank));
    }
    if (c.status == CheckStatus::pass)
      c.detail = tets ? std::to_string(tets) + " tetrahedra, trace rank 4, kernel dim 2" : "no tetrahedra";
  }

  {
    auto& c = rec.open("gamma_independence");
    for (const auto& q : subsets(cell, 4)) {
      const int i = q[0], j = q[1], k = q[2], l = q[3];
      auto diff = [&](int a, int b) {
        Vector v = unit_vector(n, a);
        v[static_cast<std::size_t>(b)] -= 1;
        return v;
      };
      const Vector v1 = diff(i, l), w1 = diff(j, k), v2 = diff(i, k), w2 = diff(l, j);
      const auto ga = gamma(n, i, k, l, j, fault);
      const auto gb = gamma(n, i, l, j, k, fault);
      ExactMatrix m(2, 2);
      m(0, 0) = eval_double(ga, v1, w1, v1, w1);
      m(0, 1) = eval_double(ga, v2, w2, v2, w2);
      m(1, 0) = eval_double(gb, v1, w1, v1, w1);
      m(1, 1) = eval_double(gb, v2, w2, v2, w2);
      const bool table = m(0, 0) == 2 && m(0, 1) == -4 && m(1, 0) == -4 && m(1, 1) == 2;
      if (!table || rank_exact(m) != 2) {
        mark_failed(c, "evaluation table on {" + q.str() + "} differs");
        c.payload = rational_payload({m(0, 0), m(0, 1), m(1, 0), m(1, 1)});
      }
    }
  }

  const auto basis = constant_basis(n);
  const auto basis_forms = forms_of(basis, cell, fault);
  {
    auto& c = rec.open("constant_basis_count");
    expect_count(c, "|basis|", binomial(n + 1, 3) + 2 * binomial(n + 1, 4), static_cast<std::int64_t>(basis.size()));
    expect_count(c, "n^2(n+1)(n-1)/12", dim_bianchi(n), static_cast<std::int64_t>(basis.size()));
  }

  const auto basis_matrix = coefficient_matrix(basis_forms);
  const auto basis_rank = static_cast<std::int64_t>(rank_exact(basis_matrix));
  {
    auto& c = rec.open("constant_basis_independent");
    expect_count(c, "rank", static_cast<std::int64_t>(basis.size()), basis_rank);
    if (c.status == CheckStatus::fail) attach_dependency(c, basis_matrix, names_of(basis));
  }

  {
    auto& c = rec.open("constant_basis_spans");
    for (const auto& e : basis)
      if (!is_bianchi(generator(e, fault), cell)) mark_failed(c, describe(e) + " is not in the Bianchi kernel");
    expect_count(c, "rank vs kernel dim", kernel_dim, basis_rank);
  }

  {
    auto& c = rec.open("face_constant_basis");
    for (const auto& f : all_f) {
      if (f.dim() < 2) continue;
      std::vector<PolyDoubleForm> traced;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].vertices.subset_of(f.vertices)) traced.push_back(trace(basis_forms[i], f));
      const auto local = forms_of(constant_basis(n, f.vertices), f.vertices, fault);
      if (traced != local) mark_failed(c, "traced generators differ from the basis of {" + f.vertices.str() + "}");
      const auto rank = rank_of(traced);
      if (rank != dim_bianchi(f.dim()))
        mark_failed(c, "rank on {" + f.vertices.str() + "}: " + expected_got(dim_bianchi(f.dim()), rank));
    }
  }
}

// ---------------------------------------------------------------------------
// Degree-r checks on T^n.

void poly_checks(int n, int r, const CertifyOptions& opt, Report& report) {
  Recorder rec(report, n, r);
  const IndexSet cell = IndexSet::full(n);
  const Fault fault = opt.fault;
  const auto basis = poly_basis(n, r);
  const auto basis_forms = forms_of(basis, cell, fault);
  const auto all_f = all_faces(n);

  {
    auto& c = rec.open("poly_basis");
    for (const auto& phi : basis_forms)
      for (const auto& [alpha, omega] : phi.terms())
        if (!is_bianchi(omega, cell)) mark_failed(c, "coefficient outside the Bianchi kernel");
    const auto m = coefficient_matrix(basis_forms);
    const auto rank = static_cast<std::int64_t>(rank_exact(m));
    expect_count(c, "|basis|", dim_poly_bianchi(n, r), static_cast<std::int64_t>(basis.size()));
    expect_count(c, "rank", dim_poly_bianchi(n, r), rank);
    if (c.status == CheckStatus::fail && rank < static_cast<std::int64_t>(basis.size()))
      attach_dependency(c, m, names_of(basis));
  }

  {
    auto& c = rec.open("face_poly_basis");
    for (const auto& f : all_f) {
      if (f.dim() < 2) continue;
      std::vector<PolyDoubleForm> traced;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (index_set(basis[i]).subset_of(f.vertices)) traced.push_back(canonicalize(trace(basis_forms[i], f)));
      std::vector<PolyDoubleForm> local;
      for (const auto& phi : forms_of(poly_basis(n, r, f.vertices), f.vertices, fault))
        local.push_back(canonicalize(phi));
      if (traced != local) mark_failed(c, "traced elements differ from the basis of {" + f.vertices.str() + "}");
      const auto rank = rank_of(traced);
      if (rank != dim_poly_bianchi(f.dim(), r))
        mark_failed(c, "rank on {" + f.vertices.str() + "}: " + expected_got(dim_poly_bianchi(f.dim(), r), rank));
    }
  }

  {
    auto& c = rec.open("trace_characterization");
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto support = index_set(basis[i]);
      for (const auto& f : all_f) {
        ++pairs;
        const bool nonzero = !vanishes(trace(basis_forms[i], f));
        if (nonzero != support.subset_of(f.vertices)) {
          mark_failed(c, describe(basis[i]) + " on {" + f.vertices.str() + "}");
          if (c.payload.size() < 8) c.payload.push_back(describe(basis[i]) + " @ {" + f.vertices.str() + "}");
        }
      }
    }
    if (c.status == CheckStatus::pass) c.detail = std::to_string(pairs) + " element-face pairs";
  }

  const auto facets = faces(n, n - 1);
  {
    auto& c = rec.open("boundary_vanishing");
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const bool on_boundary = std::all_of(facets.begin(), facets.end(),
                                           [&](const Face& f) { return vanishes(trace(basis_forms[i], f)); });
      if (on_boundary != (index_set(basis[i]) == cell)) mark_failed(c, describe(basis[i]));
    }
  }

  const auto bubbles = bubble_basis(n, r);
  {
    auto& c = rec.open("bubble_basis");
    const auto bubble_forms = forms_of(bubbles, cell, fault);
    expect_count(c, "rank", static_cast<std::int64_t>(bubbles.size()), rank_of(bubble_forms));
    // dim of the bubble space, independently: nullity of the trace onto all
    // facets restricted to the polynomial space.
    std::vector<ExactMatrix> blocks;
    std::size_t width = 0;
    for (const auto& f : facets) {
      std::vector<PolyDoubleForm> traced;
      for (const auto& phi : basis_forms) traced.push_back(trace(phi, f));
      blocks.push_back(coefficient_matrix(traced));
      width += blocks.back().cols();
    }
    ExactMatrix stacked(basis_forms.size(), width);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) stacked(i, offset + j) = b(i, j);
      offset += b.cols();
    }
    const auto nullity = static_cast<std::int64_t>(basis_forms.size()) -
                         static_cast<std::int64_t>(rank_exact(stacked));
    c.detail.clear();
    expect_count(c, "dim of bubble space", nullity, static_cast<std::int64_t>(bubbles.size()));
  }

  {
    auto& c = rec.open("bubble_count");
    expect_count(c, "|bubble basis|", bubble_count(n, r), static_cast<std::int64_t>(bubbles.size()));
    if (r < n - 3 && !bubbles.empty()) mark_failed(c, "bubble space nonempty below degree n-3");
    if (c.status == CheckStatus::pass && bubbles.empty()) c.detail = "empty bubble space";
  }

  {
    auto& c = rec.open("face_bubble_basis");
    for (const auto& f : all_f) {
      const auto local = bubble_basis(n, r, f.vertices);
      if (static_cast<std::int64_t>(local.size()) != bubble_count(f.dim(), r))
        mark_failed(c, "{" + f.vertices.str() + "}: " +
                           expected_got(bubble_count(f.dim(), r), static_cast<std::int64_t>(local.size())));
      const auto local_forms = forms_of(local, f.vertices, fault);
      if (rank_of(local_forms) != static_cast<std::int64_t>(local.size()))
        mark_failed(c, "bubble basis of {" + f.vertices.str() + "} is dependent");
      for (const auto& phi : local_forms)
        for (int v : f.vertices)
          if (f.dim() > 0 && !vanishes(trace(phi, f.vertices.without(v))))
            mark_failed(c, "bubble function on {" + f.vertices.str() + "} survives on a subface");
    }
  }

  {
    auto& c = rec.open("extension_left_inverse");
    std::size_t tested = 0;
    for (const auto& f : all_f)
      for (const auto& e : bubble_basis(n, r, f.vertices)) {
        ++tested;
        const auto phi = to_form(e, f.vertices, fault);
        if (canonicalize(trace(extend(phi, cell), f)) != canonicalize(phi))
          mark_failed(c, describe(e) + " on {" + f.vertices.str() + "}");
      }
    if (c.status == CheckStatus::pass) c.detail = std::to_string(tested) + " face bubble functions";
  }

  {
    auto& c = rec.open("geometric_decomposition");
    const auto buckets = geometric_decomposition(n, r);
    std::size_t covered = 0;
    std::set<std::string> seen;
    for (const auto& [face, elems] : buckets) {
      covered += elems.size();
      if (static_cast<std::int64_t>(elems.size()) != bubble_count(face.dim(), r))
        mark_failed(c, "bucket {" + face.vertices.str() + "}: " +
                           expected_got(bubble_count(face.dim(), r), static_cast<std::int64_t>(elems.size())));
      for (const auto& e : elems) {
        if (index_set(e) != face.vertices) mark_failed(c, describe(e) + " in the wrong bucket");
        if (!seen.insert(describe(e)).second) mark_failed(c, describe(e) + " appears twice");
      }
    }
    if (covered != basis.size()) mark_failed(c, "buckets cover " + expected_got(static_cast<std::int64_t>(basis.size()), static_cast<std::int64_t>(covered)));
    std::int64_t partition = 0;
    for (int m = 0; m <= n; ++m) partition += binomial(n + 1, m + 1) * bubble_count(m, r);
    expect_count(c, "sum over faces", dim_poly_bianchi(n, r), partition);
  }

  {
    auto& c = rec.open("oracle_equivalence");
    if (r > opt.oracle_r_max) {
      c.status = CheckStatus::skip;
      c.detail = "evaluation oracle limited to r <= " + std::to_string(opt.oracle_r_max);
    } else {
      const std::vector<std::pair<std::string, std::vector<BasisElement>>> families = {
          {"constant basis", constant_basis(n)}, {"polynomial basis", basis}, {"bubble basis", bubbles}};
      std::ostringstream detail;
      for (const auto& [name, elems] : families) {
        const auto forms = forms_of(elems, cell, fault);
        const auto by_coeff = forms.empty() ? 0 : rank_exact(coefficient_matrix(forms));
        const auto by_eval = forms.empty() ? 0 : rank_exact(evaluation_matrix(forms));
        if (by_coeff != by_eval)
          mark_failed(c, name + ": coefficient rank " + std::to_string(by_coeff) + ", evaluation rank " +
                             std::to_string(by_eval));
        detail << (detail.tellp() > 0 ? ", " : "") << name << " " << by_coeff;
      }
      if (c.status == CheckStatus::pass) c.detail = "ranks agree: " + detail.str();
    }
  }
}

void check_bounds(int n, int r, const CertifyOptions& opt) {
  if (n < 2) fail(ErrorCode::invalid_argument, "certify needs n >= 2");
  if (n > opt.n_limit)
    fail(ErrorCode::bounds_exceeded, "n = " + std::to_string(n) + " exceeds the bound " + std::to_string(opt.n_limit));
  if (r > opt.r_limit)
    fail(ErrorCode::bounds_exceeded, "r = " + std::to_string(r) + " exceeds the bound " + std::to_string(opt.r_limit));
}

void fill_details(Report& report) {
  for (auto& c : report.checks)
    if (c.status == CheckStatus::pass && c.detail.empty()) c.detail = "holds in every case";
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : specs()) out.emplace_back(s.id);
    return out;
  }();
  return ids;
}

Report certify(int n, int r, const CertifyOptions& options) {
  check_bounds(n, r, options);
  Report report;
  constant_checks(n, options, report);
  if (r >= 0) poly_checks(n, r, options, report);
  fill_details(report);
  return report;
}

Report certify_suite(const CertifyOptions& options) {
  if (options.n_max < 2) fail(ErrorCode::invalid_argument, "certify needs n_max >= 2");
  if (options.r_max < 0) fail(ErrorCode::invalid_argument, "certify needs r_max >= 0");
  check_bounds(options.n_max, options.r_max, options);
  Report report;
  for (int n = 2; n <= options.n_max; ++n) constant_checks(n, options, report);
  for (int n = 2; n <= std::min(options.n_max, options.poly_n_max); ++n)
    for (int r = 0; r <= options.r_max; ++r) poly_checks(n, r, options, report);
  fill_details(report);
  return report;
}

}  // namespace biform
