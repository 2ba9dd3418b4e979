#include <biform/combinatorics.hpp>
#include <biform/oracle.hpp>
#include <biform/serialize.hpp>

#include <gtest/gtest.h>

#include <map>

using namespace biform;

namespace {

std::vector<PolyDoubleForm> forms_of(const std::vector<BasisElement>& es) {
  std::vector<PolyDoubleForm> out;
  for (const auto& e : es) out.push_back(to_form(e));
  return out;
}

const CheckResult& find(const Report& report, const std::string& id) {
  for (const auto& c : report.checks)
    if (c.id == id) return c;
  throw std::runtime_error("missing check " + id);
}

}  // namespace

TEST(CoefficientMatrix, Examples) {
  const auto m2 = coefficient_matrix(forms_of(constant_basis(2)));
  EXPECT_EQ(m2.rows(), 1u);
  EXPECT_EQ(rank_exact(m2), 1u);
  EXPECT_EQ(rank_exact(coefficient_matrix(forms_of(constant_basis(3)))), 6u);
  const auto empty = coefficient_matrix({});
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(rank_exact(empty), 0u);
}

TEST(CoefficientMatrix, ColumnsCoverTheSymmetricSpace) {
  for (int n = 2; n <= 4; ++n)
    for (int r = 0; r <= 2; ++r) {
      const auto m = coefficient_matrix(forms_of(poly_basis(n, r)));
      EXPECT_EQ(static_cast<std::int64_t>(m.cols()), binomial(n + r, r) * dim_sym22(n));
    }
}

TEST(CoefficientMatrix, RejectsMixedFamilies) {
  std::vector<PolyDoubleForm> mixed{to_form(constant_basis(3)[0]), to_form(constant_basis(4)[0])};
  EXPECT_THROW(coefficient_matrix(mixed), Error);
  std::vector<PolyDoubleForm> degrees{to_form(poly_basis(3, 0)[0]), to_form(poly_basis(3, 1)[0])};
  EXPECT_THROW(coefficient_matrix(degrees), Error);
}

TEST(EvaluationMatrix, ConstantBasisWithFullTuples) {
  const auto cell = IndexSet::full(3);
  const auto m = evaluation_matrix(forms_of(constant_basis(3)), lattice_points(3, 0, cell), full_probe_tuples(3, cell));
  EXPECT_EQ(m.cols(), 81u);
  EXPECT_EQ(rank_exact(m), 6u);
}

TEST(EvaluationMatrix, ZeroForm) {
  const auto cell = IndexSet::full(3);
  std::vector<PolyDoubleForm> zero{PolyDoubleForm(3, 0, cell)};
  EXPECT_EQ(rank_exact(evaluation_matrix(zero)), 0u);
}

TEST(EvaluationMatrix, FlagsInsufficientProbes) {
  const auto cell = IndexSet::full(3);
  auto tuples = reduced_probe_tuples(3, cell);
  tuples.pop_back();
  EXPECT_THROW(evaluation_matrix(forms_of(constant_basis(3)), lattice_points(3, 0, cell), tuples), Error);
}

TEST(EvaluationMatrix, GammaPairTable) {
  const int n = 3;
  auto e = [&](int v) { return unit_vector(n, v); };
  auto minus = [](Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  const auto V1 = minus(e(0), e(3)), W1 = minus(e(1), e(2));
  const auto V2 = minus(e(0), e(2)), W2 = minus(e(3), e(1));
  const auto gammas = bubble_basis(n, 0);
  ASSERT_EQ(gammas.size(), 2u);
  const auto p = lattice_points(n, 0, IndexSet::full(n))[0];
  ExactMatrix m(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto phi = to_form(gammas[i]);
    m(i, 0) = eval_poly(phi, p, V1, W1, V1, W1);
    m(i, 1) = eval_poly(phi, p, V2, W2, V2, W2);
  }
  EXPECT_EQ(m(0, 0), 2);
  EXPECT_EQ(m(0, 1), -4);
  EXPECT_EQ(m(1, 0), -4);
  EXPECT_EQ(m(1, 1), 2);
  EXPECT_EQ(rank_exact(m), 2u);
}

TEST(ProbeTuples, Sizes) {
  const auto cell = IndexSet::full(3);
  EXPECT_EQ(full_probe_tuples(3, cell).size(), 81u);
  // Pairs a<b: 3, unordered pairs of those with repetition: 6.
  EXPECT_EQ(reduced_probe_tuples(3, cell).size(), 6u);
  for (int n = 2; n <= 5; ++n)
    EXPECT_EQ(static_cast<std::int64_t>(reduced_probe_tuples(n, IndexSet::full(n)).size()), dim_sym22(n));
}

TEST(OracleEquivalence, FullTuplesSmallCases) {
  for (int n = 2; n <= 3; ++n)
    for (int r = 0; r <= 1; ++r) {
      const auto cell = IndexSet::full(n);
      for (const auto& family : {constant_basis(n), poly_basis(n, r), bubble_basis(n, r)}) {
        if (family.empty()) continue;
        const auto forms = forms_of(family);
        const auto points = lattice_points(n, forms[0].degree(), cell);
        EXPECT_EQ(rank_exact(coefficient_matrix(forms)),
                  rank_exact(evaluation_matrix(forms, points, full_probe_tuples(n, cell))));
      }
    }
}

TEST(Certify, AllPassForThreeTwo) {
  const auto report = certify(3, 2);
  EXPECT_TRUE(report.passed());
  for (const auto& c : report.checks) EXPECT_NE(c.status, CheckStatus::fail) << c.id << ": " << c.detail;
}

TEST(Certify, DimensionCheckInTwoDimensions) {
  const auto report = certify(2, 0);
  const auto& c = find(report, "dim_bianchi");
  EXPECT_EQ(c.status, CheckStatus::pass);
  EXPECT_NE(c.detail.find("1 = 1"), std::string::npos) << c.detail;
}

TEST(Certify, EmptyBubbleSpaceInFourDimensions) {
  const auto report = certify(4, 0);
  const auto& c = find(report, "bubble_count");
  EXPECT_EQ(c.status, CheckStatus::pass);
  EXPECT_NE(c.detail.find("empty bubble space"), std::string::npos) << c.detail;
  EXPECT_TRUE(report.passed());
}

TEST(Certify, CoverageAudit) {
  // Every check id appears exactly once per (n, r), in the published order.
  for (int n = 2; n <= 4; ++n)
    for (int r = 0; r <= 2; ++r) {
      const auto report = certify(n, r);
      std::map<std::string, int> seen;
      for (const auto& c : report.checks) ++seen[c.id];
      for (const auto& id : check_ids()) EXPECT_EQ(seen[id], 1) << id << " at n=" << n << ", r=" << r;
      EXPECT_EQ(seen.size(), check_ids().size());
      ASSERT_EQ(report.checks.size(), check_ids().size());
      for (std::size_t i = 0; i < report.checks.size(); ++i) EXPECT_EQ(report.checks[i].id, check_ids()[i]);
      for (const auto& c : report.checks) EXPECT_FALSE(c.statement.empty()) << c.id;
    }
}

TEST(Certify, ConstantOnlyWhenDegreeNegative) {
  const auto report = certify(3, -1);
  for (const auto& c : report.checks) EXPECT_EQ(c.r, -1) << c.id;
  EXPECT_LT(report.checks.size(), check_ids().size());
}

TEST(Certify, Deterministic) {
  const auto a = to_json(certify(3, 1)).dump();
  const auto b = to_json(certify(3, 1)).dump();
  EXPECT_EQ(a, b);
}

TEST(Certify, RefusesBeyondBounds) {
  try {
    certify(7, 0);
    FAIL() << "n = 7 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::bounds_exceeded);
  }
  try {
    certify(3, 5);
    FAIL() << "r = 5 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::bounds_exceeded);
  }
  CertifyOptions wide;
  wide.n_limit = 8;
  EXPECT_NO_THROW(certify(7, -1, wide));
  EXPECT_THROW(certify(1, 0), Error);
}

TEST(Certify, SignFaultIsCaught) {
  CertifyOptions opt;
  opt.fault = Fault::gamma_sign_flip;
  const auto report = certify(3, 0, opt);
  EXPECT_FALSE(report.passed());
  const auto& cyclic = find(report, "gamma_cyclic");
  EXPECT_EQ(cyclic.status, CheckStatus::fail);
  EXPECT_FALSE(cyclic.payload.empty());
  EXPECT_EQ(find(report, "kernel_membership").status, CheckStatus::fail);
  // Checks that never touch gamma are unaffected.
  EXPECT_EQ(find(report, "dim_sym").status, CheckStatus::pass);
  EXPECT_EQ(find(report, "triangle_bubble").status, CheckStatus::pass);
}

TEST(Certify, SuiteCoversRequestedRanges) {
  CertifyOptions opt;
  opt.n_max = 3;
  opt.r_max = 1;
  const auto report = certify_suite(opt);
  EXPECT_TRUE(report.passed());
  int constant = 0, poly = 0;
  for (const auto& c : report.checks) (c.r < 0 ? constant : poly)++;
  EXPECT_GT(constant, 0);
  EXPECT_GT(poly, 0);
  opt.n_max = 1;
  EXPECT_THROW(certify_suite(opt), Error);
}
