#pragma once

// Coefficient- and evaluation-based matrices of form families, and the
// certification suite that checks every structural claim about the spaces.

#include <biform/basis.hpp>
#include <biform/linalg.hpp>

#include <array>
#include <string>
#include <vector>

namespace biform {

/// Rows are forms; columns are the coordinates (canonical monomial of degree
/// r, dλ_P⊙dλ_Q with P <= Q inside the cell minus its smallest vertex) of the
/// full space of degree-r symmetric (2,2)-forms on the cell. Forms must share
/// n, r and cell.
ExactMatrix coefficient_matrix(const std::vector<PolyDoubleForm>& forms);

using ProbeTuple = std::array<Vector, 4>;

/// Every ordered 4-tuple (t_a, t_b, t_c, t_d) of tangent-basis vectors of the cell.
std::vector<ProbeTuple> full_probe_tuples(int n, const IndexSet& cell);

/// Tuples (t_a, t_b; t_c, t_d) with a < b, c < d and (a,b) <= (c,d). The
/// symmetries of (2,2)-forms make these sufficient.
std::vector<ProbeTuple> reduced_probe_tuples(int n, const IndexSet& cell);

/// Rows are forms, columns are eval_poly at each (point, tuple) pair, points
/// outermost. Throws if there are fewer probes than the dimension of the
/// full degree-r symmetric space on the cell.
ExactMatrix evaluation_matrix(const std::vector<PolyDoubleForm>& forms,
                              const std::vector<Vector>& points,
                              const std::vector<ProbeTuple>& tuples);

/// Lattice points of degree r together with reduced probe tuples on the cell.
ExactMatrix evaluation_matrix(const std::vector<PolyDoubleForm>& forms);

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string id;
  std::string statement;  // the claim being checked, in words
  int n = 0;
  int r = -1;  // -1 for constant-coefficient checks
  CheckStatus status = CheckStatus::pass;
  std::string detail;            // "expected 20, got 20" and the like
  std::vector<std::string> payload;  // counterexample data, exact rationals
};

struct Report {
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct CertifyOptions {
  int n_max = 6;       // constant-coefficient checks for n = 2..n_max
  int r_max = 3;       // polynomial checks for r = 0..r_max
  int poly_n_max = 4;  // polynomial checks for n = 2..min(n_max, poly_n_max)
  int oracle_r_max = 2;  // evaluation-oracle cross-check for r <= oracle_r_max
  int n_limit = 6;     // hard resource bounds; larger requests are refused
  int r_limit = 4;
  Fault fault = Fault::none;
};

/// Ids of the checks certify emits, one per structural claim.
const std::vector<std::string>& check_ids();

/// Constant-coefficient checks on T^n, then the polynomial checks at degree r
/// (r < 0 skips them). Throws Error(bounds_exceeded) outside the limits.
Report certify(int n, int r, const CertifyOptions& options = {});

/// certify over the ranges described by `options`.
Report certify_suite(const CertifyOptions& options);

std::string to_string(CheckStatus s);

}  // namespace biform
