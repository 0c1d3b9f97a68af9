#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperlog/complex_point.hpp"
#include "hyperlog/evaluator.hpp"
#include "hyperlog/lincomb.hpp"
#include "hyperlog/word.hpp"

namespace hyperlog {

inline constexpr double kRelationTol = 1e-6;
inline constexpr double kDifferentialTol = 1e-4;
inline constexpr double kSeriesTol = 1e-9;
inline constexpr double kFiniteDifferenceStep = 1e-5;

// {2, -1, 3+2i}: right of the cut, the Broadhurst point, a generic complex point.
std::vector<ComplexPoint> default_z_points();

struct RelationReport {
  std::string relation_id;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ComplexPoint> z_points;
  std::vector<double> residuals;  // one absolute residual per z point
  double tolerance = 0.0;
  bool pass = false;              // max residual < tolerance
  std::size_t evaluations = 0;    // word evaluations performed

  double max_residual() const;
};

// ---- generators -----------------------------------------------------------

// w - tau(w). Throws DomainError for non-convergent w.
LinComb duality_relation(const Word& w);

// Words e_z e_0^{k_1-1} e_1 e_0^{k_2-1} ... e_1 e_0^{k_r-1} over compositions
// k_1 + ... + k_r = k with k_r >= 2, in canonical word order. There are
// C(k-2, r-1) of them. Requires k >= 2 and k >= r >= 1.
std::vector<Word> sum_words(int k, int r);

// sum of sum_words(k, r) (the function f_{k,r}).
LinComb sum_words_lincomb(int k, int r);
// (e_1 - e_z)(e_0 - e_z)^{r-1} e_0^{k-r} (the function g_{k,r}).
LinComb sum_rhs_lincomb(int k, int r);
// sum of e_1 e_0^{k_1-1} ... e_1 e_0^{k_r-1} over the same compositions
// (the constant h_{k,r}).
LinComb sum_mzv_lincomb(int k, int r);

// (-1)^r f_{k,r} + e_1 e_0^{k-1} - g_{k,r}; L of it vanishes identically.
LinComb sum_relation(int k, int r);

// The duality relation paired with its evaluation point z = -1.
std::pair<LinComb, ComplexPoint> broadhurst_relation(const Word& w);

// ---- checkers -------------------------------------------------------------

// |L(x)(z)| at every point; passes iff all are below tol.
RelationReport check_relation(const LinComb& x, std::span<const ComplexPoint> z_points, double tol,
                              const EvalConfig& cfg = {}, std::string relation_id = "relation");

// Series-only: L(w - tau_infinity(w)) at z = infinity for a convergent
// {0,1} word.
RelationReport mzv_duality_check(const Word& w, const EvalConfig& cfg = {},
                                 double tol = kSeriesTol);

// Series-only: |sum zeta(k_1..k_r) - zeta(k)| over admissible compositions.
// Requires k > r >= 1. The z point is recorded as 1 (the z -> 1 limit).
RelationReport sum_formula_mzv_check(int k, int r, const EvalConfig& cfg = {},
                                     double tol = kSeriesTol);

// |dL(w)/dz by central difference - sum_a L(partial_{z,a} w) / (z - a)|.
RelationReport differential_check(const Word& w, std::span<const ComplexPoint> z_points,
                                  const EvalConfig& cfg = {}, double h = kFiniteDifferenceStep,
                                  double tol = kDifferentialTol);

// Derivative identities for f_{k,r} and g_{k,r}, 1 < r < k. The residual at
// each z is the larger of the two; both maxima are kept in `parameters`.
RelationReport sum_derivatives_check(int k, int r, std::span<const ComplexPoint> z_points,
                             const EvalConfig& cfg = {}, double h = kFiniteDifferenceStep,
                             double tol = kDifferentialTol);

}  // namespace hyperlog
