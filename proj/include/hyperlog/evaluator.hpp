#pragma once

#include <complex>
#include <cstddef>
#include <string>

#include "hyperlog/complex_point.hpp"
#include "hyperlog/lincomb.hpp"
#include "hyperlog/word.hpp"

namespace hyperlog {

struct EvalConfig {
  int panels_per_side = 14;         // geometric grading levels toward t = 0 and t = 1
  int nodes_per_panel = 16;         // Gauss-Legendre nodes per panel
  double grading_ratio = 0.5;       // panel width ratio between grading levels, in (0, 1)
  double target_tol = 1e-9;         // mesh doubling stops below this difference
  double series_truncation_tol = 1e-12;
  double segment_cutoff = 1e-3;     // minimum distance from z to [0, 1]
  int max_weight = 10;
  int max_refinements = 4;          // mesh doublings after the initial mesh

  // Throws DomainError on non-positive counts/tolerances or a ratio outside (0, 1).
  void validate() const;
};

struct EvalResult {
  std::complex<double> value{};
  double est_error = 0.0;   // |difference| between the last two meshes
  std::string mesh_used;
  bool converged = true;    // est_error <= target_tol
  std::size_t word_evaluations = 0;
};

// L(w)(z) by iterated cumulative quadrature on a graded panel mesh, doubled
// until two successive values agree to target_tol. A run that exhausts the
// doubling budget returns its best value with converged = false.
//
// Throws DomainError for non-convergent words and EvaluationRefused when z
// lies within segment_cutoff of [0, 1] or the weight exceeds max_weight.
EvalResult eval_word(const Word& w, ComplexPoint z, const EvalConfig& cfg = {});

// Linear extension of eval_word; est_error is sum |c| * word error.
EvalResult eval_lincomb(const LinComb& x, ComplexPoint z, const EvalConfig& cfg = {});

inline constexpr std::size_t kOracleMaxWeight = 4;

// Independent check of eval_word: nested adaptive Gauss-Kronrod quadrature of
// the iterated integral, one recursion level per letter. Weight <= 4 only
// (throws EvaluationRefused otherwise).
std::complex<double> eval_word_oracle(const Word& w, ComplexPoint z, double tol = 1e-10);

enum class StepDirection { Real, Imaginary };

// Central difference (L(x)(z + s) - L(x)(z - s)) / (2 s) with s = h or i*h.
// Every word is evaluated on the mesh that converged at z, so the quadrature
// error is smooth in z and largely cancels.
std::complex<double> derivative_fd(const LinComb& x, ComplexPoint z, double h,
                                   const EvalConfig& cfg = {},
                                   StepDirection direction = StepDirection::Real);

// lim_{z -> infinity} L(x) = L(x with e_z = 0), evaluated through MZV series.
double eval_at_infinity(const LinComb& x, const EvalConfig& cfg = {});

}  // namespace hyperlog
