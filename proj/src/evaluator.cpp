#include "hyperlog/evaluator.hpp"

#include <cmath>
#include <fmt/format.h>
#include <optional>
#include <vector>

#include "hyperlog/errors.hpp"
#include "hyperlog/mzv.hpp"
#include "quadrature.hpp"

namespace hyperlog {

void EvalConfig::validate() const {
  if (panels_per_side <= 0 || nodes_per_panel <= 1 || max_weight < 0 || max_refinements < 1) {
    throw DomainError(
        "EvalConfig: counts must be positive (nodes_per_panel >= 2, max_refinements >= 1)");
  }
  if (!(grading_ratio > 0.0 && grading_ratio < 1.0)) {
    throw DomainError("EvalConfig: grading_ratio must lie in (0, 1)");
  }
  if (!(target_tol > 0.0) || !(series_truncation_tol > 0.0) || !(segment_cutoff > 0.0)) {
    throw DomainError("EvalConfig: tolerances must be positive");
  }
}

namespace {

// Meshes for one z at increasing refinement levels, built on demand.
class MeshLadder {
 public:
  MeshLadder(std::complex<double> z, const EvalConfig& cfg) : z_(z), cfg_(cfg) {}

  const detail::Mesh& at(int level) {
    if (static_cast<std::size_t>(level) >= meshes_.size()) meshes_.resize(level + 1);
    auto& slot = meshes_[level];
    if (!slot) slot = detail::build_mesh(z_, cfg_, level);
    return *slot;
  }

 private:
  std::complex<double> z_;
  const EvalConfig& cfg_;
  std::vector<std::optional<detail::Mesh>> meshes_;
};

void check_word(const Word& w, const EvalConfig& cfg) {
  if (!is_convergent(w)) {
    throw DomainError("'" + format_word(w) + "' is not a convergent word");
  }
  if (w.weight() > static_cast<std::size_t>(cfg.max_weight)) {
    throw EvaluationRefused(fmt::format("weight {} exceeds the evaluation limit {}", w.weight(),
                                        cfg.max_weight));
  }
}

void check_point(ComplexPoint z, const EvalConfig& cfg) {
  if (z.is_infinite()) {
    throw EvaluationRefused("quadrature cannot evaluate at z = infinity; use eval_at_infinity");
  }
  double d = distance_to_segment(z.value());
  if (!(d > cfg.segment_cutoff)) {
    throw EvaluationRefused(fmt::format("z = {} lies within {} of the cut [0, 1] (distance {})",
                                        format_complex(z), cfg.segment_cutoff, d));
  }
}

struct LadderResult {
  EvalResult result;
  int level = 0;
};

LadderResult eval_on_ladder(const Word& w, std::complex<double> z, const EvalConfig& cfg,
                            MeshLadder& ladder) {
  LadderResult out;
  if (w.empty()) {
    out.result.value = 1.0;
    out.result.mesh_used = "exact";
    out.result.word_evaluations = 1;
    return out;
  }
  std::complex<double> previous = detail::integrate_word(w, z, ladder.at(0));
  for (int level = 1; level <= cfg.max_refinements; ++level) {
    const auto& mesh = ladder.at(level);
    std::complex<double> current = detail::integrate_word(w, z, mesh);
    double diff = std::abs(current - previous);
    out.result.value = current;
    out.result.est_error = diff;
    out.result.mesh_used = mesh.describe();
    out.level = level;
    if (diff < cfg.target_tol) break;
    previous = current;
  }
  out.result.converged = out.result.est_error <= cfg.target_tol;
  out.result.word_evaluations = 1;
  return out;
}

}  // namespace

EvalResult eval_word(const Word& w, ComplexPoint z, const EvalConfig& cfg) {
  cfg.validate();
  check_word(w, cfg);
  check_point(z, cfg);
  MeshLadder ladder(z.value(), cfg);
  return eval_on_ladder(w, z.value(), cfg, ladder).result;
}

EvalResult eval_lincomb(const LinComb& x, ComplexPoint z, const EvalConfig& cfg) {
  cfg.validate();
  for (const auto& [w, c] : x.terms()) check_word(w, cfg);
  EvalResult total;
  total.mesh_used = "none";
  if (x.is_zero()) return total;
  check_point(z, cfg);

  MeshLadder ladder(z.value(), cfg);
  int deepest = -1;
  for (const auto& [w, c] : x.terms()) {
    auto [r, level] = eval_on_ladder(w, z.value(), cfg, ladder);
    const double coeff = c.get_d();
    total.value += coeff * r.value;
    total.est_error += std::abs(coeff) * r.est_error;
    total.converged = total.converged && r.converged;
    total.word_evaluations += r.word_evaluations;
    if (level > deepest) {
      deepest = level;
      total.mesh_used = r.mesh_used;
    }
  }
  return total;
}

std::complex<double> derivative_fd(const LinComb& x, ComplexPoint z, double h,
                                   const EvalConfig& cfg, StepDirection direction) {
  cfg.validate();
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  for (const auto& [w, c] : x.terms()) check_word(w, cfg);
  const std::complex<double> step =
      direction == StepDirection::Real ? std::complex<double>(h, 0) : std::complex<double>(0, h);
  check_point(z, cfg);
  check_point(ComplexPoint(z.value() + step), cfg);
  check_point(ComplexPoint(z.value() - step), cfg);

  MeshLadder ladder(z.value(), cfg);
  std::complex<double> sum = 0;
  for (const auto& [w, c] : x.terms()) {
    if (!w.contains(Letter::Z)) continue;  // z-independent
    auto [r, level] = eval_on_ladder(w, z.value(), cfg, ladder);
    const auto& mesh = ladder.at(level);
    std::complex<double> plus = detail::integrate_word(w, z.value() + step, mesh);
    std::complex<double> minus = detail::integrate_word(w, z.value() - step, mesh);
    sum += c.get_d() * (plus - minus);
  }
  return sum / (2.0 * step);
}

double eval_at_infinity(const LinComb& x, const EvalConfig& cfg) {
  cfg.validate();
  double total = 0;
  const LinComb finite = substitute_ez_zero(x);
  for (const auto& [w, c] : finite.terms()) {
    if (!is_convergent(w)) {
      throw DomainError("eval_at_infinity: '" + format_word(w) + "' is not convergent");
    }
    total += c.get_d() * eval_mzv_word(w, cfg);
  }
  return total;
}

}  // namespace hyperlog
