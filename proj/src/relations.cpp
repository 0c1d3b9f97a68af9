#include "hyperlog/relations.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "hyperlog/errors.hpp"
#include "hyperlog/mzv.hpp"

namespace hyperlog {

std::vector<ComplexPoint> default_z_points() { return {{2.0}, {-1.0}, {3.0, 2.0}}; }

double RelationReport::max_residual() const {
  double m = 0.0;
  for (double r : residuals) {
    if (std::isnan(r)) return r;
    m = std::max(m, r);
  }
  return m;
}

namespace {

void require_sum_domain(int k, int r) {
  if (k < 2 || r < 1 || r > k) {
    throw DomainError(fmt::format("sum formula needs k >= 2 and k >= r >= 1, got k={}, r={}", k, r));
  }
}

Word block_word(Letter head, const KIndex& idx) {
  Word w{head};
  bool first = true;
  for (int part : idx.parts()) {
    if (!first) w += Word{Letter::One};
    first = false;
    w += power(Letter::Zero, static_cast<std::size_t>(part - 1));
  }
  return w;
}

void finish(RelationReport& report) {
  double m = report.max_residual();
  report.pass = !std::isnan(m) && m < report.tolerance;
}

std::string z_list(std::span<const ComplexPoint> zs) {
  std::vector<std::string> parts;
  for (const auto& z : zs) parts.push_back(format_complex(z));
  return fmt::format("{}", fmt::join(parts, ","));
}

}  // namespace

LinComb duality_relation(const Word& w) {
  if (!is_convergent(w)) {
    throw DomainError("duality relation needs a convergent word, got '" + format_word(w) + "'");
  }
  LinComb x(w);
  return x - tau(x);
}

std::vector<Word> sum_words(int k, int r) {
  require_sum_domain(k, r);
  std::vector<Word> out;
  for (const KIndex& idx : admissible_compositions(k, r)) out.push_back(block_word(Letter::Z, idx));
  std::sort(out.begin(), out.end());
  return out;
}

LinComb sum_words_lincomb(int k, int r) {
  LinComb out;
  for (const Word& w : sum_words(k, r)) out.add(w, 1);
  return out;
}

LinComb sum_rhs_lincomb(int k, int r) {
  require_sum_domain(k, r);
  const LinComb e0(Word{Letter::Zero});
  const LinComb e1(Word{Letter::One});
  const LinComb ez(Word{Letter::Z});
  return (e1 - ez) * power(e0 - ez, static_cast<std::size_t>(r - 1)) *
         LinComb(power(Letter::Zero, static_cast<std::size_t>(k - r)));
}

LinComb sum_mzv_lincomb(int k, int r) {
  require_sum_domain(k, r);
  LinComb out;
  for (const KIndex& idx : admissible_compositions(k, r)) out.add(mzv_word(idx), 1);
  return out;
}

LinComb sum_relation(int k, int r) {
  LinComb lhs = sum_words_lincomb(k, r) * Rational(r % 2 == 0 ? 1 : -1);
  LinComb head(Word{Letter::One} + power(Letter::Zero, static_cast<std::size_t>(k - 1)));
  return lhs + head - sum_rhs_lincomb(k, r);
}

std::pair<LinComb, ComplexPoint> broadhurst_relation(const Word& w) {
  return {duality_relation(w), ComplexPoint(-1.0)};
}

RelationReport check_relation(const LinComb& x, std::span<const ComplexPoint> z_points, double tol,
                              const EvalConfig& cfg, std::string relation_id) {
  RelationReport report;
  report.relation_id = std::move(relation_id);
  report.tolerance = tol;
  report.z_points.assign(z_points.begin(), z_points.end());
  report.parameters.emplace_back("terms", std::to_string(x.size()));
  for (const ComplexPoint& z : z_points) {
    EvalResult r = eval_lincomb(x, z, cfg);
    report.residuals.push_back(std::abs(r.value));
    report.evaluations += r.word_evaluations;
    if (!r.converged) report.parameters.emplace_back("unconverged_at", format_complex(z));
  }
  finish(report);
  return report;
}

RelationReport mzv_duality_check(const Word& w, const EvalConfig& cfg, double tol) {
  if (w.contains(Letter::Z) || !is_convergent(w)) {
    throw DomainError("MZV duality needs a convergent {0,1} word, got '" + format_word(w) + "'");
  }
  LinComb x(w);
  LinComb dual = tau_infinity(x);
  RelationReport report;
  report.relation_id = "mzv-duality/w=" + format_word(w);
  report.tolerance = tol;
  report.z_points = {ComplexPoint::infinity()};
  if (!w.empty()) {
    std::string dual_word = dual.is_zero() ? "0" : format_lincomb(dual);
    report.parameters.emplace_back("zeta", format_index(mzv_index(w)));
    report.parameters.emplace_back("dual", dual_word);
  }
  report.residuals.push_back(std::abs(eval_at_infinity(x - dual, cfg)));
  report.evaluations = (x - dual).size();
  finish(report);
  return report;
}

RelationReport sum_formula_mzv_check(int k, int r, const EvalConfig& cfg, double tol) {
  if (r < 1 || k <= r) {
    throw DomainError(fmt::format("MZV sum formula needs k > r >= 1, got k={}, r={}", k, r));
  }
  RelationReport report;
  report.relation_id = fmt::format("mzv-sum/k={},r={}", k, r);
  report.tolerance = tol;
  report.z_points = {ComplexPoint(1.0)};
  report.parameters.emplace_back("k", std::to_string(k));
  report.parameters.emplace_back("r", std::to_string(r));
  if (r == 1) report.parameters.emplace_back("note", "r=1 lies outside the z->1 limit argument (k>r>1)");
  double lhs = 0.0;
  for (const KIndex& idx : admissible_compositions(k, r)) {
    lhs += eval_mzv(idx, cfg);
    ++report.evaluations;
  }
  double rhs = eval_mzv(KIndex{k}, cfg);
  ++report.evaluations;
  report.residuals.push_back(std::abs(lhs - rhs));
  finish(report);
  return report;
}

RelationReport differential_check(const Word& w, std::span<const ComplexPoint> z_points,
                                  const EvalConfig& cfg, double h, double tol) {
  if (!is_convergent(w)) {
    throw DomainError("differential check needs a convergent word, got '" + format_word(w) + "'");
  }
  RelationReport report;
  report.relation_id = "diff/w=" + format_word(w);
  report.tolerance = tol;
  report.z_points.assign(z_points.begin(), z_points.end());
  report.parameters.emplace_back("h", fmt::format("{}", h));
  const LinComb x(w);
  const LinComb d0 = partial(Letter::Z, Letter::Zero, x);
  const LinComb d1 = partial(Letter::Z, Letter::One, x);
  const std::size_t z_words = w.contains(Letter::Z) ? 1 : 0;
  for (const ComplexPoint& z : z_points) {
    std::complex<double> lhs = derivative_fd(x, z, h, cfg);
    std::complex<double> rhs = 0.0;
    if (!d0.is_zero()) rhs += eval_lincomb(d0, z, cfg).value / z.value();
    if (!d1.is_zero()) rhs += eval_lincomb(d1, z, cfg).value / (z.value() - 1.0);
    report.residuals.push_back(std::abs(lhs - rhs));
    report.evaluations += 3 * z_words + d0.size() + d1.size();
  }
  finish(report);
  return report;
}

RelationReport sum_derivatives_check(int k, int r, std::span<const ComplexPoint> z_points,
                             const EvalConfig& cfg, double h, double tol) {
  if (!(1 < r && r < k)) {
    throw DomainError(fmt::format("derivative identities need 1 < r < k, got k={}, r={}", k, r));
  }
  RelationReport report;
  report.relation_id = fmt::format("sum-derivatives/k={},r={}", k, r);
  report.tolerance = tol;
  report.z_points.assign(z_points.begin(), z_points.end());

  const LinComb f = sum_words_lincomb(k, r);
  const LinComb f_k1_r = sum_words_lincomb(k - 1, r);
  const LinComb f_k1_r1 = sum_words_lincomb(k - 1, r - 1);
  const LinComb g = sum_rhs_lincomb(k, r);
  const LinComb g_k1_r = sum_rhs_lincomb(k - 1, r);
  const LinComb g_k1_r1 = sum_rhs_lincomb(k - 1, r - 1);
  // z-independent constant h_{k-1,r-1}, from the series.
  const double h_const = eval_at_infinity(sum_mzv_lincomb(k - 1, r - 1), cfg);

  double worst_f = 0.0, worst_g = 0.0;
  for (const ComplexPoint& zp : z_points) {
    const std::complex<double> z = zp.value();
    auto value = [&](const LinComb& x) {
      EvalResult res = eval_lincomb(x, zp, cfg);
      report.evaluations += res.word_evaluations;
      return res.value;
    };
    std::complex<double> df = derivative_fd(f, zp, h, cfg);
    std::complex<double> rhs_f = -value(f_k1_r) / z - value(f_k1_r1) / (z - 1.0) +
                                 (1.0 / (z - 1.0) - 1.0 / z) * h_const;
    std::complex<double> dg = derivative_fd(g, zp, h, cfg);
    std::complex<double> rhs_g = -value(g_k1_r) / z + value(g_k1_r1) / (z - 1.0);
    report.evaluations += 3 * (f.size() + g.size());
    double res_f = std::abs(df - rhs_f);
    double res_g = std::abs(dg - rhs_g);
    worst_f = std::max(worst_f, res_f);
    worst_g = std::max(worst_g, res_g);
    report.residuals.push_back(std::max(res_f, res_g));
  }
  report.parameters.emplace_back("z", z_list(z_points));
  report.parameters.emplace_back("h_const", fmt::format("{}", h_const));
  report.parameters.emplace_back("residual_f", fmt::format("{}", worst_f));
  report.parameters.emplace_back("residual_g", fmt::format("{}", worst_g));
  finish(report);
  return report;
}

}  // namespace hyperlog
