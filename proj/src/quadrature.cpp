#include "quadrature.hpp"

#include <cmath>
#include <fmt/format.h>
#include <map>
#include <mutex>
#include <numbers>

namespace hyperlog::detail {

namespace {

// Legendre P_0..P_{kmax}(x) by the three-term recurrence.
std::vector<long double> legendre_all(std::size_t kmax, long double x) {
  std::vector<long double> p(kmax + 1);
  p[0] = 1;
  if (kmax >= 1) p[1] = x;
  for (std::size_t k = 1; k < kmax; ++k) {
    p[k + 1] = ((2 * k + 1) * x * p[k] - k * p[k - 1]) / (k + 1);
  }
  return p;
}

GaussLegendreRule make_rule(std::size_t n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  std::vector<long double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Root i of P_n, ascending order.
    long double r = -std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      auto p = legendre_all(n, r);
      dp = n * (r * p[n] - p[n - 1]) / (r * r - 1);
      long double step = p[n] / dp;
      r -= step;
      if (std::fabs(step) < 1e-19L) break;
    }
    auto p = legendre_all(n, r);
    dp = n * (r * p[n] - p[n - 1]) / (r * r - 1);
    x[i] = r;
    rule.nodes[i] = static_cast<double>(r);
    rule.weights[i] = static_cast<double>(2 / ((1 - r * r) * dp * dp));
  }

  // l_j(x) = sum_k (2k+1)/2 w_j P_k(x_j) P_k(x), exact for degree n-1, and
  // int_{-1}^{x} P_k = (P_{k+1}(x) - P_{k-1}(x)) / (2k+1) for k >= 1.
  rule.cumulative.assign(n * n, 0.0);
  std::vector<std::vector<long double>> pj(n);
  for (std::size_t j = 0; j < n; ++j) pj[j] = legendre_all(n, x[j]);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = legendre_all(n, x[i]);
    std::vector<long double> integral(n);
    integral[0] = x[i] + 1;
    for (std::size_t k = 1; k < n; ++k) integral[k] = (p[k + 1] - p[k - 1]) / (2 * k + 1);
    for (std::size_t j = 0; j < n; ++j) {
      long double s = 0;
      for (std::size_t k = 0; k < n; ++k) s += (2 * k + 1) / 2.0L * pj[j][k] * integral[k];
      rule.cumulative[i * n + j] = static_cast<double>(s * rule.weights[j]);
    }
  }
  return rule;
}

// Bernstein-ellipse parameter of z relative to the panel; large means z is
// far from the panel in units of its half-width.
double bernstein_rho(std::complex<double> z, const Panel& p) {
  double half = p.width() / 2;
  double centre = p.right ? 1 - (p.clo + p.chi) / 2 : (p.lo + p.hi) / 2;
  std::complex<double> u = (z - centre) / half;
  std::complex<double> root = std::sqrt(u * u - 1.0);
  return std::max(std::abs(u + root), std::abs(u - root));
}

Panel left_panel(double lo, double hi) { return {lo, hi, 1 - lo, 1 - hi, false}; }
Panel right_panel(double clo, double chi) { return {1 - clo, 1 - chi, clo, chi, true}; }

void bisect_into(const Panel& p, int times, std::vector<Panel>& out) {
  std::size_t pieces = std::size_t{1} << times;
  for (std::size_t k = 0; k < pieces; ++k) {
    double a = double(k) / pieces;
    double b = double(k + 1) / pieces;
    if (p.right) {
      double w = p.clo - p.chi;
      out.push_back(right_panel(p.clo - a * w, p.clo - b * w));
    } else {
      double w = p.hi - p.lo;
      out.push_back(left_panel(p.lo + a * w, p.lo + b * w));
    }
  }
}

Panel half(const Panel& p, bool first) {
  if (p.right) {
    double mid = (p.clo + p.chi) / 2;
    return first ? right_panel(p.clo, mid) : right_panel(mid, p.chi);
  }
  double mid = (p.lo + p.hi) / 2;
  return first ? left_panel(p.lo, mid) : left_panel(mid, p.hi);
}

void split_near(std::complex<double> z, const Panel& p, double rho_min, int depth,
                std::vector<Panel>& out) {
  if (depth == 0 || bernstein_rho(z, p) >= rho_min) {
    out.push_back(p);
    return;
  }
  split_near(z, half(p, true), rho_min, depth - 1, out);
  split_near(z, half(p, false), rho_min, depth - 1, out);
}

}  // namespace

const GaussLegendreRule& gauss_legendre(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, GaussLegendreRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

std::string Mesh::describe() const {
  return fmt::format("level={} grading_levels={} panels={} nodes_per_panel={}", level,
                     grading_levels, panels.size(), nodes_per_panel);
}

Mesh build_mesh(std::complex<double> z, const EvalConfig& cfg, int level) {
  Mesh mesh;
  mesh.level = level;
  mesh.nodes_per_panel = static_cast<std::size_t>(cfg.nodes_per_panel);
  mesh.grading_levels = cfg.panels_per_side << level;
  const double q = cfg.grading_ratio;

  // Breakpoints 1/2 * q^j measured from each endpoint.
  std::vector<double> offsets(mesh.grading_levels + 1);
  offsets[0] = 0.5;
  for (int j = 1; j <= mesh.grading_levels; ++j) offsets[j] = offsets[j - 1] * q;

  std::vector<Panel> graded;
  graded.push_back(left_panel(0.0, offsets.back()));
  for (int j = mesh.grading_levels; j >= 1; --j) {
    graded.push_back(left_panel(offsets[j], offsets[j - 1]));
  }
  for (int j = 1; j <= mesh.grading_levels; ++j) {
    graded.push_back(right_panel(offsets[j - 1], offsets[j]));
  }
  graded.push_back(right_panel(offsets.back(), 0.0));

  std::vector<Panel> bisected;
  for (const Panel& p : graded) bisect_into(p, level, bisected);

  const double rho_min = 4.0 * double(1 << level);
  for (const Panel& p : bisected) split_near(z, p, rho_min, 40, mesh.panels);

  const auto& rule = gauss_legendre(mesh.nodes_per_panel);
  mesh.t.reserve(mesh.panels.size() * rule.size());
  mesh.one_minus_t.reserve(mesh.panels.size() * rule.size());
  for (const Panel& p : mesh.panels) {
    const double w = p.width();
    for (double x : rule.nodes) {
      if (p.right) {
        double c = p.clo - (x + 1) / 2 * w;
        mesh.t.push_back(1 - c);
        mesh.one_minus_t.push_back(c);
      } else {
        double t = p.lo + (x + 1) / 2 * w;
        mesh.t.push_back(t);
        mesh.one_minus_t.push_back(1 - t);
      }
    }
  }
  return mesh;
}

std::complex<double> integrate_word(const Word& w, std::complex<double> z, const Mesh& mesh) {
  using cd = std::complex<double>;
  if (w.empty()) return 1.0;
  const auto& rule = gauss_legendre(mesh.nodes_per_panel);
  const std::size_t n = rule.size();
  const std::size_t total = mesh.node_count();

  std::vector<cd> g(total, cd(1.0));
  std::vector<cd> h(total);
  cd end_value = 0;
  for (Letter a : w.letters()) {
    for (std::size_t i = 0; i < total; ++i) {
      switch (a) {
        case Letter::Zero: h[i] = g[i] / mesh.t[i]; break;
        case Letter::One: h[i] = -g[i] / mesh.one_minus_t[i]; break;
        case Letter::Z: h[i] = g[i] / (mesh.t[i] - z); break;
      }
    }
    cd running = 0;
    for (std::size_t p = 0; p < mesh.panels.size(); ++p) {
      const double half = mesh.panels[p].width() / 2;
      const cd* hp = &h[p * n];
      cd* gp = &g[p * n];
      for (std::size_t i = 0; i < n; ++i) {
        cd s = 0;
        const double* row = &rule.cumulative[i * n];
        for (std::size_t j = 0; j < n; ++j) s += row[j] * hp[j];
        gp[i] = running + half * s;
      }
      cd panel_sum = 0;
      for (std::size_t j = 0; j < n; ++j) panel_sum += rule.weights[j] * hp[j];
      running += half * panel_sum;
    }
    end_value = running;
  }
  return end_value;
}

}  // namespace hyperlog::detail
