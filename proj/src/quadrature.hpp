#pragma once

// Panel quadrature shared by the word evaluator. Internal header.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "hyperlog/evaluator.hpp"
#include "hyperlog/word.hpp"

namespace hyperlog::detail {

// n-point Gauss-Legendre rule on [-1, 1] together with the cumulative
// integration matrix: cumulative[i*n + j] = integral from -1 to nodes[i] of
// the j-th Lagrange basis polynomial.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> cumulative;

  std::size_t size() const noexcept { return nodes.size(); }
};

// Rules are cached per node count; the cache is guarded and the rules are
// immutable once built.
const GaussLegendreRule& gauss_legendre(std::size_t n);

// Panel [lo, hi] of [0, 1]. Panels right of 1/2 keep the complements
// 1 - lo and 1 - hi so that nodes arbitrarily close to t = 1 stay resolved.
struct Panel {
  double lo, hi;
  double clo, chi;
  bool right;
  double width() const noexcept { return right ? clo - chi : hi - lo; }
};

struct Mesh {
  std::vector<Panel> panels;
  std::size_t nodes_per_panel = 0;
  // Quadrature nodes t and 1 - t for every panel, panel-major.
  std::vector<double> t;
  std::vector<double> one_minus_t;
  int level = 0;
  int grading_levels = 0;

  std::size_t node_count() const noexcept { return t.size(); }
  std::string describe() const;
};

// Mesh at refinement `level`: grading depth panels_per_side * 2^level toward
// each endpoint, every graded panel bisected `level` times, and panels near
// z split until z is well outside their Bernstein ellipse.
Mesh build_mesh(std::complex<double> z, const EvalConfig& cfg, int level);

// g_n(1) for g_0 = 1, g_j(t) = int_0^t g_{j-1}(s) ds / (s - a_j).
std::complex<double> integrate_word(const Word& w, std::complex<double> z, const Mesh& mesh);

}  // namespace hyperlog::detail
