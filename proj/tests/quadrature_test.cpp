#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hyperlog/word.hpp"
#include "quadrature.hpp"

using namespace hyperlog;
using detail::build_mesh;
using detail::gauss_legendre;
using detail::integrate_word;

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
  for (std::size_t n : {2u, 5u, 16u, 24u}) {
    const auto& rule = gauss_legendre(n);
    REQUIRE(rule.size() == n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
      double sum = 0;
      for (std::size_t i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
      double exact = k % 2 == 0 ? 2.0 / (k + 1) : 0.0;
      CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
    }
    // Cumulative matrix: integral from -1 to x_i of x^k for k < n.
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        double sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
          sum += rule.cumulative[i * n + j] * std::pow(rule.nodes[j], k);
        }
        double exact = (std::pow(rule.nodes[i], k + 1) - std::pow(-1.0, k + 1)) / (k + 1);
        CHECK(std::abs(sum - exact) < 1e-13);
      }
    }
  }
}

TEST_CASE("mesh covers [0, 1] with geometric grading at both ends") {
  EvalConfig cfg;
  auto mesh = build_mesh({2.0, 0.0}, cfg, 0);
  REQUIRE(!mesh.panels.empty());
  CHECK(mesh.panels.front().lo == 0.0);
  CHECK(mesh.panels.back().chi == 0.0);
  for (std::size_t p = 1; p < mesh.panels.size(); ++p) {
    CHECK(mesh.panels[p].lo == doctest::Approx(mesh.panels[p - 1].hi).epsilon(1e-15));
  }
  const double smallest = 0.5 * std::pow(cfg.grading_ratio, cfg.panels_per_side);
  CHECK(mesh.panels.front().width() == doctest::Approx(smallest));
  CHECK(mesh.panels.back().width() == doctest::Approx(smallest));
  CHECK(mesh.panels.size() == 2 * (cfg.panels_per_side + 1));
  for (std::size_t i = 0; i < mesh.node_count(); ++i) {
    CHECK(mesh.t[i] > 0.0);
    CHECK(mesh.one_minus_t[i] > 0.0);
  }

  // Deeper levels resolve nodes closer to t = 1 than double precision in t can.
  auto deep = build_mesh({2.0, 0.0}, cfg, 3);
  CHECK(deep.grading_levels == 8 * cfg.panels_per_side);
  double closest = 1.0;
  for (double c : deep.one_minus_t) closest = std::min(closest, c);
  CHECK(closest < 1e-20);
}

TEST_CASE("mesh splits panels near z") {
  EvalConfig cfg;
  auto far = build_mesh({2.0, 0.0}, cfg, 0);
  auto near = build_mesh({0.3, 0.002}, cfg, 0);
  CHECK(near.panels.size() > far.panels.size());
  // Conjugate points give the same mesh.
  auto conj = build_mesh({0.3, -0.002}, cfg, 0);
  CHECK(conj.panels.size() == near.panels.size());
}

TEST_CASE("mesh doubling shrinks the difference on a coarse mesh") {
  EvalConfig coarse;
  coarse.panels_per_side = 2;
  coarse.nodes_per_panel = 4;
  for (const char* text : {"z,0", "z,z,0", "1,z,0", "z,1,0,0", "1,z,z,0"}) {
    const Word w = parse_word(text);
    for (std::complex<double> z : {std::complex<double>(2.0, 0.0), {3.0, 2.0}, {-1.0, 0.0}}) {
      std::complex<double> v0 = integrate_word(w, z, build_mesh(z, coarse, 0));
      std::complex<double> v1 = integrate_word(w, z, build_mesh(z, coarse, 1));
      std::complex<double> v2 = integrate_word(w, z, build_mesh(z, coarse, 2));
      double d1 = std::abs(v1 - v0), d2 = std::abs(v2 - v1);
      INFO(text, " z=", z.real(), "+", z.imag(), "i d1=", d1, " d2=", d2);
      // Below ~1e-13 both differences are rounding noise.
      CHECK((d2 <= d1 / 10 || d2 < 1e-13));
    }
  }
}

TEST_CASE("empty word integrates to one") {
  EvalConfig cfg;
  const std::complex<double> z{2.0, 0.0};
  CHECK(integrate_word(Word{}, z, build_mesh(z, cfg, 0)) == std::complex<double>(1.0));
}
