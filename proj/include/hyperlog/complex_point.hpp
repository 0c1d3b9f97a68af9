#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlog {

// A value of z on the Riemann sphere: a finite complex number or the point
// at infinity (used to label z -> infinity specialisations).
class ComplexPoint {
 public:
  constexpr ComplexPoint() = default;
  constexpr ComplexPoint(double re, double im = 0.0) : value_(re, im) {}
  constexpr ComplexPoint(std::complex<double> z) : value_(z) {}

  static ComplexPoint infinity() {
    ComplexPoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const noexcept { return infinite_; }
  std::complex<double> value() const noexcept { return value_; }
  double re() const noexcept { return value_.real(); }
  double im() const noexcept { return value_.imag(); }

  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

 private:
  std::complex<double> value_{};
  bool infinite_ = false;
};

// Euclidean distance from z to the closed segment [0, 1] of the real axis.
double distance_to_segment(std::complex<double> z) noexcept;

// `a`, `a+bi`, `a-bi`, `bi` with decimal literals (exponents allowed), or
// `inf`. Throws ParseError.
ComplexPoint parse_complex(std::string_view text);
// Comma-separated list of complex literals, e.g. `2,-1,3+2i`.
std::vector<ComplexPoint> parse_complex_list(std::string_view text);
std::string format_complex(const ComplexPoint& z);

}  // namespace hyperlog
