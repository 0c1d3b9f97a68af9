#include <array>
#include <cmath>
#include <complex>
#include <fmt/format.h>
#include <functional>
#include <queue>
#include <vector>

#include "hyperlog/errors.hpp"
#include "hyperlog/evaluator.hpp"

namespace hyperlog {

namespace {

using cd = std::complex<double>;

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  cd value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod(const std::function<cd(double)>& f, double a, double b) {
  const double centre = (a + b) / 2;
  const double half = (b - a) / 2;
  cd fc = f(centre);
  cd kronrod_sum = fc * kWgk[7];
  cd gauss_sum = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    double dx = half * kXgk[j];
    cd sum = f(centre - dx) + f(centre + dx);
    kronrod_sum += kWgk[j] * sum;
    if (j % 2 == 1) gauss_sum += kWg[j / 2] * sum;
  }
  return {a, b, kronrod_sum * half, std::abs((kronrod_sum - gauss_sum) * half)};
}

// Globally adaptive bisection of the segment with the largest error estimate.
cd adaptive(const std::function<cd(double)>& f, double a, double b, double tol,
            int max_segments) {
  if (b <= a) return 0.0;
  std::priority_queue<Segment> queue;
  Segment first = kronrod(f, a, b);
  cd total = first.value;
  double error = first.error;
  queue.push(first);
  for (int count = 1; error > tol && count < max_segments; ++count) {
    Segment worst = queue.top();
    queue.pop();
    double mid = (worst.a + worst.b) / 2;
    if (!(mid > worst.a && mid < worst.b)) break;
    Segment left = kronrod(f, worst.a, mid);
    Segment right = kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  return total;
}

class NestedIntegral {
 public:
  NestedIntegral(const Word& w, cd z, double tol) : w_(w), z_(z), tol_(tol) {}

  // F_j(t) = int_0^t F_{j-1}(s) ds / (s - a_j), F_0 = 1.
  cd partial_integral(std::size_t j, double t) const {
    if (j == 0) return 1.0;
    const Letter a = w_[j - 1];
    if (j == 1) {
      // Elementary antiderivative for the innermost letter (a_1 != 0).
      return a == Letter::One ? cd(std::log1p(-t)) : std::log(1.0 - t / z_);
    }
    auto integrand = [this, j, a](double s) {
      return partial_integral(j - 1, s) / (cd(s) - pole(a));
    };
    return adaptive(integrand, 0.0, t, tol_, j == w_.weight() ? 400 : 200);
  }

 private:
  cd pole(Letter a) const {
    switch (a) {
      case Letter::Zero: return 0.0;
      case Letter::One: return 1.0;
      case Letter::Z: return z_;
    }
    return 0.0;
  }

  const Word& w_;
  cd z_;
  double tol_;
};

}  // namespace

std::complex<double> eval_word_oracle(const Word& w, ComplexPoint z, double tol) {
  if (!is_convergent(w)) throw DomainError("'" + format_word(w) + "' is not a convergent word");
  if (w.weight() > kOracleMaxWeight) {
    throw EvaluationRefused(fmt::format("oracle supports weight <= {}, got {}", kOracleMaxWeight,
                                        w.weight()));
  }
  if (z.is_infinite() || distance_to_segment(z.value()) == 0.0) {
    throw EvaluationRefused("oracle needs z off the segment [0, 1]");
  }
  if (w.empty()) return 1.0;
  return NestedIntegral(w, z.value(), tol).partial_integral(w.weight(), 1.0);
}

}  // namespace hyperlog
