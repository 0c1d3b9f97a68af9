#include "hyperlog/mzv.hpp"

#include <cmath>
#include <vector>

#include "hyperlog/errors.hpp"

namespace hyperlog {

double multiple_polylog(std::span<const int> n, double y, double tol) {
  const std::size_t d = n.size();
  if (d == 0) return 1.0;
  if (y == 0.0) return 0.0;
  if (!(y > 0.0 && y < 1.0)) throw DomainError("multiple_polylog: argument must lie in [0, 1)");

  // partial[j] = sum over 0 < m_1 < ... < m_j <= m of the first j factors,
  // with y^{m_d} attached to the outermost index only.
  std::vector<double> partial(d + 1, 0.0);
  partial[0] = 1.0;
  double ym = 1.0;
  for (long m = 1;; ++m) {
    ym *= y;
    const double dm = static_cast<double>(m);
    for (std::size_t j = d; j >= 1; --j) {
      double term = partial[j - 1] * std::pow(dm, -n[j - 1]);
      if (j == d) term *= ym;
      partial[j] += term;
    }
    // Inner sums obey partial[j] <= H_m^j <= (1 + ln m)^j, and for the range
    // of m reached here (1 + ln m')^{d-1} grows slower than y^{-(m'-m)/2}, so
    // the tail after m is at most 2 (2 + ln m)^{d-1} y^{m+1} / (1 - y).
    const double inner = std::pow(2.0 + std::log(dm), static_cast<double>(d - 1));
    const double tail = 2.0 * inner * ym * y / (1.0 - y);
    if (m >= static_cast<long>(2 * d) && tail < tol) break;
  }
  return partial[d];
}

namespace {

// I(0; u; 1/2) for a word over {0, 1} whose first letter is 1.
double integral_to_half(const Word& u, double tol) {
  if (u.empty()) return 1.0;
  std::vector<int> blocks;
  for (Letter a : u.letters()) {
    if (a == Letter::One) {
      blocks.push_back(1);
    } else {
      ++blocks.back();
    }
  }
  const double sign = blocks.size() % 2 == 0 ? 1.0 : -1.0;
  return sign * multiple_polylog(blocks, 0.5, tol);
}

// I(1/2; v; 1) = (-1)^n I(0; 1 - v_n, ..., 1 - v_1; 1/2) via t -> 1 - t.
double integral_from_half(const Word& v, double tol) {
  std::vector<Letter> mirrored;
  mirrored.reserve(v.weight());
  for (std::size_t i = v.weight(); i-- > 0;) {
    mirrored.push_back(v[i] == Letter::Zero ? Letter::One : Letter::Zero);
  }
  const double sign = v.weight() % 2 == 0 ? 1.0 : -1.0;
  return sign * integral_to_half(Word(std::move(mirrored)), tol);
}

}  // namespace

double eval_mzv_word(const Word& w, const EvalConfig& cfg) {
  if (w.empty()) return 1.0;
  if (w.contains(Letter::Z) || !is_convergent(w)) {
    throw DomainError("eval_mzv_word: '" + format_word(w) + "' is not a convergent {0,1} word");
  }
  const std::size_t n = w.weight();
  const double tol = cfg.series_truncation_tol / (4.0 * static_cast<double>(n + 1));
  // Path composition at 1/2: I(0; w; 1) = sum over w = uv of I(0; u; 1/2) I(1/2; v; 1).
  double total = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Letter> head(w.letters().begin(), w.letters().begin() + i);
    std::vector<Letter> tail(w.letters().begin() + i, w.letters().end());
    total += integral_to_half(Word(std::move(head)), tol) *
             integral_from_half(Word(std::move(tail)), tol);
  }
  return total;
}

double eval_mzv(const KIndex& idx, const EvalConfig& cfg) {
  const double sign = idx.depth() % 2 == 0 ? 1.0 : -1.0;
  return sign * eval_mzv_word(mzv_word(idx), cfg);
}

}  // namespace hyperlog
