#pragma once

#include "hyperlog/evaluator.hpp"
#include "hyperlog/word.hpp"

namespace hyperlog {

// zeta(k_1, ..., k_r) = sum over 0 < m_1 < ... < m_r of prod m_i^{-k_i}.
//
// The iterated integral over [0, 1] is split at t = 1/2; each half is a
// multiple polylogarithm at 1/2 (the right half after t -> 1 - t), computed
// as a truncated nested sum whose geometric tail bound stays below
// series_truncation_tol.
double eval_mzv(const KIndex& idx, const EvalConfig& cfg = {});

// L(w) for a convergent word over {0, 1}: (-1)^r zeta(index of w). The empty
// word gives 1.
double eval_mzv_word(const Word& w, const EvalConfig& cfg = {});

// Li_{n_1, ..., n_d}(y) = sum over 0 < m_1 < ... < m_d of y^{m_d} / prod m_i^{n_i}
// for 0 <= y < 1, truncated once the tail bound is below `tol`.
double multiple_polylog(std::span<const int> n, double y, double tol);

}  // namespace hyperlog
