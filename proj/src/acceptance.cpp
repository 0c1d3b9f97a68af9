#include "hyperlog/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <random>

#include "hyperlog/lincomb.hpp"
#include "hyperlog/mzv.hpp"
#include "hyperlog/relations.hpp"

namespace hyperlog {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Word> convergent_up_to(std::size_t weight) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= weight; ++n) {
    for (Word& w : enumerate_convergent(n)) out.push_back(std::move(w));
  }
  return out;
}

// Tracks pass/fail and the worst residual of a criterion.
struct Tally {
  bool ok = true;
  double worst = 0.0;
  std::string first_failure;
  std::size_t checks = 0;

  void residual(double value, double tol, const std::string& what) {
    ++checks;
    worst = std::max(worst, std::isnan(value) ? INFINITY : value);
    if (!(value < tol)) fail(fmt::format("{}: {:.3e} >= {:.1e}", what, value, tol));
  }
  void require(bool cond, const std::string& what) {
    ++checks;
    if (!cond) fail(what);
  }
  void fail(const std::string& what) {
    if (ok) first_failure = what;
    ok = false;
  }
  std::string summary(const std::string& extra) const {
    std::string s = fmt::format("{} checks, max residual {:.3e}{}", checks, worst, extra);
    if (!ok) s += "; first failure: " + first_failure;
    return s;
  }
};

CriterionResult timed(int number, const std::string& title,
                      const std::function<std::pair<bool, std::string>()>& body) {
  auto start = Clock::now();
  CriterionResult r{number, title, false, "", 0.0};
  auto [pass, detail] = body();
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.pass = pass;
  r.detail = detail;
  return r;
}

CriterionResult duality_sweep(const EvalConfig& cfg) {
  return timed(1, "duality L(w - tau(w)) = 0, weight <= 4", [&] {
    auto start = Clock::now();
    Tally t;
    const auto zs = default_z_points();
    auto words = convergent_up_to(4);
    t.require(words.size() == 54, fmt::format("expected 54 convergent words, got {}", words.size()));
    for (const Word& w : words) {
      auto rep = check_relation(duality_relation(w), zs, kRelationTol, cfg);
      t.residual(rep.max_residual(), kRelationTol, "duality " + format_word(w));
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    t.require(secs < 300.0, fmt::format("runtime {:.1f}s exceeds 5 minutes", secs));
    return std::pair{t.ok, t.summary(fmt::format(", {} words", words.size()))};
  });
}

CriterionResult sum_formula(const EvalConfig& cfg) {
  return timed(2, "sum formula, 2 <= k <= 7, 1 <= r <= k", [&] {
    Tally t;
    const std::vector<ComplexPoint> zs = {ComplexPoint(2.0), ComplexPoint(-1.0)};
    for (int k = 2; k <= 7; ++k) {
      for (int r = 1; r <= k; ++r) {
        auto rep = check_relation(sum_relation(k, r), zs, kRelationTol, cfg);
        t.residual(rep.max_residual(), kRelationTol, fmt::format("sum k={} r={}", k, r));
      }
    }
    // Explicit weight-3 and weight-2 instances.
    const LinComb weight3 = parse_lincomb("[z,1,0] + [1,z,0] + [z,0,0] - [z,z,0]");
    const LinComb weight2 = parse_lincomb("[z,z] - [z,0] - [1,z]");
    t.require(sum_relation(3, 2) == weight3, "sum_relation(3,2) differs from the weight-3 instance");
    t.require(sum_relation(2, 2) == -weight2, "sum_relation(2,2) differs from the weight-2 instance");
    auto all = default_z_points();
    t.residual(check_relation(weight3, all, kRelationTol, cfg).max_residual(), kRelationTol,
               "weight-3 instance");
    t.residual(check_relation(weight2, all, kRelationTol, cfg).max_residual(), kRelationTol,
               "weight-2 instance");
    return std::pair{t.ok, t.summary("")};
  });
}

// Example identities for the derivation, asserted exactly.
void differential_examples(Tally& t) {
  const LinComb ez(Word{Letter::Z}), e0(Word{Letter::Zero}), e1(Word{Letter::One});
  auto d0 = [](const LinComb& x) { return partial(Letter::Z, Letter::Zero, x); };
  auto d1 = [](const LinComb& x) { return partial(Letter::Z, Letter::One, x); };

  std::vector<Word> words01, words0z;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Letter> a, b;
      for (std::size_t i = 0; i < n; ++i) {
        bool bit = (mask >> i) & 1;
        a.push_back(bit ? Letter::One : Letter::Zero);
        b.push_back(bit ? Letter::Z : Letter::Zero);
      }
      words01.emplace_back(a);
      words0z.emplace_back(b);
    }
  }
  for (const Word& wv : words01) {
    if (!wv.empty() && wv.back() == Letter::One) continue;
    const LinComb w(wv);
    const std::string s = format_word(wv);
    // d/dz L(e_z e_0 w) = -1/z L(e_z w)
    t.require(d0(ez * e0 * w) == -(ez * w) && d1(ez * e0 * w).is_zero(), "e_z e_0 w, w=" + s);
    if (wv.empty()) continue;
    // d/dz L(e_z e_1 w) = -1/(z-1) L(e_z w) + (1/(z-1) - 1/z) L(e_1 w)
    t.require(d0(ez * e1 * w) == -(e1 * w) && d1(ez * e1 * w) == e1 * w - ez * w,
              "e_z e_1 w, w=" + s);
  }
  for (const Word& wv : words0z) {
    const LinComb w(wv);
    const std::string s = format_word(wv);
    t.require(d0(ez * w * e0) == -(ez * w) && d1(ez * w * e0).is_zero(), "e_z w e_0, w=" + s);
    t.require(d0(e1 * ez * w * e0) == -(e1 * ez * w) + e1 * w * e0 &&
                  d1(e1 * ez * w * e0) == (ez - e1) * w * e0,
              "e_1 e_z w e_0, w=" + s);
    t.require(d0(e1 * e0 * w * e0) == e1 * w * e0 - e1 * e0 * w && d1(e1 * e0 * w * e0).is_zero(),
              "e_1 e_0 w e_0, w=" + s);
  }
}

CriterionResult differential_formula(const EvalConfig& cfg) {
  return timed(3, "differential formula, weight <= 4, h = 1e-5", [&] {
    Tally t;
    differential_examples(t);
    const auto zs = default_z_points();
    for (const Word& w : convergent_up_to(4)) {
      auto rep = differential_check(w, zs, cfg, kFiniteDifferenceStep, kDifferentialTol);
      t.residual(rep.max_residual(), kDifferentialTol, "diff " + format_word(w));
    }
    return std::pair{t.ok, t.summary("")};
  });
}

CriterionResult mzv_specialisations(const EvalConfig& cfg) {
  return timed(4, "MZV duality (weight <= 6), sum formula (k <= 8), zeta(2)", [&] {
    Tally t;
    for (std::size_t n = 2; n <= 6; ++n) {
      for (const Word& w : enumerate_convergent(n)) {
        if (w.contains(Letter::Z)) continue;
        t.residual(mzv_duality_check(w, cfg).max_residual(), kSeriesTol,
                   "mzv duality " + format_word(w));
      }
    }
    for (int k = 2; k <= 8; ++k) {
      for (int r = 1; r < k; ++r) {
        t.residual(sum_formula_mzv_check(k, r, cfg).max_residual(), kSeriesTol,
                   fmt::format("mzv sum k={} r={}", k, r));
      }
    }
    const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    t.residual(std::abs(eval_mzv(KIndex{2}, cfg) - pi2_6), 1e-10, "zeta(2) vs pi^2/6");
    return std::pair{t.ok, t.summary("")};
  });
}

CriterionResult oracle_equivalence(const EvalConfig& cfg) {
  return timed(5, "quadrature vs nested adaptive oracle, closed forms", [&] {
    Tally t;
    const auto zs = default_z_points();
    for (const Word& w : convergent_up_to(3)) {
      for (const ComplexPoint& z : zs) {
        double diff = std::abs(eval_word(w, z, cfg).value - eval_word_oracle(w, z));
        t.residual(diff, 1e-5, fmt::format("oracle {} at {}", format_word(w), format_complex(z)));
      }
    }
    const double ln2 = std::log(2.0);
    const double li2_half = std::numbers::pi * std::numbers::pi / 12.0 - ln2 * ln2 / 2.0;
    const ComplexPoint two(2.0);
    t.residual(std::abs(eval_word(parse_word("z"), two, cfg).value + ln2), 1e-8, "L(z)(2) = -ln 2");
    t.residual(std::abs(eval_word(parse_word("z,0"), two, cfg).value + li2_half), 1e-8,
               "L(z,0)(2) = -Li2(1/2)");
    t.residual(std::abs(eval_word(parse_word("z,z"), two, cfg).value - ln2 * ln2 / 2.0), 1e-8,
               "L(z,z)(2) = ln^2 2 / 2");
    return std::pair{t.ok, t.summary("")};
  });
}

CriterionResult limit_behaviour(const EvalConfig& cfg) {
  return timed(6, "decay toward z -> infinity, weight <= 3", [&] {
    Tally t;
    std::size_t count = 0;
    for (const Word& w : convergent_up_to(3)) {
      if (!w.contains(Letter::Z)) continue;
      ++count;
      const std::string s = format_word(w);
      double a10 = std::abs(eval_word(w, 10.0, cfg).value);
      double a100 = std::abs(eval_word(w, 100.0, cfg).value);
      std::complex<double> v1000 = eval_word(w, 1000.0, cfg).value;
      t.require(a10 > a100 && a100 > std::abs(v1000),
                fmt::format("|L({})| not decreasing: {:.3e}, {:.3e}, {:.3e}", s, a10, a100,
                            std::abs(v1000)));
      t.residual(std::abs(v1000 - eval_at_infinity(LinComb(w), cfg)), 1e-2, "limit " + s);
    }
    return std::pair{t.ok, t.summary(fmt::format(", {} words", count))};
  });
}

CriterionResult derivative_identities(const EvalConfig& cfg) {
  return timed(7, "derivative identities for f_{k,r}, g_{k,r}", [&] {
    Tally t;
    const std::vector<ComplexPoint> zs = {ComplexPoint(2.0), ComplexPoint(-1.0)};
    for (auto [k, r] : {std::pair{3, 2}, {4, 2}, {4, 3}, {5, 3}}) {
      auto rep = sum_derivatives_check(k, r, zs, cfg);
      t.residual(rep.max_residual(), kDifferentialTol, fmt::format("k={} r={}", k, r));
    }
    return std::pair{t.ok, t.summary("")};
  });
}

LinComb random_lincomb(std::mt19937& rng, std::size_t max_weight, int terms) {
  std::uniform_int_distribution<std::size_t> weight(0, max_weight);
  std::uniform_int_distribution<int> letter(0, 2), num(-5, 5), den(1, 4);
  LinComb x;
  for (int i = 0; i < terms; ++i) {
    std::vector<Letter> letters(weight(rng));
    for (auto& a : letters) a = static_cast<Letter>(letter(rng));
    Rational c(num(rng), den(rng));
    c.canonicalize();
    x.add(Word(letters), c);
  }
  return x;
}

CriterionResult symbolic_suite(const EvalConfig&) {
  return timed(8, "exact symbolic identities", [&] {
    Tally t;
    // tau is an involution on every word up to weight 8.
    for (std::size_t n = 0; n <= 8; ++n) {
      std::vector<Letter> letters(n, Letter::Zero);
      for (;;) {
        const LinComb x{Word(letters)};
        t.require(tau(tau(x)) == x, "tau(tau(w)) != w for w=" + format_word(Word(letters)));
        std::size_t i = n;
        while (i > 0 && letters[i - 1] == Letter::Z) letters[--i] = Letter::Zero;
        if (i == 0) break;
        letters[i - 1] = static_cast<Letter>(static_cast<int>(letters[i - 1]) + 1);
      }
    }
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
      LinComb x = random_lincomb(rng, 4, 3), y = random_lincomb(rng, 4, 3);
      t.require(tau(x * y) == tau(y) * tau(x), "tau anti-multiplicativity");
    }
    for (std::size_t n = 0; n <= 6; ++n) {
      for (const Word& w : enumerate_convergent(n)) {
        const LinComb x(w);
        t.require(is_supported_on_convergent(tau(x)), "tau leaves A^0 for " + format_word(w));
        for (Letter a : kAllLetters) {
          for (Letter b : kAllLetters) {
            LinComb d = partial(a, b, x);
            t.require(is_supported_on_convergent(d), "partial leaves A^0 for " + format_word(w));
            t.require(d == partial(b, a, x), "partial not symmetric for " + format_word(w));
          }
        }
      }
    }
    for (int k = 2; k <= 10; ++k) {
      t.require(sum_relation(k, 1).is_zero(), fmt::format("sum_relation({},1) != 0", k));
    }
    t.require(enumerate_convergent(0).size() == 1 && enumerate_convergent(1).size() == 1,
              "weight 0/1 counts");
    std::size_t expected = 4;
    for (std::size_t n = 2; n <= 10; ++n, expected *= 3) {
      auto words = enumerate_convergent(n);
      t.require(words.size() == expected, fmt::format("weight {} count {}", n, words.size()));
      for (const Word& w : words) t.require(is_convergent(w), "enumerated non-convergent word");
    }
    return std::pair{t.ok, t.summary("")};
  });
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "duality sweep", duality_sweep},
      {2, "sum formula", sum_formula},
      {3, "differential formula", differential_formula},
      {4, "MZV specialisations", mzv_specialisations},
      {5, "oracle equivalence", oracle_equivalence},
      {6, "limit behaviour", limit_behaviour},
      {7, "derivative identities", derivative_identities},
      {8, "symbolic suite", symbolic_suite},
  };
  return criteria;
}

std::vector<CriterionResult> run_acceptance(const EvalConfig& cfg) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) out.push_back(c.run(cfg));
  return out;
}

std::string format_criterion_line(const CriterionResult& r) {
  return fmt::format("[{}] {}. {} ({:.2f}s): {}", r.pass ? "PASS" : "FAIL", r.number, r.title,
                     r.seconds, r.detail);
}

}  // namespace hyperlog
