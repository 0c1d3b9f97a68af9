#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hyperlog/errors.hpp"
#include "hyperlog/mzv.hpp"
#include "hyperlog/relations.hpp"

using namespace hyperlog;

namespace {
const double kPi = std::numbers::pi;
const double kLn2 = std::numbers::ln2;

// Euler-Maclaurin: sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2 + Bernoulli tail.
double zeta_euler_maclaurin(int s) {
  const int N = 20;
  long double sum = 0;
  for (int n = 1; n < N; ++n) sum += std::pow((long double)n, -s);
  sum += std::pow((long double)N, 1 - s) / (s - 1) + std::pow((long double)N, -s) / 2;
  const long double b2j[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66};
  long double rising = s;  // s (s+1) ... (s+2j-2)
  long double fact = 2;    // (2j)!
  for (int j = 1; j <= 5; ++j) {
    sum += b2j[j - 1] / fact * rising * std::pow((long double)N, -s - 2 * j + 1);
    rising *= (s + 2 * j - 1) * (long double)(s + 2 * j);
    fact *= (2 * j + 1) * (long double)(2 * j + 2);
  }
  return double(sum);
}

// zeta(a, b) = sum_{m1 < m2} m1^-a m2^-b, brute force to M with b >= 3.
double zeta2_brute(int a, int b, int M = 2'000'000) {
  long double inner = 0, sum = 0;
  for (int m = 1; m <= M; ++m) {
    sum += inner * std::pow((long double)m, -b);
    inner += std::pow((long double)m, -a);
  }
  return double(sum);
}
}  // namespace

TEST_CASE("Euler-Maclaurin oracle sanity") {
  CHECK(std::abs(zeta_euler_maclaurin(2) - kPi * kPi / 6) < 1e-14);
  CHECK(std::abs(zeta_euler_maclaurin(4) - std::pow(kPi, 4) / 90) < 1e-14);
}

TEST_CASE("single zeta values against the oracle and closed forms") {
  for (int s = 2; s <= 12; ++s) {
    INFO("s=", s);
    CHECK(std::abs(eval_mzv(KIndex{s}) - zeta_euler_maclaurin(s)) < 1e-12);
  }
  CHECK(std::abs(eval_mzv(KIndex{2}) - kPi * kPi / 6) < 1e-12);
  CHECK(std::abs(eval_mzv(KIndex{4}) - std::pow(kPi, 4) / 90) < 1e-12);
  CHECK(std::abs(eval_mzv(KIndex{6}) - std::pow(kPi, 6) / 945) < 1e-12);
}

TEST_CASE("depth-two values") {
  CHECK(std::abs(eval_mzv(KIndex{2, 2}) - std::pow(kPi, 4) / 120) < 1e-12);
  CHECK(std::abs(eval_mzv(KIndex{1, 3}) - std::pow(kPi, 4) / 360) < 1e-12);
  // Euler: zeta(1, 2) = zeta(3).
  CHECK(std::abs(eval_mzv(KIndex{1, 2}) - zeta_euler_maclaurin(3)) < 1e-12);
  for (auto [a, b] : {std::pair{1, 3}, {2, 3}, {3, 3}, {1, 4}, {2, 5}}) {
    INFO(a, ",", b);
    CHECK(std::abs(eval_mzv(KIndex{a, b}) - zeta2_brute(a, b)) < 1e-10);
  }
}

TEST_CASE("sum of all admissible compositions is zeta(k)") {
  for (int k = 2; k <= 9; ++k) {
    const double zk = zeta_euler_maclaurin(k);
    for (int r = 1; r < k; ++r) {
      double sum = 0;
      for (const auto& idx : admissible_compositions(k, r)) sum += eval_mzv(idx);
      INFO("k=", k, " r=", r);
      CHECK(std::abs(sum - zk) < 1e-10);
    }
  }
}

TEST_CASE("word values carry the sign (-1)^depth") {
  CHECK(eval_mzv_word(Word{}) == 1.0);
  CHECK(std::abs(eval_mzv_word(parse_word("1,0")) + kPi * kPi / 6) < 1e-12);
  CHECK(std::abs(eval_mzv_word(parse_word("1,1,0")) - zeta_euler_maclaurin(3)) < 1e-12);
  CHECK_THROWS_AS(eval_mzv_word(parse_word("0,1")), DomainError);
  CHECK_THROWS_AS(eval_mzv_word(parse_word("z,0")), DomainError);
}

TEST_CASE("multiple polylogarithms at small arguments") {
  const int one[] = {1};
  const int two[] = {2};
  const int oneone[] = {1, 1};
  CHECK(std::abs(multiple_polylog(one, 0.5, 1e-15) - kLn2) < 1e-14);
  CHECK(std::abs(multiple_polylog(two, 0.5, 1e-15) - (kPi * kPi / 12 - kLn2 * kLn2 / 2)) < 1e-14);
  for (double y : {0.1, 0.3, 0.5, 0.7}) {
    double expected = std::pow(std::log1p(-y), 2) / 2;
    CHECK(std::abs(multiple_polylog(oneone, y, 1e-15) - expected) < 1e-13);
  }
  CHECK(multiple_polylog(two, 0.0, 1e-15) == 0.0);
}

TEST_CASE("series tolerance controls accuracy") {
  EvalConfig loose;
  loose.series_truncation_tol = 1e-4;
  double coarse = eval_mzv(KIndex{1, 1, 2}, loose);
  double fine = eval_mzv(KIndex{1, 1, 2});
  CHECK(std::abs(coarse - fine) < 1e-4);
  CHECK(std::abs(fine - zeta_euler_maclaurin(4)) < 1e-12);  // zeta(1,1,2) = zeta(4)
}
