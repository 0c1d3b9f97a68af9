#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperlog/errors.hpp"
#include "hyperlog/lincomb.hpp"

using namespace hyperlog;

namespace {
const LinComb e0(Word{Letter::Zero});
const LinComb e1(Word{Letter::One});
const LinComb ez(Word{Letter::Z});
LinComb lc(const char* text) { return parse_lincomb(text); }

LinComb random_lincomb(std::mt19937& rng, std::size_t max_weight, int terms, bool convergent) {
  std::uniform_int_distribution<std::size_t> weight(0, max_weight);
  std::uniform_int_distribution<int> letter(0, 2), num(-7, 7), den(1, 5);
  LinComb x;
  while (static_cast<int>(x.size()) < terms) {
    std::vector<Letter> letters(weight(rng));
    for (auto& a : letters) a = static_cast<Letter>(letter(rng));
    Word w(letters);
    if (convergent && !is_convergent(w)) continue;
    Rational c(num(rng), den(rng));
    c.canonicalize();
    x.add(w, c == 0 ? Rational(1) : c);
  }
  return x;
}

// Every word of the given weight over {0, 1, z}.
std::vector<Word> all_words(std::size_t n) {
  std::vector<Word> out;
  std::vector<Letter> letters(n, Letter::Zero);
  for (;;) {
    out.emplace_back(letters);
    std::size_t i = n;
    while (i > 0 && letters[i - 1] == Letter::Z) letters[--i] = Letter::Zero;
    if (i == 0) return out;
    letters[i - 1] = static_cast<Letter>(static_cast<int>(letters[i - 1]) + 1);
  }
}
}  // namespace

TEST_CASE("canonical form") {
  LinComb x = lc("[1,0] - [1,0]");
  CHECK(x.is_zero());
  CHECK(x == LinComb());
  LinComb y = lc("2/4*[z] + 1/2*[z]");
  CHECK(y.coeff(Word{Letter::Z}) == 1);
  CHECK(format_lincomb(y) == "[z]");
  CHECK(format_lincomb(lc("[z,z] + 3/2*[1,0] - [1,z]")) == "3/2*[1,0] - [1,z] + [z,z]");
  CHECK(format_lincomb(-lc("[z]")) == "-[z]");
  CHECK(format_lincomb(LinComb()) == "0");
  CHECK(lc("3") == LinComb::one() * Rational(3));
  CHECK(lc("[]") == LinComb::one());
}

TEST_CASE("concatenation") {
  CHECK((e1 - ez) * (e0 - ez) == lc("[1,0] - [1,z] - [z,0] + [z,z]"));
  CHECK(LinComb::one() * lc("[z,1,0]") == lc("[z,1,0]"));
  CHECK(lc("[z,1,0]") * LinComb::one() == lc("[z,1,0]"));
  CHECK((e1 - ez) * (e0 - ez) * e0 == lc("[1,0,0] - [1,z,0] - [z,0,0] + [z,z,0]"));
  CHECK(lc("1/2*[1]") * lc("2/3*[0]") == lc("1/3*[1,0]"));
  CHECK(power(e0 - ez, 0) == LinComb::one());
  CHECK(power(e0 - ez, 2) == lc("[0,0] - [0,z] - [z,0] + [z,z]"));

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    LinComb x = random_lincomb(rng, 3, 3, false);
    LinComb y = random_lincomb(rng, 3, 3, false);
    LinComb w = random_lincomb(rng, 3, 3, false);
    CHECK((x * y) * w == x * (y * w));
    CHECK(x * (y + w) == x * y + x * w);
  }
}

TEST_CASE("tau") {
  CHECK(tau(ez) == ez);
  CHECK(tau(e0) == ez - e1);
  CHECK(tau(e1) == ez - e0);
  CHECK(tau(lc("[1,0]")) == lc("[z,z] - [z,0] - [1,z] + [1,0]"));
  CHECK(tau(tau(lc("[z,1,0]"))) == lc("[z,1,0]"));
  CHECK(tau(LinComb::one()) == LinComb::one());
  CHECK(tau(LinComb()).is_zero());

  // Involution on every word up to weight 6 (weight 8 runs in the acceptance suite).
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Word& w : all_words(n)) CHECK(tau(tau(LinComb(w))) == LinComb(w));
  }
  // Restricts to the convergent subspace.
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Word& w : enumerate_convergent(n)) CHECK(is_supported_on_convergent(tau(LinComb(w))));
  }
}

TEST_CASE("tau is anti-multiplicative and linear") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    LinComb x = random_lincomb(rng, 4, 4, false);
    LinComb y = random_lincomb(rng, 4, 4, false);
    CHECK(tau(x * y) == tau(y) * tau(x));
    CHECK(tau(x * Rational(3, 7) - y) == tau(x) * Rational(3, 7) - tau(y));
    CHECK(tau_infinity(x * Rational(-2) + y) == tau_infinity(x) * Rational(-2) + tau_infinity(y));
    CHECK(substitute_ez_zero(x + y * Rational(5)) ==
          substitute_ez_zero(x) + substitute_ez_zero(y) * Rational(5));
  }
}

TEST_CASE("tau at infinity") {
  CHECK(tau_infinity(lc("[1,0]")) == lc("[1,0]"));
  CHECK(tau_infinity(lc("[1,z,0]")).is_zero());
  CHECK(tau_infinity(lc("[1,0,0]")) == lc("-[1,1,0]"));
  // Reversed with 0 <-> 1 and sign (-1)^6: the word for zeta(1,2,3) is self-dual.
  CHECK(tau_infinity(lc("[1,1,0,1,0,0]")) == lc("[1,1,0,1,0,0]"));

  // tau_infinity(w) = substitute_ez_zero(tau(w)) on {0,1} words up to weight 6.
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Word& w : all_words(n)) {
      if (w.contains(Letter::Z)) {
        CHECK(tau_infinity(LinComb(w)).is_zero());
        continue;
      }
      CHECK(tau_infinity(LinComb(w)) == substitute_ez_zero(tau(LinComb(w))));
    }
  }
}

TEST_CASE("partial derivation") {
  const Word z0{Letter::Z, Letter::Zero};
  CHECK(partial(Letter::Z, Letter::Zero, LinComb(z0)) == -ez);
  CHECK(partial(Letter::Z, Letter::One, LinComb(z0)).is_zero());
  CHECK(partial(Letter::Z, Letter::Zero, ez) == -LinComb::one());
  CHECK(partial(Letter::Z, Letter::One, ez) == LinComb::one());
  CHECK(partial(Letter::Z, Letter::Zero, LinComb::one()).is_zero());
  // z-free words are annihilated by d_{z,a}.
  CHECK(partial(Letter::Z, Letter::Zero, lc("[1,0,1,0]")).is_zero());
  CHECK(partial(Letter::Z, Letter::One, lc("[1,1,0]")).is_zero());

  CHECK_THROWS_AS(partial(Letter::Z, Letter::Zero, lc("[0,z]")), DomainError);
  CHECK_THROWS_AS(partial(Letter::Z, Letter::Zero, lc("[z] + [z,1]")), DomainError);

  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Word& w : enumerate_convergent(n)) {
      for (Letter x : kAllLetters) {
        for (Letter y : kAllLetters) {
          LinComb d = partial(x, y, LinComb(w));
          CHECK(is_supported_on_convergent(d));
          CHECK(d == partial(y, x, LinComb(w)));
        }
      }
    }
  }

  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    LinComb x = random_lincomb(rng, 5, 4, true);
    LinComb y = random_lincomb(rng, 5, 4, true);
    CHECK(partial(Letter::Z, Letter::One, x * Rational(2, 3) + y) ==
          partial(Letter::Z, Letter::One, x) * Rational(2, 3) + partial(Letter::Z, Letter::One, y));
  }
}

TEST_CASE("substitute e_z = 0") {
  CHECK(substitute_ez_zero(lc("[1,0] - [1,z]")) == lc("[1,0]"));
  CHECK(substitute_ez_zero(ez).is_zero());
  for (std::size_t r = 1; r <= 5; ++r) {
    for (std::size_t k = std::max<std::size_t>(r, 2); k <= 7; ++k) {
      LinComb g = (e1 - ez) * power(e0 - ez, r - 1) * LinComb(power(Letter::Zero, k - r));
      CHECK(substitute_ez_zero(g) == LinComb(Word{Letter::One} + power(Letter::Zero, k - 1)));
    }
  }
}

TEST_CASE("expression parse errors carry a column") {
  auto column_of = [](const char* text) -> std::size_t {
    try {
      parse_lincomb(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  CHECK(column_of("") == 1);
  CHECK(column_of("[1,0") == 1);
  CHECK(column_of("[1,0] [z]") == 7);
  CHECK(column_of("3/0*[z]") == 4);
  CHECK(column_of("[x]") == 1);
  CHECK(column_of("2*") == 3);
  CHECK(column_of("+") == 2);
  CHECK(parse_lincomb(" - 3/2 * [z,1,0] + [1,z,0] ") == lc("-3/2*[z,1,0] + [1,z,0]"));
}

TEST_CASE("format/parse round trip") {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    LinComb x = random_lincomb(rng, 5, 5, false);
    CHECK(parse_lincomb(format_lincomb(x)) == x);
  }
}
