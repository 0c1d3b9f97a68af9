#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

#include "hyperlog/word.hpp"

namespace hyperlog {

using Rational = mpq_class;

// Element of Q<e_0, e_1, e_z>: a finitely supported map from words to exact
// rationals. Zero coefficients are never stored and terms iterate in
// canonical word order, so operator== is structural equality.
class LinComb {
 public:
  using Terms = std::map<Word, Rational>;

  LinComb() = default;
  LinComb(const Word& w, const Rational& coeff = 1);

  // Unit of the algebra (the empty word).
  static LinComb one() { return LinComb(Word()); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Coefficient of `w` (zero when absent).
  Rational coeff(const Word& w) const;

  void add(const Word& w, const Rational& coeff);

  LinComb& operator+=(const LinComb& rhs);
  LinComb& operator-=(const LinComb& rhs);
  LinComb& operator*=(const Rational& scalar);

  friend LinComb operator+(LinComb lhs, const LinComb& rhs) { return lhs += rhs; }
  friend LinComb operator-(LinComb lhs, const LinComb& rhs) { return lhs -= rhs; }
  friend LinComb operator-(LinComb x) { return x *= -1; }
  friend LinComb operator*(LinComb x, const Rational& s) { return x *= s; }
  friend LinComb operator*(const Rational& s, LinComb x) { return x *= s; }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

// Bilinear extension of word concatenation.
LinComb concat(const LinComb& x, const LinComb& y);
inline LinComb operator*(const LinComb& x, const LinComb& y) { return concat(x, y); }

// n-fold product x^n, with x^0 the unit.
LinComb power(const LinComb& x, std::size_t n);

// Anti-automorphism e_0 -> e_z - e_1, e_1 -> e_z - e_0, e_z -> e_z.
LinComb tau(const LinComb& x);

// Anti-endomorphism e_0 -> -e_1, e_1 -> -e_0, e_z -> 0.
LinComb tau_infinity(const LinComb& x);

// Derivation-like map d_{x,y} on the convergent subspace: for each word,
// sum over i of (delta({a_i, a_{i+1}}, {x,y}) - delta({a_{i-1}, a_i}, {x,y}))
// times the word with a_i deleted, where a_0 = 0 and a_{n+1} = 1. Throws
// DomainError on any non-convergent input word.
LinComb partial(Letter x, Letter y, const LinComb& v);

// Drops every word containing e_z.
LinComb substitute_ez_zero(const LinComb& x);

bool is_supported_on_convergent(const LinComb& x);

// `3/2*[z,1,0] - [1,z,0]`; a bare rational is a multiple of the unit `[]`.
LinComb parse_lincomb(std::string_view text);
std::string format_lincomb(const LinComb& x);

}  // namespace hyperlog
