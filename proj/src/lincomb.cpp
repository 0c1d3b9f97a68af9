#include "hyperlog/lincomb.hpp"

#include <cctype>
#include <fmt/format.h>

#include "hyperlog/errors.hpp"

namespace hyperlog {

LinComb::LinComb(const Word& w, const Rational& coeff) { add(w, coeff); }

Rational LinComb::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinComb::add(const Word& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LinComb& LinComb::operator+=(const LinComb& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

LinComb& LinComb::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [w, c] : terms_) c *= scalar;
  }
  return *this;
}

LinComb concat(const LinComb& x, const LinComb& y) {
  LinComb out;
  for (const auto& [u, a] : x.terms()) {
    for (const auto& [v, b] : y.terms()) out.add(u + v, a * b);
  }
  return out;
}

LinComb power(const LinComb& x, std::size_t n) {
  LinComb out = LinComb::one();
  for (std::size_t i = 0; i < n; ++i) out = concat(out, x);
  return out;
}

namespace {

LinComb tau_letter(Letter a) {
  switch (a) {
    case Letter::Zero: return LinComb(Word{Letter::Z}) - LinComb(Word{Letter::One});
    case Letter::One: return LinComb(Word{Letter::Z}) - LinComb(Word{Letter::Zero});
    case Letter::Z: return LinComb(Word{Letter::Z});
  }
  return {};
}

// Applies an anti-homomorphism given on generators to every word of x.
template <typename OnLetter>
LinComb apply_anti(const LinComb& x, OnLetter on_letter) {
  const LinComb images[] = {on_letter(Letter::Zero), on_letter(Letter::One),
                            on_letter(Letter::Z)};
  LinComb out;
  for (const auto& [w, c] : x.terms()) {
    LinComb image = LinComb::one();
    for (std::size_t i = w.weight(); i-- > 0;) {
      image = concat(image, images[static_cast<int>(w[i])]);
      if (image.is_zero()) break;
    }
    image *= c;
    out += image;
  }
  return out;
}

bool same_pair(Letter a, Letter b, Letter x, Letter y) {
  return (a == x && b == y) || (a == y && b == x);
}

}  // namespace

LinComb tau(const LinComb& x) { return apply_anti(x, tau_letter); }

LinComb tau_infinity(const LinComb& x) {
  return apply_anti(x, [](Letter a) {
    switch (a) {
      case Letter::Zero: return LinComb(Word{Letter::One}, -1);
      case Letter::One: return LinComb(Word{Letter::Zero}, -1);
      case Letter::Z: return LinComb();
    }
    return LinComb();
  });
}

LinComb partial(Letter x, Letter y, const LinComb& v) {
  LinComb out;
  for (const auto& [w, c] : v.terms()) {
    if (!is_convergent(w)) {
      throw DomainError("partial: '" + format_word(w) + "' is not a convergent word");
    }
    const std::size_t n = w.weight();
    auto at = [&](std::size_t i) {
      if (i == 0) return Letter::Zero;
      if (i == n + 1) return Letter::One;
      return w[i - 1];
    };
    for (std::size_t i = 1; i <= n; ++i) {
      int coeff = int(same_pair(at(i), at(i + 1), x, y)) - int(same_pair(at(i - 1), at(i), x, y));
      if (coeff != 0) out.add(w.without(i - 1), c * coeff);
    }
  }
  return out;
}

LinComb substitute_ez_zero(const LinComb& x) {
  LinComb out;
  for (const auto& [w, c] : x.terms()) {
    if (!w.contains(Letter::Z)) out.add(w, c);
  }
  return out;
}

bool is_supported_on_convergent(const LinComb& x) {
  for (const auto& [w, c] : x.terms()) {
    if (!is_convergent(w)) return false;
  }
  return true;
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  LinComb parse() {
    LinComb out;
    skip_space();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(out, sign);
      skip_space();
    }
    return out;
  }

 private:
  void parse_term(LinComb& out, int sign) {
    Rational coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_rational();
      have_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != '[') fail("expected '[' after '*'");
      }
    }
    Word w;
    if (!at_end() && peek() == '[') {
      std::size_t open = pos_++;
      std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) {
        pos_ = open;
        fail("unterminated '['");
      }
      try {
        w = parse_word(text_.substr(pos_, close - pos_));
      } catch (const ParseError& e) {
        throw ParseError(fmt::format("{} (in word at column {})", e.what(), open + 1), open + 1);
      }
      pos_ = close + 1;
    } else if (!have_coeff) {
      fail("expected a rational or '['");
    }
    out.add(w, coeff * sign);
  }

  Rational parse_rational() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string num(text_.substr(start, pos_ - start));
    std::string den = "1";
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      den = std::string(text_.substr(dstart, pos_ - dstart));
      if (den.empty()) fail("expected denominator after '/'");
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
    }
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(fmt::format("{} at column {}", what, pos_ + 1), pos_ + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LinComb parse_lincomb(std::string_view text) { return ExprParser(text).parse(); }

std::string format_lincomb(const LinComb& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += mag.get_str() + "*";
    out += "[" + format_word(w) + "]";
  }
  return out;
}

}  // namespace hyperlog
