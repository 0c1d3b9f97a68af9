#include "hyperlog/word.hpp"

#include <algorithm>
#include <cctype>
#include <fmt/format.h>

#include "hyperlog/errors.hpp"

namespace hyperlog {

char letter_symbol(Letter a) noexcept {
  switch (a) {
    case Letter::Zero: return '0';
    case Letter::One: return '1';
    case Letter::Z: return 'z';
  }
  return '?';
}

bool Word::contains(Letter a) const noexcept {
  return std::find(letters_.begin(), letters_.end(), a) != letters_.end();
}

std::size_t Word::count(Letter a) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
}

Word Word::without(std::size_t index) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() - 1);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i != index) out.push_back(letters_[i]);
  }
  return Word(std::move(out));
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

Word& Word::operator+=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word power(Letter a, std::size_t n) { return Word(std::vector<Letter>(n, a)); }

bool is_convergent(const Word& w) noexcept {
  return w.empty() || (w.front() != Letter::Zero && w.back() != Letter::One);
}

std::vector<Word> enumerate_convergent(std::size_t weight, std::size_t limit) {
  if (weight > limit) {
    throw DomainError(fmt::format(
        "refusing to enumerate weight {} (limit {}): 4*3^(n-2) words would be produced",
        weight, limit));
  }
  std::vector<Word> out;
  if (weight == 0) {
    out.emplace_back();
    return out;
  }
  // Odometer over {0,1,z}^weight in lexicographic order, filtered.
  std::vector<Letter> letters(weight, Letter::Zero);
  for (;;) {
    Word w(letters);
    if (is_convergent(w)) out.push_back(std::move(w));
    std::size_t i = weight;
    while (i > 0) {
      --i;
      if (letters[i] != Letter::Z) {
        letters[i] = static_cast<Letter>(static_cast<int>(letters[i]) + 1);
        break;
      }
      letters[i] = Letter::Zero;
      if (i == 0) return out;
    }
  }
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t token = 0;
  std::size_t i = 0;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  auto skip_space = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };

  skip_space();
  if (i == text.size()) return Word();
  for (;;) {
    ++token;
    std::size_t start = i;
    while (i < text.size() && text[i] != ',' && !is_space(text[i])) ++i;
    std::string_view tok = text.substr(start, i - start);
    if (tok.empty()) throw ParseError(fmt::format("empty token at token {}", token), token);
    if (tok == "0") {
      letters.push_back(Letter::Zero);
    } else if (tok == "1") {
      letters.push_back(Letter::One);
    } else if (tok == "z") {
      letters.push_back(Letter::Z);
    } else {
      throw ParseError(fmt::format("unknown letter '{}' at token {}", tok, token), token);
    }
    skip_space();
    if (i == text.size()) break;
    if (text[i] == ',') {
      ++i;
      skip_space();
      if (i == text.size()) {
        throw ParseError(fmt::format("empty token at token {}", token + 1), token + 1);
      }
    }
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.weight(); ++i) {
    if (i) out += ',';
    out += letter_symbol(w[i]);
  }
  return out;
}

KIndex::KIndex(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("index must have at least one part");
  for (int k : parts_) {
    if (k < 1) throw DomainError("index parts must be positive");
  }
  if (parts_.back() < 2) throw DomainError("last index part must be >= 2");
}

int KIndex::weight() const noexcept {
  int k = 0;
  for (int p : parts_) k += p;
  return k;
}

std::string format_index(const KIndex& idx) {
  return fmt::format("({})", fmt::join(idx.parts(), ","));
}

Word mzv_word(const KIndex& idx) {
  Word w;
  for (int k : idx.parts()) {
    w += Word{Letter::One};
    w += power(Letter::Zero, static_cast<std::size_t>(k - 1));
  }
  return w;
}

KIndex mzv_index(const Word& w) {
  if (w.empty() || !is_convergent(w) || w.contains(Letter::Z)) {
    throw DomainError("'" + format_word(w) + "' is not an admissible {0,1} word");
  }
  std::vector<int> parts;
  for (Letter a : w.letters()) {
    if (a == Letter::One) {
      parts.push_back(1);
    } else {
      ++parts.back();
    }
  }
  return KIndex(std::move(parts));
}

std::vector<KIndex> admissible_compositions(int total, int parts) {
  std::vector<KIndex> out;
  if (parts < 1 || total < parts + 1) return out;
  std::vector<int> current;
  // Depth-first in lexicographic order; the last part takes the remainder.
  auto recurse = [&](auto&& self, int remaining, int slots) -> void {
    if (slots == 1) {
      if (remaining >= 2) {
        current.push_back(remaining);
        out.emplace_back(current);
        current.pop_back();
      }
      return;
    }
    for (int k = 1; remaining - k >= (slots - 1) + 1; ++k) {
      current.push_back(k);
      self(self, remaining - k, slots - 1);
      current.pop_back();
    }
  };
  recurse(recurse, total, parts);
  return out;
}

}  // namespace hyperlog
