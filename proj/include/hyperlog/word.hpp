#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlog {

// Marked point labelling the 1-form dt/(t - a). The enumerator order is the
// canonical letter order used for sorting words.
enum class Letter : std::uint8_t { Zero, One, Z };

inline constexpr Letter kAllLetters[] = {Letter::Zero, Letter::One, Letter::Z};

char letter_symbol(Letter a) noexcept;

// A monomial e_{a_1} ... e_{a_n} of the free algebra on {e_0, e_1, e_z}.
// The empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t weight() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  bool contains(Letter a) const noexcept;
  std::size_t count(Letter a) const noexcept;

  // Copy of this word with the letter at `index` removed.
  Word without(std::size_t index) const;
  Word reversed() const;

  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  // Lexicographic with Zero < One < Z; a proper prefix sorts first.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// e_a repeated n times.
Word power(Letter a, std::size_t n);

// Membership of a word in the span of convergent words: empty, or first
// letter not 0 and last letter not 1.
bool is_convergent(const Word& w) noexcept;

inline constexpr std::size_t kDefaultEnumerationLimit = 12;

// All convergent words of the given weight in canonical order. Throws
// DomainError when weight exceeds `limit`.
std::vector<Word> enumerate_convergent(std::size_t weight,
                                       std::size_t limit = kDefaultEnumerationLimit);

// Letters `0`, `1`, `z` separated by commas and/or whitespace. Throws
// ParseError carrying the 1-based index of the offending token.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

// Admissible index (k_1, ..., k_r): every part >= 1 and k_r >= 2.
class KIndex {
 public:
  explicit KIndex(std::vector<int> parts);
  KIndex(std::initializer_list<int> parts) : KIndex(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  int weight() const noexcept;
  int depth() const noexcept { return static_cast<int>(parts_.size()); }

  friend auto operator<=>(const KIndex&, const KIndex&) = default;
  friend bool operator==(const KIndex&, const KIndex&) = default;

 private:
  std::vector<int> parts_;
};

std::string format_index(const KIndex& idx);

// e_1 e_0^{k_1-1} ... e_1 e_0^{k_r-1}; L of it is (-1)^r zeta(k_1, ..., k_r).
Word mzv_word(const KIndex& idx);

// Inverse of mzv_word for convergent words over {0, 1}. Throws DomainError
// for anything else, including the empty word.
KIndex mzv_index(const Word& w);

// Compositions of `total` into `parts` positive parts with the last part
// >= 2, in lexicographic order of the part sequence.
std::vector<KIndex> admissible_compositions(int total, int parts);

}  // namespace hyperlog
