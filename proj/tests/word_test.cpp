#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hyperlog/errors.hpp"
#include "hyperlog/word.hpp"

using namespace hyperlog;

namespace {
constexpr Letter L0 = Letter::Zero, L1 = Letter::One, LZ = Letter::Z;

// C(n, k) by Pascal's triangle.
long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<long> row(n + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j > 0; --j) row[j] += row[j - 1];
  }
  return row[k];
}
}  // namespace

TEST_CASE("convergence predicate") {
  CHECK(is_convergent(Word{}));
  CHECK(is_convergent(Word{LZ}));
  CHECK_FALSE(is_convergent(Word{L1}));
  CHECK_FALSE(is_convergent(Word{L0}));
  CHECK(is_convergent(Word{L1, L0}));
  CHECK(is_convergent(Word{L1, LZ, L0}));
  CHECK_FALSE(is_convergent(Word{L0, L1}));
  CHECK(is_convergent(Word{LZ, L1, LZ}));
  CHECK_FALSE(is_convergent(Word{LZ, L0, L1}));
}

TEST_CASE("enumerate convergent words") {
  CHECK(enumerate_convergent(0) == std::vector<Word>{Word{}});
  CHECK(enumerate_convergent(1) == std::vector<Word>{Word{LZ}});
  CHECK(enumerate_convergent(2) ==
        std::vector<Word>{Word{L1, L0}, Word{L1, LZ}, Word{LZ, L0}, Word{LZ, LZ}});

  std::size_t expected = 4;
  for (std::size_t n = 2; n <= 9; ++n, expected *= 3) {
    auto words = enumerate_convergent(n);
    CHECK(words.size() == expected);
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::set<Word>(words.begin(), words.end()).size() == words.size());
    for (const Word& w : words) {
      CHECK(w.weight() == n);
      CHECK(is_convergent(w));
    }
  }
  CHECK_THROWS_AS(enumerate_convergent(13), DomainError);
  CHECK_THROWS_AS(enumerate_convergent(5, 4), DomainError);
}

TEST_CASE("parse and format words") {
  CHECK(parse_word("z,1,0") == Word{LZ, L1, L0});
  CHECK(parse_word("1 0") == Word{L1, L0});
  CHECK(parse_word("  z ,  1\t0 ") == Word{LZ, L1, L0});
  CHECK(parse_word("").empty());
  CHECK(format_word(parse_word("1   z,0")) == "1,z,0");
  CHECK(format_word(Word{}) == "");

  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_word(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  CHECK(position_of("x,0") == 1);
  CHECK(position_of("1,x") == 2);
  CHECK(position_of("1,,0") == 2);
  CHECK(position_of("1,0,") == 3);
  CHECK(position_of(",1") == 1);
  CHECK(position_of("10") == 1);
  CHECK(position_of("1 z e1") == 3);
}

TEST_CASE("words: editing helpers") {
  Word w{LZ, L1, L0};
  CHECK(w.without(0) == Word{L1, L0});
  CHECK(w.without(2) == Word{LZ, L1});
  CHECK(w.reversed() == Word{L0, L1, LZ});
  CHECK(w + Word{LZ} == Word{LZ, L1, L0, LZ});
  CHECK(power(L0, 3) == Word{L0, L0, L0});
  CHECK(w.count(L1) == 1);
  CHECK(Word{L0} < Word{L0, L0});
  CHECK(Word{L1} < Word{LZ});
}

TEST_CASE("MZV words") {
  CHECK(mzv_word(KIndex{2}) == Word{L1, L0});
  CHECK(mzv_word(KIndex{1, 2}) == Word{L1, L1, L0});
  CHECK(mzv_word(KIndex{3}) == Word{L1, L0, L0});
  CHECK(mzv_word(KIndex{2, 1, 3}) == parse_word("1,0,1,1,0,0"));
  CHECK(mzv_index(parse_word("1,0,1,1,0,0")) == KIndex{2, 1, 3});
  CHECK_THROWS_AS(KIndex({2, 1}), DomainError);
  CHECK_THROWS_AS(KIndex({0, 2}), DomainError);
  CHECK_THROWS_AS(KIndex(std::vector<int>{}), DomainError);
  CHECK_THROWS_AS(mzv_index(parse_word("1,z,0")), DomainError);
  CHECK(KIndex({1, 2, 3}).weight() == 6);
  CHECK(KIndex({1, 2, 3}).depth() == 3);

  // Every convergent {0,1} word round-trips through its index.
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const Word& w : enumerate_convergent(n)) {
      if (w.contains(LZ)) continue;
      CHECK(mzv_word(mzv_index(w)) == w);
    }
  }
}

TEST_CASE("admissible compositions match brute-force enumeration") {
  for (int k = 2; k <= 10; ++k) {
    for (int r = 1; r <= k; ++r) {
      // Brute force: every r-tuple with parts in [1, k - r + 1], the largest
      // a part can be when the others are 1.
      const int top = k - r + 1;
      std::set<std::vector<int>> brute;
      std::vector<int> parts(r, 1);
      for (;;) {
        int total = 0;
        for (int p : parts) total += p;
        if (total == k && parts.back() >= 2) brute.insert(parts);
        int i = r - 1;
        while (i >= 0 && parts[i] == top) parts[i--] = 1;
        if (i < 0) break;
        ++parts[i];
      }
      auto comps = admissible_compositions(k, r);
      CHECK(static_cast<long>(comps.size()) == binomial(k - 2, r - 1));
      CHECK(comps.size() == brute.size());
      for (const KIndex& idx : comps) {
        CHECK(brute.count(std::vector<int>(idx.parts().begin(), idx.parts().end())) == 1);
      }
    }
  }
}
