// words.hpp -- binary words over {H, T} and their correlation algebra

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "litt/bigint.hpp"

namespace litt {

enum class Letter : std::uint8_t { H = 0, T = 1 };

inline Letter flip(Letter c) { return c == Letter::H ? Letter::T : Letter::H; }
inline char to_char(Letter c) { return c == Letter::H ? 'H' : 'T'; }

/// Word over {H, T}, bit-packed: bit i of the storage holds letter i + 1
/// (0 for H, 1 for T). The empty word only appears as a filler segment.
class Word {
 public:
  Word() = default;

  /// Word of `length` letters whose first letter is the most significant of
  /// the low `length` bits of `code`. Requires length <= 64.
  static Word from_code(std::uint64_t code, std::size_t length);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Letter at 0-based position i.
  Letter operator[](std::size_t i) const {
    return static_cast<Letter>((blocks_[i / 64] >> (i % 64)) & 1u);
  }

  void push_back(Letter c);

  /// Inverse of from_code. Requires size() <= 64.
  std::uint64_t code() const;

  /// Letters [pos, pos + len).
  Word substr(std::size_t pos, std::size_t len) const;

  /// True when the `len` letters starting at `pos` spell `other`.
  bool matches_at(const Word& other, std::size_t pos) const;

  std::string str() const;

  friend Word operator+(const Word& x, const Word& y);
  friend bool operator==(const Word& x, const Word& y) = default;
  /// Lexicographic with H < T; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y);

 private:
  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

/// Parses an H/T string, case-insensitive. Throws ParseError on an empty
/// string or any other character.
Word parse_word(std::string_view text);

Word reverse(const Word& w);
Word complement(const Word& w);

/// All 2^length words in lexicographic order (H < T). 1 <= length <= 16.
std::vector<Word> enumerate_words(std::size_t length);

inline constexpr std::size_t kMaxEnumeratedLength = 16;

/// Cor(A, B): the k in {1, ..., l-1} whose length-k suffix of A equals the
/// length-k prefix of B.
class CorrelationSet {
 public:
  CorrelationSet() = default;
  CorrelationSet(std::vector<std::size_t> indices, std::size_t length);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t length() const { return length_; }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t k) const;

  friend bool operator==(const CorrelationSet&, const CorrelationSet&) = default;

 private:
  std::vector<std::size_t> indices_;  // strictly increasing
  std::size_t length_ = 0;
};

/// [A, B] = sum of 2^k over Cor(A, B). Always even, at most 2^l - 2.
struct CorrelationNumber {
  BigInt value;
  friend bool operator==(const CorrelationNumber&, const CorrelationNumber&) = default;
  friend auto operator<=>(const CorrelationNumber& x, const CorrelationNumber& y) {
    return cmp(x.value, y.value) <=> 0;
  }
};

CorrelationSet correlation_set(const Word& a, const Word& b);
CorrelationNumber correlation_number(const Word& a, const Word& b);
CorrelationNumber encode(const CorrelationSet& s);

/// Elements in exactly one of the two sets, increasing.
std::vector<std::size_t> symmetric_difference(const CorrelationSet& x, const CorrelationSet& y);

/// The two words of a game; Alice holds `a`, Bob holds `b`.
struct WordPair {
  Word a;
  Word b;

  std::size_t length() const { return a.size(); }
  friend bool operator==(const WordPair&, const WordPair&) = default;
};

/// Throws LengthMismatch unless |A| == |B|, and ParseError on empty words.
WordPair make_pair(Word a, Word b);

bool same_autocorrelation(const WordPair& p);

}  // namespace litt

template <>
struct std::hash<litt::Word> {
  std::size_t operator()(const litt::Word& w) const noexcept;
};
