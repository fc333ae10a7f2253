#include "litt/words.hpp"

#include <algorithm>

#include "litt/errors.hpp"

namespace litt {

Word Word::from_code(std::uint64_t code, std::size_t length) {
  Word w;
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back(static_cast<Letter>((code >> (length - 1 - i)) & 1u));
  }
  return w;
}

void Word::push_back(Letter c) {
  if (size_ % 64 == 0) blocks_.push_back(0);
  if (c == Letter::T) blocks_.back() |= std::uint64_t{1} << (size_ % 64);
  ++size_;
}

std::uint64_t Word::code() const {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < size_; ++i) code = (code << 1) | static_cast<std::uint64_t>((*this)[i]);
  return code;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  Word w;
  for (std::size_t i = pos; i < pos + len && i < size_; ++i) w.push_back((*this)[i]);
  return w;
}

bool Word::matches_at(const Word& other, std::size_t pos) const {
  if (pos + other.size() > size_) return false;
  for (std::size_t i = 0; i < other.size(); ++i) {
    if ((*this)[pos + i] != other[i]) return false;
  }
  return true;
}

std::string Word::str() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(to_char((*this)[i]));
  return s;
}

Word operator+(const Word& x, const Word& y) {
  Word w = x;
  for (std::size_t i = 0; i < y.size(); ++i) w.push_back(y[i]);
  return w;
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  std::size_t common = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (x[i] != y[i]) return x[i] <=> y[i];
  }
  return x.size() <=> y.size();
}

Word parse_word(std::string_view text) {
  if (text.empty()) throw ParseError("empty word");
  Word w;
  for (char c : text) {
    switch (c) {
      case 'H':
      case 'h':
        w.push_back(Letter::H);
        break;
      case 'T':
      case 't':
        w.push_back(Letter::T);
        break;
      default:
        throw ParseError("invalid letter '" + std::string(1, c) + "' in word \"" + std::string(text) +
                         "\" (expected H or T)");
    }
  }
  return w;
}

Word reverse(const Word& w) {
  Word r;
  for (std::size_t i = w.size(); i-- > 0;) r.push_back(w[i]);
  return r;
}

Word complement(const Word& w) {
  Word r;
  for (std::size_t i = 0; i < w.size(); ++i) r.push_back(flip(w[i]));
  return r;
}

std::vector<Word> enumerate_words(std::size_t length) {
  if (length < 1 || length > kMaxEnumeratedLength) {
    throw GuardExceeded("word enumeration supports lengths 1.." + std::to_string(kMaxEnumeratedLength) +
                        ", got " + std::to_string(length));
  }
  std::vector<Word> words;
  words.reserve(std::size_t{1} << length);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << length); ++code) {
    words.push_back(Word::from_code(code, length));
  }
  return words;
}

CorrelationSet::CorrelationSet(std::vector<std::size_t> indices, std::size_t length)
    : indices_(std::move(indices)), length_(length) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  for (std::size_t k : indices_) {
    if (k < 1 || k + 1 > length_) {
      throw PreconditionViolated("correlation index " + std::to_string(k) + " outside 1.." +
                                 std::to_string(length_ == 0 ? 0 : length_ - 1));
    }
  }
}

bool CorrelationSet::contains(std::size_t k) const {
  return std::binary_search(indices_.begin(), indices_.end(), k);
}

CorrelationSet correlation_set(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("words " + a.str() + " and " + b.str() + " differ in length");
  }
  const std::size_t l = a.size();
  std::vector<std::size_t> indices;
  for (std::size_t k = 1; k < l; ++k) {
    if (a.matches_at(b.substr(0, k), l - k)) indices.push_back(k);
  }
  return CorrelationSet(std::move(indices), l);
}

CorrelationNumber encode(const CorrelationSet& s) {
  BigInt value = 0;
  for (std::size_t k : s.indices()) value += pow2(static_cast<unsigned>(k));
  return {value};
}

CorrelationNumber correlation_number(const Word& a, const Word& b) { return encode(correlation_set(a, b)); }

std::vector<std::size_t> symmetric_difference(const CorrelationSet& x, const CorrelationSet& y) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(x.indices().begin(), x.indices().end(), y.indices().begin(), y.indices().end(),
                                std::back_inserter(out));
  return out;
}

WordPair make_pair(Word a, Word b) {
  if (a.empty() || b.empty()) throw ParseError("game words must be nonempty");
  if (a.size() != b.size()) {
    throw LengthMismatch("words " + a.str() + " and " + b.str() + " differ in length");
  }
  return WordPair{std::move(a), std::move(b)};
}

bool same_autocorrelation(const WordPair& p) { return correlation_set(p.a, p.a) == correlation_set(p.b, p.b); }

}  // namespace litt

std::size_t std::hash<litt::Word>::operator()(const litt::Word& w) const noexcept {
  std::size_t h = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) h = h * 31 + static_cast<std::size_t>(w[i]) + 1;
  return h;
}
