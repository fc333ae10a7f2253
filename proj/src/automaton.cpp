#include "litt/automaton.hpp"

#include "litt/errors.hpp"

namespace litt {

MatchAutomaton::MatchAutomaton(const WordPair& pair) : length_(pair.a.size()) {
  if (pair.a.size() != pair.b.size()) {
    throw LengthMismatch("words " + pair.a.str() + " and " + pair.b.str() + " differ in length");
  }
  if (length_ < 1) throw PreconditionViolated("automaton needs nonempty words");
  if (length_ > kMaxAutomatonLength) {
    throw GuardExceeded("automaton supports word length up to " + std::to_string(kMaxAutomatonLength));
  }
  const std::uint64_t code_a = pair.a.code();
  const std::uint64_t code_b = pair.b.code();
  windows_ = std::size_t{1} << (length_ - 1);
  const std::size_t partial = windows_ - 1;  // depths 0 .. l-2
  transitions_.resize(2 * (windows_ + partial));

  const std::uint64_t window_mask = windows_ - 1;
  for (std::size_t s = 0; s < windows_; ++s) {
    for (std::uint64_t c = 0; c < 2; ++c) {
      std::uint64_t window = (static_cast<std::uint64_t>(s) << 1) | c;
      transitions_[2 * s + c] = {static_cast<std::uint32_t>(window & window_mask),
                                 static_cast<std::uint8_t>(window == code_a),
                                 static_cast<std::uint8_t>(window == code_b)};
    }
  }
  // Partial state of depth j with code v has id windows_ + (2^j - 1) + v.
  for (std::size_t depth = 0; depth + 1 < length_; ++depth) {
    for (std::size_t v = 0; v < (std::size_t{1} << depth); ++v) {
      std::size_t id = windows_ + ((std::size_t{1} << depth) - 1) + v;
      for (std::size_t c = 0; c < 2; ++c) {
        std::size_t next_code = (v << 1) | c;
        std::size_t next = depth + 2 == length_ ? next_code : windows_ + ((std::size_t{1} << (depth + 1)) - 1) + next_code;
        transitions_[2 * id + c] = {static_cast<std::uint32_t>(next), 0, 0};
      }
    }
  }
  start_ = length_ == 1 ? 0 : windows_;
}

std::pair<std::size_t, std::size_t> MatchAutomaton::run(const Word& x) const {
  std::size_t state = start_;
  std::size_t na = 0;
  std::size_t nb = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& t = step(state, x[i]);
    na += t.emit_a;
    nb += t.emit_b;
    state = t.next;
  }
  return {na, nb};
}

std::string MatchAutomaton::state_label(std::size_t state) const {
  if (state < windows_) return Word::from_code(state, length_ - 1).str();
  std::size_t rel = state - windows_;
  std::size_t depth = 0;
  while (rel >= (std::size_t{1} << depth)) {
    rel -= std::size_t{1} << depth;
    ++depth;
  }
  return Word::from_code(rel, depth).str();
}

MatchAutomaton build_automaton(const Word& a, const Word& b) { return MatchAutomaton(make_pair(a, b)); }

}  // namespace litt
