// automaton.hpp -- sliding-window automaton emitting occurrences of A and B

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "litt/words.hpp"

namespace litt {

inline constexpr std::size_t kMaxAutomatonLength = 20;

/// States are the last min(l - 1, t) letters read. The 2^(l-1) full windows
/// come first (ids 0 .. 2^(l-1) - 1, oldest letter most significant); the
/// partial windows of the first l - 2 letters follow and never emit.
class MatchAutomaton {
 public:
  struct Transition {
    std::uint32_t next;
    std::uint8_t emit_a;
    std::uint8_t emit_b;
  };

  /// Throws LengthMismatch if |A| != |B| and GuardExceeded for
  /// l > kMaxAutomatonLength.
  explicit MatchAutomaton(const WordPair& pair);

  std::size_t length() const { return length_; }
  std::size_t window_count() const { return windows_; }
  std::size_t state_count() const { return transitions_.size() / 2; }
  std::size_t start() const { return start_; }
  bool is_partial(std::size_t state) const { return state >= windows_; }

  const Transition& step(std::size_t state, Letter c) const {
    return transitions_[2 * state + static_cast<std::size_t>(c)];
  }

  /// (N_A(x), N_B(x)).
  std::pair<std::size_t, std::size_t> run(const Word& x) const;

  /// Window letters of a state, e.g. "HT"; partial states are shorter.
  std::string state_label(std::size_t state) const;

 private:
  std::size_t length_ = 0;
  std::size_t windows_ = 0;
  std::size_t start_ = 0;
  std::vector<Transition> transitions_;
};

MatchAutomaton build_automaton(const Word& a, const Word& b);

}  // namespace litt
