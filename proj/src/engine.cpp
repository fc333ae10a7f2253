#include "litt/engine.hpp"

#include <limits>

namespace litt {

Limits Limits::unlimited() {
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  Limits l;
  l.brute_force_max_n = 62;
  l.enumeration_max_n = 62;
  l.joint_cell_budget = inf;
  l.diff_cell_budget = inf;
  l.chains = {inf, inf};
  return l;
}

JointDistribution brute_force_joint(const WordPair& pair, std::size_t n, const Limits& limits) {
  if (n > limits.brute_force_max_n) {
    throw GuardExceeded("brute force enumerates 2^n sequences; n = " + std::to_string(n) + " exceeds " +
                        std::to_string(limits.brute_force_max_n));
  }
  JointDistribution out{n, pair, {}};
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    Word x = Word::from_code(code, n);
    out.counts[{count_occurrences(pair.a, x), count_occurrences(pair.b, x)}] += 1;
  }
  return out;
}

GameOutcome make_outcome(const WordPair& pair, std::size_t n, long handicap, const OutcomeCounts<BigInt>& counts) {
  const auto e = static_cast<unsigned>(n);
  return GameOutcome{n, pair, handicap, Dyadic(counts.alice, e), Dyadic(counts.bob, e), Dyadic(counts.tie, e)};
}

GameOutcome make_outcome(const WordPair& pair, std::size_t n, long handicap, const OutcomeCounts<Count128>& counts) {
  return make_outcome(pair, n, handicap,
                      OutcomeCounts<BigInt>{to_bigint(counts.alice), to_bigint(counts.bob), to_bigint(counts.tie)});
}

GameOutcome game_outcome(const WordPair& pair, std::size_t n, long handicap, const Limits& limits) {
  DiffStepper<BigInt> stepper(pair, n, limits);
  while (stepper.n() < n) stepper.advance();
  return make_outcome(pair, n, handicap, stepper.outcome(handicap));
}

std::vector<GameOutcome> game_outcome_series(const WordPair& pair, std::size_t n_max, long handicap,
                                             const Limits& limits) {
  DiffStepper<BigInt> stepper(pair, n_max, limits);
  std::vector<GameOutcome> out;
  out.reserve(n_max + 1);
  while (true) {
    out.push_back(make_outcome(pair, stepper.n(), handicap, stepper.outcome(handicap)));
    if (stepper.n() == n_max) break;
    stepper.advance();
  }
  return out;
}

}  // namespace litt
