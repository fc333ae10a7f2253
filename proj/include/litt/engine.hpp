// engine.hpp -- exact laws of (N_A, N_B) and N_A - N_B under uniform flips
//
// Counts are templated on the scalar: BigInt (exact, default), Count128
// (exact while n <= 127) or double (probabilities, roundoff O(n eps) per
// cell).

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <type_traits>
#include <utility>
#include <vector>

#include "litt/automaton.hpp"
#include "litt/bigint.hpp"
#include "litt/errors.hpp"
#include "litt/occurrences.hpp"
#include "litt/words.hpp"

namespace litt {

struct Limits {
  std::size_t brute_force_max_n = 22;
  std::size_t enumeration_max_n = 20;               // segmented counts
  std::size_t joint_cell_budget = std::size_t{1} << 22;  // states * (occ + 1)^2
  std::size_t diff_cell_budget = std::size_t{1} << 22;   // states * (2 occ + 1)
  ChainLimits chains;

  static Limits unlimited();
};

template <class Count>
struct BasicJointDistribution {
  std::size_t n = 0;
  WordPair pair;
  std::map<std::pair<std::size_t, std::size_t>, Count> counts;  // nonzero cells only

  Count total() const {
    Count s{};
    for (const auto& [key, c] : counts) s += c;
    return s;
  }
  Count at(std::size_t a, std::size_t b) const {
    auto it = counts.find({a, b});
    return it == counts.end() ? Count{} : it->second;
  }
  friend bool operator==(const BasicJointDistribution&, const BasicJointDistribution&) = default;
};

template <class Count>
struct BasicDiffDistribution {
  std::size_t n = 0;
  WordPair pair;
  std::map<long, Count> counts;  // d = N_A - N_B, nonzero cells only

  Count total() const {
    Count s{};
    for (const auto& [key, c] : counts) s += c;
    return s;
  }
  friend bool operator==(const BasicDiffDistribution&, const BasicDiffDistribution&) = default;
};

using JointDistribution = BasicJointDistribution<BigInt>;
using DiffDistribution = BasicDiffDistribution<BigInt>;

/// Number of flip sequences (or probability mass) where Alice, Bob win or tie.
template <class Count>
struct OutcomeCounts {
  Count alice{};
  Count bob{};
  Count tie{};
};

/// Exact outcome probabilities, each num / 2^n.
struct GameOutcome {
  std::size_t n = 0;
  WordPair pair;
  long handicap = 0;
  Dyadic p_alice;
  Dyadic p_bob;
  Dyadic p_tie;
};

namespace detail {

inline std::size_t max_occurrences(std::size_t n, std::size_t l) { return n + 1 > l ? n + 1 - l : 0; }

template <class Count>
constexpr bool is_probability_v = std::is_floating_point_v<Count>;

template <class Count>
Count unit_mass() {
  return Count(1);
}

// Mass carried along one letter: the whole count, or half the probability.
template <class Count>
void accumulate(Count& target, const Count& source) {
  if constexpr (is_probability_v<Count>) {
    target += 0.5 * source;
  } else {
    target += source;
  }
}

template <class Count>
bool is_zero(const Count& c) {
  if constexpr (std::is_same_v<Count, BigInt>) {
    return sgn(c) == 0;
  } else {
    return c == Count{};
  }
}

}  // namespace detail

/// Forward DP over (state, N_A, N_B), one letter per advance().
template <class Count = BigInt>
class JointStepper {
 public:
  JointStepper(const WordPair& pair, std::size_t n_max, const Limits& limits = {})
      : pair_(pair), automaton_(pair), n_max_(n_max) {
    dim_ = detail::max_occurrences(n_max, pair.length()) + 1;
    const std::size_t cells = automaton_.state_count() * dim_ * dim_;
    if (cells / dim_ / dim_ != automaton_.state_count() || cells > limits.joint_cell_budget) {
      throw GuardExceeded("joint table of " + std::to_string(automaton_.state_count()) + " states x " +
                          std::to_string(dim_) + "^2 cells exceeds the budget of " +
                          std::to_string(limits.joint_cell_budget));
    }
    cur_.assign(cells, Count{});
    next_.assign(cells, Count{});
    cur_[index(automaton_.start(), 0, 0)] = detail::unit_mass<Count>();
  }

  std::size_t n() const { return n_; }
  const WordPair& pair() const { return pair_; }

  void advance() {
    if (n_ >= n_max_) throw PreconditionViolated("joint DP advanced past its n_max");
    const std::size_t reach = detail::max_occurrences(n_, pair_.length());
    const std::size_t next_reach = detail::max_occurrences(n_ + 1, pair_.length());
    for (std::size_t s = 0; s < automaton_.state_count(); ++s) {
      for (std::size_t a = 0; a <= next_reach; ++a) {
        for (std::size_t b = 0; b <= next_reach; ++b) next_[index(s, a, b)] = Count{};
      }
    }
    for (std::size_t s = 0; s < automaton_.state_count(); ++s) {
      for (std::size_t a = 0; a <= reach; ++a) {
        for (std::size_t b = 0; b <= reach; ++b) {
          const Count& c = cur_[index(s, a, b)];
          if (detail::is_zero(c)) continue;
          for (Letter x : {Letter::H, Letter::T}) {
            const auto& t = automaton_.step(s, x);
            detail::accumulate(next_[index(t.next, a + t.emit_a, b + t.emit_b)], c);
          }
        }
      }
    }
    std::swap(cur_, next_);
    ++n_;
  }

  /// Law of (N_A, N_B) after n() letters, summed over automaton states.
  BasicJointDistribution<Count> distribution() const {
    BasicJointDistribution<Count> out{n_, pair_, {}};
    const std::size_t reach = detail::max_occurrences(n_, pair_.length());
    for (std::size_t a = 0; a <= reach; ++a) {
      for (std::size_t b = 0; b <= reach; ++b) {
        Count sum{};
        for (std::size_t s = 0; s < automaton_.state_count(); ++s) sum += cur_[index(s, a, b)];
        if (!detail::is_zero(sum)) out.counts.emplace(std::pair{a, b}, std::move(sum));
      }
    }
    return out;
  }

 private:
  std::size_t index(std::size_t s, std::size_t a, std::size_t b) const { return (s * dim_ + a) * dim_ + b; }

  WordPair pair_;
  MatchAutomaton automaton_;
  std::size_t n_max_;
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<Count> cur_;
  std::vector<Count> next_;
};

/// Forward DP over (state, N_A - N_B). Cheaper than the joint table; the
/// path for win probabilities at large n.
template <class Count = BigInt>
class DiffStepper {
 public:
  DiffStepper(const WordPair& pair, std::size_t n_max, const Limits& limits = {})
      : pair_(pair), automaton_(pair), n_max_(n_max) {
    offset_ = detail::max_occurrences(n_max, pair.length());
    width_ = 2 * offset_ + 1;
    const std::size_t cells = automaton_.state_count() * width_;
    if (cells / width_ != automaton_.state_count() || cells > limits.diff_cell_budget) {
      throw GuardExceeded("difference table of " + std::to_string(automaton_.state_count()) + " states x " +
                          std::to_string(width_) + " cells exceeds the budget of " +
                          std::to_string(limits.diff_cell_budget));
    }
    cur_.assign(cells, Count{});
    next_.assign(cells, Count{});
    cur_[index(automaton_.start(), 0)] = detail::unit_mass<Count>();
  }

  std::size_t n() const { return n_; }
  const WordPair& pair() const { return pair_; }

  void advance() {
    if (n_ >= n_max_) throw PreconditionViolated("difference DP advanced past its n_max");
    const long reach = static_cast<long>(detail::max_occurrences(n_, pair_.length()));
    const long next_reach = static_cast<long>(detail::max_occurrences(n_ + 1, pair_.length()));
    for (std::size_t s = 0; s < automaton_.state_count(); ++s) {
      for (long d = -next_reach; d <= next_reach; ++d) next_[index(s, d)] = Count{};
    }
    for (std::size_t s = 0; s < automaton_.state_count(); ++s) {
      for (long d = -reach; d <= reach; ++d) {
        const Count& c = cur_[index(s, d)];
        if (detail::is_zero(c)) continue;
        for (Letter x : {Letter::H, Letter::T}) {
          const auto& t = automaton_.step(s, x);
          detail::accumulate(next_[index(t.next, d + t.emit_a - t.emit_b)], c);
        }
      }
    }
    std::swap(cur_, next_);
    ++n_;
  }

  /// Law of N_A - N_B after n() letters.
  BasicDiffDistribution<Count> distribution() const {
    BasicDiffDistribution<Count> out{n_, pair_, {}};
    const long reach = static_cast<long>(detail::max_occurrences(n_, pair_.length()));
    for (long d = -reach; d <= reach; ++d) {
      Count sum = marginal(d);
      if (!detail::is_zero(sum)) out.counts.emplace(d, std::move(sum));
    }
    return out;
  }

  /// Alice scores N_A + handicap; Bob scores N_B.
  OutcomeCounts<Count> outcome(long handicap = 0) const {
    OutcomeCounts<Count> out;
    const long reach = static_cast<long>(detail::max_occurrences(n_, pair_.length()));
    // Scores beyond the reachable range fall entirely on one side.
    for (long d = -reach; d <= reach; ++d) {
      Count sum = marginal(d);
      if (d + handicap > 0) {
        out.alice += sum;
      } else if (d + handicap < 0) {
        out.bob += sum;
      } else {
        out.tie += sum;
      }
    }
    return out;
  }

 private:
  std::size_t index(std::size_t s, long d) const { return s * width_ + static_cast<std::size_t>(d + static_cast<long>(offset_)); }

  Count marginal(long d) const {
    Count sum{};
    for (std::size_t s = 0; s < automaton_.state_count(); ++s) sum += cur_[index(s, d)];
    return sum;
  }

  WordPair pair_;
  MatchAutomaton automaton_;
  std::size_t n_max_;
  std::size_t n_ = 0;
  std::size_t offset_ = 0;
  std::size_t width_ = 0;
  std::vector<Count> cur_;
  std::vector<Count> next_;
};

/// Enumerates all 2^n sequences and scans them directly. n <= 22 unless the
/// limits say otherwise.
JointDistribution brute_force_joint(const WordPair& pair, std::size_t n, const Limits& limits = {});

template <class Count = BigInt>
BasicJointDistribution<Count> dp_joint(const WordPair& pair, std::size_t n, const Limits& limits = {}) {
  JointStepper<Count> stepper(pair, n, limits);
  while (stepper.n() < n) stepper.advance();
  return stepper.distribution();
}

template <class Count = BigInt>
BasicDiffDistribution<Count> dp_diff(const WordPair& pair, std::size_t n, const Limits& limits = {}) {
  DiffStepper<Count> stepper(pair, n, limits);
  while (stepper.n() < n) stepper.advance();
  return stepper.distribution();
}

/// Projection d = a - b of a joint table.
template <class Count>
BasicDiffDistribution<Count> project(const BasicJointDistribution<Count>& joint) {
  BasicDiffDistribution<Count> out{joint.n, joint.pair, {}};
  for (const auto& [key, c] : joint.counts) {
    out.counts[static_cast<long>(key.first) - static_cast<long>(key.second)] += c;
  }
  return out;
}

GameOutcome make_outcome(const WordPair& pair, std::size_t n, long handicap, const OutcomeCounts<BigInt>& counts);
GameOutcome make_outcome(const WordPair& pair, std::size_t n, long handicap, const OutcomeCounts<Count128>& counts);

GameOutcome game_outcome(const WordPair& pair, std::size_t n, long handicap = 0, const Limits& limits = {});

/// Outcomes for every n in 0..n_max from one DP pass.
std::vector<GameOutcome> game_outcome_series(const WordPair& pair, std::size_t n_max, long handicap = 0,
                                             const Limits& limits = {});

struct SimulationResult {
  std::size_t n = 0;
  long handicap = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t alice = 0;
  std::uint64_t bob = 0;
  std::uint64_t tie = 0;

  double p_alice() const { return static_cast<double>(alice) / static_cast<double>(trials); }
  double p_bob() const { return static_cast<double>(bob) / static_cast<double>(trials); }
  double p_tie() const { return static_cast<double>(tie) / static_cast<double>(trials); }
  /// Binomial standard error sqrt(p (1 - p) / trials).
  static double standard_error(double p, std::uint64_t trials);
};

inline constexpr std::uint64_t kSimulationBlock = 1u << 16;

/// Monte Carlo estimate. Trials are split into blocks of kSimulationBlock;
/// block i draws letters from std::mt19937_64 seeded with
/// std::seed_seq{seed_lo, seed_hi, i_lo, i_hi}, 64 letters per draw, least
/// significant bit first (0 = H). Results do not depend on `jobs`.
SimulationResult simulate(const WordPair& pair, std::size_t n, std::uint64_t trials, std::uint64_t seed,
                          long handicap = 0, unsigned jobs = 1);

}  // namespace litt
