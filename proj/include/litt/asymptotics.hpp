// asymptotics.hpp -- large-n estimates of the win gap and tie probability

#pragma once

#include <cstddef>
#include <vector>

#include "litt/bigint.hpp"
#include "litt/engine.hpp"
#include "litt/words.hpp"

namespace litt {

/// P(Bob) - P(Alice) ~ ([A,A] - [B,B]) / sqrt(D) / (2 sqrt(pi n)) and
/// P(Tie) ~ 2^l / sqrt(D) / (2 sqrt(pi n)), with
/// D = 2^l + [A,A] + [B,B] - [A,B] - [B,A].
struct AsymptoticEstimate {
  WordPair pair;
  BigInt cor_aa;
  BigInt cor_bb;
  BigInt cor_ab;
  BigInt cor_ba;
  BigInt denominator;  // D
  bool degenerate = false;

  /// Coefficients in units of 1 / sqrt(pi n). Zero when degenerate.
  double gap_coefficient() const;
  double tie_coefficient() const;

  double gap_at(std::size_t n) const;
  double tie_at(std::size_t n) const;
};

/// Throws LengthMismatch, EqualWords, and PreconditionViolated if D < 0.
AsymptoticEstimate asymptotic_estimate(const WordPair& pair);

enum class NumericMode { exact, floating };

struct ComparisonRow {
  std::size_t n = 0;
  double exact_gap = 0;  // P(Bob) - P(Alice)
  double est_gap = 0;
  double ratio_gap = 0;  // NaN when est_gap == 0
  double exact_tie = 0;
  double est_tie = 0;
  double ratio_tie = 0;
};

/// One DP pass up to the largest grid point. Throws DegeneratePair when
/// D == 0 and PreconditionViolated unless the grid is ascending.
std::vector<ComparisonRow> compare_exact_vs_asymptotic(const WordPair& pair, const std::vector<std::size_t>& n_grid,
                                                       NumericMode mode = NumericMode::exact,
                                                       const Limits& limits = {});

}  // namespace litt
