// verify.hpp -- executable checks of the symmetry theorem, the segmented
// counting lemma and the fixed-length conjecture

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "litt/bigint.hpp"
#include "litt/engine.hpp"
#include "litt/occurrences.hpp"
#include "litt/words.hpp"

namespace litt {

// ---------------------------------------------------------------------------
// Distributional symmetry of (N_A, N_B)

struct SymmetryCounterexample {
  std::size_t n = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  BigInt count_ab;  // #{N_A = a, N_B = b}
  BigInt count_ba;  // #{N_A = b, N_B = a}
};

struct SymmetryReport {
  WordPair pair;
  std::size_t n_max = 0;
  std::optional<SymmetryCounterexample> counterexample;  // first, by n then (a, b)

  bool passed() const { return !counterexample.has_value(); }
};

/// Checks count(a, b) == count(b, a) for every 1 <= n <= n_max. Accepts
/// pairs with different auto-correlations (they usually fail).
SymmetryReport verify_symmetry(const WordPair& pair, std::size_t n_max, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Segmented counts L^M(I)

struct SegmentKey {
  Pattern pattern;
  std::vector<std::size_t> lengths;  // filler lengths (i_0, ..., i_k)

  friend bool operator==(const SegmentKey&, const SegmentKey&) = default;
  friend auto operator<=>(const SegmentKey&, const SegmentKey&) = default;
};

struct SegmentedCount {
  Pattern pattern;
  std::vector<std::size_t> lengths;
  std::uint64_t count = 0;
};

using SegmentTable = std::map<SegmentKey, std::uint64_t>;

/// Buckets all 2^n words of length n by (pattern, filler lengths).
SegmentTable segment_table(const WordPair& pair, std::size_t n, const Limits& limits = {});
std::vector<SegmentedCount> segmented_counts(const WordPair& pair, std::size_t n, const Limits& limits = {});

/// (phi(M), I reversed).
SegmentKey phi_key(const WordPair& pair, const SegmentKey& key);

struct BucketMismatch {
  std::size_t n = 0;
  SegmentKey key;
  std::uint64_t count = 0;
  std::uint64_t image_count = 0;  // count of phi_key(key); for boundary and
                                  // factorization checks, the expected value
  std::string check;              // "bucket", "boundary_aa", "boundary_a", "factorization"
};

struct Lemma1Report {
  WordPair pair;
  std::size_t n_max = 0;
  std::size_t buckets_checked = 0;
  std::size_t boundary_checked = 0;
  std::size_t factorizations_checked = 0;
  std::vector<BucketMismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// For every n <= n_max: L^M(I) == L^phi(M)(I'), the boundary identities
/// L^(A,A)(0,i,0) == L^(B,B)(0,i,0) and L^(A)(i,0) == L^(B)(0,i) (both
/// orientations), and the product factorization of every bucket with k >= 1.
/// Throws AutocorrelationMismatch unless Cor(A) == Cor(B).
Lemma1Report verify_lemma1(const WordPair& pair, std::size_t n_max, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Fixed-length conjecture

/// 2 l - max(Cor(A) xor Cor(B)). Throws EmptySymmetricDifference.
std::size_t compute_n0(const WordPair& pair);

struct ConjectureCell {
  std::size_t n = 0;
  Dyadic p_alice;
  Dyadic p_bob;
  Dyadic p_tie;
};

struct ConjectureViolation {
  std::size_t n = 0;
  std::string check;  // "alice_lt_bob", "bob_lt_half", "half_lt_alice_plus_tie", "equivalence"
};

struct ConjectureReport {
  WordPair pair;
  std::size_t n0 = 0;
  std::size_t n_max = 0;
  std::vector<ConjectureCell> cells;  // n = 0 .. n_max
  std::vector<ConjectureViolation> violations;
  /// n < n0 where P(Alice) != P(Bob). Reported apart from the inequalities.
  std::vector<std::size_t> equality_anomalies;

  /// Smallest slack of each inequality over the checked range.
  std::optional<Dyadic> min_alice_lt_bob;  // P(Bob) - P(Alice), n >= n0
  std::optional<Dyadic> min_bob_lt_half;   // 1/2 - P(Bob)
  std::optional<Dyadic> min_half_lt_alice_plus_tie;

  bool passed() const { return violations.empty(); }
  bool clean() const { return violations.empty() && equality_anomalies.empty(); }
};

/// Requires [A,A] > [B,B] (Alice holds A); throws PreconditionViolated.
ConjectureReport check_conjecture(const WordPair& pair, std::size_t n_max, const Limits& limits = {});

}  // namespace litt
