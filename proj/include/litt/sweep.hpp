// sweep.hpp -- exhaustive conjecture and symmetry sweep over all word pairs
// of one length, parallel and resumable

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "litt/engine.hpp"

namespace litt {

inline constexpr const char* kEngineVersion = "1";
inline constexpr std::size_t kSweepMaxLength = 10;
inline constexpr std::size_t kSweepMaxN = 64;

struct SweepOptions {
  std::size_t length = 0;
  std::size_t n_max = 35;
  unsigned jobs = 1;
  /// Symmetry checks run to min(n_max, symmetry_max_n).
  std::size_t symmetry_max_n = 20;
  std::optional<std::filesystem::path> checkpoint;
  /// Stop after this many newly computed pairs (the report is then
  /// incomplete). Used to exercise resumption.
  std::optional<std::size_t> task_budget;
  Limits limits;
  /// Lift the length and n_max guards.
  bool force = false;
};

struct SweepReport {
  /// One record per pair, sorted by (kind, a, b).
  std::vector<nlohmann::json> records;
  std::size_t conjecture_pairs = 0;
  std::size_t symmetry_pairs = 0;
  std::size_t failures = 0;  // violations or equality anomalies
  std::size_t skipped = 0;
  std::size_t resumed = 0;   // records taken from the checkpoint
  bool complete = false;

  /// JSON lines, one record each.
  std::string jsonl() const;
  std::string summary() const;
};

/// Ordered pairs with [A,A] > [B,B] get a conjecture check; unordered pairs
/// with Cor(A) == Cor(B), A != B, get a symmetry check. Throws
/// GuardExceeded beyond length 10 or n_max 64, PreconditionViolated on a
/// checkpoint written for different parameters.
SweepReport sweep(const SweepOptions& options);

}  // namespace litt
