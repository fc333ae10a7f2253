// occurrences.hpp -- occurrence counting, overlap chains, pattern
// decompositions and the A<->B reversal involution on them

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "litt/words.hpp"

namespace litt {

/// End positions (1-based, strictly increasing) of a word inside a host.
struct OccurrenceList {
  Word word;
  std::vector<std::size_t> positions;
};

std::size_t count_occurrences(const Word& pattern, const Word& host);
OccurrenceList occurrence_positions(const Word& pattern, const Word& host);

enum class Label : std::uint8_t { A = 0, B = 1 };

inline Label swap_label(Label x) { return x == Label::A ? Label::B : Label::A; }
inline const Word& word_of(const WordPair& p, Label x) { return x == Label::A ? p.a : p.b; }

/// C_1 ^{m_1} C_2 ^{m_2} ... C_k: copies of A and B where C_{i+1} starts m_i
/// letters before C_i ends. The word pair is supplied by the caller.
struct OverlapChain {
  std::vector<Label> labels;
  std::vector<std::size_t> overlaps;  // labels.size() - 1 entries, each >= 1

  std::size_t size() const { return labels.size(); }
  std::size_t count(Label x) const;
  /// k l - sum of m_i.
  std::size_t realized_length(std::size_t l) const;

  friend bool operator==(const OverlapChain&, const OverlapChain&) = default;
  friend auto operator<=>(const OverlapChain&, const OverlapChain&) = default;
};

using Pattern = std::vector<OverlapChain>;

/// Y = X_0 E_1 X_1 ... E_k X_k with fillers X_i free of occurrences.
struct Decomposition {
  std::vector<Word> fillers;  // chains.size() + 1 entries
  Pattern chains;

  std::vector<std::size_t> filler_lengths() const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws InvalidOverlap when the chain is malformed for the pair.
void validate(const WordPair& pair, const OverlapChain& chain);

Word realize(const WordPair& pair, const OverlapChain& chain);

/// Every occurrence of A and B in Y, in order, as one chain. Throws
/// NotAnOverlap if Y is not a single chain of strictly overlapping
/// occurrences, EqualWords if A == B.
OverlapChain maximal_decomposition(const Word& y, const WordPair& pair);

/// True when the chain lists every occurrence of A and B in its realization.
bool is_maximal(const WordPair& pair, const OverlapChain& chain);

/// Groups occurrences of A and B into maximal runs whose consecutive start
/// positions differ by less than l. Never fails for a valid pair.
Decomposition pattern_decompose(const Word& y, const WordPair& pair);

Word recompose(const WordPair& pair, const Decomposition& d);

/// Reverses a chain (labels and overlaps) and swaps A <-> B. Throws
/// AutocorrelationMismatch when Cor(A) != Cor(B).
OverlapChain phi_chain(const WordPair& pair, const OverlapChain& chain);
Pattern phi_pattern(const WordPair& pair, const Pattern& pattern);

/// Chain text: "A:1:B:2:A" (labels alternating with overlaps).
std::string format_chain(const OverlapChain& chain);
OverlapChain parse_chain(std::string_view text);

/// Pattern text: chains joined by ','. The empty pattern is "".
std::string format_pattern(const Pattern& pattern);
Pattern parse_pattern(std::string_view text);

struct ChainLimits {
  std::size_t max_length = 32;  // realized length
  std::size_t max_chains = 8;   // k
};

/// Visits every valid chain of the pair within the limits, in a fixed
/// depth-first order. With `maximal_only`, only maximal chains are visited
/// (prefixes of maximal chains are maximal, so the search is pruned).
void for_each_chain(const WordPair& pair, const ChainLimits& limits, bool maximal_only,
                    const std::function<void(const OverlapChain&)>& visit);

}  // namespace litt
