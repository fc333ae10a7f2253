#include "litt/occurrences.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "litt/errors.hpp"

namespace litt {

std::size_t count_occurrences(const Word& pattern, const Word& host) {
  std::size_t n = 0;
  if (pattern.empty() || host.size() < pattern.size()) return 0;
  for (std::size_t start = 0; start + pattern.size() <= host.size(); ++start) {
    if (host.matches_at(pattern, start)) ++n;
  }
  return n;
}

OccurrenceList occurrence_positions(const Word& pattern, const Word& host) {
  OccurrenceList out{pattern, {}};
  if (pattern.empty() || host.size() < pattern.size()) return out;
  for (std::size_t start = 0; start + pattern.size() <= host.size(); ++start) {
    if (host.matches_at(pattern, start)) out.positions.push_back(start + pattern.size());
  }
  return out;
}

std::size_t OverlapChain::count(Label x) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), x));
}

std::size_t OverlapChain::realized_length(std::size_t l) const {
  return labels.size() * l - std::accumulate(overlaps.begin(), overlaps.end(), std::size_t{0});
}

std::vector<std::size_t> Decomposition::filler_lengths() const {
  std::vector<std::size_t> out;
  out.reserve(fillers.size());
  for (const auto& x : fillers) out.push_back(x.size());
  return out;
}

void validate(const WordPair& pair, const OverlapChain& chain) {
  if (chain.labels.empty()) throw InvalidOverlap("a chain needs at least one word");
  if (chain.overlaps.size() + 1 != chain.labels.size()) {
    throw InvalidOverlap("a chain of " + std::to_string(chain.labels.size()) + " words needs " +
                         std::to_string(chain.labels.size() - 1) + " overlaps");
  }
  for (std::size_t i = 0; i < chain.overlaps.size(); ++i) {
    const std::size_t m = chain.overlaps[i];
    const Word& left = word_of(pair, chain.labels[i]);
    const Word& right = word_of(pair, chain.labels[i + 1]);
    if (m == 0 || !correlation_set(left, right).contains(m)) {
      throw InvalidOverlap("overlap " + std::to_string(m) + " is not in Cor(" + left.str() + ", " + right.str() +
                           ")");
    }
  }
}

Word realize(const WordPair& pair, const OverlapChain& chain) {
  validate(pair, chain);
  Word y = word_of(pair, chain.labels.front());
  const std::size_t l = pair.length();
  for (std::size_t i = 1; i < chain.labels.size(); ++i) {
    const Word& next = word_of(pair, chain.labels[i]);
    for (std::size_t j = chain.overlaps[i - 1]; j < l; ++j) y.push_back(next[j]);
  }
  return y;
}

namespace {

struct Hit {
  std::size_t start;
  Label label;
};

void require_distinct(const WordPair& pair) {
  if (pair.a == pair.b) throw EqualWords("decomposition needs A != B, got " + pair.a.str() + " twice");
}

// All occurrences of A and B by start position. Distinct words of equal
// length never share a start.
std::vector<Hit> scan(const Word& y, const WordPair& pair) {
  std::vector<Hit> hits;
  const std::size_t l = pair.length();
  for (std::size_t s = 0; s + l <= y.size(); ++s) {
    if (y.matches_at(pair.a, s)) {
      hits.push_back({s, Label::A});
    } else if (y.matches_at(pair.b, s)) {
      hits.push_back({s, Label::B});
    }
  }
  return hits;
}

OverlapChain chain_from_hits(const std::vector<Hit>& hits, std::size_t first, std::size_t last, std::size_t l) {
  OverlapChain chain;
  for (std::size_t i = first; i < last; ++i) {
    chain.labels.push_back(hits[i].label);
    if (i > first) chain.overlaps.push_back(l - (hits[i].start - hits[i - 1].start));
  }
  return chain;
}

}  // namespace

OverlapChain maximal_decomposition(const Word& y, const WordPair& pair) {
  require_distinct(pair);
  const std::size_t l = pair.length();
  auto hits = scan(y, pair);
  if (hits.empty()) throw NotAnOverlap(y.str() + " contains neither " + pair.a.str() + " nor " + pair.b.str());
  if (hits.front().start != 0 || hits.back().start + l != y.size()) {
    throw NotAnOverlap(y.str() + " does not begin and end with an occurrence");
  }
  for (std::size_t i = 1; i < hits.size(); ++i) {
    if (hits[i].start - hits[i - 1].start >= l) {
      throw NotAnOverlap("occurrences in " + y.str() + " ending at " + std::to_string(hits[i - 1].start + l) +
                         " and starting at " + std::to_string(hits[i].start + 1) + " do not overlap");
    }
  }
  return chain_from_hits(hits, 0, hits.size(), l);
}

bool is_maximal(const WordPair& pair, const OverlapChain& chain) {
  Word y = realize(pair, chain);
  try {
    return maximal_decomposition(y, pair) == chain;
  } catch (const NotAnOverlap&) {
    return false;
  }
}

Decomposition pattern_decompose(const Word& y, const WordPair& pair) {
  require_distinct(pair);
  const std::size_t l = pair.length();
  auto hits = scan(y, pair);
  Decomposition d;
  std::size_t cursor = 0;  // first letter not yet assigned
  std::size_t run = 0;
  while (run < hits.size()) {
    std::size_t end = run + 1;
    while (end < hits.size() && hits[end].start - hits[end - 1].start < l) ++end;
    d.fillers.push_back(y.substr(cursor, hits[run].start - cursor));
    d.chains.push_back(chain_from_hits(hits, run, end, l));
    cursor = hits[end - 1].start + l;
    run = end;
  }
  d.fillers.push_back(y.substr(cursor, y.size() - cursor));
  return d;
}

Word recompose(const WordPair& pair, const Decomposition& d) {
  if (d.fillers.size() != d.chains.size() + 1) throw PreconditionViolated("decomposition needs k + 1 fillers");
  Word y = d.fillers.front();
  for (std::size_t i = 0; i < d.chains.size(); ++i) {
    y = y + realize(pair, d.chains[i]);
    y = y + d.fillers[i + 1];
  }
  return y;
}

OverlapChain phi_chain(const WordPair& pair, const OverlapChain& chain) {
  if (!same_autocorrelation(pair)) {
    throw AutocorrelationMismatch("Cor(" + pair.a.str() + ") != Cor(" + pair.b.str() + ")");
  }
  validate(pair, chain);
  OverlapChain out;
  out.labels.reserve(chain.labels.size());
  for (auto it = chain.labels.rbegin(); it != chain.labels.rend(); ++it) out.labels.push_back(swap_label(*it));
  out.overlaps.assign(chain.overlaps.rbegin(), chain.overlaps.rend());
  return out;
}

Pattern phi_pattern(const WordPair& pair, const Pattern& pattern) {
  if (!same_autocorrelation(pair)) {
    throw AutocorrelationMismatch("Cor(" + pair.a.str() + ") != Cor(" + pair.b.str() + ")");
  }
  Pattern out;
  out.reserve(pattern.size());
  for (auto it = pattern.rbegin(); it != pattern.rend(); ++it) out.push_back(phi_chain(pair, *it));
  return out;
}

std::string format_chain(const OverlapChain& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.labels.size(); ++i) {
    if (i > 0) s += ':' + std::to_string(chain.overlaps[i - 1]) + ':';
    s += chain.labels[i] == Label::A ? 'A' : 'B';
  }
  return s;
}

OverlapChain parse_chain(std::string_view text) {
  OverlapChain chain;
  std::size_t field = 0;
  std::size_t pos = 0;
  while (true) {
    std::size_t colon = text.find(':', pos);
    std::string_view token = text.substr(pos, colon == std::string_view::npos ? text.npos : colon - pos);
    if (field % 2 == 0) {
      if (token == "A" || token == "a") {
        chain.labels.push_back(Label::A);
      } else if (token == "B" || token == "b") {
        chain.labels.push_back(Label::B);
      } else {
        throw ParseError("expected chain label A or B, got \"" + std::string(token) + "\" in \"" +
                         std::string(text) + "\"");
      }
    } else {
      std::size_t m = 0;
      auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), m);
      if (ec != std::errc() || end != token.data() + token.size() || token.empty()) {
        throw ParseError("expected overlap integer, got \"" + std::string(token) + "\" in \"" +
                         std::string(text) + "\"");
      }
      chain.overlaps.push_back(m);
    }
    ++field;
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (field % 2 == 0) throw ParseError("chain text must end with a label: \"" + std::string(text) + "\"");
  return chain;
}

std::string format_pattern(const Pattern& pattern) {
  std::string s;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i > 0) s += ',';
    s += format_chain(pattern[i]);
  }
  return s;
}

Pattern parse_pattern(std::string_view text) {
  Pattern p;
  if (text.empty()) return p;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    p.push_back(parse_chain(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return p;
}

namespace {

struct ChainSearch {
  const WordPair& pair;
  const ChainLimits& limits;
  bool maximal_only;
  const std::function<void(const OverlapChain&)>& visit;
  // Cor sets indexed by (left label, right label).
  CorrelationSet cor[2][2];

  void extend(OverlapChain& chain, std::size_t length) {
    if (maximal_only && !is_maximal(pair, chain)) return;
    visit(chain);
    if (chain.labels.size() >= limits.max_chains) return;
    const std::size_t l = pair.length();
    const auto last = static_cast<std::size_t>(chain.labels.back());
    for (Label next : {Label::A, Label::B}) {
      if (next == Label::B && pair.a == pair.b) continue;
      for (std::size_t m : cor[last][static_cast<std::size_t>(next)].indices()) {
        if (length + l - m > limits.max_length) continue;
        chain.labels.push_back(next);
        chain.overlaps.push_back(m);
        extend(chain, length + l - m);
        chain.labels.pop_back();
        chain.overlaps.pop_back();
      }
    }
  }
};

}  // namespace

void for_each_chain(const WordPair& pair, const ChainLimits& limits, bool maximal_only,
                    const std::function<void(const OverlapChain&)>& visit) {
  if (maximal_only) require_distinct(pair);
  ChainSearch search{pair, limits, maximal_only, visit, {}};
  for (Label x : {Label::A, Label::B}) {
    for (Label y : {Label::A, Label::B}) {
      search.cor[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          correlation_set(word_of(pair, x), word_of(pair, y));
    }
  }
  const std::size_t l = pair.length();
  if (l > limits.max_length || limits.max_chains == 0) return;
  for (Label first : {Label::A, Label::B}) {
    if (first == Label::B && pair.a == pair.b) continue;
    OverlapChain chain{{first}, {}};
    search.extend(chain, l);
  }
}

}  // namespace litt
