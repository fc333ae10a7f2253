#include "litt/verify.hpp"

#include <algorithm>

#include "litt/errors.hpp"

namespace litt {

namespace {

// Count128 is exact while every count stays below 2^127.
constexpr std::size_t kCount128MaxN = 126;

template <class Count>
SymmetryReport symmetry_impl(const WordPair& pair, std::size_t n_max, const Limits& limits) {
  SymmetryReport report{pair, n_max, std::nullopt};
  JointStepper<Count> stepper(pair, n_max, limits);
  while (stepper.n() < n_max) {
    stepper.advance();
    const auto dist = stepper.distribution();
    for (const auto& [key, c] : dist.counts) {
      const auto [a, b] = key;
      if (a == b) continue;
      Count mirrored = dist.at(b, a);
      if (mirrored != c) {
        report.counterexample = SymmetryCounterexample{stepper.n(), a, b, to_bigint(c), to_bigint(mirrored)};
        return report;
      }
    }
  }
  return report;
}

void require_same_autocorrelation(const WordPair& pair) {
  if (!same_autocorrelation(pair)) {
    throw AutocorrelationMismatch("Cor(" + pair.a.str() + ") != Cor(" + pair.b.str() + ")");
  }
}

}  // namespace

SymmetryReport verify_symmetry(const WordPair& pair, std::size_t n_max, const Limits& limits) {
  if (n_max <= kCount128MaxN) return symmetry_impl<Count128>(pair, n_max, limits);
  return symmetry_impl<BigInt>(pair, n_max, limits);
}

SegmentTable segment_table(const WordPair& pair, std::size_t n, const Limits& limits) {
  if (n > limits.enumeration_max_n) {
    throw GuardExceeded("segmented counts enumerate 2^n words; n = " + std::to_string(n) + " exceeds " +
                        std::to_string(limits.enumeration_max_n));
  }
  if (pair.a == pair.b) throw EqualWords("segmented counts need A != B");
  SegmentTable table;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    Decomposition d = pattern_decompose(Word::from_code(code, n), pair);
    ++table[SegmentKey{std::move(d.chains), d.filler_lengths()}];
  }
  return table;
}

std::vector<SegmentedCount> segmented_counts(const WordPair& pair, std::size_t n, const Limits& limits) {
  std::vector<SegmentedCount> out;
  for (auto& [key, count] : segment_table(pair, n, limits)) out.push_back({key.pattern, key.lengths, count});
  return out;
}

SegmentKey phi_key(const WordPair& pair, const SegmentKey& key) {
  return SegmentKey{phi_pattern(pair, key.pattern), {key.lengths.rbegin(), key.lengths.rend()}};
}

namespace {

std::uint64_t lookup(const std::vector<SegmentTable>& tables, std::size_t n, const SegmentKey& key) {
  if (n >= tables.size()) return 0;
  auto it = tables[n].find(key);
  return it == tables[n].end() ? 0 : it->second;
}

SegmentKey single(Label x, std::size_t left, std::size_t right) {
  return SegmentKey{{OverlapChain{{x}, {}}}, {left, right}};
}

}  // namespace

Lemma1Report verify_lemma1(const WordPair& pair, std::size_t n_max, const Limits& limits) {
  require_same_autocorrelation(pair);
  Lemma1Report report;
  report.pair = pair;
  report.n_max = n_max;
  const std::size_t l = pair.length();

  std::vector<SegmentTable> tables;
  for (std::size_t n = 0; n <= n_max; ++n) tables.push_back(segment_table(pair, n, limits));

  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& [key, count] : tables[n]) {
      ++report.buckets_checked;
      const std::uint64_t image = lookup(tables, n, phi_key(pair, key));
      if (image != count) report.mismatches.push_back({n, key, count, image, "bucket"});

      const std::size_t k = key.pattern.size();
      if (k == 0) continue;
      // L^M(I) = L^{E_1}(i_0, 0) * prod L^{(E_j, E_j+1)}(0, i_j, 0) * L^{E_k}(0, i_k)
      ++report.factorizations_checked;
      const auto& chains = key.pattern;
      const auto& lens = key.lengths;
      auto len = [&](const OverlapChain& e) { return e.realized_length(l); };
      BigInt product = lookup(tables, lens[0] + len(chains[0]), SegmentKey{{chains[0]}, {lens[0], 0}});
      for (std::size_t j = 0; j + 1 < k; ++j) {
        const std::size_t m = len(chains[j]) + lens[j + 1] + len(chains[j + 1]);
        product *= lookup(tables, m, SegmentKey{{chains[j], chains[j + 1]}, {0, lens[j + 1], 0}});
      }
      product *= lookup(tables, len(chains[k - 1]) + lens[k], SegmentKey{{chains[k - 1]}, {0, lens[k]}});
      if (product != count) {
        report.mismatches.push_back({n, key, count, product.get_ui(), "factorization"});
      }
    }
  }

  // Boundary identities, read off the tables at the lengths they live on.
  auto check = [&](std::size_t n, const SegmentKey& lhs, const SegmentKey& rhs, const char* name) {
    ++report.boundary_checked;
    const std::uint64_t x = lookup(tables, n, lhs);
    const std::uint64_t y = lookup(tables, n, rhs);
    if (x != y) report.mismatches.push_back({n, lhs, x, y, name});
  };
  for (std::size_t i = 0; 2 * l + i <= n_max; ++i) {
    const Pattern aa{OverlapChain{{Label::A}, {}}, OverlapChain{{Label::A}, {}}};
    const Pattern bb{OverlapChain{{Label::B}, {}}, OverlapChain{{Label::B}, {}}};
    check(2 * l + i, SegmentKey{aa, {0, i, 0}}, SegmentKey{bb, {0, i, 0}}, "boundary_aa");
  }
  for (std::size_t i = 0; l + i <= n_max; ++i) {
    check(l + i, single(Label::A, i, 0), single(Label::B, 0, i), "boundary_a");
    check(l + i, single(Label::B, i, 0), single(Label::A, 0, i), "boundary_a");
  }
  return report;
}

std::size_t compute_n0(const WordPair& pair) {
  auto delta = symmetric_difference(correlation_set(pair.a, pair.a), correlation_set(pair.b, pair.b));
  if (delta.empty()) {
    throw EmptySymmetricDifference("Cor(" + pair.a.str() + ") == Cor(" + pair.b.str() + "); n0 is undefined");
  }
  return 2 * pair.length() - delta.back();
}

namespace {

template <class Count>
void conjecture_impl(ConjectureReport& report, const Limits& limits) {
  DiffStepper<Count> stepper(report.pair, report.n_max, limits);
  const Dyadic half = Dyadic::half();
  auto keep_min = [](std::optional<Dyadic>& slot, const Dyadic& v) {
    if (!slot || v < *slot) slot = v.reduced();
  };
  while (true) {
    const std::size_t n = stepper.n();
    const GameOutcome o = make_outcome(report.pair, n, 0, stepper.outcome(0));
    report.cells.push_back({n, o.p_alice, o.p_bob, o.p_tie});

    if (n < report.n0) {
      if (o.p_alice != o.p_bob) report.equality_anomalies.push_back(n);
    } else {
      if (!(o.p_alice < o.p_bob)) report.violations.push_back({n, "alice_lt_bob"});
      keep_min(report.min_alice_lt_bob, o.p_bob - o.p_alice);
    }
    const bool second = o.p_bob < half;
    const bool third = half < o.p_alice + o.p_tie;
    if (!second) report.violations.push_back({n, "bob_lt_half"});
    if (!third) report.violations.push_back({n, "half_lt_alice_plus_tie"});
    const bool folded = abs(o.p_alice - o.p_bob) < o.p_tie;
    if (folded != (second && third)) report.violations.push_back({n, "equivalence"});
    keep_min(report.min_bob_lt_half, half - o.p_bob);
    keep_min(report.min_half_lt_alice_plus_tie, o.p_alice + o.p_tie - half);

    if (n == report.n_max) break;
    stepper.advance();
  }
}

}  // namespace

ConjectureReport check_conjecture(const WordPair& pair, std::size_t n_max, const Limits& limits) {
  if (correlation_number(pair.a, pair.a) <= correlation_number(pair.b, pair.b)) {
    throw PreconditionViolated("conjecture check needs [A,A] > [B,B]; got [" + pair.a.str() + "] = " +
                               to_string(correlation_number(pair.a, pair.a).value) + ", [" + pair.b.str() +
                               "] = " + to_string(correlation_number(pair.b, pair.b).value));
  }
  ConjectureReport report;
  report.pair = pair;
  report.n0 = compute_n0(pair);
  report.n_max = n_max;
  if (n_max <= kCount128MaxN) {
    conjecture_impl<Count128>(report, limits);
  } else {
    conjecture_impl<BigInt>(report, limits);
  }
  return report;
}

}  // namespace litt
