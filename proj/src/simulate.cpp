#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "litt/engine.hpp"

namespace litt {

double SimulationResult::standard_error(double p, std::uint64_t trials) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

namespace {

struct Tally {
  std::uint64_t alice = 0;
  std::uint64_t bob = 0;
  std::uint64_t tie = 0;
};

Tally run_block(const MatchAutomaton& automaton, std::size_t n, long handicap, std::uint64_t seed,
                std::uint64_t block, std::uint64_t trials) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 gen(seq);
  Tally tally;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::size_t state = automaton.start();
    long score = handicap;
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i % 64 == 0) bits = gen();
      const auto& step = automaton.step(state, static_cast<Letter>(bits & 1u));
      bits >>= 1;
      score += static_cast<long>(step.emit_a) - static_cast<long>(step.emit_b);
      state = step.next;
    }
    if (score > 0) {
      ++tally.alice;
    } else if (score < 0) {
      ++tally.bob;
    } else {
      ++tally.tie;
    }
  }
  return tally;
}

}  // namespace

SimulationResult simulate(const WordPair& pair, std::size_t n, std::uint64_t trials, std::uint64_t seed,
                          long handicap, unsigned jobs) {
  if (trials == 0) throw PreconditionViolated("simulation needs at least one trial");
  const MatchAutomaton automaton(pair);
  const std::uint64_t blocks = (trials + kSimulationBlock - 1) / kSimulationBlock;
  std::vector<Tally> tallies(blocks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      std::uint64_t size = std::min<std::uint64_t>(kSimulationBlock, trials - b * kSimulationBlock);
      tallies[b] = run_block(automaton, n, handicap, seed, b, size);
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(blocks, 256))));
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();

  SimulationResult r;
  r.n = n;
  r.handicap = handicap;
  r.trials = trials;
  r.seed = seed;
  for (const auto& t : tallies) {
    r.alice += t.alice;
    r.bob += t.bob;
    r.tie += t.tie;
  }
  return r;
}

}  // namespace litt
