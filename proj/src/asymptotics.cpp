#include "litt/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "litt/errors.hpp"

namespace litt {

namespace {

double root_pi_n(std::size_t n) { return std::sqrt(std::numbers::pi * static_cast<double>(n)); }

}  // namespace

double AsymptoticEstimate::gap_coefficient() const {
  if (degenerate) return 0.0;
  BigInt diff = cor_aa - cor_bb;
  return diff.get_d() / std::sqrt(denominator.get_d()) / 2.0;
}

double AsymptoticEstimate::tie_coefficient() const {
  if (degenerate) return 0.0;
  return pow2(static_cast<unsigned>(pair.length())).get_d() / std::sqrt(denominator.get_d()) / 2.0;
}

double AsymptoticEstimate::gap_at(std::size_t n) const { return gap_coefficient() / root_pi_n(n); }

double AsymptoticEstimate::tie_at(std::size_t n) const { return tie_coefficient() / root_pi_n(n); }

AsymptoticEstimate asymptotic_estimate(const WordPair& pair) {
  if (pair.a.size() != pair.b.size()) {
    throw LengthMismatch("words " + pair.a.str() + " and " + pair.b.str() + " differ in length");
  }
  if (pair.a == pair.b) throw EqualWords("asymptotic estimate needs A != B");
  AsymptoticEstimate e;
  e.pair = pair;
  e.cor_aa = correlation_number(pair.a, pair.a).value;
  e.cor_bb = correlation_number(pair.b, pair.b).value;
  e.cor_ab = correlation_number(pair.a, pair.b).value;
  e.cor_ba = correlation_number(pair.b, pair.a).value;
  e.denominator = pow2(static_cast<unsigned>(pair.length())) + e.cor_aa + e.cor_bb - e.cor_ab - e.cor_ba;
  if (sgn(e.denominator) < 0) {
    throw PreconditionViolated("negative asymptotic denominator D = " + to_string(e.denominator) + " for (" +
                               pair.a.str() + ", " + pair.b.str() + ")");
  }
  e.degenerate = sgn(e.denominator) == 0;
  return e;
}

std::vector<ComparisonRow> compare_exact_vs_asymptotic(const WordPair& pair, const std::vector<std::size_t>& n_grid,
                                                       NumericMode mode, const Limits& limits) {
  const AsymptoticEstimate est = asymptotic_estimate(pair);
  if (est.degenerate) {
    throw DegeneratePair("(" + pair.a.str() + ", " + pair.b.str() + ") has D = 0; the estimates are undefined");
  }
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    if (n_grid[i] <= n_grid[i - 1]) throw PreconditionViolated("n grid must be strictly ascending");
  }
  std::vector<ComparisonRow> rows;
  if (n_grid.empty()) return rows;

  auto fill = [&](std::size_t n, double gap, double tie) {
    ComparisonRow r;
    r.n = n;
    r.exact_gap = gap;
    r.exact_tie = tie;
    r.est_gap = n == 0 ? std::numeric_limits<double>::infinity() : est.gap_at(n);
    r.est_tie = n == 0 ? std::numeric_limits<double>::infinity() : est.tie_at(n);
    r.ratio_gap = r.est_gap == 0.0 ? std::numeric_limits<double>::quiet_NaN() : gap / r.est_gap;
    r.ratio_tie = tie / r.est_tie;
    rows.push_back(r);
  };

  auto sweep = [&](auto& stepper, auto to_pair) {
    for (std::size_t n : n_grid) {
      while (stepper.n() < n) stepper.advance();
      auto [gap, tie] = to_pair(stepper.outcome(0), n);
      fill(n, gap, tie);
    }
  };

  const std::size_t n_max = n_grid.back();
  if (mode == NumericMode::exact) {
    DiffStepper<BigInt> stepper(pair, n_max, limits);
    sweep(stepper, [](const OutcomeCounts<BigInt>& c, std::size_t n) {
      const auto e = static_cast<unsigned>(n);
      return std::pair{(Dyadic(c.bob, e) - Dyadic(c.alice, e)).to_double(), Dyadic(c.tie, e).to_double()};
    });
  } else {
    DiffStepper<double> stepper(pair, n_max, limits);
    sweep(stepper, [](const OutcomeCounts<double>& c, std::size_t) { return std::pair{c.bob - c.alice, c.tie}; });
  }
  return rows;
}

}  // namespace litt
