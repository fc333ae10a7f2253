#include "litt/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "litt/errors.hpp"

namespace litt::io {

json dyadic_json(const Dyadic& x) { return json{{"num", to_string(x.num)}, {"den_pow2", x.den_pow2}}; }

Dyadic dyadic_from_json(const json& j) {
  return Dyadic(BigInt(j.at("num").get<std::string>()), j.at("den_pow2").get<unsigned>());
}

json probability_json(const Dyadic& x) {
  json j = dyadic_json(x);
  j["decimal"] = x.to_double();
  return j;
}

namespace {

json cor_entry(const Word& x, const Word& y) {
  CorrelationSet s = correlation_set(x, y);
  return json{{"set", s.indices()}, {"number", to_string(encode(s).value)}};
}

json chain_list(const Pattern& p) {
  json out = json::array();
  for (const auto& e : p) out.push_back(format_chain(e));
  return out;
}

// NaN and infinities have no JSON literal.
json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json correlation_json(const WordPair& pair) {
  return json{{"a", pair.a.str()},
              {"b", pair.b.str()},
              {"length", pair.length()},
              {"cor_aa", cor_entry(pair.a, pair.a)},
              {"cor_bb", cor_entry(pair.b, pair.b)},
              {"cor_ab", cor_entry(pair.a, pair.b)},
              {"cor_ba", cor_entry(pair.b, pair.a)}};
}

json outcome_json(const GameOutcome& o) {
  return json{{"a", o.pair.a.str()},
              {"b", o.pair.b.str()},
              {"n", o.n},
              {"handicap", o.handicap},
              {"p_alice", probability_json(o.p_alice)},
              {"p_bob", probability_json(o.p_bob)},
              {"p_tie", probability_json(o.p_tie)}};
}

json simulation_json(const WordPair& pair, const SimulationResult& r) {
  auto entry = [&](std::uint64_t hits, double p) {
    return json{{"hits", hits}, {"p", p}, {"se", SimulationResult::standard_error(p, r.trials)}};
  };
  return json{{"a", pair.a.str()},
              {"b", pair.b.str()},
              {"n", r.n},
              {"handicap", r.handicap},
              {"trials", r.trials},
              {"seed", r.seed},
              {"generator", "mt19937_64"},
              {"alice", entry(r.alice, r.p_alice())},
              {"bob", entry(r.bob, r.p_bob())},
              {"tie", entry(r.tie, r.p_tie())}};
}

json asymptotic_json(const AsymptoticEstimate& e) {
  return json{{"a", e.pair.a.str()},
              {"b", e.pair.b.str()},
              {"cor_aa", to_string(e.cor_aa)},
              {"cor_bb", to_string(e.cor_bb)},
              {"cor_ab", to_string(e.cor_ab)},
              {"cor_ba", to_string(e.cor_ba)},
              {"denominator", to_string(e.denominator)},
              {"degenerate", e.degenerate},
              {"gap_coefficient", e.degenerate ? json(nullptr) : json(e.gap_coefficient())},
              {"tie_coefficient", e.degenerate ? json(nullptr) : json(e.tie_coefficient())}};
}

json decomposition_json(const WordPair& pair, const Decomposition& d) {
  json fillers = json::array();
  for (const auto& x : d.fillers) fillers.push_back(x.str());
  json words = json::array();
  for (const auto& e : d.chains) words.push_back(realize(pair, e).str());
  return json{{"fillers", fillers}, {"chains", chain_list(d.chains)}, {"chain_words", words}};
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  for (const auto& x : j.at("fillers")) {
    const auto s = x.get<std::string>();
    d.fillers.push_back(s.empty() ? Word{} : parse_word(s));
  }
  for (const auto& e : j.at("chains")) d.chains.push_back(parse_chain(e.get<std::string>()));
  if (d.fillers.size() != d.chains.size() + 1) throw ParseError("decomposition needs one more filler than chains");
  return d;
}

namespace {

std::string joint_table(const JointDistribution& dist, char sep) {
  std::ostringstream out;
  out << 'a' << sep << 'b' << sep << "count\n";
  for (const auto& [key, c] : dist.counts) out << key.first << sep << key.second << sep << to_string(c) << '\n';
  return out.str();
}

std::string diff_table(const DiffDistribution& dist, char sep) {
  std::ostringstream out;
  out << 'd' << sep << "count\n";
  for (const auto& [d, c] : dist.counts) out << d << sep << to_string(c) << '\n';
  return out.str();
}

}  // namespace

std::string joint_tsv(const JointDistribution& dist) { return joint_table(dist, '\t'); }
std::string joint_csv(const JointDistribution& dist) { return joint_table(dist, ','); }
std::string diff_tsv(const DiffDistribution& dist) { return diff_table(dist, '\t'); }
std::string diff_csv(const DiffDistribution& dist) { return diff_table(dist, ','); }

json joint_json(const JointDistribution& dist) {
  json rows = json::array();
  for (const auto& [key, c] : dist.counts) rows.push_back({{"a", key.first}, {"b", key.second}, {"count", to_string(c)}});
  return json{{"a", dist.pair.a.str()}, {"b", dist.pair.b.str()}, {"n", dist.n}, {"counts", rows}};
}

json diff_json(const DiffDistribution& dist) {
  json rows = json::array();
  for (const auto& [d, c] : dist.counts) rows.push_back({{"d", d}, {"count", to_string(c)}});
  return json{{"a", dist.pair.a.str()}, {"b", dist.pair.b.str()}, {"n", dist.n}, {"counts", rows}};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "n,exact_gap,est_gap,ratio_gap,exact_tie,est_tie,ratio_tie\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_double(r.exact_gap) << ',' << format_double(r.est_gap) << ','
        << format_double(r.ratio_gap) << ',' << format_double(r.exact_tie) << ',' << format_double(r.est_tie)
        << ',' << format_double(r.ratio_tie) << '\n';
  }
  return out.str();
}

json comparison_json(const std::vector<ComparisonRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"exact_gap", number_or_null(r.exact_gap)},
                   {"est_gap", number_or_null(r.est_gap)},
                   {"ratio_gap", number_or_null(r.ratio_gap)},
                   {"exact_tie", number_or_null(r.exact_tie)},
                   {"est_tie", number_or_null(r.est_tie)},
                   {"ratio_tie", number_or_null(r.ratio_tie)}});
  }
  return out;
}

json symmetry_json(const SymmetryReport& r) {
  json j{{"a", r.pair.a.str()}, {"b", r.pair.b.str()}, {"n_max", r.n_max}, {"passed", r.passed()}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = {{"n", c.n},
                           {"a", c.a},
                           {"b", c.b},
                           {"count_ab", to_string(c.count_ab)},
                           {"count_ba", to_string(c.count_ba)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

json lemma1_json(const Lemma1Report& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"n", m.n},
                          {"check", m.check},
                          {"pattern", format_pattern(m.key.pattern)},
                          {"lengths", m.key.lengths},
                          {"count", m.count},
                          {"expected", m.image_count}});
  }
  return json{{"a", r.pair.a.str()},
              {"b", r.pair.b.str()},
              {"n_max", r.n_max},
              {"passed", r.passed()},
              {"buckets_checked", r.buckets_checked},
              {"boundary_checked", r.boundary_checked},
              {"factorizations_checked", r.factorizations_checked},
              {"mismatches", mismatches}};
}

json conjecture_json(const ConjectureReport& r, bool with_cells) {
  auto margin = [](const std::optional<Dyadic>& m) { return m ? dyadic_json(*m) : json(nullptr); };
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"n", v.n}, {"check", v.check}});
  json j{{"a", r.pair.a.str()},
         {"b", r.pair.b.str()},
         {"n0", r.n0},
         {"n_max", r.n_max},
         {"passed", r.passed()},
         {"violations", violations},
         {"equality_anomalies", r.equality_anomalies},
         {"min_margin",
          {{"alice_lt_bob", margin(r.min_alice_lt_bob)},
           {"bob_lt_half", margin(r.min_bob_lt_half)},
           {"half_lt_alice_plus_tie", margin(r.min_half_lt_alice_plus_tie)}}}};
  if (with_cells) {
    json cells = json::array();
    for (const auto& c : r.cells) {
      cells.push_back({{"n", c.n},
                       {"p_alice", probability_json(c.p_alice)},
                       {"p_bob", probability_json(c.p_bob)},
                       {"p_tie", probability_json(c.p_tie)}});
    }
    j["cells"] = cells;
  }
  return j;
}

}  // namespace litt::io
