#include "litt/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "litt/asymptotics.hpp"
#include "litt/engine.hpp"
#include "litt/errors.hpp"
#include "litt/io.hpp"
#include "litt/occurrences.hpp"
#include "litt/sweep.hpp"
#include "litt/verify.hpp"

namespace litt::cli {

namespace {

using io::json;

struct CommandConfig {
  std::string a;
  std::string b;
  std::string x;
  std::string y;
  std::string chain;
  std::string pattern;
  std::string decomposition;
  std::size_t n = 0;
  std::size_t n_max = 20;
  std::size_t length = 0;
  long handicap = 0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string format;
  std::string kind = "joint";
  std::string method = "dp";
  std::string mode = "exact";
  std::string checkpoint;
  std::vector<std::size_t> grid{64, 256, 1024, 4096};
  std::size_t symmetry_n_max = 20;
  std::size_t task_budget = 0;
  bool maximal = false;
  bool cells = false;
  bool force = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

WordPair pair_of(const CommandConfig& c) { return make_pair(parse_word(c.a), parse_word(c.b)); }

Limits limits_of(const CommandConfig& c) { return c.force ? Limits::unlimited() : Limits{}; }

std::string format_or(const CommandConfig& c, const std::string& fallback, std::initializer_list<const char*> allowed) {
  std::string f = c.format.empty() ? fallback : c.format;
  for (const char* ok : allowed) {
    if (f == ok) return f;
  }
  throw UsageError("format '" + f + "' is not available for this command");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int cmd_corr(const CommandConfig& c, std::ostream& out) {
  const WordPair p = pair_of(c);
  const std::string f = format_or(c, "json", {"json", "tsv", "csv"});
  if (f == "json") {
    emit(out, io::correlation_json(p));
    return kExitOk;
  }
  const char sep = f == "tsv" ? '\t' : ',';
  out << "pair" << sep << "set" << sep << "number\n";
  const std::pair<const char*, std::pair<const Word*, const Word*>> rows[] = {
      {"AA", {&p.a, &p.a}}, {"BB", {&p.b, &p.b}}, {"AB", {&p.a, &p.b}}, {"BA", {&p.b, &p.a}}};
  for (const auto& [name, words] : rows) {
    CorrelationSet s = correlation_set(*words.first, *words.second);
    // The set is ';'-joined so it survives either separator.
    std::string set;
    for (std::size_t i = 0; i < s.indices().size(); ++i) set += (i ? ";" : "") + std::to_string(s.indices()[i]);
    out << name << sep << set << sep << to_string(encode(s).value) << '\n';
  }
  return kExitOk;
}

int cmd_count(const CommandConfig& c, std::ostream& out) {
  const Word pattern = parse_word(c.a);
  const Word host = parse_word(c.x);
  const auto occ = occurrence_positions(pattern, host);
  const std::string f = format_or(c, "json", {"json", "tsv"});
  if (f == "json") {
    emit(out, json{{"word", pattern.str()}, {"host", host.str()}, {"count", occ.positions.size()},
                   {"positions", occ.positions}});
  } else {
    out << "count\tpositions\n" << occ.positions.size() << '\t' << join(occ.positions) << '\n';
  }
  return kExitOk;
}

int cmd_decompose(const CommandConfig& c, std::ostream& out) {
  const WordPair p = pair_of(c);
  const Word y = parse_word(c.y);
  format_or(c, "json", {"json"});
  if (c.maximal) {
    const OverlapChain e = maximal_decomposition(y, p);
    emit(out, json{{"word", y.str()}, {"chain", format_chain(e)}, {"count_a", e.count(Label::A)},
                   {"count_b", e.count(Label::B)}});
  } else {
    emit(out, io::decomposition_json(p, pattern_decompose(y, p)));
  }
  return kExitOk;
}

int cmd_phi(const CommandConfig& c, std::ostream& out) {
  const WordPair p = pair_of(c);
  format_or(c, "json", {"json"});
  const int given = !c.chain.empty() + !c.pattern.empty() + !c.decomposition.empty();
  if (given != 1) throw UsageError("phi needs exactly one of --chain, --pattern, --decomposition");
  if (!c.chain.empty()) {
    const OverlapChain e = parse_chain(c.chain);
    const OverlapChain image = phi_chain(p, e);
    emit(out, json{{"chain", format_chain(e)}, {"image", format_chain(image)}, {"word", realize(p, e).str()},
                   {"image_word", realize(p, image).str()}});
    return kExitOk;
  }
  Pattern m;
  std::vector<std::size_t> lengths;
  if (!c.pattern.empty()) {
    m = parse_pattern(c.pattern);
  } else {
    json j = json::parse(c.decomposition, nullptr, false);
    if (j.is_discarded()) throw ParseError("--decomposition is not valid JSON");
    Decomposition d = io::decomposition_from_json(j);
    m = d.chains;
    lengths = d.filler_lengths();
  }
  const Pattern image = phi_pattern(p, m);
  json j{{"pattern", format_pattern(m)}, {"image", format_pattern(image)}};
  if (!c.decomposition.empty()) {
    j["lengths"] = lengths;
    j["image_lengths"] = std::vector<std::size_t>(lengths.rbegin(), lengths.rend());
  }
  emit(out, j);
  return kExitOk;
}

int cmd_dist(const CommandConfig& c, std::ostream& out) {
  const WordPair p = pair_of(c);
  const Limits limits = limits_of(c);
  const std::string f = format_or(c, "tsv", {"tsv", "csv", "json"});
  if (c.kind != "joint" && c.kind != "diff") throw UsageError("--kind must be joint or diff");
  if (c.method != "dp" && c.method != "brute") throw UsageError("--method must be dp or brute");
  if (c.kind == "joint") {
    const JointDistribution d = c.method == "dp" ? dp_joint(p, c.n, limits) : brute_force_joint(p, c.n, limits);
    if (f == "json") {
      emit(out, io::joint_json(d));
    } else {
      out << (f == "tsv" ? io::joint_tsv(d) : io::joint_csv(d));
    }
  } else {
    const DiffDistribution d = c.method == "dp" ? dp_diff(p, c.n, limits) : project(brute_force_joint(p, c.n, limits));
    if (f == "json") {
      emit(out, io::diff_json(d));
    } else {
      out << (f == "tsv" ? io::diff_tsv(d) : io::diff_csv(d));
    }
  }
  return kExitOk;
}

int cmd_game(const CommandConfig& c, std::ostream& out) {
  const GameOutcome o = game_outcome(pair_of(c), c.n, c.handicap, limits_of(c));
  const std::string f = format_or(c, "json", {"json", "tsv", "csv"});
  if (f == "json") {
    emit(out, io::outcome_json(o));
    return kExitOk;
  }
  const char sep = f == "tsv" ? '\t' : ',';
  out << "outcome" << sep << "num" << sep << "den_pow2" << sep << "decimal\n";
  for (const auto& [name, v] : {std::pair{"alice", &o.p_alice}, {"bob", &o.p_bob}, {"tie", &o.p_tie}}) {
    out << name << sep << to_string(v->num) << sep << v->den_pow2 << sep << io::format_double(v->to_double()) << '\n';
  }
  return kExitOk;
}

int cmd_simulate(const CommandConfig& c, std::ostream& out) {
  const WordPair p = pair_of(c);
  format_or(c, "json", {"json"});
  emit(out, io::simulation_json(p, simulate(p, c.n, c.trials, c.seed, c.handicap, c.jobs)));
  return kExitOk;
}

int cmd_asym(const CommandConfig& c, std::ostream& out) {
  const AsymptoticEstimate e = asymptotic_estimate(pair_of(c));
  format_or(c, "json", {"json"});
  json j = io::asymptotic_json(e);
  if (c.n > 0 && !e.degenerate) {
    j["n"] = c.n;
    j["gap_at_n"] = e.gap_at(c.n);
    j["tie_at_n"] = e.tie_at(c.n);
  }
  emit(out, j);
  return kExitOk;
}

int cmd_compare(const CommandConfig& c, std::ostream& out) {
  if (c.mode != "exact" && c.mode != "float") throw UsageError("--mode must be exact or float");
  const auto rows = compare_exact_vs_asymptotic(pair_of(c), c.grid,
                                                c.mode == "exact" ? NumericMode::exact : NumericMode::floating,
                                                limits_of(c));
  const std::string f = format_or(c, "csv", {"csv", "json"});
  if (f == "csv") {
    out << io::comparison_csv(rows);
  } else {
    emit(out, io::comparison_json(rows));
  }
  return kExitOk;
}

int cmd_verify_theorem(const CommandConfig& c, std::ostream& out) {
  format_or(c, "json", {"json"});
  const SymmetryReport r = verify_symmetry(pair_of(c), c.n_max, limits_of(c));
  emit(out, io::symmetry_json(r));
  return r.passed() ? kExitOk : kExitViolation;
}

int cmd_verify_lemma1(const CommandConfig& c, std::ostream& out) {
  format_or(c, "json", {"json"});
  const Lemma1Report r = verify_lemma1(pair_of(c), c.n_max, limits_of(c));
  emit(out, io::lemma1_json(r));
  return r.passed() ? kExitOk : kExitViolation;
}

int cmd_check_conjecture(const CommandConfig& c, std::ostream& out) {
  format_or(c, "json", {"json"});
  const ConjectureReport r = check_conjecture(pair_of(c), c.n_max, limits_of(c));
  emit(out, io::conjecture_json(r, c.cells));
  return r.clean() ? kExitOk : kExitViolation;
}

int cmd_sweep(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  format_or(c, "json", {"json"});
  SweepOptions o;
  o.length = c.length;
  o.n_max = c.n_max;
  o.jobs = c.jobs;
  o.symmetry_max_n = c.symmetry_n_max;
  o.limits = limits_of(c);
  o.force = c.force;
  if (c.task_budget > 0) o.task_budget = c.task_budget;
  if (!c.checkpoint.empty()) {
    std::filesystem::path path = c.checkpoint;
    if (const char* dir = std::getenv("LITT_CHECKPOINT_DIR"); dir != nullptr && path.is_relative()) {
      path = std::filesystem::path(dir) / path;
    }
    o.checkpoint = path;
  }
  const SweepReport r = sweep(o);
  out << r.jsonl();
  err << r.summary() << '\n';
  if (r.failures > 0) return kExitViolation;
  if (r.skipped > 0 || !r.complete) return kExitUsage;
  return kExitOk;
}

void add_pair(CLI::App* sub, CommandConfig& c) {
  sub->add_option("--a", c.a, "Alice's word (H/T)")->required();
  sub->add_option("--b", c.b, "Bob's word (H/T)")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig c;
  CLI::App app{"Exact computations for generalized Litt's coin-flip games"};
  app.name(args.empty() ? "litt" : args[0]);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "Output format: json, tsv or csv (per command)");
  app.add_flag("--force", c.force, "Lift resource guards");

  auto* corr = app.add_subcommand("corr", "Correlation sets and numbers of a pair");
  add_pair(corr, c);

  auto* count = app.add_subcommand("count", "Occurrences of a word in a host sequence");
  count->add_option("--a", c.a, "Pattern word")->required();
  count->add_option("--x", c.x, "Host sequence")->required();

  auto* decompose = app.add_subcommand("decompose", "Pattern decomposition of a word");
  add_pair(decompose, c);
  decompose->add_option("--y", c.y, "Word to decompose")->required();
  decompose->add_flag("--maximal", c.maximal, "Maximal decomposition of a single overlap word");

  auto* phi = app.add_subcommand("phi", "Apply the A<->B reversal involution");
  add_pair(phi, c);
  phi->add_option("--chain", c.chain, "Chain text, e.g. A:1:B");
  phi->add_option("--pattern", c.pattern, "Comma-separated chains");
  phi->add_option("--decomposition", c.decomposition, "Decomposition JSON as printed by decompose");

  auto* dist = app.add_subcommand("dist", "Exact joint or difference distribution");
  add_pair(dist, c);
  dist->add_option("-n", c.n, "Number of flips")->required();
  dist->add_option("--kind", c.kind, "joint or diff");
  dist->add_option("--method", c.method, "dp or brute");

  auto* game = app.add_subcommand("game", "Exact win/tie probabilities");
  add_pair(game, c);
  game->add_option("-n", c.n, "Number of flips")->required();
  game->add_option("--handicap", c.handicap, "Points added to Alice's score");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of the outcome");
  add_pair(sim, c);
  sim->add_option("-n", c.n, "Number of flips")->required();
  sim->add_option("--trials", c.trials, "Number of trials")->check(CLI::PositiveNumber);
  sim->add_option("--seed", c.seed, "Generator seed");
  sim->add_option("--handicap", c.handicap, "Points added to Alice's score");
  sim->add_option("--jobs", c.jobs, "Worker threads");

  auto* asym = app.add_subcommand("asym", "Asymptotic win-gap and tie estimates");
  add_pair(asym, c);
  asym->add_option("-n", c.n, "Evaluate the estimates at this n");

  auto* compare = app.add_subcommand("compare", "Exact values against the asymptotic estimates");
  add_pair(compare, c);
  compare->add_option("--grid", c.grid, "Ascending list of n")->delimiter(',');
  compare->add_option("--mode", c.mode, "exact or float");

  auto* theorem = app.add_subcommand("verify-theorem", "Check (N_A, N_B) and (N_B, N_A) share a law");
  add_pair(theorem, c);
  theorem->add_option("--n-max", c.n_max, "Largest n");

  auto* lemma = app.add_subcommand("verify-lemma1", "Check segmented counts are invariant under phi");
  add_pair(lemma, c);
  lemma->add_option("--n-max", c.n_max, "Largest n");

  auto* conj = app.add_subcommand("check-conjecture", "Check the fixed-length inequalities");
  add_pair(conj, c);
  conj->add_option("--n-max", c.n_max, "Largest n");
  conj->add_flag("--cells", c.cells, "Include per-n probabilities");

  auto* sw = app.add_subcommand("sweep", "Conjecture and symmetry checks over all pairs of a length");
  sw->add_option("--length", c.length, "Word length")->required();
  sw->add_option("--n-max", c.n_max, "Largest n");
  sw->add_option("--jobs", c.jobs, "Worker threads");
  sw->add_option("--checkpoint", c.checkpoint, "Append-only checkpoint file (resumable)");
  sw->add_option("--symmetry-n-max", c.symmetry_n_max, "Cap on n for symmetry checks");
  sw->add_option("--task-budget", c.task_budget, "Stop after this many new pairs");

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  if (argv.empty()) argv.push_back("litt");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::map<CLI::App*, std::function<int()>> dispatch{
      {corr, [&] { return cmd_corr(c, out); }},
      {count, [&] { return cmd_count(c, out); }},
      {decompose, [&] { return cmd_decompose(c, out); }},
      {phi, [&] { return cmd_phi(c, out); }},
      {dist, [&] { return cmd_dist(c, out); }},
      {game, [&] { return cmd_game(c, out); }},
      {sim, [&] { return cmd_simulate(c, out); }},
      {asym, [&] { return cmd_asym(c, out); }},
      {compare, [&] { return cmd_compare(c, out); }},
      {theorem, [&] { return cmd_verify_theorem(c, out); }},
      {lemma, [&] { return cmd_verify_lemma1(c, out); }},
      {conj, [&] { return cmd_check_conjecture(c, out); }},
      {sw, [&] { return cmd_sweep(c, out, err); }},
  };
  try {
    for (const auto& [sub, fn] : dispatch) {
      if (sub->parsed()) return fn();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace litt::cli
