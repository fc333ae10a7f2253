#include "litt/sweep.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "litt/errors.hpp"
#include "litt/io.hpp"
#include "litt/verify.hpp"

namespace litt {

namespace {

using nlohmann::json;

struct Task {
  std::string kind;  // "conjecture" or "symmetry"
  WordPair pair;

  std::string key() const { return kind + ' ' + pair.a.str() + ' ' + pair.b.str(); }
};

std::vector<Task> plan(std::size_t length) {
  const auto words = enumerate_words(length);
  std::vector<CorrelationNumber> auto_cor;
  for (const auto& w : words) auto_cor.push_back(correlation_number(w, w));
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (auto_cor[i] > auto_cor[j]) tasks.push_back({"conjecture", WordPair{words[i], words[j]}});
    }
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (auto_cor[i] == auto_cor[j]) tasks.push_back({"symmetry", WordPair{words[i], words[j]}});
    }
  }
  return tasks;
}

json header(const SweepOptions& o) {
  return json{{"checkpoint", "litt-sweep"},
              {"engine_version", kEngineVersion},
              {"length", o.length},
              {"n_max", o.n_max},
              {"symmetry_max_n", o.symmetry_max_n}};
}

json run_task(const Task& task, const SweepOptions& o) {
  json base{{"kind", task.kind}, {"a", task.pair.a.str()}, {"b", task.pair.b.str()}};
  try {
    if (task.kind == "conjecture") {
      json r = io::conjecture_json(check_conjecture(task.pair, o.n_max, o.limits), false);
      r["kind"] = task.kind;
      r["status"] = !r["violations"].empty() ? "violation" : !r["equality_anomalies"].empty() ? "equality_anomaly" : "pass";
      r.erase("passed");
      return r;
    }
    const std::size_t n_checked = std::min(o.n_max, o.symmetry_max_n);
    json r = io::symmetry_json(verify_symmetry(task.pair, n_checked, o.limits));
    r["kind"] = task.kind;
    r["status"] = r["passed"].get<bool>() ? "pass" : "violation";
    r.erase("passed");
    // Lengths above the symmetry cap are not checked; say so.
    r["skipped_above_n"] = n_checked < o.n_max ? json(n_checked) : json(nullptr);
    return r;
  } catch (const GuardExceeded& e) {
    base["status"] = "skipped";
    base["reason"] = e.what();
    return base;
  }
}

bool ends_with_newline(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in || in.tellg() == 0) return true;
  in.seekg(-1, std::ios::end);
  return in.get() == '\n';
}

std::string record_key(const json& r) {
  return r.at("kind").get<std::string>() + ' ' + r.at("a").get<std::string>() + ' ' + r.at("b").get<std::string>();
}

// Loads completed records; a torn final line from an interrupted write is
// dropped.
std::map<std::string, json> load_checkpoint(const std::filesystem::path& path, const json& expected) {
  std::map<std::string, json> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  if (!std::getline(in, line) || line.empty()) return done;
  json head = json::parse(line, nullptr, false);
  if (head.is_discarded() || head != expected) {
    throw PreconditionViolated("checkpoint " + path.string() + " was written for different sweep parameters: " +
                               line);
  }
  while (std::getline(in, line)) {
    json r = json::parse(line, nullptr, false);
    if (r.is_discarded() || !r.is_object() || !r.contains("status")) continue;
    std::string key = record_key(r);
    done[std::move(key)] = std::move(r);
  }
  return done;
}

}  // namespace

std::string SweepReport::jsonl() const {
  std::string out;
  for (const auto& r : records) out += r.dump() + '\n';
  return out;
}

std::string SweepReport::summary() const {
  std::ostringstream s;
  s << "sweep: " << conjecture_pairs << " conjecture pairs, " << symmetry_pairs << " symmetry pairs, " << failures
    << " failing, " << skipped << " skipped";
  if (resumed > 0) s << ", " << resumed << " resumed from checkpoint";
  if (!complete) s << " (incomplete)";
  return s.str();
}

SweepReport sweep(const SweepOptions& options) {
  if (options.length < 1 || (!options.force && options.length > kSweepMaxLength)) {
    throw GuardExceeded("sweep supports word lengths 1.." + std::to_string(kSweepMaxLength));
  }
  if (!options.force && options.n_max > kSweepMaxN) throw GuardExceeded("sweep supports n_max <= " + std::to_string(kSweepMaxN));

  const auto tasks = plan(options.length);
  const json head = header(options);
  std::vector<std::optional<json>> results(tasks.size());

  SweepReport report;
  std::ofstream checkpoint;
  if (options.checkpoint) {
    auto done = load_checkpoint(*options.checkpoint, head);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      auto it = done.find(tasks[i].key());
      if (it != done.end()) {
        results[i] = it->second;
        ++report.resumed;
      }
    }
    const bool fresh = !std::filesystem::exists(*options.checkpoint) || done.empty();
    if (fresh) {
      std::ofstream(*options.checkpoint, std::ios::trunc) << head.dump() << '\n';
    }
    checkpoint.open(*options.checkpoint, std::ios::app);
    // New records must start on a fresh line even after a torn write.
    if (!fresh && !ends_with_newline(*options.checkpoint)) checkpoint << '\n';
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!results[i]) pending.push_back(i);
  }
  if (options.task_budget && *options.task_budget < pending.size()) pending.resize(*options.task_budget);

  std::mutex write_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t p = next++; p < pending.size(); p = next++) {
      const std::size_t i = pending[p];
      json r = run_task(tasks[i], options);
      if (checkpoint.is_open()) {
        std::lock_guard lock(write_mutex);
        checkpoint << r.dump() << '\n';
        checkpoint.flush();
      }
      results[i] = std::move(r);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();

  report.complete = true;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!results[i]) {
      report.complete = false;
      continue;
    }
    const auto& r = *results[i];
    (tasks[i].kind == "conjecture" ? report.conjecture_pairs : report.symmetry_pairs)++;
    const auto status = r.at("status").get<std::string>();
    if (status == "skipped") {
      ++report.skipped;
    } else if (status != "pass") {
      ++report.failures;
    }
    report.records.push_back(r);
  }
  return report;
}

}  // namespace litt
