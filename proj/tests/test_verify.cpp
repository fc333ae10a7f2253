#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "litt/sweep.hpp"
#include "litt/verify.hpp"

using namespace litt;

namespace {

Word w(const char* s) { return parse_word(s); }
WordPair pair(const char* a, const char* b) { return make_pair(w(a), w(b)); }

std::filesystem::path temp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("litt_test_" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("verify_symmetry") {
  CHECK(verify_symmetry(pair("HHTHTH", "HTTTHH"), 20).passed());
  CHECK(verify_symmetry(pair("HH", "TT"), 20).passed());
  const SymmetryReport r = verify_symmetry(pair("HH", "HT"), 3);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->n == 3);
  CHECK(r.counterexample->a == 0);
  CHECK(r.counterexample->b == 1);
  CHECK(r.counterexample->count_ab == 3);
  CHECK(r.counterexample->count_ba == 1);
  CHECK(verify_symmetry(pair("HH", "HT"), 2).passed());
}

TEST_CASE("segmented_counts") {
  {
    const auto buckets = segmented_counts(pair("HHT", "TTH"), 2);
    REQUIRE(buckets.size() == 1);
    CHECK(buckets[0].pattern.empty());
    CHECK(buckets[0].lengths == std::vector<std::size_t>{2});
    CHECK(buckets[0].count == 4);
  }
  {
    const auto table = segment_table(pair("HH", "TT"), 2);
    CHECK(table.size() == 3);
    CHECK(table.at(SegmentKey{{}, {2}}) == 2);
    CHECK(table.at(SegmentKey{parse_pattern("A"), {0, 0}}) == 1);
    CHECK(table.at(SegmentKey{parse_pattern("B"), {0, 0}}) == 1);
  }
  {
    const auto table = segment_table(pair("HH", "HT"), 3);
    CHECK(table.at(SegmentKey{parse_pattern("A:1:B"), {0, 0}}) == 1);
    std::uint64_t total = 0;
    for (const auto& [key, c] : table) total += c;
    CHECK(total == 8);
  }
  CHECK_THROWS_AS(segment_table(pair("HH", "HT"), 21), GuardExceeded);
  CHECK_THROWS_AS(segment_table(pair("HH", "HH"), 3), EqualWords);
}

TEST_CASE("verify_lemma1") {
  const Lemma1Report r = verify_lemma1(pair("HHTHTH", "HTTTHH"), 16);
  CHECK(r.passed());
  CHECK(r.buckets_checked > 0);
  CHECK(r.factorizations_checked > 0);

  const Lemma1Report hh = verify_lemma1(pair("HH", "TT"), 14);
  CHECK(hh.passed());
  // L^(A)(i,0) = L^(B)(0,i) and its mirror for i <= 12, L^(A,A)(0,i,0) for i <= 10
  CHECK(hh.boundary_checked == 13 * 2 + 11);

  const Lemma1Report empty = verify_lemma1(pair("HHT", "TTH"), 2);
  CHECK(empty.passed());
  CHECK(empty.buckets_checked == 3);
  CHECK_THROWS_AS(verify_lemma1(pair("HH", "HT"), 5), AutocorrelationMismatch);
}

TEST_CASE("a pair with different auto-correlations breaks the bucket identity") {
  // phi is not defined, so compare raw mirrored buckets instead.
  const auto table = segment_table(pair("HH", "HT"), 3);
  const auto aa = table.find(SegmentKey{parse_pattern("A:1:A"), {0, 0}});
  REQUIRE(aa != table.end());
  CHECK(table.find(SegmentKey{parse_pattern("B:1:B"), {0, 0}}) == table.end());
}

TEST_CASE("compute_n0") {
  CHECK(compute_n0(pair("HH", "HT")) == 3);
  CHECK_THROWS_AS(compute_n0(pair("HHTHTH", "HTTTHH")), EmptySymmetricDifference);
  // Cor(HHH) = {1, 2}, Cor(HTH) = {1}
  CHECK(compute_n0(pair("HHH", "HTH")) == 4);
}

TEST_CASE("check_conjecture") {
  const ConjectureReport r = check_conjecture(pair("HH", "HT"), 35);
  CHECK(r.n0 == 3);
  CHECK(r.clean());
  REQUIRE(r.cells.size() == 36);
  CHECK(r.cells[2].p_alice == Dyadic(1, 2));
  CHECK(r.cells[2].p_bob == Dyadic(1, 2));
  CHECK(r.cells[3].p_alice < r.cells[3].p_bob);
  REQUIRE(r.min_alice_lt_bob);
  CHECK(*r.min_alice_lt_bob > Dyadic(0, 0));
  CHECK_THROWS_AS(check_conjecture(pair("HT", "HH"), 10), PreconditionViolated);
  CHECK_THROWS_AS(check_conjecture(pair("HHTHTH", "HTTTHH"), 10), PreconditionViolated);
}

TEST_CASE("check_conjecture takes the big-integer path beyond 126 flips") {
  const ConjectureReport r = check_conjecture(pair("HH", "HT"), 130);
  CHECK(r.clean());
  CHECK(r.cells.back().p_alice + r.cells.back().p_bob + r.cells.back().p_tie == Dyadic(1, 0));
}

TEST_CASE("sweep over lengths 2 and 3") {
  for (std::size_t l : {2u, 3u}) {
    SweepOptions o;
    o.length = l;
    o.n_max = 35;
    const SweepReport r = sweep(o);
    CHECK(r.complete);
    CHECK(r.failures == 0);
    CHECK(r.skipped == 0);
    if (l == 2) {
      std::set<std::pair<std::string, std::string>> seen;
      for (const auto& rec : r.records) {
        if (rec["kind"] == "conjecture") seen.insert({rec["a"].get<std::string>(), rec["b"].get<std::string>()});
      }
      CHECK(seen == std::set<std::pair<std::string, std::string>>{
                        {"HH", "HT"}, {"HH", "TH"}, {"TT", "HT"}, {"TT", "TH"}});
      CHECK(r.symmetry_pairs == 2);  // (HH, TT) and (HT, TH)
    }
  }
}

TEST_CASE("sweep output does not depend on jobs") {
  SweepOptions o;
  o.length = 3;
  o.n_max = 20;
  const std::string serial = sweep(o).jsonl();
  o.jobs = 4;
  CHECK(sweep(o).jsonl() == serial);
}

TEST_CASE("interrupted sweep resumes to the same report") {
  SweepOptions o;
  o.length = 3;
  o.n_max = 30;
  const std::string uninterrupted = sweep(o).jsonl();

  const auto path = temp_path("resume.jsonl");
  o.checkpoint = path;
  o.task_budget = 7;
  const SweepReport partial = sweep(o);
  CHECK_FALSE(partial.complete);
  CHECK(partial.records.size() == 7);

  // A torn trailing line, as left by a crash mid-write, is ignored.
  std::ofstream(path, std::ios::app) << "{\"kind\":\"conj";
  o.task_budget.reset();
  o.jobs = 3;
  const SweepReport resumed = sweep(o);
  CHECK(resumed.complete);
  CHECK(resumed.resumed == 7);
  CHECK(resumed.jsonl() == uninterrupted);
  const SweepReport again = sweep(o);
  CHECK(again.resumed == again.records.size());

  SweepOptions other = o;
  other.n_max = 31;
  CHECK_THROWS_AS(sweep(other), PreconditionViolated);
  std::filesystem::remove(path);
}

TEST_CASE("sweep guards and skipped symmetry lengths") {
  SweepOptions o;
  o.length = 11;
  CHECK_THROWS_AS(sweep(o), GuardExceeded);
  o.length = 2;
  o.n_max = 65;
  CHECK_THROWS_AS(sweep(o), GuardExceeded);
  o.n_max = 25;
  o.symmetry_max_n = 10;
  const SweepReport r = sweep(o);
  for (const auto& rec : r.records) {
    if (rec["kind"] == "symmetry") CHECK(rec["skipped_above_n"] == 10);
  }
}
