#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "litt/errors.hpp"
#include "litt/occurrences.hpp"
#include "oracles.hpp"

using namespace litt;

namespace {

Word w(const char* s) { return parse_word(s); }
WordPair pair(const char* a, const char* b) { return make_pair(w(a), w(b)); }

std::vector<WordPair> distinct_pairs(std::size_t l) {
  std::vector<WordPair> out;
  for (const auto& a : enumerate_words(l)) {
    for (const auto& b : enumerate_words(l)) {
      if (a != b) out.push_back({a, b});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("count_occurrences and positions") {
  CHECK(count_occurrences(w("HH"), w("HHH")) == 2);
  CHECK(count_occurrences(w("HT"), w("THTHT")) == 2);
  CHECK(count_occurrences(w("HH"), w("T")) == 0);
  CHECK(occurrence_positions(w("HH"), w("HHH")).positions == std::vector<std::size_t>{2, 3});
  CHECK(occurrence_positions(w("HH"), w("THHTT")).positions == std::vector<std::size_t>{3});
  CHECK(occurrence_positions(w("HHT"), w("HHTHHT")).positions == std::vector<std::size_t>{3, 6});
  for (const auto& x : oracle::all_words(10)) {
    CHECK(count_occurrences(w("HTH"), parse_word(x)) == oracle::count("HTH", x));
  }
}

TEST_CASE("realize") {
  const WordPair cd = pair("HTTHTH", "THTHHH");
  Word y = realize(cd, parse_chain("A:2:B"));
  CHECK(y.str() == "HTTHTHTHHH");
  CHECK(y.size() == 10);
  const WordPair hh = pair("HH", "TT");
  CHECK(realize(hh, parse_chain("A")).str() == "HH");
  CHECK(realize(hh, parse_chain("A:1:A")).str() == "HHH");
  CHECK_THROWS_AS(realize(hh, parse_chain("A:1:B")), InvalidOverlap);
  CHECK_THROWS_AS(realize(cd, parse_chain("A:1:B")), InvalidOverlap);
  CHECK_THROWS_AS(realize(hh, OverlapChain{{Label::A, Label::A}, {}}), InvalidOverlap);
}

TEST_CASE("maximal_decomposition") {
  CHECK(maximal_decomposition(w("HHH"), pair("HH", "TT")) == parse_chain("A:1:A"));
  const WordPair litt_pair = pair("HHTHTH", "HTTTHH");
  CHECK(maximal_decomposition(w("HHTHTHTTTHH"), litt_pair) == parse_chain("A:1:B"));
  CHECK_THROWS_AS(maximal_decomposition(w("HHTT"), pair("HH", "TT")), NotAnOverlap);
  CHECK_THROWS_AS(maximal_decomposition(w("THH"), pair("HH", "TT")), NotAnOverlap);
  CHECK_THROWS_AS(maximal_decomposition(w("TTT"), pair("HH", "HT")), NotAnOverlap);
  CHECK_THROWS_AS(maximal_decomposition(w("HHH"), pair("HH", "HH")), EqualWords);
}

TEST_CASE("pattern_decompose examples") {
  {
    Decomposition d = pattern_decompose(w("THHTT"), pair("HH", "HT"));
    REQUIRE(d.chains.size() == 1);
    CHECK(d.fillers[0].str() == "T");
    CHECK(d.chains[0] == parse_chain("A:1:B"));
    CHECK(d.fillers[1].str() == "T");
  }
  {
    Decomposition d = pattern_decompose(w("TTT"), pair("HH", "HT"));
    CHECK(d.chains.empty());
    REQUIRE(d.fillers.size() == 1);
    CHECK(d.fillers[0].str() == "TTT");
  }
  {
    Decomposition d = pattern_decompose(w("HHTT"), pair("HH", "TT"));
    REQUIRE(d.chains.size() == 2);
    CHECK(d.chains[0] == parse_chain("A"));
    CHECK(d.chains[1] == parse_chain("B"));
    CHECK(d.filler_lengths() == std::vector<std::size_t>{0, 0, 0});
  }
  CHECK_THROWS_AS(pattern_decompose(w("HH"), pair("HH", "HH")), EqualWords);
}

TEST_CASE("pattern_decompose invariants, exhaustive |Y| <= 14, l <= 3") {
  std::size_t checked = 0;
  for (std::size_t l = 1; l <= 3; ++l) {
    for (const auto& p : distinct_pairs(l)) {
      const std::string a = p.a.str();
      const std::string b = p.b.str();
      for (std::size_t n = 0; n <= 14; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
          const Word y = Word::from_code(code, n);
          const Decomposition d = pattern_decompose(y, p);
          REQUIRE(d.fillers.size() == d.chains.size() + 1);
          std::size_t na = 0;
          std::size_t nb = 0;
          for (const auto& e : d.chains) {
            na += count_occurrences(p.a, realize(p, e));
            nb += count_occurrences(p.b, realize(p, e));
            // chains come out in maximal form
            REQUIRE(is_maximal(p, e));
          }
          for (const auto& x : d.fillers) {
            REQUIRE(count_occurrences(p.a, x) == 0);
            REQUIRE(count_occurrences(p.b, x) == 0);
          }
          const std::string ys = y.str();
          REQUIRE(na == oracle::count(a, ys));
          REQUIRE(nb == oracle::count(b, ys));
          REQUIRE(recompose(p, d) == y);
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 70 * ((std::uint64_t{1} << 15) - 1));
}

TEST_CASE("chains split exactly where occurrence starts are l or more apart") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t l = 2 + gen() % 4;
    const Word a = Word::from_code(gen(), l);
    Word b = Word::from_code(gen(), l);
    if (a == b) continue;
    const WordPair p{a, b};
    const Word y = Word::from_code(gen(), 10 + gen() % 30);
    const Decomposition d = pattern_decompose(y, p);
    // Starts of every occurrence, tagged with the chain they landed in.
    std::vector<std::pair<std::size_t, std::size_t>> starts;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < d.chains.size(); ++i) {
      offset += d.fillers[i].size();
      std::size_t s = offset;
      for (std::size_t j = 0; j < d.chains[i].size(); ++j) {
        if (j > 0) s += l - d.chains[i].overlaps[j - 1];
        starts.emplace_back(s, i);
      }
      offset += d.chains[i].realized_length(l);
    }
    for (std::size_t j = 1; j < starts.size(); ++j) {
      const bool same_chain = starts[j].second == starts[j - 1].second;
      CHECK(same_chain == (starts[j].first - starts[j - 1].first <= l - 1));
    }
  }
}

TEST_CASE("maximal chains and overlap words") {
  for (const auto& p : {pair("HH", "HT"), pair("HTH", "THT"), pair("HHTH", "HTHH"), pair("HTHT", "THTH")}) {
    const ChainLimits limits{24, 24};
    std::set<OverlapChain> all_maximal;
    for_each_chain(p, limits, false, [&](const OverlapChain& e) {
      const Word y = realize(p, e);
      const OverlapChain m = maximal_decomposition(y, p);
      CHECK(realize(p, m) == y);
      CHECK(m.count(Label::A) == count_occurrences(p.a, y));
      CHECK(m.count(Label::B) == count_occurrences(p.b, y));
      if (is_maximal(p, e)) {
        CHECK(m == e);
        all_maximal.insert(e);
      }
    });
    // The pruned search finds exactly the maximal chains.
    std::set<OverlapChain> pruned;
    for_each_chain(p, limits, true, [&](const OverlapChain& e) { pruned.insert(e); });
    CHECK(pruned == all_maximal);
  }
}

TEST_CASE("phi_chain examples") {
  const WordPair hh = pair("HH", "TT");
  const OverlapChain image = phi_chain(hh, parse_chain("A:1:A"));
  CHECK(image == parse_chain("B:1:B"));
  CHECK(realize(hh, image).str() == "TTT");
  const WordPair litt_pair = pair("HHTHTH", "HTTTHH");
  CHECK(phi_chain(litt_pair, parse_chain("A:1:B")) == parse_chain("A:1:B"));
  CHECK_THROWS_AS(phi_chain(pair("HH", "HT"), parse_chain("A")), AutocorrelationMismatch);
}

TEST_CASE("phi_pattern") {
  const WordPair p = pair("HHTHTH", "HTTTHH");
  const Pattern single{parse_chain("A:1:B")};
  CHECK(phi_pattern(p, single) == Pattern{phi_chain(p, single[0])});
  const Pattern two = parse_pattern("A,B:1:A");
  const Pattern image = phi_pattern(p, two);
  CHECK(image == Pattern{phi_chain(p, two[1]), phi_chain(p, two[0])});
  CHECK(phi_pattern(p, image) == two);
  CHECK(phi_pattern(p, Pattern{}).empty());
  CHECK_THROWS_AS(phi_pattern(pair("HH", "HT"), Pattern{}), AutocorrelationMismatch);
}

TEST_CASE("phi properties, l <= 4, chains up to k = 5") {
  for (std::size_t l = 1; l <= 4; ++l) {
    for (const auto& p : distinct_pairs(l)) {
      if (!same_autocorrelation(p)) continue;
      for_each_chain(p, ChainLimits{64, 5}, false, [&](const OverlapChain& e) {
        const OverlapChain image = phi_chain(p, e);
        const Word y = realize(p, e);
        const Word z = realize(p, image);
        CHECK(y.size() == z.size());
        CHECK(phi_chain(p, image) == e);
        CHECK(count_occurrences(p.a, z) >= e.count(Label::B));
        if (is_maximal(p, e)) {
          CHECK(is_maximal(p, image));
          CHECK(count_occurrences(p.a, z) == count_occurrences(p.b, y));
          CHECK(count_occurrences(p.b, z) == count_occurrences(p.a, y));
        }
      });
    }
  }
}

TEST_CASE("chain and pattern text") {
  CHECK(format_chain(parse_chain("A:1:B:2:A")) == "A:1:B:2:A");
  const OverlapChain e = parse_chain("A:1:B:2:A");
  CHECK(e.labels == std::vector<Label>{Label::A, Label::B, Label::A});
  CHECK(e.overlaps == std::vector<std::size_t>{1, 2});
  CHECK(format_pattern(parse_pattern("A,B:1:A")) == "A,B:1:A");
  CHECK(parse_pattern("").empty());
  CHECK_THROWS_AS(parse_chain("A:1"), ParseError);
  CHECK_THROWS_AS(parse_chain("A:x:B"), ParseError);
  CHECK_THROWS_AS(parse_chain("C"), ParseError);
  CHECK_THROWS_AS(parse_chain(""), ParseError);
}

TEST_CASE("chain enumeration respects its limits") {
  const WordPair p = pair("HH", "TT");
  std::size_t visited = 0;
  for_each_chain(p, ChainLimits{5, 8}, false, [&](const OverlapChain& e) {
    CHECK(e.realized_length(2) <= 5);
    ++visited;
  });
  // HH, HHH, HHHH, HHHHH and the same with T
  CHECK(visited == 8);
  visited = 0;
  for_each_chain(p, ChainLimits{32, 2}, false, [&](const OverlapChain& e) {
    CHECK(e.size() <= 2);
    ++visited;
  });
  CHECK(visited == 4);
}
