#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "fles/benchgen.hpp"
#include "fles/inclusion.hpp"
#include "fles/reductions.hpp"
#include "fles/semantics.hpp"
#include "oracles.hpp"

using namespace fles;

TEST_CASE("equal languages are included both ways") {
  auto a = fixtures::two_parallel();
  auto b = fixtures::two_branches();
  CHECK(check_inclusion(a, b).included);
  CHECK(check_inclusion(b, a).included);
}

TEST_CASE("chain included in the structure with one ordered pair") {
  auto v = check_inclusion(fixtures::structure3(), fixtures::structure2());
  CHECK(v.included);
  CHECK_FALSE(v.counterexample);
}

TEST_CASE("counterexample is the refinement with word BAA") {
  auto v = check_inclusion(fixtures::structure1(), fixtures::structure2());
  REQUIRE_FALSE(v.included);
  REQUIRE(v.counterexample);
  CHECK(to_string(v.counterexample->word) == "B A A");
  CHECK(language(v.counterexample->configuration) == Language({parse_word("B A A")}));
  CHECK(v.stats.splits == 1);
  CHECK(v.stats.embeddings_tried >= 2);
}

TEST_CASE("check_config corner cases") {
  auto s = fixtures::structure3();
  auto c = epsilon_free(maximal_configurations(s).front());
  auto r = check_config(c, {});
  CHECK_FALSE(r.included);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->members() == c.members());

  auto bottom = EventStructure::create(RawStructure::with_bottom());
  auto b = maximal_configurations(bottom).front();
  CHECK(check_config(b, {b}).included);

  auto p = maximal_configurations(allpar(3)).front();
  InclusionStats stats;
  CHECK(check_config(p, {p}, &stats).included);
  CHECK(stats.splits == 0);
}

TEST_CASE("inclusion agrees with brute-force languages") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    auto a = oracle::random_structure(rng, {.max_events = 6, .labels = 2});
    auto b = oracle::random_structure(rng, {.max_events = 6, .labels = 2});
    const auto la = oracle::language(a);
    const auto lb = oracle::language(b);
    const auto v = check_inclusion(a, b);
    REQUIRE(v.included == oracle::includes(lb, la));
    if (!v.included) {
      REQUIRE(la.count(v.counterexample->word));
      REQUIRE_FALSE(lb.count(v.counterexample->word));
      const Language refined = language(v.counterexample->configuration);
      for (const auto& w : refined.words()) {
        REQUIRE(la.count(w));
        REQUIRE_FALSE(lb.count(w));
      }
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    auto a = oracle::random_structure(rng, {.max_events = 8, .labels = 2, .cause_p = 0.2, .conflict_p = 0.2});
    auto b = oracle::random_structure(rng, {.max_events = 8, .labels = 2, .cause_p = 0.2, .conflict_p = 0.2});
    const auto s = check_inclusion_serial(a, b);
    for (int t : {1, 2, 4}) {
      const auto p = check_inclusion(a, b, {{}, t});
      REQUIRE(p.included == s.included);
      REQUIRE(p.stats == s.stats);
      if (!s.included) {
        REQUIRE(p.counterexample->word == s.counterexample->word);
        REQUIRE(p.counterexample->configuration == s.counterexample->configuration);
      }
    }
  }
}

TEST_CASE("membership examples") {
  auto a = fixtures::two_parallel();
  CHECK(membership(parse_word("A B"), a).member);
  CHECK(membership(parse_word("B A"), a).member);
  CHECK_FALSE(membership(parse_word("A A"), a).member);
  CHECK_FALSE(membership(parse_word("A"), a).member);
  CHECK_THROWS_AS(membership(Word{Label::intern("A"), Label::epsilon()}, a), std::invalid_argument);

  auto cycle = hc_structure(DiGraph{3, {{0, 1}, {1, 2}, {2, 0}}});
  CHECK(membership(parse_word("x x x"), cycle).member);
}

TEST_CASE("membership agrees with enumeration and yields full traces") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 150; ++i) {
    auto s = oracle::random_structure(rng, {.max_events = 7, .labels = 2, .cause_p = 0.3, .conflict_p = 0.15, .epsilon_p = 0.3});
    const auto lang = oracle::language(s);
    for (const auto& w : oracle::all_words(oracle::alphabet(s), 6)) {
      const auto r = membership(w, s);
      REQUIRE(r.member == (lang.count(w) > 0));
      if (r.member) {
        REQUIRE(r.witness);
        REQUIRE(is_trace(*s, *r.witness));
        REQUIRE(word_of(*s, *r.witness) == w);
      }
    }
  }
}

TEST_CASE("split cap is a resource error") {
  InclusionOptions tight;
  tight.limits.max_splits = 0;
  CHECK_THROWS_AS(check_inclusion(fixtures::structure1(), fixtures::structure2(), tight), ResourceLimitExceeded);
}
