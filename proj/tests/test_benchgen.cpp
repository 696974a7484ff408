#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "fles/benchgen.hpp"
#include "fles/inclusion.hpp"
#include "fles/semantics.hpp"
#include "oracles.hpp"

using namespace fles;

TEST_CASE("allpar") {
  CHECK(language(allpar(1)) == Language({parse_word("1")}));
  CHECK(language(allpar(3)).size() == 6);
  CHECK(allpar(10)->size() == 11);
  CHECK(count_maximal_configurations(allpar(7)) == 1);
  CHECK(pc_metric(allpar(6)) == doctest::Approx(6.0));
  CHECK_THROWS_AS(allpar(0), std::invalid_argument);
}

TEST_CASE("ccnfs") {
  CHECK(count_maximal_configurations(ccnfs(2)) == 2);
  CHECK(count_maximal_configurations(ccnfs(6)) == 8);
  CHECK(ccnfs(6)->size() == 1 + 6 + 8);
  CHECK_THROWS_AS(ccnfs(3), std::invalid_argument);
  auto cs = maximal_configurations(ccnfs(4));
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) CHECK((language(cs[i]) & language(cs[j])).empty());
}

TEST_CASE("sharing") {
  CHECK(language(sharing(2, 1)) == Language({parse_word("p1 s1"), parse_word("p2 s1")}));
  CHECK(sharing(5, 20)->size() == 106);
  CHECK(language(sharing(1, 1)).size() == 1);
  auto cs = maximal_configurations(sharing(4, 3));
  CHECK(cs.size() == 4);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) CHECK((language(cs[i]) & language(cs[j])).empty());
  CHECK_THROWS_AS(sharing(0, 2), std::invalid_argument);
}

TEST_CASE("generators validate") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(validate(allpar(n)->raw()).ok());
    CHECK(validate(sharing(n, n)->raw()).ok());
    if (n % 2 == 0) CHECK(validate(ccnfs(n)->raw()).ok());
  }
}

TEST_CASE("mutation examples") {
  CHECK(language(mutate(allpar(2), AddOrder{1, 2})) == Language({parse_word("1 2")}));

  auto base = fixtures::two_parallel();
  auto relabeled = mutate(base, Relabel{2, Label::intern("A")});
  CHECK(language(relabeled) == Language({parse_word("A A")}));
  auto v = check_inclusion(relabeled, base);
  CHECK_FALSE(v.included);
  CHECK(to_string(v.counterexample->word) == "A A");

  auto dropped = mutate(base, DropEvent{2});
  CHECK(language(dropped) == Language({parse_word("A")}));
  CHECK_FALSE(check_inclusion(dropped, base).included);

  CHECK(language(mutate(base, AddConflict{1, 2})) == Language({parse_word("A"), parse_word("B")}));
}

TEST_CASE("invalid mutations") {
  auto s = fixtures::two_branches();
  CHECK_THROWS_AS(mutate(s, AddOrder{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(mutate(s, AddConflict{1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(mutate(s, DropEvent{0}), std::invalid_argument);
  CHECK_THROWS_AS(mutate(s, Relabel{9, Label::intern("A")}), std::out_of_range);
  // e4 carries e1's conflict through e3, e2 does not share it.
  RawStructure raw = RawStructure::with_bottom();
  auto a = raw.add_event("A");
  auto b = raw.add_event("B");
  auto c = raw.add_event("C");
  raw.add_conflict(a, c);
  auto t = EventStructure::create(raw);
  CHECK_THROWS_AS(mutate(t, AddOrder{a, b}), std::invalid_argument);
  CHECK_NOTHROW(mutate(t, AddOrder{b, a}));
}

TEST_CASE("drop removes descendants and renumbers") {
  auto s = mutate(fixtures::two_branches(), DropEvent{1});
  CHECK(s->size() == 3);
  CHECK(language(s) == Language({parse_word("B A")}));
}

TEST_CASE("add-order never adds words") {
  std::mt19937_64 rng(4);
  int applied = 0;
  for (int i = 0; i < 400; ++i) {
    auto s = oracle::random_structure(rng, {.max_events = 6});
    for (EventId a = 1; a < s->size(); ++a)
      for (EventId b = 1; b < s->size(); ++b) {
        if (a == b || !s->concurrent(a, b) || !s->conflicts(a).is_subset_of(s->conflicts(b))) continue;
        auto m = mutate(s, AddOrder{a, b});
        REQUIRE(check_inclusion(m, s).included);
        REQUIRE(oracle::includes(oracle::language(s), oracle::language(m)));
        ++applied;
      }
  }
  CHECK(applied > 100);
}

TEST_CASE("random mutations apply and are deterministic") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    auto s = oracle::random_structure(rng);
    const auto k1 = random_mutation(s, static_cast<uint64_t>(i));
    const auto k2 = random_mutation(s, static_cast<uint64_t>(i));
    REQUIRE(describe(k1) == describe(k2));
    REQUIRE_NOTHROW(mutate(s, k1));
  }
}
