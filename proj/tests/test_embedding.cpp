#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "fles/embedding.hpp"
#include "fles/semantics.hpp"
#include "oracles.hpp"

using namespace fles;

namespace {

Configuration only(const StructurePtr& s) { return epsilon_free(maximal_configurations(s).front()); }

oracle::Poset poset_of(const Configuration& c) { return oracle::poset(c.structure().raw(), c.members()); }

}  // namespace

TEST_CASE("necessary but not sufficient, then sufficient") {
  auto c1 = only(fixtures::structure1());
  auto c2 = only(fixtures::structure2());
  auto c3 = only(fixtures::structure3());

  auto phi = find_necessary(c1, c2);
  REQUIRE(phi);
  CHECK(is_necessary(*phi));
  CHECK(phi->image(1) == 1);
  CHECK(phi->image(2) == 2);
  CHECK(phi->image(3) == 3);
  CHECK_FALSE(is_sufficient(*phi));
  auto w = check_sufficient(*phi);
  REQUIRE(w.witness);
  CHECK(c1.concurrent(w.witness->first, w.witness->second));

  auto psi = find_necessary(c3, c2);
  REQUIRE(psi);
  CHECK(is_sufficient(*psi));
  CHECK(check_sufficient(*psi).sufficient());
}

TEST_CASE("no necessary embedding across different label counts") {
  auto a = only(fixtures::two_parallel());
  auto b = only(fixtures::structure3());
  CHECK_FALSE(find_necessary(a, b));
}

TEST_CASE("identity is sufficient") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto s = oracle::random_order(rng, oracle::random_labels(rng, 6, 2), 0.3);
    auto c = only(s);
    std::vector<std::size_t> id(c.size());
    std::iota(id.begin(), id.end(), 0);
    const Embedding e{c, c, id};
    REQUIRE(is_necessary(e));
    REQUIRE(check_sufficient(e).sufficient());
    REQUIRE(find_necessary(c, c));
  }
}

TEST_CASE("check_sufficient rejects non-necessary maps") {
  auto c1 = only(fixtures::structure3());
  Embedding bad{c1, c1, {0, 3, 2, 1}};
  CHECK_FALSE(is_necessary(bad));
  CHECK_THROWS_AS(check_sufficient(bad), std::invalid_argument);
}

TEST_CASE("split requires concurrency") {
  auto c = only(fixtures::structure1());
  CHECK_NOTHROW(split(c, 1, 2));
  CHECK_THROWS_AS(split(c, 2, 3), std::invalid_argument);
  auto left = split(c, 1, 2);
  auto right = split(c, 2, 1);
  CHECK(language(left) == Language({parse_word("A B A")}));
  CHECK(language(right) == Language({parse_word("B A A")}));
}

TEST_CASE("search agrees with brute-force bijections and shared words") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 600; ++i) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const auto labels = oracle::random_labels(rng, k, 1 + i % 3);
    auto a = only(oracle::random_order(rng, labels, 0.35));
    auto b = only(oracle::random_order(rng, labels, 0.35));
    const auto pa = poset_of(a);
    const auto pb = poset_of(b);
    const auto phi = find_necessary(a, b);
    REQUIRE(phi.has_value() == oracle::exists_necessary(pa, pb));
    const auto wa = oracle::words(pa);
    const auto wb = oracle::words(pb);
    bool share = false;
    for (const auto& w : wa) share = share || wb.count(w);
    REQUIRE(phi.has_value() == share);
    if (phi) {
      REQUIRE(is_necessary(*phi));
      REQUIRE(is_sufficient(*phi) == check_sufficient(*phi).sufficient());
      if (is_sufficient(*phi)) REQUIRE(oracle::includes(wb, wa));
    }
  }
}
