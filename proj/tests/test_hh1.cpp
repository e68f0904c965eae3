#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "qhh/generator.hpp"
#include "qhh/hh1.hpp"
#include "qhh/oracle.hpp"

using namespace qhh;

namespace {

CircuitCensus census_of(const ValidatedPresentation& vp) {
  return classify(vp, enumerate_basis(vp));
}

}  // namespace

TEST_CASE("CharSpec accepts 0 and primes only") {
  CHECK_NOTHROW(CharSpec::of(0));
  CHECK_NOTHROW(CharSpec::of(2));
  CHECK_NOTHROW(CharSpec::of(32003));
  CHECK_THROWS_AS(CharSpec::of(1), ValidationError);
  CHECK_THROWS_AS(CharSpec::of(6), ValidationError);
  CHECK_THROWS_AS(CharSpec::of(-3), ValidationError);
}

TEST_CASE("Z5 crown vanishes in any characteristic") {
  auto census = census_of(fixtures::z5_crown());
  for (long p : {0L, 2L, 3L, 5L}) {
    auto result = dim_hh1(census, CharSpec::of(p));
    CHECK(result.dimension == 0);
    CHECK_FALSE(result.vanishing_obstruction.has_value());
  }
  // the regression the example exists for: |(Z⊙B)_C| = 2 > w_C = 1
  for (const auto& c : census.circuits)
    if (c.efficient) {
      CHECK(c.zb == 2);
      CHECK(c.w == 1);
    }
}

TEST_CASE("crown family dimensions") {
  for (int n = 2; n <= 3; ++n)
    for (int m = 2; m <= 4; ++m) {
      auto census = census_of(crown_presentation(n, m));
      CHECK(dim_hh1(census, CharSpec::of(0)).dimension == m - 1);
      for (long p : {2L, 3L, 5L})
        CHECK(dim_hh1(census, CharSpec::of(p)).dimension == (m % p == 0 ? m : m - 1));
    }
}

TEST_CASE("loop dimensions via the formula") {
  auto census = census_of(fixtures::loop_aa());
  CHECK(dim_hh1(census, CharSpec::of(0)).dimension == 1);
  CHECK(dim_hh1(census, CharSpec::of(2)).dimension == 2);
  CHECK(dim_hh1(census, CharSpec::of(3)).dimension == 1);
}

TEST_CASE("per-circuit contributions") {
  auto census = census_of(fixtures::loop_aa());
  auto result = dim_hh1(census, CharSpec::of(2));
  long strong_contrib = -1, efficient_contrib = -1;
  for (const auto& [key, c] : result.per_circuit) {
    if (key.word.size() == 1) strong_contrib = c;
    if (key.word.size() == 2) efficient_contrib = c;
  }
  CHECK(strong_contrib == 1);
  CHECK(efficient_contrib == 1);  // w_C = 1, multiplicity 2 divisible by p
}

TEST_CASE("vanishing witnesses") {
  auto z7 = census_of(fixtures::z7_crown());
  for (long p : {0L, 2L, 7L}) CHECK(hh1_vanishes(z7, CharSpec::of(p)).vanishes);

  auto loop = census_of(fixtures::loop_aa());
  auto check0 = hh1_vanishes(loop, CharSpec::of(0));
  CHECK_FALSE(check0.vanishes);
  REQUIRE(check0.witness.has_value());
  CHECK(check0.witness->kind == "strong_circuit");

  auto z5 = census_of(fixtures::z5_crown());
  CHECK(hh1_vanishes(z5, CharSpec::of(0)).vanishes);
  CHECK(hh1_vanishes(z5, CharSpec::of(5)).vanishes);
}

TEST_CASE("vanishing is equivalent to dimension zero on random instances") {
  PresentationGenerator gen(GenConfig{.seed = 41});
  for (int i = 0; i < 80; ++i) {
    auto vp = gen.next();
    for (const auto& component : connected_components(vp).components) {
      auto census = census_of(component);
      for (long p : {0L, 2L, 3L, 5L}) {
        auto result = dim_hh1(census, CharSpec::of(p));
        CHECK(hh1_vanishes(census, CharSpec::of(p)).vanishes == (result.dimension == 0));
      }
    }
  }
}

TEST_CASE("the only characteristic dependence is through efficient circuits") {
  PresentationGenerator gen(GenConfig{.seed = 43});
  for (int i = 0; i < 60; ++i) {
    auto vp = gen.next();
    for (const auto& component : connected_components(vp).components) {
      auto census = census_of(component);
      long dim0 = dim_hh1(census, CharSpec::of(0)).dimension;
      for (long p : {2L, 3L, 5L}) {
        long dimp = dim_hh1(census, CharSpec::of(p)).dimension;
        CHECK(dimp - dim0 == census.efficient_count - census.efficient_pprime_count(p));
        CHECK(dimp >= dim0);
      }
    }
  }
}

TEST_CASE("total over components") {
  auto two_loops = validate(parse_presentation(
      "quiver pair\nvertex u v\narrow a u u\narrow b v v\nrelation a a\nrelation b b\n"));
  CHECK(total_hh1(connected_components(two_loops), CharSpec::of(0)) == 2);
  CHECK(total_hh1(connected_components(two_loops), CharSpec::of(2)) == 4);

  auto tree = validate(parse_presentation(
      "quiver t\nvertex u v w\narrow a u v\narrow b v w\nrelation b a\n"));
  CHECK(total_hh1(connected_components(tree), CharSpec::of(0)) == 0);

  auto z7 = fixtures::z7_crown();
  CHECK(total_hh1(connected_components(z7), CharSpec::of(3)) ==
        dim_hh1(census_of(z7), CharSpec::of(3)).dimension);
}

TEST_CASE("mixed characteristic effects on the loop a^m") {
  // circuit of a^m is efficient with multiplicity m
  for (int m : {2, 3, 4}) {
    auto census = census_of(fixtures::loop_power(m));
    long base = dim_hh1(census, CharSpec::of(0)).dimension;
    for (long p : {2L, 3L}) {
      long dimp = dim_hh1(census, CharSpec::of(p)).dimension;
      CHECK(dimp == base + (m % p == 0 ? 1 : 0));
    }
  }
}
