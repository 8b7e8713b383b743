#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace fuzzytop;
using testutil::crisp;

namespace {

const CarrierPtr kAbcd = make_carrier({"a", "b", "c", "d"});

// Opens 0, {a}, {b,d}, {a,b,d}, 1 on four points.
FuzzyTopology sample_topology() {
  return validate_topology(kAbcd, Grid(),
                           {FuzzySet::zero(kAbcd), crisp(kAbcd, "a"),
                            crisp(kAbcd, "bd"), crisp(kAbcd, "abd"),
                            FuzzySet::one(kAbcd)});
}

}  // namespace

TEST_CASE("validation accepts a closed system", "[topology]") {
  const FuzzyTopology t = sample_topology();
  CHECK(t.opens().size() == 5);
  CHECK(t.closeds().size() == 5);
  CHECK(t.is_open(crisp(kAbcd, "bd")));
  CHECK_FALSE(t.is_open(crisp(kAbcd, "b")));
  CHECK(t.is_closed(crisp(kAbcd, "ac")));
  CHECK(t.is_closed(crisp(kAbcd, "bcd")));
  CHECK_FALSE(t.is_closed(crisp(kAbcd, "bd")));
}

TEST_CASE("closed sets are exactly the complements of opens", "[topology]") {
  const FuzzyTopology t = sample_topology();
  for (const FuzzySet& u : t.opens()) CHECK(t.is_closed(complement(u)));
  for (const FuzzySet& f : t.closeds()) CHECK(t.is_open(complement(f)));
}

TEST_CASE("validation requires both constants", "[topology]") {
  CHECK_THROWS_WITH(
      validate_topology(kAbcd, Grid(),
                        {crisp(kAbcd, "a"), FuzzySet::one(kAbcd)}),
      Catch::Matchers::ContainsSubstring("constant-0"));
  CHECK_THROWS_WITH(
      validate_topology(kAbcd, Grid(),
                        {FuzzySet::zero(kAbcd), crisp(kAbcd, "a")}),
      Catch::Matchers::ContainsSubstring("constant-1"));
}

TEST_CASE("validation names the pair that breaks lattice closure",
          "[topology]") {
  CHECK_THROWS_WITH(
      validate_topology(kAbcd, Grid(),
                        {FuzzySet::zero(kAbcd), crisp(kAbcd, "ab"),
                         crisp(kAbcd, "bc"), FuzzySet::one(kAbcd)}),
      Catch::Matchers::ContainsSubstring("meet"));
  CHECK_THROWS_WITH(
      validate_topology(kAbcd, Grid(),
                        {FuzzySet::zero(kAbcd), crisp(kAbcd, "a"),
                         crisp(kAbcd, "b"), FuzzySet::one(kAbcd)}),
      Catch::Matchers::ContainsSubstring("join"));
}

TEST_CASE("validation rejects off-carrier and off-grid sets", "[topology]") {
  const CarrierPtr other = make_carrier({"x", "y"});
  CHECK_THROWS_AS(validate_topology(kAbcd, Grid(),
                                    {FuzzySet::zero(kAbcd),
                                     FuzzySet::zero(other),
                                     FuzzySet::one(kAbcd)}),
                  TopologyError);
  CHECK_THROWS_WITH(
      validate_topology(
          kAbcd, Grid(),
          {FuzzySet::zero(kAbcd),
           FuzzySet(kAbcd, {Rat(1, 2), Rat(0), Rat(0), Rat(0)}),
           FuzzySet::one(kAbcd)}),
      Catch::Matchers::ContainsSubstring("grid"));
}

TEST_CASE("duplicate opens collapse", "[topology]") {
  const FuzzyTopology t = validate_topology(
      kAbcd, Grid(),
      {FuzzySet::zero(kAbcd), crisp(kAbcd, "a"), crisp(kAbcd, "a"),
       FuzzySet::one(kAbcd), FuzzySet::one(kAbcd)});
  CHECK(t.opens().size() == 3);
}

TEST_CASE("interior is the largest open below", "[topology]") {
  const FuzzyTopology t = sample_topology();
  const auto want = [&](const std::string& set, const std::string& expect) {
    INFO("int(" << set << ")");
    CHECK(interior(t, crisp(kAbcd, set)) == crisp(kAbcd, expect));
  };
  want("", "");
  want("a", "a");
  want("b", "");
  want("ab", "a");
  want("ac", "a");
  want("cd", "");
  want("bd", "bd");
  want("abd", "abd");
  want("bcd", "bd");
  want("acd", "a");
  want("abc", "a");
  want("abcd", "abcd");
}

TEST_CASE("closure is the smallest closed above", "[topology]") {
  const FuzzyTopology t = sample_topology();
  const auto want = [&](const std::string& set, const std::string& expect) {
    INFO("cl(" << set << ")");
    CHECK(closure(t, crisp(kAbcd, set)) == crisp(kAbcd, expect));
  };
  want("", "");
  want("a", "ac");
  want("b", "bcd");
  want("c", "c");
  want("d", "bcd");
  want("ab", "abcd");
  want("ac", "ac");
  want("ad", "abcd");
  want("bc", "bcd");
  want("bd", "bcd");
  want("cd", "bcd");
  want("abc", "abcd");
  want("abd", "abcd");
  want("acd", "abcd");
  want("bcd", "bcd");
  want("abcd", "abcd");
}

TEST_CASE("interior and closure are dual", "[topology]") {
  const FuzzyTopology t = sample_topology();
  for (const FuzzySet& a : enumerate_grid_sets(kAbcd, Grid())) {
    CHECK(interior(t, a) == complement(closure(t, complement(a))));
    CHECK(leq(interior(t, a), a));
    CHECK(leq(a, closure(t, a)));
    CHECK(interior(t, interior(t, a)) == interior(t, a));
    CHECK(closure(t, closure(t, a)) == closure(t, a));
  }
}

TEST_CASE("interior rejects foreign sets", "[topology]") {
  const FuzzyTopology t = sample_topology();
  const FuzzySet foreign = FuzzySet::one(make_carrier({"x"}));
  CHECK_THROWS_AS(interior(t, foreign), CarrierMismatchError);
  CHECK_THROWS_AS(closure(t, foreign), CarrierMismatchError);
}

TEST_CASE("fuzzy opens participate in interior and closure", "[topology]") {
  const CarrierPtr ab = make_carrier({"a", "b"});
  const Grid grid({Rat(1, 2)});
  const FuzzySet half(ab, {Rat(1, 2), Rat(1, 2)});
  const FuzzyTopology t = validate_topology(
      ab, grid, {FuzzySet::zero(ab), half, FuzzySet::one(ab)});
  const FuzzySet probe(ab, {Rat(1, 2), Rat(1)});
  CHECK(interior(t, probe) == half);
  CHECK(closure(t, probe) == FuzzySet::one(ab));
  CHECK(closure(t, half) == half);
}
