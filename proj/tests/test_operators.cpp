#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace fuzzytop;
using testutil::crisp;

namespace {

const CarrierPtr kAbcd = make_carrier({"a", "b", "c", "d"});

// Opens 0, {a}, {b,d}, {a,b,d}, 1.
const FuzzyTopology& four_point() {
  static const FuzzyTopology t = validate_topology(
      kAbcd, Grid(),
      {FuzzySet::zero(kAbcd), crisp(kAbcd, "a"), crisp(kAbcd, "bd"),
       crisp(kAbcd, "abd"), FuzzySet::one(kAbcd)});
  return t;
}

std::set<std::string> kind_closed_family(const FuzzyTopology& t,
                                         OperatorKind kind) {
  std::set<std::string> out;
  for (const FuzzySet& a : enumerate_grid_sets(t.carrier(), t.grid()))
    if (is_kind_closed(t, a, kind)) out.insert(testutil::letters(a));
  return out;
}

}  // namespace

TEST_CASE("operator-closed families on the four-point space", "[operators]") {
  const FuzzyTopology& t = four_point();
  CHECK(kind_closed_family(t, OperatorKind::s) ==
        testutil::family({"", "a", "c", "ac", "bd", "bcd", "abcd"}));
  CHECK(kind_closed_family(t, OperatorKind::p) ==
        testutil::family({"", "b", "c", "d", "bc", "cd", "ac", "abc", "acd",
                          "bcd", "abcd"}));
  CHECK(kind_closed_family(t, OperatorKind::alpha) ==
        testutil::family({"", "c", "ac", "bcd", "abcd"}));
  CHECK(kind_closed_family(t, OperatorKind::sp) ==
        testutil::all_but("abcd", {"abd"}));
}

TEST_CASE("kind-open means complement kind-closed", "[operators]") {
  const FuzzyTopology& t = four_point();
  for (const FuzzySet& a : enumerate_grid_sets(kAbcd, Grid()))
    for (const OperatorKind kind : all_operator_kinds) {
      CHECK(is_kind_open(t, a, kind) ==
            is_kind_closed(t, complement(a), kind));
    }
}

TEST_CASE("closed sets satisfy every operator class", "[operators]") {
  const FuzzyTopology& t = four_point();
  for (const FuzzySet& f : t.closeds())
    for (const OperatorKind kind : all_operator_kinds)
      CHECK(is_kind_closed(t, f, kind));
}

TEST_CASE("operator closures nest", "[operators]") {
  const FuzzyTopology& t = four_point();
  for (const FuzzySet& a : enumerate_grid_sets(kAbcd, Grid())) {
    const FuzzySet spc = kind_closure(t, a, OperatorKind::sp);
    const FuzzySet sc = kind_closure(t, a, OperatorKind::s);
    const FuzzySet pc = kind_closure(t, a, OperatorKind::p);
    const FuzzySet ac = kind_closure(t, a, OperatorKind::alpha);
    const FuzzySet c = closure(t, a);
    CHECK(leq(a, spc));
    CHECK(leq(spc, sc));
    CHECK(leq(sc, ac));
    CHECK(leq(ac, c));
    CHECK(leq(spc, pc));
    CHECK(leq(pc, ac));
  }
}

TEST_CASE("operator closure values on the four-point space", "[operators]") {
  const FuzzyTopology& t = four_point();
  CHECK(kind_closure(t, crisp(kAbcd, "a"), OperatorKind::alpha) ==
        crisp(kAbcd, "ac"));
  CHECK(kind_closure(t, crisp(kAbcd, "bd"), OperatorKind::alpha) ==
        crisp(kAbcd, "bcd"));
  CHECK(kind_closure(t, crisp(kAbcd, "d"), OperatorKind::s) ==
        crisp(kAbcd, "bd"));
  CHECK(kind_closure(t, crisp(kAbcd, "ab"), OperatorKind::p) ==
        crisp(kAbcd, "abc"));
  CHECK(kind_closure(t, crisp(kAbcd, "abd"), OperatorKind::sp) ==
        FuzzySet::one(kAbcd));
  CHECK(kind_closure(t, crisp(kAbcd, "b"), OperatorKind::sp) ==
        crisp(kAbcd, "b"));
}

TEST_CASE("semi-kernel is the meet of semi-open supersets", "[operators]") {
  const FuzzyTopology& t = four_point();
  // Semi-open family: 0, a, ac, bd, abd, bcd, 1.
  CHECK(semi_kernel(t, crisp(kAbcd, "a")) == crisp(kAbcd, "a"));
  CHECK(semi_kernel(t, crisp(kAbcd, "b")) == crisp(kAbcd, "bd"));
  CHECK(semi_kernel(t, crisp(kAbcd, "c")) == crisp(kAbcd, "c"));
  CHECK(semi_kernel(t, crisp(kAbcd, "ab")) == crisp(kAbcd, "abd"));
  CHECK(semi_kernel(t, crisp(kAbcd, "cd")) == crisp(kAbcd, "bcd"));
  CHECK(semi_kernel(t, FuzzySet::zero(kAbcd)) == FuzzySet::zero(kAbcd));
  CHECK(semi_kernel(t, FuzzySet::one(kAbcd)) == FuzzySet::one(kAbcd));
}

TEST_CASE("weakly closed family on the four-point space", "[operators]") {
  const FuzzyTopology& t = four_point();
  std::set<std::string> family;
  for (const FuzzySet& a : enumerate_grid_sets(kAbcd, Grid()))
    if (is_weakly_closed(t, a)) family.insert(testutil::letters(a));
  CHECK(family == testutil::family({"", "c", "ac", "bc", "cd", "abc", "acd",
                                    "bcd", "abcd"}));
}

TEST_CASE("derived verdicts where the reference table disagrees",
          "[operators]") {
  const FuzzyTopology& t = four_point();
  // These five sets are the ones whose catalogued classification conflicts
  // with exact evaluation; the derived truth is pinned here.
  CHECK_FALSE(is_weakly_closed(t, crisp(kAbcd, "ab")));    // E
  CHECK_FALSE(is_weakly_closed(t, crisp(kAbcd, "abd")));   // N
  CHECK(is_weakly_closed(t, crisp(kAbcd, "c")));           // C
  CHECK_FALSE(is_g_closed(t, crisp(kAbcd, "ad")));         // G
  CHECK_FALSE(is_kind_closed(t, crisp(kAbcd, "a"), OperatorKind::alpha));
  CHECK_FALSE(is_kind_closed(t, crisp(kAbcd, "abd"), OperatorKind::sp));
  CHECK(is_kind_closed(t, crisp(kAbcd, "cd"), OperatorKind::sp));  // J
}

TEST_CASE("weak closure and weak interior", "[operators]") {
  const FuzzyTopology& t = four_point();
  CHECK(weak_closure(t, crisp(kAbcd, "a")) == crisp(kAbcd, "ac"));
  CHECK(weak_closure(t, crisp(kAbcd, "c")) == crisp(kAbcd, "c"));
  for (const FuzzySet& a : enumerate_grid_sets(kAbcd, Grid())) {
    CHECK(leq(a, weak_closure(t, a)));
    CHECK(leq(weak_interior(t, a), a));
    CHECK(weak_interior(t, a) ==
          complement(weak_closure(t, complement(a))));
    CHECK(is_weakly_open(t, a) == is_weakly_closed(t, complement(a)));
  }
}

TEST_CASE("weakly closed sets are g-closed here", "[operators]") {
  const FuzzyTopology& t = four_point();
  for (const FuzzySet& a : enumerate_grid_sets(kAbcd, Grid()))
    if (is_weakly_closed(t, a)) CHECK(is_g_closed(t, a));
}

TEST_CASE("three-point reference space families", "[operators]") {
  const Space space = corpus_space("ex2_2");
  const FuzzyTopology& t = space.topology();
  const CarrierPtr abc = t.carrier();
  std::set<std::string> weakly, s_closed;
  for (const FuzzySet& a : enumerate_grid_sets(abc, Grid())) {
    if (is_weakly_closed(t, a)) weakly.insert(testutil::letters(a));
    if (is_kind_closed(t, a, OperatorKind::s))
      s_closed.insert(testutil::letters(a));
  }
  CHECK(weakly == testutil::family({"", "ac", "abc"}));
  CHECK(s_closed == testutil::family({"", "a", "c", "ac", "abc"}));
  // On this space all four operator families coincide.
  for (const FuzzySet& a : enumerate_grid_sets(abc, Grid()))
    for (const OperatorKind kind : all_operator_kinds)
      CHECK(is_kind_closed(t, a, kind) ==
            is_kind_closed(t, a, OperatorKind::s));
}

TEST_CASE("open-domain reference space families", "[operators]") {
  const Space space = corpus_space("ex3_6");
  const FuzzyTopology& t = space.topology();
  const CarrierPtr abc = t.carrier();
  std::set<std::string> weakly, sp_closed, p_closed;
  for (const FuzzySet& a : enumerate_grid_sets(abc, Grid())) {
    if (is_weakly_closed(t, a)) weakly.insert(testutil::letters(a));
    if (is_kind_closed(t, a, OperatorKind::sp))
      sp_closed.insert(testutil::letters(a));
    if (is_kind_closed(t, a, OperatorKind::p))
      p_closed.insert(testutil::letters(a));
  }
  CHECK(weakly == testutil::family({"", "c", "ac", "bc", "abc"}));
  CHECK(sp_closed == testutil::all_but("abc", {"ab"}));
  CHECK(p_closed == testutil::all_but("abc", {"ab"}));
}
