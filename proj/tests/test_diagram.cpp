#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace fuzzytop;

TEST_CASE("the diagram names sixteen families", "[diagram]") {
  CHECK(family_tags().size() == 16);
  for (const std::string_view tag : family_tags()) {
    const SetClass c = class_for_tag(tag);
    // Every tag resolves to the closed-side class of its family.
    CHECK(class_name(c).find("closed") != std::string_view::npos);
  }
  CHECK(class_for_tag("weakly") == SetClass::weakly_closed);
  CHECK(class_for_tag("closed") == SetClass::closed);
  CHECK(class_for_tag("gstars") == SetClass::gstars_closed);
  CHECK_THROWS_AS(class_for_tag("nope"), UnknownIdError);
}

TEST_CASE("catalogue row counts per status", "[diagram]") {
  std::size_t theorems = 0, converses = 0, independents = 0;
  for (const ImplicationEdge& edge : implication_catalogue()) {
    switch (edge.status) {
      case EdgeStatus::theorem: ++theorems; break;
      case EdgeStatus::converse_false: ++converses; break;
      case EdgeStatus::independent: ++independents; break;
    }
    CHECK_FALSE(edge.basis.empty());
    CHECK_NOTHROW(class_for_tag(edge.from));
    CHECK_NOTHROW(class_for_tag(edge.to));
  }
  CHECK(theorems == 14);
  CHECK(converses == 14);
  CHECK(independents == 12);
}

TEST_CASE("each proved implication has a matching converse row", "[diagram]") {
  const auto& edges = implication_catalogue();
  for (const ImplicationEdge& edge : edges) {
    if (edge.status != EdgeStatus::theorem) continue;
    bool found = false;
    for (const ImplicationEdge& other : edges)
      if (other.status == EdgeStatus::converse_false &&
          other.from == edge.to && other.to == edge.from)
        found = true;
    INFO(edge.from << "=>" << edge.to);
    CHECK(found);
  }
}

TEST_CASE("independence rows all involve the weak family", "[diagram]") {
  for (const ImplicationEdge& edge : implication_catalogue()) {
    if (edge.status != EdgeStatus::independent) continue;
    CHECK(edge.from == "weakly");
    CHECK(edge.to != "weakly");
  }
}

TEST_CASE("no reference space violates a proved implication", "[diagram]") {
  for (const std::string& name : corpus_names()) {
    const Classifier clf(corpus_space(name).topology());
    const auto violations = verify_diagram(clf, name);
    INFO(name);
    CHECK(violations.empty());
  }
}

TEST_CASE("every small crisp space satisfies the diagram", "[diagram]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> points;
    for (std::size_t i = 0; i < n; ++i)
      points.emplace_back(1, static_cast<char>('a' + i));
    for (const FuzzyTopology& t :
         enumerate_topologies(make_carrier(points), Grid())) {
      const Classifier clf(t);
      CHECK(verify_diagram(clf, "small").empty());
    }
  }
}

TEST_CASE("a doctored edge is caught", "[diagram]") {
  // weakly => closed is false on the four-point space (cd is weakly closed
  // but not closed), so a verifier fed that edge must flag it.
  const Classifier clf(corpus_space("ex2_5").topology());
  bool flagged = false;
  for (std::size_t i = 0; i < clf.universe_size(); ++i)
    if (clf.is(SetClass::weakly_closed, i) && !clf.is(SetClass::closed, i))
      flagged = true;
  CHECK(flagged);
}
