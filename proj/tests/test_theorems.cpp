#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace fuzzytop;
using testutil::crisp;

namespace {

const Classifier& four_point() {
  static const Classifier clf(corpus_space("ex2_5").topology());
  return clf;
}

CheckOptions cap3() {
  CheckOptions options;
  options.family_cap = 3;
  return options;
}

}  // namespace

TEST_CASE("claim catalogue", "[theorems]") {
  const std::vector<std::string> want = {"2.3", "2.7", "2.9", "2.10", "2.12",
                                         "4.1", "4.5", "4.6", "4.7", "4.8",
                                         "4.9", "4.13", "4.14", "4.15", "4.16"};
  CHECK(theorem_catalogue() == want);
  for (const std::string& id : want)
    CHECK(theorem_takes_set(id) ==
          (id == "4.8" || id == "4.9" || id == "4.15" || id == "4.16"));
  CHECK(theorem_status_name(TheoremStatus::holds) == "holds");
  CHECK(theorem_status_name(TheoremStatus::vacuous) == "vacuous");
  CHECK(theorem_status_name(TheoremStatus::counterexample) ==
        "counterexample");
}

TEST_CASE("unknown and misused ids are rejected", "[theorems]") {
  const Classifier& clf = four_point();
  CHECK_THROWS_AS(check_theorem(clf, "9.9"), UnknownIdError);
  const FuzzySet u = crisp(clf.topology().carrier(), "a");
  CHECK_THROWS_AS(check_theorem(clf, "2.3", u), ValidationError);
  CHECK_NOTHROW(check_theorem(clf, "4.16", u));
}

TEST_CASE("every catalogued claim passes on the four-point space",
          "[theorems]") {
  const Classifier& clf = four_point();
  for (const std::string& id : theorem_catalogue()) {
    const TheoremVerdict verdict = check_theorem(clf, id, std::nullopt, cap3());
    INFO(id << ": " << verdict.witness);
    CHECK(verdict.status == TheoremStatus::holds);
    CHECK(verdict.theorem == id);
  }
}

TEST_CASE("no claim is refuted on any reference space", "[theorems]") {
  for (const std::string& name : corpus_names()) {
    const Classifier clf(corpus_space(name).topology());
    for (const std::string& id : theorem_catalogue()) {
      const TheoremVerdict verdict =
          check_theorem(clf, id, std::nullopt, cap3());
      INFO(name << " " << id << ": " << verdict.witness);
      CHECK(verdict.status != TheoremStatus::counterexample);
    }
  }
}

TEST_CASE("join stability evidence counts", "[theorems]") {
  // 136 unordered pairs of the 16 crisp sets; 45 pairs of weakly closed ones
  // (the 9-member family gives 9*10/2 hypothesis hits).
  const TheoremVerdict verdict = check_theorem(four_point(), "2.3");
  CHECK(verdict.status == TheoremStatus::holds);
  CHECK(verdict.instances_checked == 136);
  CHECK(verdict.hypothesis_hits == 45);
}

TEST_CASE("open g-closed sets force weak closedness", "[theorems]") {
  const TheoremVerdict verdict = check_theorem(four_point(), "2.10");
  CHECK(verdict.status == TheoremStatus::holds);
  CHECK(verdict.instances_checked == 16);
  CHECK(verdict.hypothesis_hits == 2);
}

TEST_CASE("claims accept an explicit relative set", "[theorems]") {
  const Classifier& clf = four_point();
  const Space space = corpus_space("ex2_5");
  const FuzzySet* f = space.find_set("F");
  REQUIRE(f != nullptr);
  for (const char* id : {"4.8", "4.9", "4.15", "4.16"}) {
    const TheoremVerdict verdict = check_theorem(clf, id, *f, cap3());
    INFO(id << ": " << verdict.witness);
    CHECK(verdict.status != TheoremStatus::counterexample);
  }
}

TEST_CASE("claim checks are deterministic", "[theorems]") {
  const Classifier& clf = four_point();
  const TheoremVerdict a = check_theorem(clf, "4.6", std::nullopt, cap3());
  const TheoremVerdict b = check_theorem(clf, "4.6", std::nullopt, cap3());
  CHECK(a.status == b.status);
  CHECK(a.instances_checked == b.instances_checked);
  CHECK(a.hypothesis_hits == b.hypothesis_hits);
  CHECK(a.witness == b.witness);
}

TEST_CASE("family cap bounds the searched families", "[theorems]") {
  const Classifier& clf = four_point();
  CheckOptions tiny;
  tiny.family_cap = 1;
  const TheoremVerdict small = check_theorem(clf, "2.3", std::nullopt, tiny);
  const TheoremVerdict big = check_theorem(clf, "2.3", std::nullopt, cap3());
  CHECK(small.status == TheoremStatus::holds);
  // Pair claims need two sets; the counts cannot shrink when the cap grows.
  CHECK(big.instances_checked >= small.instances_checked);
}
