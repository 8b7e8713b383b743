#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "classifier.hpp"
#include "corpus.hpp"
#include "topology_enum.hpp"

namespace fuzzytop {

/// Row kinds of the implication catalogue: a proved implication between two
/// membership classes, a direction known (or claimed) to fail, or a pair of
/// classes independent in both directions.
enum class EdgeStatus { theorem, converse_false, independent };

/// One row of the catalogue. `from` and `to` are family tags naming the
/// closed form of a class ("closed", "g", "s", ..., "weakly"); `basis` states
/// in one line why the row is what it is. For converse_false rows the
/// direction written here is the failing one; witnesses for those are
/// recovered by the miner, not stored.
struct ImplicationEdge {
  std::string_view from;
  std::string_view to;
  EdgeStatus status;
  std::string_view basis;
};

inline const std::vector<std::string_view>& family_tags() {
  static const std::vector<std::string_view> tags = {
      "closed", "g",   "s",  "p",  "alpha", "sp",  "sg",     "alphag",
      "galpha", "spg", "pg", "gs", "gp",    "gsp", "gstars", "weakly"};
  return tags;
}

/// The closed-form class behind a family tag.
inline SetClass class_for_tag(std::string_view tag) {
  if (tag == "closed") return SetClass::closed;
  if (tag == "g") return SetClass::g_closed;
  if (tag == "s") return SetClass::s_closed;
  if (tag == "p") return SetClass::p_closed;
  if (tag == "alpha") return SetClass::alpha_closed;
  if (tag == "sp") return SetClass::sp_closed;
  if (tag == "sg") return SetClass::sg_closed;
  if (tag == "alphag") return SetClass::alphag_closed;
  if (tag == "galpha") return SetClass::galpha_closed;
  if (tag == "spg") return SetClass::spg_closed;
  if (tag == "pg") return SetClass::pg_closed;
  if (tag == "gs") return SetClass::gs_closed;
  if (tag == "gp") return SetClass::gp_closed;
  if (tag == "gsp") return SetClass::gsp_closed;
  if (tag == "gstars") return SetClass::gstars_closed;
  if (tag == "weakly") return SetClass::weakly_closed;
  throw UnknownIdError("unknown family tag '" + std::string(tag) + "'");
}

/// The checked-in implication table: the data verify_diagram proves, the
/// miner hunts witnesses for, and graph renders.
inline const std::vector<ImplicationEdge>& implication_catalogue() {
  static const std::vector<ImplicationEdge> edges = {
      // proved implications
      {"closed", "alpha", EdgeStatus::theorem,
       "a closed set equals its closure, so cl(int(cl A)) <= cl A = A"},
      {"closed", "g", EdgeStatus::theorem,
       "cl A = A lies below every open superset"},
      {"closed", "alphag", EdgeStatus::theorem,
       "acl A <= cl A = A lies below every open superset"},
      {"closed", "weakly", EdgeStatus::theorem,
       "cl A = A lies below every semi-open superset"},
      {"weakly", "g", EdgeStatus::theorem,
       "open supersets are semi-open, so the guard family only grows"},
      {"alpha", "s", EdgeStatus::theorem,
       "int(cl A) <= cl(int(cl A)) <= A"},
      {"alpha", "p", EdgeStatus::theorem,
       "cl(int A) <= cl(int(cl A)) <= A"},
      {"s", "sp", EdgeStatus::theorem,
       "int(cl(int A)) <= int(cl A) <= A"},
      {"s", "sg", EdgeStatus::theorem,
       "a semi-closed set is its own semi-closure"},
      {"s", "gstars", EdgeStatus::theorem,
       "scl A = A lies below every superset"},
      {"gstars", "sg", EdgeStatus::theorem,
       "semi-open guards are gs-open guards"},
      {"alpha", "alphag", EdgeStatus::theorem,
       "an alpha-closed set is its own alpha-closure"},
      {"p", "pg", EdgeStatus::theorem,
       "a pre-closed set is its own pre-closure"},
      {"sp", "spg", EdgeStatus::theorem,
       "a semi-pre-closed set is its own semi-pre-closure"},
      // converses known or claimed to fail (the direction written is the bad one)
      {"alpha", "closed", EdgeStatus::converse_false, "refuted by witness"},
      {"g", "closed", EdgeStatus::converse_false, "refuted by witness"},
      {"alphag", "closed", EdgeStatus::converse_false, "refuted by witness"},
      {"weakly", "closed", EdgeStatus::converse_false, "refuted by witness"},
      {"g", "weakly", EdgeStatus::converse_false, "refuted by witness"},
      {"s", "alpha", EdgeStatus::converse_false, "refuted by witness"},
      {"p", "alpha", EdgeStatus::converse_false, "refuted by witness"},
      {"sp", "s", EdgeStatus::converse_false, "refuted by witness"},
      {"sg", "s", EdgeStatus::converse_false, "refuted by witness"},
      {"gstars", "s", EdgeStatus::converse_false, "refuted by witness"},
      {"sg", "gstars", EdgeStatus::converse_false, "refuted by witness"},
      {"alphag", "alpha", EdgeStatus::converse_false, "refuted by witness"},
      {"pg", "p", EdgeStatus::converse_false, "refuted by witness"},
      {"spg", "sp", EdgeStatus::converse_false, "refuted by witness"},
      // classes claimed independent from weak closedness. For six of them
      // (sg, alphag, galpha, gs, gp, gsp) the weakly-to-class direction is in
      // fact provable -- the kernel operator shrinks below cl while the guard
      // family shrinks below the semi-open sets -- so only one witness
      // direction can exist, and mining reports the other as not found.
      {"weakly", "s", EdgeStatus::independent, "witnesses in both directions"},
      {"weakly", "p", EdgeStatus::independent, "witnesses in both directions"},
      {"weakly", "alpha", EdgeStatus::independent,
       "witnesses in both directions"},
      {"weakly", "sp", EdgeStatus::independent, "witnesses in both directions"},
      {"weakly", "sg", EdgeStatus::independent,
       "claimed; the weakly-to-sg direction is provable"},
      {"weakly", "alphag", EdgeStatus::independent,
       "claimed; the weakly-to-alphag direction is provable"},
      {"weakly", "galpha", EdgeStatus::independent,
       "claimed; the weakly-to-galpha direction is provable"},
      {"weakly", "spg", EdgeStatus::independent,
       "witnesses in both directions"},
      {"weakly", "pg", EdgeStatus::independent, "witnesses in both directions"},
      {"weakly", "gs", EdgeStatus::independent,
       "claimed; the weakly-to-gs direction is provable"},
      {"weakly", "gp", EdgeStatus::independent,
       "claimed; the weakly-to-gp direction is provable"},
      {"weakly", "gsp", EdgeStatus::independent,
       "claimed; the weakly-to-gsp direction is provable"},
  };
  return edges;
}

struct DiagramViolation {
  std::string edge;   // "from=>to"
  std::string space;  // label of the space the violation lives on
  std::string set;    // rendering of the violating set
};

/// Checks every proved implication of the catalogue against every grid-valued
/// set of the given space. An empty result means the diagram is sound there.
inline std::vector<DiagramViolation> verify_diagram(
    const Classifier& clf, std::string_view space_label) {
  std::vector<DiagramViolation> violations;
  for (const ImplicationEdge& edge : implication_catalogue()) {
    if (edge.status != EdgeStatus::theorem) continue;
    const SetClass from = class_for_tag(edge.from);
    const SetClass to = class_for_tag(edge.to);
    for (std::size_t i = 0; i < clf.universe_size(); ++i)
      if (clf.is(from, i) && !clf.is(to, i))
        violations.push_back({std::string(edge.from) + "=>" +
                                  std::string(edge.to),
                              std::string(space_label),
                              to_string(clf.universe()[i])});
  }
  return violations;
}

}  // namespace fuzzytop
