#pragma once

#include <json.hpp>

#include "compactness.hpp"
#include "mining.hpp"
#include "theorems.hpp"

namespace fuzzytop {

using Json = nlohmann::ordered_json;

inline Json to_json(const FuzzySet& set) {
  Json out = Json::object();
  for (std::size_t i = 0; i < set.size(); ++i)
    out[set.carrier()->point(i)] = to_string(set[i]);
  return out;
}

inline Json to_json(const ClassReport& report) {
  Json classes = Json::object();
  for (const SetClass c : all_set_classes())
    classes[std::string(class_name(c))] = report[c];
  Json out = Json::object();
  if (!report.set_name.empty()) out["set"] = report.set_name;
  out["degrees"] = to_json(report.set);
  out["classes"] = std::move(classes);
  return out;
}

inline Json to_json(const CoverReport& report) {
  Json out = Json::object();
  out["holds"] = report.holds;
  out["guard_count"] = report.guard_count;
  out["covering_count"] = report.covering_count;
  if (report.min_cover_size) out["min_cover_size"] = *report.min_cover_size;
  if (report.min_cover_size_without_top)
    out["min_cover_size_without_top"] = *report.min_cover_size_without_top;
  if (report.counter_witness) out["counter_witness"] = *report.counter_witness;
  return out;
}

inline Json to_json(const TheoremVerdict& verdict) {
  Json out = Json::object();
  out["theorem"] = verdict.theorem;
  out["status"] = std::string(theorem_status_name(verdict.status));
  if (!verdict.witness.empty()) out["witness"] = verdict.witness;
  out["instances_checked"] = verdict.instances_checked;
  out["hypothesis_hits"] = verdict.hypothesis_hits;
  return out;
}

inline Json to_json(const MineResult& result) {
  Json out = Json::object();
  out["id"] = result.id;
  out["found"] = result.found;
  out["budget"] = result.budget;
  out["spent"] = result.spent;
  Json witnesses = Json::array();
  for (const MineWitness& w : result.witnesses) {
    Json entry = Json::object();
    entry["role"] = w.role;
    entry["space"] = w.space;
    entry["set"] = to_json(w.set);
    witnesses.push_back(std::move(entry));
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

inline Json to_json(const DiagramViolation& violation) {
  Json out = Json::object();
  out["edge"] = violation.edge;
  out["space"] = violation.space;
  out["set"] = violation.set;
  return out;
}

/// Full report for one space: per-set classifications, compactness results
/// and the theorem battery.
inline Json space_report(const Space& space, const CheckOptions& options = {}) {
  const Classifier clf(space.topology());
  Json out = Json::object();
  out["space"] = space.name();
  out["points"] = space.topology().carrier()->points();
  Json grid = Json::array();
  for (const Rat& v : space.topology().grid().degrees())
    grid.push_back(to_string(v));
  out["grid"] = std::move(grid);
  out["open_count"] = space.topology().opens().size();

  Json sets = Json::array();
  for (const auto& [name, set] : space.named_sets())
    sets.push_back(to_json(clf.classify(set, name)));
  out["sets"] = std::move(sets);

  Json compactness = Json::object();
  compactness["quasi_compact"] = to_json(is_quasi_compact(space.topology()));
  compactness["weakly_compact"] = to_json(is_weakly_compact(clf));
  compactness["weakly_closed_space"] = to_json(is_weakly_closed_space(clf));
  out["compactness"] = std::move(compactness);

  Json theorems = Json::array();
  for (const std::string& id : theorem_catalogue())
    theorems.push_back(to_json(check_theorem(clf, id, std::nullopt, options)));
  out["theorems"] = std::move(theorems);
  return out;
}

/// The implication diagram in DOT form. Solid arrows are proved implications;
/// dashed arrows mark failing directions, labeled with a mined witness when
/// one exists; dashed double arrows connect classes claimed independent.
inline std::string diagram_dot(std::size_t budget = default_mine_budget()) {
  std::string out = "digraph implications {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=box];\n";
  for (const std::string_view tag : family_tags())
    out += "  \"" + std::string(tag) + "\";\n";
  const auto witness_label = [budget](const std::string& id) -> std::string {
    const MineResult r = mine(id, budget);
    if (!r.found) return "no witness found";
    const MineWitness& w = r.witnesses.front();
    return w.space + ": " + to_string(w.set);
  };
  for (const ImplicationEdge& edge : implication_catalogue()) {
    const std::string from(edge.from);
    const std::string to(edge.to);
    if (edge.status == EdgeStatus::theorem) {
      out += "  \"" + from + "\" -> \"" + to + "\" [style=solid];\n";
    } else if (edge.status == EdgeStatus::converse_false) {
      // the row direction is the failing one; cite the refuting set
      out += "  \"" + from + "\" -> \"" + to +
             "\" [style=dashed, color=gray50, label=\"" +
             witness_label("conv:" + to + "=>" + from) + "\"];\n";
    } else {
      out += "  \"" + from + "\" -> \"" + to +
             "\" [style=dashed, dir=both, color=gray50, label=\"" +
             witness_label("indep:" + to + "|" + from) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace fuzzytop
