#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagram.hpp"

namespace fuzzytop {

/// One mined example: the role it plays in the target claim, the label of the
/// space it lives on, and the set itself.
struct MineWitness {
  std::string role;
  std::string space;
  FuzzySet set;
};

struct MineResult {
  std::string id;
  bool found = false;
  std::size_t budget = 0;
  std::size_t spent = 0;
  std::vector<MineWitness> witnesses;
};

struct MineTarget {
  std::string id;
  std::string description;
};

inline std::size_t default_mine_budget() { return 200000; }

/// Every id mine() accepts.
inline const std::vector<MineTarget>& mine_catalogue() {
  static const std::vector<MineTarget> targets = [] {
    std::vector<MineTarget> out = {
        {"Rem2.4",
         "two weakly closed sets whose meet is not weakly closed"},
        {"Rem2.6",
         "a finite family of weakly closed sets whose join is not weakly "
         "closed"},
        {"Rem2.8", "two weakly open sets whose join is not weakly open"},
        {"Def2.13",
         "a set equal to its weak closure that is not weakly closed"},
    };
    for (const ImplicationEdge& edge : implication_catalogue()) {
      if (edge.status == EdgeStatus::converse_false) {
        // the row direction is the failing one: hunt a set in `from` \ `to`
        out.push_back({"conv:" + std::string(edge.to) + "=>" +
                           std::string(edge.from),
                       "a " + std::string(edge.from) + " set that is not " +
                           std::string(edge.to)});
      } else if (edge.status == EdgeStatus::independent) {
        out.push_back({"indep:" + std::string(edge.to) + "|" +
                           std::string(edge.from),
                       "sets separating " + std::string(edge.to) + " and " +
                           std::string(edge.from) + " in both directions"});
      }
    }
    return out;
  }();
  return targets;
}

namespace detail {

/// Runs body(label, classifier) over the miner's search universe in its fixed
/// deterministic order: the corpus spaces, then every crisp topology on one,
/// two and three points, then every three-valued topology on one and two
/// points. body returns false to stop.
inline void for_each_mine_space(
    const std::function<bool(const std::string&, const Classifier&)>& body) {
  for (const auto& [name, text] : corpus_texts()) {
    const Space space = load_space(text);
    if (!body(name, Classifier(space.topology()))) return;
  }
  const std::vector<std::string> point_pool = {"a", "b", "c"};
  const auto sweep = [&](const Grid& grid, std::size_t max_points,
                         const std::string& prefix) {
    for (std::size_t k = 1; k <= max_points; ++k) {
      const auto carrier = make_carrier(std::vector<std::string>(
          point_pool.begin(), point_pool.begin() + k));
      const auto topologies = enumerate_topologies(carrier, grid);
      for (std::size_t i = 0; i < topologies.size(); ++i) {
        const std::string label =
            prefix + std::to_string(k) + "_" + std::to_string(i);
        if (!body(label, Classifier(topologies[i]))) return false;
      }
    }
    return true;
  };
  if (!sweep(Grid::crisp(), 3, "crisp")) return;
  sweep(Grid({Rat(1, 2)}), 2, "tri");
}

/// Rebuilds one space of the mining universe from its label.
inline Space mine_space(std::string_view label) {
  for (const auto& [name, text] : corpus_texts())
    if (name == label) return load_space(text);
  const auto parse_label = [&](std::string_view prefix,
                               const Grid& grid) -> std::optional<Space> {
    if (label.size() <= prefix.size() || label.substr(0, prefix.size()) != prefix)
      return std::nullopt;
    const std::string_view rest = label.substr(prefix.size());
    const std::size_t underscore = rest.find('_');
    if (underscore == std::string_view::npos) return std::nullopt;
    std::size_t k = 0;
    std::size_t idx = 0;
    try {
      k = std::stoul(std::string(rest.substr(0, underscore)));
      idx = std::stoul(std::string(rest.substr(underscore + 1)));
    } catch (const std::exception&) {
      throw UnknownIdError("bad space label '" + std::string(label) + "'");
    }
    const std::vector<std::string> point_pool = {"a", "b", "c"};
    if (k == 0 || k > point_pool.size())
      throw UnknownIdError("bad space label '" + std::string(label) + "'");
    const auto carrier = make_carrier(
        std::vector<std::string>(point_pool.begin(), point_pool.begin() + k));
    const auto topologies = enumerate_topologies(carrier, grid);
    if (idx >= topologies.size())
      throw UnknownIdError("bad space label '" + std::string(label) + "'");
    return Space(std::string(label), topologies[idx], {});
  };
  if (auto space = parse_label("crisp", Grid::crisp())) return *space;
  if (auto space = parse_label("tri", Grid({Rat(1, 2)}))) return *space;
  throw UnknownIdError("unknown space label '" + std::string(label) + "'");
}

}  // namespace detail

/// Rebuilds a space of the mining universe from a MineWitness space label, so
/// callers can re-verify mined claims independently.
inline Space mine_space(std::string_view label) { return detail::mine_space(label); }

/// Searches the fixed space universe for a witness of the given claim id.
/// Deterministic: the universe order, the canonical set order and the budget
/// fully determine the result. Runs single-threaded. A not-found result
/// reports how much budget was spent; found results carry the witnesses.
inline MineResult mine(std::string_view id,
                       std::size_t budget = default_mine_budget()) {
  bool known = false;
  for (const MineTarget& target : mine_catalogue())
    if (target.id == id) known = true;
  if (!known) throw UnknownIdError("unknown mining id '" + std::string(id) + "'");

  MineResult result;
  result.id = std::string(id);
  result.budget = budget;
  std::size_t remaining = budget;

  // Each candidate evaluation spends one unit; returns false when exhausted.
  const auto spend = [&remaining]() {
    if (remaining == 0) return false;
    --remaining;
    return true;
  };

  const std::string sid(id);
  if (sid == "Rem2.4" || sid == "Rem2.8") {
    const SetClass cls =
        sid == "Rem2.4" ? SetClass::weakly_closed : SetClass::weakly_open;
    detail::for_each_mine_space([&](const std::string& label,
                                    const Classifier& clf) {
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < clf.universe_size(); ++i)
        if (clf.is(cls, i)) pool.push_back(i);
      for (std::size_t x = 0; x < pool.size(); ++x)
        for (std::size_t y = x + 1; y < pool.size(); ++y) {
          if (!spend()) return false;
          const FuzzySet& a = clf.universe()[pool[x]];
          const FuzzySet& b = clf.universe()[pool[y]];
          const FuzzySet combined =
              sid == "Rem2.4" ? meet(a, b) : join(a, b);
          if (!clf.is(cls, combined)) {
            result.found = true;
            result.witnesses = {{"first", label, a},
                                {"second", label, b},
                                {sid == "Rem2.4" ? "meet" : "join", label,
                                 combined}};
            return false;
          }
        }
      return true;
    });
  } else if (sid == "Rem2.6") {
    detail::for_each_mine_space([&](const std::string& label,
                                    const Classifier& clf) {
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < clf.universe_size(); ++i)
        if (clf.is(SetClass::weakly_closed, i)) pool.push_back(i);
      // families of 2..4 distinct weakly closed sets, joined
      std::vector<std::size_t> picked;
      const std::function<bool(std::size_t, std::size_t)> descend =
          [&](std::size_t start, std::size_t want) -> bool {
        if (want == 0) {
          if (!spend()) return false;
          FuzzySet acc = FuzzySet::zero(clf.topology().carrier());
          for (const std::size_t i : picked)
            acc = join(acc, clf.universe()[i]);
          if (!clf.is(SetClass::weakly_closed, acc)) {
            result.found = true;
            for (std::size_t k = 0; k < picked.size(); ++k)
              result.witnesses.push_back({"member " + std::to_string(k + 1),
                                          label, clf.universe()[picked[k]]});
            result.witnesses.push_back({"join", label, acc});
            return false;
          }
          return true;
        }
        for (std::size_t i = start; i + want <= pool.size(); ++i) {
          picked.push_back(pool[i]);
          const bool keep_going = descend(i + 1, want - 1);
          picked.pop_back();
          if (!keep_going) return false;
        }
        return true;
      };
      for (std::size_t size = 2; size <= 4 && size <= pool.size(); ++size)
        if (!descend(0, size)) return false;
      return true;
    });
  } else if (sid == "Def2.13") {
    detail::for_each_mine_space(
        [&](const std::string& label, const Classifier& clf) {
          for (std::size_t i = 0; i < clf.universe_size(); ++i) {
            if (!spend()) return false;
            if (clf.weak_closure_of(i) == clf.universe()[i] &&
                !clf.is(SetClass::weakly_closed, i)) {
              result.found = true;
              result.witnesses = {{"fixed point", label, clf.universe()[i]}};
              return false;
            }
          }
          return true;
        });
  } else if (sid.rfind("conv:", 0) == 0) {
    // "conv:P=>Q": refute Q=>P with a set in P minus Q ... the target of the
    // catalogued theorem P=>Q is the class the witness must be in.
    const std::size_t arrow = sid.find("=>");
    const SetClass have = class_for_tag(
        std::string_view(sid).substr(arrow + 2));
    const SetClass lack =
        class_for_tag(std::string_view(sid).substr(5, arrow - 5));
    detail::for_each_mine_space(
        [&](const std::string& label, const Classifier& clf) {
          for (std::size_t i = 0; i < clf.universe_size(); ++i) {
            if (!spend()) return false;
            if (clf.is(have, i) && !clf.is(lack, i)) {
              result.found = true;
              result.witnesses = {{std::string(class_name(have)) + " but not " +
                                       std::string(class_name(lack)),
                                   label, clf.universe()[i]}};
              return false;
            }
          }
          return true;
        });
  } else {  // indep:<class>|weakly
    const std::size_t bar = sid.find('|');
    const SetClass cls = class_for_tag(std::string_view(sid).substr(6, bar - 6));
    const SetClass weakly = class_for_tag(std::string_view(sid).substr(bar + 1));
    std::optional<MineWitness> first;   // cls without weakly
    std::optional<MineWitness> second;  // weakly without cls
    detail::for_each_mine_space(
        [&](const std::string& label, const Classifier& clf) {
          for (std::size_t i = 0; i < clf.universe_size(); ++i) {
            if (first && second) return false;
            if (!spend()) return false;
            if (!first && clf.is(cls, i) && !clf.is(weakly, i))
              first = {std::string(class_name(cls)) + " but not " +
                           std::string(class_name(weakly)),
                       label, clf.universe()[i]};
            if (!second && clf.is(weakly, i) && !clf.is(cls, i))
              second = {std::string(class_name(weakly)) + " but not " +
                            std::string(class_name(cls)),
                        label, clf.universe()[i]};
          }
          return !(first && second);
        });
    if (first && second) {
      result.found = true;
      result.witnesses = {*first, *second};
    }
  }

  result.spent = budget - remaining;
  return result;
}

}  // namespace fuzzytop
