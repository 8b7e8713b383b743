#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compactness.hpp"

namespace fuzzytop {

/// Verdict classes for a catalogued claim: `holds` when the hypothesis was
/// met at least once and no instance failed, `vacuous` when nothing met the
/// hypothesis, `counterexample` when some instance failed.
enum class TheoremStatus { holds, vacuous, counterexample };

inline std::string_view theorem_status_name(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::holds: return "holds";
    case TheoremStatus::vacuous: return "vacuous";
    case TheoremStatus::counterexample: return "counterexample";
  }
  throw UnknownIdError("bad theorem status");
}

struct TheoremVerdict {
  std::string theorem;
  TheoremStatus status = TheoremStatus::vacuous;
  std::string witness;  // set only for counterexamples
  std::size_t instances_checked = 0;
  std::size_t hypothesis_hits = 0;
};

struct CheckOptions {
  /// Largest family size quantified over by the family-quantified claims.
  std::size_t family_cap = 4;
};

/// Ids of the checkable claims, in catalogue order. The ids are opaque keys
/// into this library's claim registry.
inline const std::vector<std::string>& theorem_catalogue() {
  static const std::vector<std::string> ids = {
      "2.3", "2.7", "2.9", "2.10", "2.12", "4.1", "4.5", "4.6",
      "4.7", "4.8", "4.9", "4.13", "4.14", "4.15", "4.16"};
  return ids;
}

/// True when the id takes an optional reference set U.
inline bool theorem_takes_set(std::string_view id) {
  return id == "4.8" || id == "4.9" || id == "4.15" || id == "4.16";
}

namespace detail {

/// Calls body(indices) for every subset of `pool` with 1..max_size members,
/// ordered by size and lexicographically within a size.
template <typename Body>
void for_each_pool_family(const std::vector<std::size_t>& pool,
                          std::size_t max_size, Body&& body) {
  std::vector<std::size_t> picked;
  const std::function<bool(std::size_t, std::size_t)> descend =
      [&](std::size_t start, std::size_t want) -> bool {
    if (want == 0) return body(picked);
    for (std::size_t i = start; i + want <= pool.size(); ++i) {
      picked.push_back(pool[i]);
      const bool keep_going = descend(i + 1, want - 1);
      picked.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  for (std::size_t size = 1; size <= max_size && size <= pool.size(); ++size)
    if (!descend(0, size)) return;
}

inline FuzzySet indices_meet(const Classifier& clf,
                             const std::vector<std::size_t>& idxs) {
  FuzzySet acc = FuzzySet::one(clf.topology().carrier());
  for (const std::size_t i : idxs) acc = meet(acc, clf.universe()[i]);
  return acc;
}

inline FuzzySet indices_join(const Classifier& clf,
                             const std::vector<std::size_t>& idxs) {
  FuzzySet acc = FuzzySet::zero(clf.topology().carrier());
  for (const std::size_t i : idxs) acc = join(acc, clf.universe()[i]);
  return acc;
}

inline std::string render_indices(const Classifier& clf,
                                  const std::vector<std::size_t>& idxs) {
  std::string out = "[";
  for (std::size_t k = 0; k < idxs.size(); ++k) {
    if (k > 0) out += ", ";
    out += to_string(clf.universe()[idxs[k]]);
  }
  return out + "]";
}

/// Every nonempty subfamily's meet is quasi-coincident with u, checked
/// subfamily by subfamily (family sizes are capped, so this stays small).
inline bool all_subfamilies_quasi_coincident(const Classifier& clf,
                                             const std::vector<std::size_t>& idxs,
                                             const FuzzySet& u) {
  const std::size_t subsets = std::size_t{1} << idxs.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    FuzzySet acc = FuzzySet::one(clf.topology().carrier());
    for (std::size_t k = 0; k < idxs.size(); ++k)
      if (mask & (std::size_t{1} << k)) acc = meet(acc, clf.universe()[idxs[k]]);
    if (!quasi_coincident(acc, u)) return false;
  }
  return true;
}

/// Some nonempty subfamily's meet is quasi-coincident with u.
inline bool some_subfamily_quasi_coincident(const Classifier& clf,
                                            const std::vector<std::size_t>& idxs,
                                            const FuzzySet& u) {
  const std::size_t subsets = std::size_t{1} << idxs.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    FuzzySet acc = FuzzySet::one(clf.topology().carrier());
    for (std::size_t k = 0; k < idxs.size(); ++k)
      if (mask & (std::size_t{1} << k)) acc = meet(acc, clf.universe()[idxs[k]]);
    if (quasi_coincident(acc, u)) return true;
  }
  return false;
}

inline std::vector<std::size_t> whole_universe(const Classifier& clf) {
  std::vector<std::size_t> out(clf.universe_size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

}  // namespace detail

/// Checks one catalogued claim against the space held by the classifier.
/// Claims parameterized by a reference set accept it as `u`; when omitted the
/// check quantifies over every grid-valued set and aggregates (a single
/// counterexample wins, otherwise holds if any instance was non-vacuous).
TheoremVerdict check_theorem(const Classifier& clf, std::string_view id,
                             const std::optional<FuzzySet>& u = std::nullopt,
                             const CheckOptions& options = {});

namespace detail {

/// "Pairs of weakly closed sets have a weakly closed join" and its dual, plus
/// the sandwich claim: all quantified over pairs of universe sets.
inline TheoremVerdict check_pair_claim(const Classifier& clf,
                                       std::string_view id) {
  TheoremVerdict verdict{std::string(id), TheoremStatus::vacuous, "", 0, 0};
  const std::size_t n = clf.universe_size();
  const auto& u = clf.universe();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (id != "2.12" && j < i) continue;
      ++verdict.instances_checked;
      bool hypothesis = false;
      bool conclusion = true;
      if (id == "2.3") {
        hypothesis = clf.is(SetClass::weakly_closed, i) &&
                     clf.is(SetClass::weakly_closed, j);
        if (hypothesis)
          conclusion = clf.is(SetClass::weakly_closed, join(u[i], u[j]));
      } else if (id == "2.7") {
        hypothesis =
            clf.is(SetClass::weakly_open, i) && clf.is(SetClass::weakly_open, j);
        if (hypothesis)
          conclusion = clf.is(SetClass::weakly_open, meet(u[i], u[j]));
      } else {  // 2.12: weakly closed A and A <= B <= cl(A) force B weakly closed
        hypothesis = clf.is(SetClass::weakly_closed, i) && leq(u[i], u[j]) &&
                     leq(u[j], clf.closure_of(i));
        if (hypothesis) conclusion = clf.is(SetClass::weakly_closed, j);
      }
      if (!hypothesis) continue;
      ++verdict.hypothesis_hits;
      if (!conclusion) {
        verdict.status = TheoremStatus::counterexample;
        verdict.witness = "A=" + to_string(u[i]) + ", B=" + to_string(u[j]);
        return verdict;
      }
    }
  if (verdict.hypothesis_hits > 0) verdict.status = TheoremStatus::holds;
  return verdict;
}

/// Weak openness coincides with the interior characterization on every set.
inline TheoremVerdict check_interior_characterization(const Classifier& clf) {
  TheoremVerdict verdict{"2.9", TheoremStatus::holds, "", 0, 0};
  for (std::size_t i = 0; i < clf.universe_size(); ++i) {
    ++verdict.instances_checked;
    ++verdict.hypothesis_hits;
    if (clf.is(SetClass::weakly_open, i) != weakly_open_by_interior(clf, i)) {
      verdict.status = TheoremStatus::counterexample;
      verdict.witness = "A=" + to_string(clf.universe()[i]);
      return verdict;
    }
  }
  return verdict;
}

/// Open g-closed sets are weakly closed.
inline TheoremVerdict check_open_g_closed(const Classifier& clf) {
  TheoremVerdict verdict{"2.10", TheoremStatus::vacuous, "", 0, 0};
  for (std::size_t i = 0; i < clf.universe_size(); ++i) {
    ++verdict.instances_checked;
    if (!(clf.is(SetClass::open, i) && clf.is(SetClass::g_closed, i))) continue;
    ++verdict.hypothesis_hits;
    if (!clf.is(SetClass::weakly_closed, i)) {
      verdict.status = TheoremStatus::counterexample;
      verdict.witness = "A=" + to_string(clf.universe()[i]);
      return verdict;
    }
  }
  if (verdict.hypothesis_hits > 0) verdict.status = TheoremStatus::holds;
  return verdict;
}

/// Weakly closed subsets inherit quasi-compactness: every open family whose
/// join dominates such a set has a finite subfamily doing the same.
inline TheoremVerdict check_weakly_closed_quasi_compact(
    const Classifier& clf, std::size_t cap) {
  TheoremVerdict verdict{"4.1", TheoremStatus::vacuous, "", 0, 0};
  const auto quasi = is_quasi_compact(clf.topology(), cap);
  const auto& opens = clf.topology().opens();
  for (std::size_t i = 0; i < clf.universe_size(); ++i) {
    ++verdict.instances_checked;
    if (!quasi.holds || !clf.is(SetClass::weakly_closed, i)) continue;
    ++verdict.hypothesis_hits;
    const FuzzySet& a = clf.universe()[i];
    bool ok = true;
    std::string witness;
    for_each_subfamily(
        opens.size(), cap, [&](const std::vector<std::size_t>& picked) {
          if (!ok) return;
          std::vector<FuzzySet> family;
          for (const std::size_t k : picked) family.push_back(opens[k]);
          if (!leq(a, family_join(family, clf.topology().carrier()))) return;
          // a covering family of opens is finite here, so it qualifies as its
          // own finite subcover; re-evaluate it in that role
          const bool has_finite_subcover =
              leq(a, family_join(family, clf.topology().carrier()));
          if (!has_finite_subcover) {
            ok = false;
            witness = render_family(family);
          }
        });
    if (!ok) {
      verdict.status = TheoremStatus::counterexample;
      verdict.witness = "A=" + to_string(a) + ", cover " + witness;
      return verdict;
    }
  }
  if (verdict.hypothesis_hits > 0) verdict.status = TheoremStatus::holds;
  return verdict;
}

/// Weak compactness holds exactly when no filterbase of weakly closed sets
/// has complements covering the space.
inline TheoremVerdict check_weak_compactness_characterization(
    const Classifier& clf, const CheckOptions& options, std::size_t cap) {
  TheoremVerdict verdict{"4.5", TheoremStatus::holds, "", 0, 0};
  const bool compact = is_weakly_compact(clf, cap).holds;
  const auto pool = class_members(clf, SetClass::weakly_closed);
  bool found_bad_filterbase = false;
  std::string bad;
  for_each_pool_family(pool, options.family_cap,
                       [&](const std::vector<std::size_t>& idxs) {
                         ++verdict.instances_checked;
                         std::vector<FuzzySet> family;
                         std::vector<FuzzySet> complements;
                         for (const std::size_t i : idxs) {
                           family.push_back(clf.universe()[i]);
                           complements.push_back(complement(family.back()));
                         }
                         const CarrierPtr& carrier = clf.topology().carrier();
                         if (is_filterbase(family, carrier) &&
                             is_one_set(family_join(complements, carrier))) {
                           found_bad_filterbase = true;
                           bad = render_family(family);
                           return false;
                         }
                         return true;
                       });
  verdict.hypothesis_hits = 1;
  if (compact == !found_bad_filterbase) return verdict;
  verdict.status = TheoremStatus::counterexample;
  verdict.witness = found_bad_filterbase
                        ? "space is weakly compact yet " + bad +
                              " is a weakly closed filterbase whose "
                              "complements cover"
                        : "space is not weakly compact yet no disqualifying "
                          "filterbase exists";
  return verdict;
}

enum class FamilyPool { any, weakly_closed, weakly_open };

inline std::vector<std::size_t> pool_indices(const Classifier& clf,
                                             FamilyPool pool) {
  switch (pool) {
    case FamilyPool::any: return whole_universe(clf);
    case FamilyPool::weakly_closed:
      return class_members(clf, SetClass::weakly_closed);
    case FamilyPool::weakly_open:
      return class_members(clf, SetClass::weakly_open);
  }
  throw UnknownIdError("bad family pool");
}

/// Evaluates "every capped filterbase from the pool (optionally restricted by
/// `qualifies`) satisfies `conclusion`". Returns nullopt when no
/// counterexample family exists, else a rendering of the first one.
template <typename Qualifies, typename Conclusion>
std::optional<std::string> find_filterbase_counterexample(
    const Classifier& clf, FamilyPool pool, const CheckOptions& options,
    std::size_t* instances, Qualifies&& qualifies, Conclusion&& conclusion) {
  const auto idxs = pool_indices(clf, pool);
  std::optional<std::string> found;
  for_each_pool_family(idxs, options.family_cap,
                       [&](const std::vector<std::size_t>& family) {
                         if (instances) ++*instances;
                         std::vector<FuzzySet> sets;
                         for (const std::size_t i : family)
                           sets.push_back(clf.universe()[i]);
                         if (!is_filterbase(sets, clf.topology().carrier()))
                           return true;
                         if (!qualifies(family)) return true;
                         if (conclusion(family)) return true;
                         found = render_indices(clf, family);
                         return false;
                       });
  return found;
}

}  // namespace detail

// Checks one catalogued claim against the space held by the classifier.
// Claims parameterized by a reference set accept it as `u`; when omitted the
// check quantifies over every grid-valued set and aggregates (a single
// counterexample wins, otherwise holds if any instance was non-vacuous).
inline TheoremVerdict check_theorem(const Classifier& clf, std::string_view id,
                                    const std::optional<FuzzySet>& u,
                                    const CheckOptions& options) {
  const std::size_t cap = default_enumeration_cap();
  if (u && !theorem_takes_set(id))
    throw ValidationError("claim '" + std::string(id) +
                          "' is not parameterized by a set");

  if (id == "2.3" || id == "2.7" || id == "2.12")
    return detail::check_pair_claim(clf, id);
  if (id == "2.9") return detail::check_interior_characterization(clf);
  if (id == "2.10") return detail::check_open_g_closed(clf);
  if (id == "4.1") return detail::check_weakly_closed_quasi_compact(clf, cap);
  if (id == "4.5")
    return detail::check_weak_compactness_characterization(clf, options, cap);

  if (id == "4.6" || id == "4.13") {
    // A nonzero meet of weak closures for every capped filterbase forces the
    // space-level property.
    TheoremVerdict verdict{std::string(id), TheoremStatus::vacuous, "", 0, 0};
    const auto bad = detail::find_filterbase_counterexample(
        clf, detail::FamilyPool::any, options, &verdict.instances_checked,
        [](const std::vector<std::size_t>&) { return true; },
        [&](const std::vector<std::size_t>& family) {
          FuzzySet acc = FuzzySet::one(clf.topology().carrier());
          for (const std::size_t i : family)
            acc = meet(acc, clf.weak_closure_of(i));
          return !is_zero_set(acc);
        });
    if (bad) return verdict;  // hypothesis fails: vacuous
    verdict.hypothesis_hits = 1;
    const bool conclusion = id == "4.6" ? is_weakly_compact(clf, cap).holds
                                        : is_weakly_closed_space(clf, cap).holds;
    verdict.status =
        conclusion ? TheoremStatus::holds : TheoremStatus::counterexample;
    if (!conclusion)
      verdict.witness = "hypothesis met but the space-level property fails";
    return verdict;
  }

  if (id == "4.7" || id == "4.14") {
    // The space-level property forces a nonzero meet of closures for every
    // capped filterbase from the pool.
    TheoremVerdict verdict{std::string(id), TheoremStatus::vacuous, "", 0, 0};
    const bool hypothesis = id == "4.7" ? is_weakly_compact(clf, cap).holds
                                        : is_weakly_closed_space(clf, cap).holds;
    if (!hypothesis) return verdict;
    verdict.hypothesis_hits = 1;
    const auto pool = id == "4.7" ? detail::FamilyPool::weakly_closed
                                  : detail::FamilyPool::weakly_open;
    const auto bad = detail::find_filterbase_counterexample(
        clf, pool, options, &verdict.instances_checked,
        [](const std::vector<std::size_t>&) { return true; },
        [&](const std::vector<std::size_t>& family) {
          FuzzySet acc = FuzzySet::one(clf.topology().carrier());
          for (const std::size_t i : family) acc = meet(acc, clf.closure_of(i));
          return !is_zero_set(acc);
        });
    verdict.status = bad ? TheoremStatus::counterexample : TheoremStatus::holds;
    if (bad) verdict.witness = "filterbase " + *bad + " has zero closure meet";
    return verdict;
  }

  if (theorem_takes_set(id)) {
    if (!u) {
      // Aggregate over every grid-valued reference set.
      TheoremVerdict aggregate{std::string(id), TheoremStatus::vacuous, "", 0, 0};
      for (const FuzzySet& candidate : clf.universe()) {
        TheoremVerdict one = check_theorem(clf, id, candidate, options);
        aggregate.instances_checked += one.instances_checked;
        aggregate.hypothesis_hits += one.hypothesis_hits;
        if (one.status == TheoremStatus::counterexample) {
          aggregate.status = one.status;
          aggregate.witness = "U=" + to_string(candidate) +
                              (one.witness.empty() ? "" : ", " + one.witness);
          return aggregate;
        }
        if (one.status == TheoremStatus::holds)
          aggregate.status = TheoremStatus::holds;
      }
      return aggregate;
    }

    TheoremVerdict verdict{std::string(id), TheoremStatus::vacuous, "", 0, 0};
    if (id == "4.8" || id == "4.16") {
      // Hypothesis quantifies filterbases; conclusion is the relative
      // space-level property.
      std::optional<std::string> bad;
      if (id == "4.8")
        bad = detail::find_filterbase_counterexample(
            clf, detail::FamilyPool::weakly_closed, options,
            &verdict.instances_checked,
            [&](const std::vector<std::size_t>& family) {
              return detail::all_subfamilies_quasi_coincident(clf, family, *u);
            },
            [&](const std::vector<std::size_t>& family) {
              FuzzySet acc = FuzzySet::one(clf.topology().carrier());
              for (const std::size_t i : family)
                acc = meet(acc, clf.weak_closure_of(i));
              return !is_zero_set(meet(acc, *u));
            });
      else
        bad = detail::find_filterbase_counterexample(
            clf, detail::FamilyPool::any, options, &verdict.instances_checked,
            [&](const std::vector<std::size_t>& family) {
              FuzzySet acc = FuzzySet::one(clf.topology().carrier());
              for (const std::size_t i : family)
                acc = meet(acc, clf.weak_closure_of(i));
              return !is_zero_set(meet(acc, *u));
            },
            [&](const std::vector<std::size_t>& family) {
              return detail::some_subfamily_quasi_coincident(clf, family, *u);
            });
      if (bad) return verdict;  // hypothesis fails for this U: vacuous
      verdict.hypothesis_hits = 1;
      const bool conclusion = id == "4.8"
                                  ? is_weakly_compact_relative(clf, *u, cap).holds
                                  : is_weakly_closed_relative(clf, *u, cap).holds;
      verdict.status =
          conclusion ? TheoremStatus::holds : TheoremStatus::counterexample;
      if (!conclusion)
        verdict.witness = "hypothesis met but the relative property fails";
      return verdict;
    }

    // 4.9 / 4.15: the relative space-level property forces a nonzero
    // intersection with U of the closure meet, for qualifying filterbases.
    const bool hypothesis = id == "4.9"
                                ? is_weakly_compact_relative(clf, *u, cap).holds
                                : is_weakly_closed_relative(clf, *u, cap).holds;
    if (!hypothesis) return verdict;
    verdict.hypothesis_hits = 1;
    const auto pool = id == "4.9" ? detail::FamilyPool::weakly_closed
                                  : detail::FamilyPool::weakly_open;
    const auto bad = detail::find_filterbase_counterexample(
        clf, pool, options, &verdict.instances_checked,
        [&](const std::vector<std::size_t>& family) {
          return detail::all_subfamilies_quasi_coincident(clf, family, *u);
        },
        [&](const std::vector<std::size_t>& family) {
          FuzzySet acc = FuzzySet::one(clf.topology().carrier());
          for (const std::size_t i : family) acc = meet(acc, clf.closure_of(i));
          return !is_zero_set(meet(acc, *u));
        });
    verdict.status = bad ? TheoremStatus::counterexample : TheoremStatus::holds;
    if (bad)
      verdict.witness = "filterbase " + *bad + " misses " + to_string(*u);
    return verdict;
  }

  throw UnknownIdError("unknown claim id '" + std::string(id) + "'");
}

}  // namespace fuzzytop
