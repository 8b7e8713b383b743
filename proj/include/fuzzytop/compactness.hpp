#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "classifier.hpp"

namespace fuzzytop {

/// Meet of a finite family; the empty meet is the constant-1 set.
inline FuzzySet family_meet(const std::vector<FuzzySet>& family,
                            const CarrierPtr& carrier) {
  FuzzySet acc = FuzzySet::one(carrier);
  for (const FuzzySet& a : family) acc = meet(acc, a);
  return acc;
}

/// Join of a finite family; the empty join is the constant-0 set.
inline FuzzySet family_join(const std::vector<FuzzySet>& family,
                            const CarrierPtr& carrier) {
  FuzzySet acc = FuzzySet::zero(carrier);
  for (const FuzzySet& a : family) acc = join(acc, a);
  return acc;
}

inline bool is_zero_set(const FuzzySet& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != rat_zero()) return false;
  return true;
}

inline bool is_one_set(const FuzzySet& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != rat_one()) return false;
  return true;
}

/// Reference route for the finite intersection property: every nonempty
/// subfamily has a nonzero meet, checked subfamily by subfamily.
inline bool has_fip_exhaustive(const std::vector<FuzzySet>& family,
                               const CarrierPtr& carrier) {
  if (family.size() >= 8 * sizeof(std::size_t))
    throw CapExceededError(SIZE_MAX, std::size_t{1} << 20);
  const std::size_t subsets = std::size_t{1} << family.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    FuzzySet acc = FuzzySet::one(carrier);
    for (std::size_t i = 0; i < family.size(); ++i)
      if (mask & (std::size_t{1} << i)) acc = meet(acc, family[i]);
    if (is_zero_set(acc)) return false;
  }
  return true;
}

/// Finite intersection property. Because meets only shrink, a finite family
/// has the property exactly when the meet of the whole family is nonzero;
/// that shortcut is what runs, and for families of at most 12 members the
/// exhaustive route is recomputed and must agree.
inline bool has_fip(const std::vector<FuzzySet>& family,
                    const CarrierPtr& carrier) {
  const bool quick = !is_zero_set(family_meet(family, carrier));
  if (family.size() <= 12 && has_fip_exhaustive(family, carrier) != quick)
    throw std::logic_error("finite-intersection-property routes disagree");
  return quick;
}

inline bool has_fip(const std::vector<FuzzySet>& family) {
  if (family.empty())
    throw ValidationError("carrier needed to evaluate an empty family");
  return has_fip(family, family.front().carrier());
}

/// A finite family is a filterbase exactly when it has the finite
/// intersection property: every finite meet must be nonzero, and on a finite
/// family the two conditions coincide.
inline bool is_filterbase(const std::vector<FuzzySet>& family,
                          const CarrierPtr& carrier) {
  return has_fip(family, carrier);
}

inline bool is_filterbase(const std::vector<FuzzySet>& family) {
  return has_fip(family);
}

/// Outcome of a cover-style compactness check. The quantified guard family
/// and the subfamilies that satisfied the cover condition are counted so the
/// verdict is auditable; min_cover_size is the smallest covering subfamily,
/// and min_cover_size_without_top the smallest one avoiding the constant-1
/// set (absent when every cover uses it).
struct CoverReport {
  bool holds = true;
  std::size_t guard_count = 0;
  std::size_t covering_count = 0;
  std::optional<std::size_t> min_cover_size;
  std::optional<std::size_t> min_cover_size_without_top;
  std::optional<std::string> counter_witness;
};

namespace detail {

inline void require_subset_budget(std::size_t members, std::size_t cap) {
  if (members >= 8 * sizeof(std::size_t) - 1)
    throw CapExceededError(SIZE_MAX, cap);
  if ((std::size_t{1} << members) > cap)
    throw CapExceededError(std::size_t{1} << members, cap);
}

/// Runs `body` over every subfamily (as index list) of the guard family.
inline void for_each_subfamily(
    std::size_t members, std::size_t cap,
    const std::function<void(const std::vector<std::size_t>&)>& body) {
  require_subset_budget(members, cap);
  const std::size_t subsets = std::size_t{1} << members;
  std::vector<std::size_t> picked;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    picked.clear();
    for (std::size_t i = 0; i < members; ++i)
      if (mask & (std::size_t{1} << i)) picked.push_back(i);
    body(picked);
  }
}

inline std::string render_family(const std::vector<FuzzySet>& family) {
  std::string out = "[";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(family[i]);
  }
  out += "]";
  return out;
}

/// A == U at every point of the support of U.
inline bool matches_on_support(const FuzzySet& a, const FuzzySet& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > rat_zero() && a[i] != u[i]) return false;
  return true;
}

/// A >= U at every point of the support of U.
inline bool dominates_on_support(const FuzzySet& a, const FuzzySet& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > rat_zero() && a[i] < u[i]) return false;
  return true;
}

}  // namespace detail

/// Every open cover of the space has a finite subcover. The quantifier runs
/// over all subfamilies of the open family; on these finite spaces each cover
/// is already finite, and the report records how many covers were seen and
/// how small they get.
inline CoverReport is_quasi_compact(const FuzzyTopology& t,
                                    std::size_t cap = default_enumeration_cap()) {
  const std::vector<FuzzySet>& opens = t.opens();
  CoverReport report;
  report.guard_count = opens.size();
  detail::for_each_subfamily(
      opens.size(), cap, [&](const std::vector<std::size_t>& picked) {
        std::vector<FuzzySet> family;
        family.reserve(picked.size());
        for (const std::size_t i : picked) family.push_back(opens[i]);
        if (!is_one_set(family_join(family, t.carrier()))) return;
        ++report.covering_count;
        if (!report.min_cover_size || picked.size() < *report.min_cover_size)
          report.min_cover_size = picked.size();
        bool uses_top = false;
        for (const FuzzySet& a : family)
          if (is_one_set(a)) uses_top = true;
        if (!uses_top && (!report.min_cover_size_without_top ||
                          picked.size() < *report.min_cover_size_without_top))
          report.min_cover_size_without_top = picked.size();
      });
  return report;
}

namespace detail {

/// Indices of the universe sets carrying a class flag.
inline std::vector<std::size_t> class_members(const Classifier& clf,
                                              SetClass c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < clf.universe_size(); ++i)
    if (clf.is(c, i)) out.push_back(i);
  return out;
}

}  // namespace detail

/// Every cover of the space by weakly open sets has a finite subcover.
/// Quantifies over subfamilies of the weakly open grid sets.
inline CoverReport is_weakly_compact(const Classifier& clf,
                                     std::size_t cap = default_enumeration_cap()) {
  const auto guards = detail::class_members(clf, SetClass::weakly_open);
  const CarrierPtr& carrier = clf.topology().carrier();
  CoverReport report;
  report.guard_count = guards.size();
  detail::for_each_subfamily(
      guards.size(), cap, [&](const std::vector<std::size_t>& picked) {
        std::vector<FuzzySet> family;
        family.reserve(picked.size());
        for (const std::size_t i : picked)
          family.push_back(clf.universe()[guards[i]]);
        if (!is_one_set(family_join(family, carrier))) return;
        ++report.covering_count;
        if (!report.min_cover_size || picked.size() < *report.min_cover_size)
          report.min_cover_size = picked.size();
      });
  return report;
}

/// The space is weakly compact relative to U when every weakly open family
/// whose join dominates U on the support of U has a finite subfamily doing
/// the same. U itself may be any fuzzy set on the carrier.
inline CoverReport is_weakly_compact_relative(
    const Classifier& clf, const FuzzySet& u,
    std::size_t cap = default_enumeration_cap()) {
  const auto guards = detail::class_members(clf, SetClass::weakly_open);
  const CarrierPtr& carrier = clf.topology().carrier();
  CoverReport report;
  report.guard_count = guards.size();
  detail::for_each_subfamily(
      guards.size(), cap, [&](const std::vector<std::size_t>& picked) {
        std::vector<FuzzySet> family;
        family.reserve(picked.size());
        for (const std::size_t i : picked)
          family.push_back(clf.universe()[guards[i]]);
        if (!detail::dominates_on_support(family_join(family, carrier), u))
          return;
        ++report.covering_count;
        if (!report.min_cover_size || picked.size() < *report.min_cover_size)
          report.min_cover_size = picked.size();
      });
  return report;
}

/// Every weakly open cover of the space has a finite subfamily whose weak
/// closures already cover. Weak closures only grow sets, so on these finite
/// spaces the full subfamily always works; the check still evaluates it.
inline CoverReport is_weakly_closed_space(
    const Classifier& clf, std::size_t cap = default_enumeration_cap()) {
  const auto guards = detail::class_members(clf, SetClass::weakly_open);
  const CarrierPtr& carrier = clf.topology().carrier();
  CoverReport report;
  report.guard_count = guards.size();
  detail::for_each_subfamily(
      guards.size(), cap, [&](const std::vector<std::size_t>& picked) {
        std::vector<FuzzySet> family;
        std::vector<FuzzySet> closures;
        for (const std::size_t i : picked) {
          family.push_back(clf.universe()[guards[i]]);
          closures.push_back(clf.weak_closure_of(guards[i]));
        }
        if (!is_one_set(family_join(family, carrier))) return;
        ++report.covering_count;
        if (!is_one_set(family_join(closures, carrier))) {
          report.holds = false;
          if (!report.counter_witness)
            report.counter_witness = detail::render_family(family);
        }
      });
  return report;
}

/// The space is weakly closed relative to U when every weakly open family
/// whose join equals U on the support of U has a finite subfamily whose weak
/// closures join to U on that support. For each covering family the largest
/// usable subfamily is the set of members whose weak closure stays below U on
/// the support; a subfamily works if and only if that one does.
inline CoverReport is_weakly_closed_relative(
    const Classifier& clf, const FuzzySet& u,
    std::size_t cap = default_enumeration_cap()) {
  const auto guards = detail::class_members(clf, SetClass::weakly_open);
  const CarrierPtr& carrier = clf.topology().carrier();
  CoverReport report;
  report.guard_count = guards.size();
  detail::for_each_subfamily(
      guards.size(), cap, [&](const std::vector<std::size_t>& picked) {
        std::vector<FuzzySet> family;
        family.reserve(picked.size());
        for (const std::size_t i : picked)
          family.push_back(clf.universe()[guards[i]]);
        if (!detail::matches_on_support(family_join(family, carrier), u))
          return;
        ++report.covering_count;
        std::vector<FuzzySet> admissible_closures;
        for (const std::size_t i : picked) {
          const FuzzySet& wc = clf.weak_closure_of(guards[i]);
          bool below = true;
          for (std::size_t x = 0; below && x < u.size(); ++x)
            if (u[x] > rat_zero() && wc[x] > u[x]) below = false;
          if (below) admissible_closures.push_back(wc);
        }
        if (!detail::matches_on_support(
                family_join(admissible_closures, carrier), u)) {
          report.holds = false;
          if (!report.counter_witness)
            report.counter_witness =
                "cover " + detail::render_family(family) + " of " + to_string(u);
        }
      });
  return report;
}

}  // namespace fuzzytop
