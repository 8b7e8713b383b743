#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fuzzytop/fuzzytop.hpp"

namespace testutil {

using namespace fuzzytop;

/// Crisp set from a letter string: crisp(carrier, "abd") has degree 1 exactly
/// at the points named "a", "b", "d".
inline FuzzySet crisp(const CarrierPtr& carrier, const std::string& letters) {
  std::vector<std::string> names;
  for (const char c : letters) names.emplace_back(1, c);
  return FuzzySet::characteristic(carrier, names);
}

/// Letter rendering of a crisp set ("" for the empty set).
inline std::string letters(const FuzzySet& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == rat_one()) out += a.carrier()->point(i);
  return out;
}

/// The letter strings of the crisp universe members carrying a class flag.
inline std::set<std::string> class_family(const Classifier& clf, SetClass c) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < clf.universe_size(); ++i)
    if (clf.is(c, i)) out.insert(letters(clf.universe()[i]));
  return out;
}

inline std::set<std::string> family(std::initializer_list<std::string> names) {
  return std::set<std::string>(names);
}

/// Every crisp subset of "abcd"-style point letters except the listed ones.
inline std::set<std::string> all_but(const std::string& points,
                                     std::initializer_list<std::string> omit) {
  std::set<std::string> out;
  const std::size_t n = points.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s += points[i];
    out.insert(s);
  }
  for (const std::string& name : omit) out.erase(name);
  return out;
}

}  // namespace testutil
