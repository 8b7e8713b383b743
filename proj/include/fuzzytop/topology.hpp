#pragma once

#include <algorithm>
#include <vector>

#include "fuzzy_set.hpp"

namespace fuzzytop {

/// A fuzzy topology on a finite carrier: a finite family of grid-valued sets
/// that contains the constant-0 and constant-1 sets and is closed under
/// pairwise meet and join. Pairwise closure is enough for the whole family,
/// since every finite meet or join factors through pairs. Built through
/// validate_topology; opens and their complements (the closed sets) are kept
/// deduplicated in canonical order.
class FuzzyTopology {
 public:
  const CarrierPtr& carrier() const { return carrier_; }
  const Grid& grid() const { return grid_; }
  const std::vector<FuzzySet>& opens() const { return opens_; }
  const std::vector<FuzzySet>& closeds() const { return closeds_; }

  bool is_open(const FuzzySet& a) const { return member(opens_, a); }
  bool is_closed(const FuzzySet& a) const { return member(closeds_, a); }

  friend FuzzyTopology validate_topology(CarrierPtr carrier, Grid grid,
                                         std::vector<FuzzySet> opens);

 private:
  FuzzyTopology(CarrierPtr carrier, Grid grid, std::vector<FuzzySet> opens)
      : carrier_(std::move(carrier)), grid_(std::move(grid)),
        opens_(std::move(opens)) {
    closeds_.reserve(opens_.size());
    for (const FuzzySet& u : opens_) closeds_.push_back(complement(u));
    std::sort(closeds_.begin(), closeds_.end(), lex_less);
  }

  static bool member(const std::vector<FuzzySet>& sorted, const FuzzySet& a) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), a, lex_less);
    return it != sorted.end() && *it == a;
  }

  CarrierPtr carrier_;
  Grid grid_;
  std::vector<FuzzySet> opens_;
  std::vector<FuzzySet> closeds_;
};

/// Checks the axioms and returns the canonicalized topology. Errors name what
/// failed: an off-carrier set, an off-grid degree, a missing constant, or the
/// violating pair together with the meet/join that is absent.
inline FuzzyTopology validate_topology(CarrierPtr carrier, Grid grid,
                                       std::vector<FuzzySet> opens) {
  if (!carrier) throw ValidationError("topology needs a carrier");
  for (const FuzzySet& u : opens) {
    if (!same_carrier(u.carrier(), carrier))
      throw TopologyError("open set " + to_string(u) +
                          " lives on a different carrier");
    for (std::size_t i = 0; i < u.size(); ++i)
      if (!grid.contains(u[i]))
        throw TopologyError("open set " + to_string(u) + " has degree " +
                            to_string(u[i]) + " at point '" +
                            carrier->point(i) + "' that is not on the grid");
  }

  std::sort(opens.begin(), opens.end(), lex_less);
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  const FuzzySet bottom = FuzzySet::zero(carrier);
  const FuzzySet top = FuzzySet::one(carrier);
  const auto present = [&opens](const FuzzySet& a) {
    const auto it = std::lower_bound(opens.begin(), opens.end(), a, lex_less);
    return it != opens.end() && *it == a;
  };
  if (!present(bottom))
    throw TopologyError("the constant-0 set is missing from the open family");
  if (!present(top))
    throw TopologyError("the constant-1 set is missing from the open family");

  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const FuzzySet m = meet(opens[i], opens[j]);
      if (!present(m))
        throw TopologyError("open family is not closed under meet: " +
                            to_string(opens[i]) + " and " + to_string(opens[j]) +
                            " need " + to_string(m));
      const FuzzySet s = join(opens[i], opens[j]);
      if (!present(s))
        throw TopologyError("open family is not closed under join: " +
                            to_string(opens[i]) + " and " + to_string(opens[j]) +
                            " need " + to_string(s));
    }

  return FuzzyTopology(std::move(carrier), std::move(grid), std::move(opens));
}

/// Largest open set below A: the join of every open set <= A.
inline FuzzySet interior(const FuzzyTopology& t, const FuzzySet& a) {
  if (!same_carrier(a.carrier(), t.carrier()))
    throw CarrierMismatchError("set lives on a different carrier than the topology");
  FuzzySet acc = FuzzySet::zero(t.carrier());
  for (const FuzzySet& u : t.opens())
    if (leq(u, a)) acc = join(acc, u);
  return acc;
}

/// Smallest closed set above A: the meet of every closed set >= A.
inline FuzzySet closure(const FuzzyTopology& t, const FuzzySet& a) {
  if (!same_carrier(a.carrier(), t.carrier()))
    throw CarrierMismatchError("set lives on a different carrier than the topology");
  FuzzySet acc = FuzzySet::one(t.carrier());
  for (const FuzzySet& c : t.closeds())
    if (leq(a, c)) acc = meet(acc, c);
  return acc;
}

}  // namespace fuzzytop
