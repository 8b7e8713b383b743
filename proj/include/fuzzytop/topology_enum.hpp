#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "topology.hpp"

namespace fuzzytop {

struct EnumerationOptions {
  std::size_t cap = default_enumeration_cap();
  /// Keep only one topology per orbit of the point-permutation action.
  bool dedup_isomorphs = false;
};

namespace detail {

/// The degree vectors of the opens, sorted: a permutation-comparable
/// signature of a topology.
inline std::vector<std::vector<Rat>> open_signature(
    const std::vector<FuzzySet>& opens) {
  std::vector<std::vector<Rat>> sig;
  sig.reserve(opens.size());
  for (const FuzzySet& u : opens) sig.push_back(u.values());
  std::sort(sig.begin(), sig.end());
  return sig;
}

/// True when no point permutation produces a lexicographically smaller
/// signature: the canonical-orbit-representative test behind isomorphism
/// deduplication.
inline bool is_orbit_representative(const std::vector<FuzzySet>& opens,
                                    std::size_t n_points) {
  const auto own = open_signature(opens);
  std::vector<std::size_t> perm(n_points);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::vector<Rat>> sig;
    sig.reserve(opens.size());
    for (const FuzzySet& u : opens) {
      std::vector<Rat> values(n_points);
      for (std::size_t i = 0; i < n_points; ++i) values[i] = u[perm[i]];
      sig.push_back(std::move(values));
    }
    std::sort(sig.begin(), sig.end());
    if (sig < own) return false;
  }
  return true;
}

}  // namespace detail

/// Every fuzzy topology over the carrier and grid, in a deterministic order:
/// candidate open families are the subsets of the non-constant grid sets
/// (ascending bitmask order, canonical set order within), filtered by the
/// meet/join axioms. With dedup_isomorphs, topologies that differ only by a
/// renaming of points are reduced to their canonical representative.
inline std::vector<FuzzyTopology> enumerate_topologies(
    const CarrierPtr& carrier, const Grid& grid,
    const EnumerationOptions& options = {}) {
  const std::vector<FuzzySet> universe =
      enumerate_grid_sets(carrier, grid, options.cap);

  std::vector<std::size_t> candidates;  // universe indices, constants excluded
  for (std::size_t i = 1; i + 1 < universe.size(); ++i) candidates.push_back(i);

  if (candidates.size() >= 8 * sizeof(std::size_t) - 1)
    throw CapExceededError(SIZE_MAX, options.cap);
  const std::size_t subsets = std::size_t{1} << candidates.size();
  if (subsets > options.cap)
    throw CapExceededError(subsets, options.cap);

  // meet/join tables over the universe make the axiom check index arithmetic
  const std::size_t n = universe.size();
  std::vector<std::size_t> meets(n * n);
  std::vector<std::size_t> joins(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t m = grid_set_index(meet(universe[i], universe[j]), grid);
      const std::size_t s = grid_set_index(join(universe[i], universe[j]), grid);
      meets[i * n + j] = meets[j * n + i] = m;
      joins[i * n + j] = joins[j * n + i] = s;
    }

  std::vector<FuzzyTopology> out;
  std::vector<bool> member(n);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::fill(member.begin(), member.end(), false);
    member[0] = true;
    member[n - 1] = true;
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (mask & (std::size_t{1} << k)) member[candidates[k]] = true;

    bool closed = true;
    for (std::size_t i = 0; closed && i < n; ++i) {
      if (!member[i]) continue;
      for (std::size_t j = i + 1; closed && j < n; ++j) {
        if (!member[j]) continue;
        if (!member[meets[i * n + j]] || !member[joins[i * n + j]])
          closed = false;
      }
    }
    if (!closed) continue;

    std::vector<FuzzySet> opens;
    for (std::size_t i = 0; i < n; ++i)
      if (member[i]) opens.push_back(universe[i]);
    if (options.dedup_isomorphs &&
        !detail::is_orbit_representative(opens, carrier->size()))
      continue;
    out.push_back(validate_topology(carrier, grid, std::move(opens)));
  }
  return out;
}

}  // namespace fuzzytop
