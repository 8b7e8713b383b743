#pragma once

#include <array>
#include <string_view>

#include "topology.hpp"

namespace fuzzytop {

/// The four generalized-closedness operators derived from interior and
/// closure. Writing int for interior and cl for closure, a set A is
///   s  (semi)     closed when int(cl(A))      <= A
///   p  (pre)      closed when cl(int(A))      <= A
///   alpha         closed when cl(int(cl(A)))  <= A
///   sp (semi-pre) closed when int(cl(int(A))) <= A
/// and K-open exactly when its complement is K-closed.
enum class OperatorKind { s, p, alpha, sp };

inline constexpr std::array<OperatorKind, 4> all_operator_kinds = {
    OperatorKind::s, OperatorKind::p, OperatorKind::alpha, OperatorKind::sp};

inline std::string_view kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::s: return "s";
    case OperatorKind::p: return "p";
    case OperatorKind::alpha: return "alpha";
    case OperatorKind::sp: return "sp";
  }
  throw UnknownIdError("bad operator kind");
}

inline bool is_kind_closed(const FuzzyTopology& t, const FuzzySet& a,
                           OperatorKind k) {
  switch (k) {
    case OperatorKind::s:
      return leq(interior(t, closure(t, a)), a);
    case OperatorKind::p:
      return leq(closure(t, interior(t, a)), a);
    case OperatorKind::alpha:
      return leq(closure(t, interior(t, closure(t, a))), a);
    case OperatorKind::sp:
      return leq(interior(t, closure(t, interior(t, a))), a);
  }
  throw UnknownIdError("bad operator kind");
}

inline bool is_kind_open(const FuzzyTopology& t, const FuzzySet& a,
                         OperatorKind k) {
  return is_kind_closed(t, complement(a), k);
}

/// The K-closure of A relative to the grid: the meet of every grid-valued
/// K-closed superset of A. The constant-1 set is K-closed for every K, so the
/// meet is never empty. Quantification ranges over the |grid|^|carrier|
/// grid-valued sets, guarded by the cap.
inline FuzzySet kind_closure(const FuzzyTopology& t, const FuzzySet& a,
                             OperatorKind k,
                             std::size_t cap = default_enumeration_cap()) {
  FuzzySet acc = FuzzySet::one(t.carrier());
  for (const FuzzySet& c : enumerate_grid_sets(t.carrier(), t.grid(), cap))
    if (leq(a, c) && is_kind_closed(t, c, k)) acc = meet(acc, c);
  return acc;
}

/// The semi-kernel of A relative to the grid: the meet of every grid-valued
/// semi-open superset of A. (The constant-1 set is semi-open.)
inline FuzzySet semi_kernel(const FuzzyTopology& t, const FuzzySet& a,
                            std::size_t cap = default_enumeration_cap()) {
  FuzzySet acc = FuzzySet::one(t.carrier());
  for (const FuzzySet& u : enumerate_grid_sets(t.carrier(), t.grid(), cap))
    if (leq(a, u) && is_kind_open(t, u, OperatorKind::s)) acc = meet(acc, u);
  return acc;
}

/// A is weakly closed when cl(A) <= U for every grid-valued semi-open U >= A;
/// equivalently, when cl(A) lies below the semi-kernel of A.
inline bool is_weakly_closed(const FuzzyTopology& t, const FuzzySet& a,
                             std::size_t cap = default_enumeration_cap()) {
  return leq(closure(t, a), semi_kernel(t, a, cap));
}

inline bool is_weakly_open(const FuzzyTopology& t, const FuzzySet& a,
                           std::size_t cap = default_enumeration_cap()) {
  return is_weakly_closed(t, complement(a), cap);
}

/// Weak closure: the meet of every grid-valued weakly closed superset of A.
inline FuzzySet weak_closure(const FuzzyTopology& t, const FuzzySet& a,
                             std::size_t cap = default_enumeration_cap()) {
  FuzzySet acc = FuzzySet::one(t.carrier());
  for (const FuzzySet& c : enumerate_grid_sets(t.carrier(), t.grid(), cap))
    if (leq(a, c) && is_weakly_closed(t, c, cap)) acc = meet(acc, c);
  return acc;
}

/// Weak interior: the join of every grid-valued weakly open subset of A.
/// Satisfies the duality weak_interior(A) == complement(weak_closure(A^c)).
inline FuzzySet weak_interior(const FuzzyTopology& t, const FuzzySet& a,
                              std::size_t cap = default_enumeration_cap()) {
  FuzzySet acc = FuzzySet::zero(t.carrier());
  for (const FuzzySet& u : enumerate_grid_sets(t.carrier(), t.grid(), cap))
    if (leq(u, a) && is_weakly_open(t, u, cap)) acc = join(acc, u);
  return acc;
}

/// A is g-closed when cl(A) <= U for every open U >= A. Only the opens of the
/// topology are quantified over, so no enumeration is involved.
inline bool is_g_closed(const FuzzyTopology& t, const FuzzySet& a) {
  for (const FuzzySet& u : t.opens())
    if (leq(a, u) && !leq(closure(t, a), u)) return false;
  return true;
}

inline bool is_g_open(const FuzzyTopology& t, const FuzzySet& a) {
  return is_g_closed(t, complement(a));
}

}  // namespace fuzzytop
