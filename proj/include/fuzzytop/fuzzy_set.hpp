#pragma once

#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carrier.hpp"
#include "grid.hpp"
#include "rational.hpp"

namespace fuzzytop {

/// A fuzzy subset of a carrier: one exact degree in [0, 1] per point.
class FuzzySet {
 public:
  FuzzySet(CarrierPtr carrier, std::vector<Rat> values)
      : carrier_(std::move(carrier)), values_(std::move(values)) {
    if (!carrier_) throw ValidationError("fuzzy set needs a carrier");
    if (values_.size() != carrier_->size())
      throw ValidationError("fuzzy set has " + std::to_string(values_.size()) +
                            " degrees for a carrier of " +
                            std::to_string(carrier_->size()) + " points");
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (!is_degree(values_[i]))
        throw ValidationError("degree " + to_string(values_[i]) + " at point '" +
                              carrier_->point(i) + "' lies outside [0, 1]");
  }

  static FuzzySet constant(CarrierPtr carrier, const Rat& v) {
    const std::size_t n = carrier->size();
    return FuzzySet(std::move(carrier), std::vector<Rat>(n, v));
  }

  /// The constant-0 set (the empty fuzzy set).
  static FuzzySet zero(CarrierPtr carrier) {
    return constant(std::move(carrier), rat_zero());
  }

  /// The constant-1 set (the whole space).
  static FuzzySet one(CarrierPtr carrier) {
    return constant(std::move(carrier), rat_one());
  }

  /// Crisp set taking degree 1 exactly on the named points.
  static FuzzySet characteristic(CarrierPtr carrier,
                                 const std::vector<std::string>& points) {
    std::vector<Rat> values(carrier->size(), rat_zero());
    for (const std::string& name : points) {
      const auto idx = carrier->index_of(name);
      if (!idx)
        throw ValidationError("unknown point '" + name + "'");
      values[*idx] = rat_one();
    }
    return FuzzySet(std::move(carrier), std::move(values));
  }

  const CarrierPtr& carrier() const { return carrier_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Rat>& values() const { return values_; }
  const Rat& operator[](std::size_t i) const { return values_[i]; }

  const Rat& at(std::string_view point) const {
    const auto idx = carrier_->index_of(point);
    if (!idx)
      throw ValidationError("unknown point '" + std::string(point) + "'");
    return values_[*idx];
  }

  bool operator==(const FuzzySet& other) const {
    return same_carrier(carrier_, other.carrier_) && values_ == other.values_;
  }
  bool operator!=(const FuzzySet& other) const { return !(*this == other); }

 private:
  CarrierPtr carrier_;
  std::vector<Rat> values_;
};

inline void require_same_carrier(const FuzzySet& a, const FuzzySet& b) {
  if (!same_carrier(a.carrier(), b.carrier()))
    throw CarrierMismatchError("fuzzy sets live on different carriers");
}

/// Pointwise minimum.
inline FuzzySet meet(const FuzzySet& a, const FuzzySet& b) {
  require_same_carrier(a, b);
  std::vector<Rat> values(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    values[i] = std::min(a[i], b[i]);
  return FuzzySet(a.carrier(), std::move(values));
}

/// Pointwise maximum.
inline FuzzySet join(const FuzzySet& a, const FuzzySet& b) {
  require_same_carrier(a, b);
  std::vector<Rat> values(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    values[i] = std::max(a[i], b[i]);
  return FuzzySet(a.carrier(), std::move(values));
}

/// Pointwise 1 - A.
inline FuzzySet complement(const FuzzySet& a) {
  std::vector<Rat> values(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    values[i] = degree_complement(a[i]);
  return FuzzySet(a.carrier(), std::move(values));
}

/// A <= B pointwise.
inline bool leq(const FuzzySet& a, const FuzzySet& b) {
  require_same_carrier(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// A is quasi-coincident with B: some point has A(x) + B(x) > 1.
/// Equivalently, A is not below the complement of B.
inline bool quasi_coincident(const FuzzySet& a, const FuzzySet& b) {
  require_same_carrier(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] + b[i] > rat_one()) return true;
  return false;
}

/// Names of the points with strictly positive degree.
inline std::vector<std::string> support(const FuzzySet& a) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > rat_zero()) names.push_back(a.carrier()->point(i));
  return names;
}

inline bool is_grid_valued(const FuzzySet& a, const Grid& grid) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!grid.contains(a[i])) return false;
  return true;
}

/// Canonical order: degree vectors compared lexicographically, first point
/// most significant. This is the order enumerate_grid_sets yields.
inline bool lex_less(const FuzzySet& a, const FuzzySet& b) {
  require_same_carrier(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

/// Rendering used in reports and witness descriptions: "{a=1, b=1/2, c=0}".
inline std::string to_string(const FuzzySet& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ", ";
    out += a.carrier()->point(i);
    out += "=";
    out += to_string(a[i]);
  }
  out += "}";
  return out;
}

/// Number of grid-valued sets on the carrier: |grid|^|carrier|.
/// nullopt when the count overflows size_t.
inline std::optional<std::size_t> grid_set_count(const Carrier& carrier,
                                                 const Grid& grid) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (count > SIZE_MAX / grid.size()) return std::nullopt;
    count *= grid.size();
  }
  return count;
}

/// Enumeration bound used when a caller does not pass one: the value of the
/// FUZZYTOP_CAP environment variable if set, else 2^20.
inline std::size_t default_enumeration_cap() {
  static const std::size_t cap = [] {
    const char* raw = std::getenv("FUZZYTOP_CAP");
    if (!raw || *raw == '\0') return std::size_t{1} << 20;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed == 0)
      throw ValidationError(
          "FUZZYTOP_CAP must be a positive integer, got '" + std::string(raw) +
          "'");
    return static_cast<std::size_t>(parsed);
  }();
  return cap;
}

/// The grid-valued set at a given position in the canonical order: positions
/// are mixed-radix numerals, first point most significant, digits being
/// ascending grid indices.
inline FuzzySet grid_set_at(const CarrierPtr& carrier, const Grid& grid,
                            std::size_t position) {
  const std::size_t n = carrier->size();
  std::vector<Rat> values(n);
  for (std::size_t i = n; i-- > 0;) {
    values[i] = grid.degree(position % grid.size());
    position /= grid.size();
  }
  return FuzzySet(carrier, std::move(values));
}

/// Position of a grid-valued set in the canonical order.
inline std::size_t grid_set_index(const FuzzySet& a, const Grid& grid) {
  std::size_t position = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto digit = grid.index_of(a[i]);
    if (!digit)
      throw ValidationError("degree " + to_string(a[i]) + " at point '" +
                            a.carrier()->point(i) + "' is not on the grid");
    position = position * grid.size() + *digit;
  }
  return position;
}

/// All grid-valued sets on the carrier in canonical order. The first element
/// is the constant-0 set and the last the constant-1 set. Throws
/// CapExceededError up front when the count exceeds the cap.
inline std::vector<FuzzySet> enumerate_grid_sets(
    const CarrierPtr& carrier, const Grid& grid,
    std::size_t cap = default_enumeration_cap()) {
  const auto count = grid_set_count(*carrier, grid);
  if (!count || *count > cap)
    throw CapExceededError(count.value_or(SIZE_MAX), cap);
  std::vector<FuzzySet> sets;
  sets.reserve(*count);
  for (std::size_t pos = 0; pos < *count; ++pos)
    sets.push_back(grid_set_at(carrier, grid, pos));
  return sets;
}

}  // namespace fuzzytop
