#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace fuzzytop {

/// A finite, complement-closed set of membership degrees: the value alphabet
/// that enumeration and the derived closure operators quantify over. Always
/// contains 0 and 1 and is closed under v -> 1-v; the constructor inserts
/// whatever is missing (documented normalization), sorts ascending and
/// deduplicates. Because v -> 1-v reverses the order, the complement of the
/// i-th degree is the (n-1-i)-th.
class Grid {
 public:
  /// The crisp grid {0, 1}.
  Grid() : degrees_{rat_zero(), rat_one()} {}

  explicit Grid(std::vector<Rat> degrees) : degrees_(std::move(degrees)) {
    for (const Rat& v : degrees_)
      if (!is_degree(v))
        throw ValidationError("grid degree " + to_string(v) +
                              " lies outside [0, 1]");
    degrees_.push_back(rat_zero());
    degrees_.push_back(rat_one());
    const std::size_t declared = degrees_.size();
    for (std::size_t i = 0; i < declared; ++i)
      degrees_.push_back(degree_complement(degrees_[i]));
    std::sort(degrees_.begin(), degrees_.end());
    degrees_.erase(std::unique(degrees_.begin(), degrees_.end()),
                   degrees_.end());
  }

  static Grid crisp() { return Grid(); }

  std::size_t size() const { return degrees_.size(); }
  const std::vector<Rat>& degrees() const { return degrees_; }
  const Rat& degree(std::size_t i) const { return degrees_.at(i); }

  bool contains(const Rat& v) const {
    return std::binary_search(degrees_.begin(), degrees_.end(), v);
  }

  std::optional<std::size_t> index_of(const Rat& v) const {
    const auto it = std::lower_bound(degrees_.begin(), degrees_.end(), v);
    if (it == degrees_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - degrees_.begin());
  }

  /// Index of 1 - degree(i).
  std::size_t complement_index(std::size_t i) const {
    return degrees_.size() - 1 - i;
  }

  bool operator==(const Grid& other) const { return degrees_ == other.degrees_; }

 private:
  std::vector<Rat> degrees_;
};

}  // namespace fuzzytop
