#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace fuzzytop {

namespace detail {

inline bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  for (const char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// An ordered finite set of named points. Immutable; fuzzy sets keep a shared
/// handle to their carrier so membership vectors can be aligned by index.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> points) : points_(std::move(points)) {
    if (points_.empty())
      throw ValidationError("a carrier needs at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!detail::is_identifier(points_[i]))
        throw ValidationError("point name '" + points_[i] +
                              "' is not an identifier ([A-Za-z0-9_]+)");
      for (std::size_t j = 0; j < i; ++j)
        if (points_[j] == points_[i])
          throw ValidationError("duplicate point name '" + points_[i] + "'");
    }
  }

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(std::size_t i) const { return points_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const Carrier& other) const { return points_ == other.points_; }

 private:
  std::vector<std::string> points_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

inline CarrierPtr make_carrier(std::vector<std::string> points) {
  return std::make_shared<const Carrier>(std::move(points));
}

/// True when the two handles denote the same point list (identity or value).
inline bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace fuzzytop
