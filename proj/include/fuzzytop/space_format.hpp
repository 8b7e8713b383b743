#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topology.hpp"

namespace fuzzytop {

/// A parsed space description. Declaration order is preserved exactly, so a
/// canonical document survives a parse/serialize round trip byte for byte.
///
/// The text format is line based; '#' starts a comment, blank lines are
/// skipped, and the directives must appear in this order:
///   name <id>
///   points <p1> <p2> ...
///   grid <r1> <r2> ...          (strictly ascending rationals in [0, 1])
///   open <id> <p>=<r> ...       (every point exactly once)
///   set <id> <p>=<r> ...        (optional query sets)
struct SpaceDocument {
  std::string name;
  std::vector<std::string> points;
  std::vector<Rat> grid_degrees;
  std::vector<std::pair<std::string, std::vector<Rat>>> opens;
  std::vector<std::pair<std::string, std::vector<Rat>>> sets;

  bool operator==(const SpaceDocument&) const = default;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

/// Parses the "<point>=<degree>" assignments of an open/set line into a
/// degree vector aligned with `points`.
inline std::vector<Rat> parse_assignments(
    const std::vector<std::string_view>& tokens, std::size_t first,
    const std::vector<std::string>& points, std::string_view set_name,
    int line_no) {
  std::vector<Rat> values(points.size());
  std::vector<bool> seen(points.size(), false);
  for (std::size_t k = first; k < tokens.size(); ++k) {
    const std::string_view token = tokens[k];
    const std::size_t eq = token.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == token.size())
      throw SyntaxError("expected <point>=<degree>, got '" +
                            std::string(token) + "'",
                        line_no);
    const std::string_view point = token.substr(0, eq);
    std::size_t idx = points.size();
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == point) idx = i;
    if (idx == points.size())
      throw ValidationError("line " + std::to_string(line_no) + ": set '" +
                            std::string(set_name) + "' mentions unknown point '" +
                            std::string(point) + "'");
    if (seen[idx])
      throw ValidationError("line " + std::to_string(line_no) + ": set '" +
                            std::string(set_name) + "' assigns point '" +
                            std::string(point) + "' twice");
    seen[idx] = true;
    Rat v(0);
    try {
      v = parse_rational(token.substr(eq + 1));
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.what(), line_no);
    }
    if (!is_degree(v))
      throw ValidationError("line " + std::to_string(line_no) + ": degree " +
                            to_string(v) + " for point '" + std::string(point) +
                            "' lies outside [0, 1]");
    values[idx] = v;
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!seen[i])
      throw ValidationError("line " + std::to_string(line_no) + ": set '" +
                            std::string(set_name) + "' gives no degree for point '" +
                            points[i] + "'");
  return values;
}

}  // namespace detail

/// Parses a space description. SyntaxError flags malformed structure,
/// ValidationError flags semantic violations; both carry the line.
inline SpaceDocument parse_space(std::string_view text) {
  SpaceDocument doc;
  enum class Stage { name, points, grid, members };
  Stage stage = Stage::name;
  std::vector<std::string> used_names;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto tokens = detail::split_tokens(line);
    if (tokens.empty()) continue;
    const std::string_view directive = tokens[0];

    if (directive == "name") {
      if (stage != Stage::name)
        throw SyntaxError("unexpected 'name' directive", line_no);
      if (tokens.size() != 2)
        throw SyntaxError("'name' takes exactly one identifier", line_no);
      if (!detail::is_identifier(tokens[1]))
        throw SyntaxError("'" + std::string(tokens[1]) +
                              "' is not an identifier ([A-Za-z0-9_]+)",
                          line_no);
      doc.name = std::string(tokens[1]);
      stage = Stage::points;
    } else if (directive == "points") {
      if (stage != Stage::points)
        throw SyntaxError("unexpected 'points' directive", line_no);
      if (tokens.size() < 2)
        throw SyntaxError("'points' needs at least one point", line_no);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!detail::is_identifier(tokens[i]))
          throw SyntaxError("'" + std::string(tokens[i]) +
                                "' is not an identifier ([A-Za-z0-9_]+)",
                            line_no);
        for (const std::string& prev : doc.points)
          if (prev == tokens[i])
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": duplicate point '" + std::string(tokens[i]) +
                                  "'");
        doc.points.emplace_back(tokens[i]);
      }
      stage = Stage::grid;
    } else if (directive == "grid") {
      if (stage != Stage::grid)
        throw SyntaxError("unexpected 'grid' directive", line_no);
      if (tokens.size() < 2)
        throw SyntaxError("'grid' needs at least one degree", line_no);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        Rat v(0);
        try {
          v = parse_rational(tokens[i]);
        } catch (const SyntaxError& e) {
          throw SyntaxError(e.what(), line_no);
        }
        if (!is_degree(v))
          throw ValidationError("line " + std::to_string(line_no) +
                                ": grid degree " + to_string(v) +
                                " lies outside [0, 1]");
        if (!doc.grid_degrees.empty() && v <= doc.grid_degrees.back())
          throw ValidationError("line " + std::to_string(line_no) +
                                ": grid degrees must be strictly ascending");
        doc.grid_degrees.push_back(v);
      }
      stage = Stage::members;
    } else if (directive == "open" || directive == "set") {
      if (stage != Stage::members)
        throw SyntaxError("'" + std::string(directive) +
                              "' must come after name, points and grid",
                          line_no);
      if (directive == "open" && !doc.sets.empty())
        throw SyntaxError("'open' lines must come before 'set' lines", line_no);
      if (tokens.size() < 2)
        throw SyntaxError("'" + std::string(directive) + "' needs a name",
                          line_no);
      if (!detail::is_identifier(tokens[1]))
        throw SyntaxError("'" + std::string(tokens[1]) +
                              "' is not an identifier ([A-Za-z0-9_]+)",
                          line_no);
      const std::string set_name(tokens[1]);
      for (const std::string& prev : used_names)
        if (prev == set_name)
          throw ValidationError("line " + std::to_string(line_no) +
                                ": duplicate set name '" + set_name + "'");
      used_names.push_back(set_name);
      auto values =
          detail::parse_assignments(tokens, 2, doc.points, set_name, line_no);
      auto& bucket = directive == "open" ? doc.opens : doc.sets;
      bucket.emplace_back(set_name, std::move(values));
    } else {
      throw SyntaxError("unknown directive '" + std::string(directive) + "'",
                        line_no);
    }
  }

  if (stage == Stage::name)
    throw SyntaxError("document is missing the 'name' line");
  if (stage == Stage::points)
    throw SyntaxError("document is missing the 'points' line");
  if (stage == Stage::grid)
    throw SyntaxError("document is missing the 'grid' line");
  return doc;
}

/// Canonical rendering; parse_space(serialize_space(doc)) reproduces doc.
inline std::string serialize_space(const SpaceDocument& doc) {
  std::string out = "name " + doc.name + "\n";
  out += "points";
  for (const std::string& p : doc.points) out += " " + p;
  out += "\ngrid";
  for (const Rat& v : doc.grid_degrees) out += " " + to_string(v);
  out += "\n";
  const auto emit = [&out, &doc](const char* directive,
                                 const std::pair<std::string, std::vector<Rat>>&
                                     entry) {
    out += directive;
    out += " " + entry.first;
    for (std::size_t i = 0; i < doc.points.size(); ++i)
      out += " " + doc.points[i] + "=" + to_string(entry.second[i]);
    out += "\n";
  };
  for (const auto& entry : doc.opens) emit("open", entry);
  for (const auto& entry : doc.sets) emit("set", entry);
  return out;
}

/// A materialized document: validated topology plus name-addressable sets.
class Space {
 public:
  Space(std::string name, FuzzyTopology topology,
        std::vector<std::pair<std::string, FuzzySet>> members)
      : name_(std::move(name)),
        topology_(std::move(topology)),
        members_(std::move(members)) {}

  const std::string& name() const { return name_; }
  const FuzzyTopology& topology() const { return topology_; }

  /// Every named set in the document, opens first, in declaration order.
  const std::vector<std::pair<std::string, FuzzySet>>& members() const {
    return members_;
  }

  /// The named sets that are neither the constant-0 nor the constant-1 set:
  /// the interesting query targets.
  std::vector<std::pair<std::string, FuzzySet>> named_sets() const {
    std::vector<std::pair<std::string, FuzzySet>> out;
    for (const auto& [name, set] : members_) {
      bool constant0 = true;
      bool constant1 = true;
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] != rat_zero()) constant0 = false;
        if (set[i] != rat_one()) constant1 = false;
      }
      if (!constant0 && !constant1) out.emplace_back(name, set);
    }
    return out;
  }

  const FuzzySet* find_set(std::string_view name) const {
    for (const auto& [member_name, set] : members_)
      if (member_name == name) return &set;
    return nullptr;
  }

 private:
  std::string name_;
  FuzzyTopology topology_;
  std::vector<std::pair<std::string, FuzzySet>> members_;
};

/// Builds the topology and the set table from a parsed document. Throws
/// ValidationError / TopologyError naming the offending set when a degree is
/// off-grid or the open family breaks an axiom.
inline Space materialize(const SpaceDocument& doc) {
  const CarrierPtr carrier = make_carrier(doc.points);
  const Grid grid(doc.grid_degrees);

  std::vector<std::pair<std::string, FuzzySet>> members;
  const auto build = [&](const std::pair<std::string, std::vector<Rat>>& entry) {
    FuzzySet set(carrier, entry.second);
    for (std::size_t i = 0; i < set.size(); ++i)
      if (!grid.contains(set[i]))
        throw ValidationError("set '" + entry.first + "': degree " +
                              to_string(set[i]) + " at point '" +
                              carrier->point(i) + "' is not on the grid");
    members.emplace_back(entry.first, std::move(set));
  };
  for (const auto& entry : doc.opens) build(entry);
  std::vector<FuzzySet> opens;
  for (const auto& [name, set] : members) opens.push_back(set);
  for (const auto& entry : doc.sets) build(entry);

  FuzzyTopology topology = validate_topology(carrier, grid, std::move(opens));
  return Space(doc.name, std::move(topology), std::move(members));
}

/// parse_space followed by materialize.
inline Space load_space(std::string_view text) {
  return materialize(parse_space(text));
}

}  // namespace fuzzytop
