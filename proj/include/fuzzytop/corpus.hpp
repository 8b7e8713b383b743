#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "space_format.hpp"

namespace fuzzytop {

/// The built-in reference spaces. The texts are byte-stable: they are already
/// in canonical form, so serialize_space(parse_space(text)) == text.
inline const std::vector<std::pair<std::string, std::string>>& corpus_texts() {
  static const std::vector<std::pair<std::string, std::string>> texts = {
      {"ex2_2",
       "name ex2_2\n"
       "points a b c\n"
       "grid 0 1\n"
       "open 0_X a=0 b=0 c=0\n"
       "open B a=0 b=1 c=0\n"
       "open 1_X a=1 b=1 c=1\n"
       "set F a=1 b=0 c=1\n"
       "set E a=1 b=1 c=0\n"},
      {"ex2_5",
       "name ex2_5\n"
       "points a b c d\n"
       "grid 0 1\n"
       "open 0_X a=0 b=0 c=0 d=0\n"
       "open A a=1 b=0 c=0 d=0\n"
       "open I a=0 b=1 c=0 d=1\n"
       "open N a=1 b=1 c=0 d=1\n"
       "open 1_X a=1 b=1 c=1 d=1\n"
       "set F a=1 b=0 c=1 d=0\n"
       "set E a=1 b=1 c=0 d=0\n"
       "set G a=1 b=0 c=0 d=1\n"
       "set C a=0 b=0 c=1 d=0\n"
       "set J a=0 b=0 c=1 d=1\n"},
      {"ex3_6",
       "name ex3_6\n"
       "points a b c\n"
       "grid 0 1\n"
       "open 0_X a=0 b=0 c=0\n"
       "open E a=1 b=1 c=0\n"
       "open 1_X a=1 b=1 c=1\n"},
  };
  return texts;
}

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : corpus_texts()) names.push_back(name);
  return names;
}

inline std::string_view corpus_text(std::string_view name) {
  for (const auto& [entry_name, text] : corpus_texts())
    if (entry_name == name) return text;
  throw UnknownIdError("no corpus space named '" + std::string(name) + "'");
}

inline const SpaceDocument& corpus_document(std::string_view name) {
  static const std::vector<std::pair<std::string, SpaceDocument>> documents =
      [] {
        std::vector<std::pair<std::string, SpaceDocument>> out;
        for (const auto& [entry_name, text] : corpus_texts())
          out.emplace_back(entry_name, parse_space(text));
        return out;
      }();
  for (const auto& [entry_name, doc] : documents)
    if (entry_name == name) return doc;
  throw UnknownIdError("no corpus space named '" + std::string(name) + "'");
}

inline Space corpus_space(std::string_view name) {
  return materialize(corpus_document(name));
}

}  // namespace fuzzytop
