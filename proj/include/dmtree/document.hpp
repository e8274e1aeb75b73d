#pragma once

// JSON input documents:
//
//   {
//     "vertices": {"a": 0, "b": 1},
//     "edges": [["a", "b", 2]]
//   }
//
// Vertex values may be null and edge triples may drop their value when only
// the tree is needed.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmtree/morse_function.hpp"

namespace dmtree {

struct InputDocument {
  std::vector<std::string> vertices;
  std::vector<std::optional<double>> vertex_values;
  std::vector<NamedEdge> edges;
  std::vector<std::optional<double>> edge_values;
};

/// Throws ParseError.
InputDocument parse_document(std::string_view text);

/// Reads and parses a file. Throws ParseError if unreadable.
InputDocument load_document(const std::string& path);

/// Throws the simplicial-tree validation errors.
SimplicialTree document_tree(const InputDocument& doc);

/// Throws MissingValue if a value is absent, plus every tree and discrete
/// Morse validation error.
MorseFunction document_function(const InputDocument& doc);

/// Serializes f in the input format with two-space indentation.
std::string write_document(const MorseFunction& f);

}  // namespace dmtree
