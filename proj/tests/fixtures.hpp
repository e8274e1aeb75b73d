#pragma once

// Worked examples used across the test suites. Vertex names encode the value
// each vertex carries in its example.

#include <optional>
#include <stdexcept>

#include "dmtree/merge_tree.hpp"
#include "dmtree/morse_function.hpp"

namespace dmtree::fixtures {

/// Six-vertex tree with every simplex critical. Edges: x0-x4 = 5, x0-x6 = 9,
/// x7-x6 = 8, x6-x1 = 10, x1-x2 = 3.
inline MorseFunction first_example() {
  return MorseFunction::from_labels(
      {{"x0", 0}, {"x4", 4}, {"x7", 7}, {"x6", 6}, {"x1", 1}, {"x2", 2}},
      {{"x0", "x4", 5}, {"x0", "x6", 9}, {"x7", "x6", 8}, {"x6", "x1", 10}, {"x1", "x2", 3}});
}

/// Path q0 - q3 - q1 - q2 whose merge tree has one impasse while the path has
/// matching number two.
inline MorseFunction impasse_example() {
  return MorseFunction::from_labels({{"q0", 0}, {"q1", 1}, {"q2", 2}, {"q3", 3}},
                                    {{"q0", "q3", 5}, {"q1", "q3", 4}, {"q2", "q1", 6}});
}

/// Path v0 - v1 - v2 with vertex values (a, b, c) and edge values (e01, e12).
inline MorseFunction path3(double a, double b, double c, double e01, double e12) {
  return MorseFunction::from_labels({{"v0", a}, {"v1", b}, {"v2", c}}, {{"v0", "v1", e01}, {"v1", "v2", e12}});
}

inline MorseFunction forman_first() { return path3(0, 1, 2, 3, 4); }
inline MorseFunction forman_second() { return path3(0, 1, 2, 4, 3); }
inline MorseFunction hom_second() { return path3(0, 1, 3, 2, 4); }

/// Persistence example: the path function above and a star on three vertices.
inline MorseFunction persistence_path() { return forman_second(); }
inline MorseFunction persistence_star() {
  return MorseFunction::from_labels({{"c", 0}, {"a", 1}, {"b", 2}}, {{"c", "a", 4}, {"c", "b", 3}});
}

inline MorseFunction single_edge(double u, double v, double uv) {
  return MorseFunction::from_labels({{"u", u}, {"v", v}}, {{"u", "v", uv}});
}

inline NodeId node_with_value(const MergeTree& tree, double value) {
  for (NodeId n = 0; n < tree.size(); ++n) {
    if (tree.value(n) == value) return n;
  }
  throw std::out_of_range("no node with that value");
}

}  // namespace dmtree::fixtures
