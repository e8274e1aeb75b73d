#pragma once

// Merge trees: rooted full binary trees whose children are designated left or
// right. A node's direction is the side it hangs on; the root's direction is L.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmtree/morse_function.hpp"

namespace dmtree {

enum class Direction { L, R };

constexpr Direction opposite(Direction d) noexcept { return d == Direction::L ? Direction::R : Direction::L; }
constexpr char to_char(Direction d) noexcept { return d == Direction::L ? 'L' : 'R'; }

using NodeId = std::size_t;

struct MergeNode {
  std::optional<double> value;
  std::optional<NodeId> left;
  std::optional<NodeId> right;
};

class MergeTree {
 public:
  /// Checks that the nodes form one full binary tree rooted at `root`.
  /// Throws MalformedMergeTree.
  MergeTree(std::vector<MergeNode> nodes, NodeId root);

  static MergeTree leaf(std::optional<double> value = std::nullopt);
  static MergeTree join(const MergeTree& left, const MergeTree& right,
                        std::optional<double> value = std::nullopt);

  std::size_t size() const noexcept { return nodes_.size(); }
  NodeId root() const noexcept { return root_; }
  const MergeNode& node(NodeId n) const { return nodes_.at(n); }
  const std::vector<MergeNode>& nodes() const noexcept { return nodes_; }

  bool is_leaf(NodeId n) const { return !nodes_.at(n).left; }
  NodeId left(NodeId n) const { return nodes_.at(n).left.value(); }
  NodeId right(NodeId n) const { return nodes_.at(n).right.value(); }
  std::optional<NodeId> parent(NodeId n) const { return parents_.at(n); }
  Direction direction(NodeId n) const;
  std::optional<double> value(NodeId n) const { return nodes_.at(n).value; }

  std::size_t leaf_count() const noexcept;
  std::size_t internal_count() const noexcept { return size() - leaf_count(); }

 private:
  std::vector<MergeNode> nodes_;
  std::vector<std::optional<NodeId>> parents_;
  NodeId root_;
};

/// The merge tree induced by f.
///
/// Critical edges are visited in decreasing order of value starting from the
/// largest, which becomes the root with direction L. The two children of the
/// node for a critical edge uv carry the largest critical value found in the
/// components of u and of v in the sublevel set below f(uv). The child whose
/// component reaches the smaller minimum keeps its parent's direction; the
/// other takes the opposite one. With no critical edge the tree is the single
/// node of the unique critical vertex.
MergeTree induce_merge_tree(const MorseFunction& f);

/// Canonical text of the unlabeled shape: a leaf is "•", an internal node is
/// "(" + left + right + ")".
struct ShapeCode {
  std::string text;
  friend auto operator<=>(const ShapeCode&, const ShapeCode&) = default;
};

inline constexpr std::string_view kLeafGlyph = "•";

ShapeCode shape_code(const MergeTree& tree);

/// Inverse of shape_code; nodes are unlabeled. Throws ParseError.
MergeTree parse_shape(std::string_view code);

bool merge_equivalent(const MergeTree& a, const MergeTree& b);
bool merge_equivalent(const MorseFunction& f, const MorseFunction& g);

/// Internal nodes whose two children are leaves.
std::vector<NodeId> impasses(const MergeTree& tree);
std::size_t impasse_count(const MergeTree& tree);
bool is_thin(const MergeTree& tree);

/// Critical edges of f behind the impasses of its induced merge tree.
std::vector<EdgeId> impasse_edges(const MorseFunction& f, const MergeTree& induced);

/// Graphviz rendering; the root is drawn at the bottom and the left child edge
/// is written before the right one.
std::string to_dot(const MergeTree& tree);

/// Indented outline, one "value direction" line per node in preorder.
std::string to_text(const MergeTree& tree);

}  // namespace dmtree
