#pragma once

// Thin merge trees and their realization by critical discrete Morse functions
// on star graphs.
//
// Stars are indexed by edge count: the star with k edges has a center and k
// leaves, and its critical functions induce exactly the thin merge trees with
// k internal nodes.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dmtree/merge_tree.hpp"

namespace dmtree {

/// Left/right itinerary from the root of a thin merge tree to its impasse.
/// Entry 0 is always L (the root's own direction); entry i >= 1 says on which
/// side the path continues below the i-th path node. One entry per internal
/// node.
class LRSequence {
 public:
  /// Throws MalformedSequence if empty or if entry 0 is not L.
  explicit LRSequence(std::vector<Direction> entries);

  /// Reads the text form, which leaves out entry 0: "" is the single internal
  /// node, "LRRL" a path of five. Throws MalformedSequence.
  static LRSequence parse(std::string_view text);

  const std::vector<Direction>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Direction operator[](std::size_t i) const { return entries_.at(i); }

  /// Text form without entry 0.
  std::string to_string() const;

  friend bool operator==(const LRSequence&, const LRSequence&) = default;

 private:
  std::vector<Direction> entries_;
};

/// Throws NotThin.
LRSequence lr_sequence(const MergeTree& tree);

/// The unique thin merge tree with the given LR sequence; nodes are unlabeled.
MergeTree thin_from_lr(const LRSequence& sequence);

/// All 2^(n-1) thin merge trees with n internal nodes, in lexicographic order
/// of their LR sequences (L before R). Throws InvalidArgument unless
/// 1 <= n <= 31.
std::vector<MergeTree> enumerate_thin(std::size_t n);

/// Center "c" joined to leaves "s1" .. "sk". Throws InvalidArgument if k == 0.
SimplicialTree make_star(std::size_t k);

/// True when one vertex is adjacent to every other vertex and there are at
/// least two vertices.
bool is_star(const SimplicialTree& tree);

struct StarRealization {
  std::shared_ptr<const SimplicialTree> star;
  VertexId center;
  MorseFunction function;
};

/// A critical discrete Morse function on the star with k edges, for a thin
/// tree with k internal nodes, whose induced merge tree has the same LR
/// sequence. Values are the consecutive integers 0 .. 2k. Throws NotThin.
///
/// Labels: first the leaves hanging off path nodes where the itinerary turns,
/// in root-to-impasse order; then the left leaf of the impasse, which becomes
/// the center; then every remaining leaf walking from the impasse back to the
/// root; then the internal nodes along that same walk. Star leaf s_i carries
/// the label of the merge-tree leaf under the i-th path node (the impasse's
/// right leaf for the last one), and its edge carries the label of that path
/// node.
StarRealization realize_on_star(const MergeTree& tree);

/// 2^(k-1) merge classes on the star with k edges. Throws InvalidArgument
/// unless 1 <= k <= 64.
std::uint64_t count_realizable_on_star(std::size_t k);

}  // namespace dmtree
