#include "dmtree/star_realization.hpp"

#include "dmtree/error.hpp"

namespace dmtree {

LRSequence::LRSequence(std::vector<Direction> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::MalformedSequence, "an LR sequence has at least one entry");
  if (entries_.front() != Direction::L) throw Error(ErrorCode::MalformedSequence, "entry 0 must be L");
}

LRSequence LRSequence::parse(std::string_view text) {
  std::vector<Direction> entries{Direction::L};
  for (char c : text) {
    if (c == 'L') {
      entries.push_back(Direction::L);
    } else if (c == 'R') {
      entries.push_back(Direction::R);
    } else {
      throw Error(ErrorCode::MalformedSequence,
                  "unexpected character '" + std::string(1, c) + "'; only L and R are allowed");
    }
  }
  return LRSequence(std::move(entries));
}

std::string LRSequence::to_string() const {
  std::string out;
  for (std::size_t i = 1; i < entries_.size(); ++i) out += to_char(entries_[i]);
  return out;
}

namespace {

// Internal nodes from the root down to the impasse.
std::vector<NodeId> spine(const MergeTree& tree) {
  if (!is_thin(tree)) {
    throw Error(ErrorCode::NotThin,
                "merge tree has " + std::to_string(impasse_count(tree)) + " impasses; thin trees have one");
  }
  std::vector<NodeId> path{tree.root()};
  for (;;) {
    const NodeId n = path.back();
    const bool left_leaf = tree.is_leaf(tree.left(n));
    const bool right_leaf = tree.is_leaf(tree.right(n));
    if (left_leaf && right_leaf) return path;
    path.push_back(left_leaf ? tree.right(n) : tree.left(n));
  }
}

NodeId hanging_leaf(const MergeTree& tree, NodeId n) {
  return tree.is_leaf(tree.left(n)) ? tree.left(n) : tree.right(n);
}

}  // namespace

LRSequence lr_sequence(const MergeTree& tree) {
  std::vector<Direction> entries;
  for (NodeId n : spine(tree)) entries.push_back(tree.direction(n));
  return LRSequence(std::move(entries));
}

MergeTree thin_from_lr(const LRSequence& sequence) {
  const std::size_t k = sequence.size();
  // Path nodes take ids 0..k-1, leaves follow.
  std::vector<MergeNode> nodes(2 * k + 1);
  NodeId next_leaf = k;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    const NodeId leaf = next_leaf++;
    if (sequence[p + 1] == Direction::L) {
      nodes[p].left = p + 1;
      nodes[p].right = leaf;
    } else {
      nodes[p].left = leaf;
      nodes[p].right = p + 1;
    }
  }
  nodes[k - 1].left = next_leaf++;
  nodes[k - 1].right = next_leaf++;
  return MergeTree(std::move(nodes), 0);
}

std::vector<MergeTree> enumerate_thin(std::size_t n) {
  if (n == 0 || n > 31) throw Error(ErrorCode::InvalidArgument, "thin trees are enumerated for 1 <= n <= 31");
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::vector<MergeTree> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Direction> entries{Direction::L};
    for (std::size_t i = 1; i < n; ++i) {
      const bool right = (code >> (n - 1 - i)) & 1U;
      entries.push_back(right ? Direction::R : Direction::L);
    }
    out.push_back(thin_from_lr(LRSequence(std::move(entries))));
  }
  return out;
}

SimplicialTree make_star(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "a star has at least one edge");
  std::vector<std::string> names{"c"};
  std::vector<NamedEdge> edges;
  for (std::size_t i = 1; i <= k; ++i) {
    names.push_back("s" + std::to_string(i));
    edges.emplace_back("c", names.back());
  }
  return SimplicialTree::build(std::move(names), edges);
}

bool is_star(const SimplicialTree& tree) {
  if (tree.vertex_count() < 2) return false;
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) == tree.edge_count()) return true;
  }
  return false;
}

StarRealization realize_on_star(const MergeTree& tree) {
  const std::vector<NodeId> path = spine(tree);
  const std::size_t k = path.size();
  std::vector<Direction> turn(k);
  for (std::size_t p = 0; p < k; ++p) turn[p] = tree.direction(path[p]);

  constexpr auto unlabeled = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(tree.size(), unlabeled);
  std::size_t next = 0;

  // Leaves under path nodes where the itinerary changes side.
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (turn[p + 1] != turn[p]) label[hanging_leaf(tree, path[p])] = next++;
  }
  const NodeId impasse = path.back();
  const NodeId center_leaf = tree.left(impasse);
  label[center_leaf] = next++;

  std::vector<NodeId> star_leaf(k);
  for (std::size_t p = 0; p + 1 < k; ++p) star_leaf[p] = hanging_leaf(tree, path[p]);
  star_leaf[k - 1] = tree.right(impasse);

  for (std::size_t p = k; p-- > 0;) {
    if (label[star_leaf[p]] == unlabeled) label[star_leaf[p]] = next++;
  }
  for (std::size_t p = k; p-- > 0;) label[path[p]] = next++;

  auto star = std::make_shared<const SimplicialTree>(make_star(k));
  std::vector<double> vertex_values(k + 1);
  std::vector<double> edge_values(k);
  const VertexId center = star->vertex("c");
  vertex_values[center] = static_cast<double>(label[center_leaf]);
  for (std::size_t p = 0; p < k; ++p) {
    const VertexId leaf = star->vertex("s" + std::to_string(p + 1));
    vertex_values[leaf] = static_cast<double>(label[star_leaf[p]]);
    edge_values[*star->find_edge(center, leaf)] = static_cast<double>(label[path[p]]);
  }
  MorseFunction f = MorseFunction::validate(star, std::move(vertex_values), std::move(edge_values));
  return {std::move(star), center, std::move(f)};
}

std::uint64_t count_realizable_on_star(std::size_t k) {
  if (k == 0 || k > 64) throw Error(ErrorCode::InvalidArgument, "star edge count must be in 1..64");
  return std::uint64_t{1} << (k - 1);
}

}  // namespace dmtree
