#include "dmtree/merge_tree.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dmtree/error.hpp"
#include "dmtree/format.hpp"

namespace dmtree {

MergeTree::MergeTree(std::vector<MergeNode> nodes, NodeId root)
    : nodes_(std::move(nodes)), parents_(nodes_.size()), root_(root) {
  const auto fail = [](const std::string& what) { throw Error(ErrorCode::MalformedMergeTree, what); };
  if (nodes_.empty()) fail("a merge tree has at least one node");
  if (root_ >= nodes_.size()) fail("root index out of range");
  for (NodeId n = 0; n < nodes_.size(); ++n) {
    const MergeNode& node = nodes_[n];
    if (node.left.has_value() != node.right.has_value()) {
      fail("node " + std::to_string(n) + " has exactly one child; merge trees are full");
    }
    if (!node.left) continue;
    if (*node.left == *node.right) fail("node " + std::to_string(n) + " lists the same child twice");
    for (NodeId child : {*node.left, *node.right}) {
      if (child >= nodes_.size()) fail("child index out of range");
      if (child == root_) fail("the root cannot be a child");
      if (parents_[child]) fail("node " + std::to_string(child) + " has two parents");
      parents_[child] = n;
    }
  }
  // Every non-root node has one parent, so the tree is connected and acyclic
  // exactly when everything is reachable from the root.
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeId> stack{root_};
  std::size_t reached = 0;
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    if (seen[n]) fail("cycle through node " + std::to_string(n));
    seen[n] = true;
    ++reached;
    if (nodes_[n].left) {
      stack.push_back(*nodes_[n].right);
      stack.push_back(*nodes_[n].left);
    }
  }
  if (reached != nodes_.size()) fail("some nodes are not reachable from the root");
}

MergeTree MergeTree::leaf(std::optional<double> value) { return MergeTree({MergeNode{value, {}, {}}}, 0); }

MergeTree MergeTree::join(const MergeTree& left, const MergeTree& right, std::optional<double> value) {
  std::vector<MergeNode> nodes;
  nodes.reserve(1 + left.size() + right.size());
  nodes.push_back({value, {}, {}});
  const auto append = [&nodes](const MergeTree& sub) {
    const NodeId offset = nodes.size();
    for (MergeNode node : sub.nodes_) {
      if (node.left) {
        *node.left += offset;
        *node.right += offset;
      }
      nodes.push_back(node);
    }
    return sub.root_ + offset;
  };
  nodes[0].left = append(left);
  nodes[0].right = append(right);
  return MergeTree(std::move(nodes), 0);
}

Direction MergeTree::direction(NodeId n) const {
  const auto p = parents_.at(n);
  if (!p) return Direction::L;
  return nodes_[*p].left == n ? Direction::L : Direction::R;
}

std::size_t MergeTree::leaf_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const MergeNode& n) { return !n.left; }));
}

namespace {

struct ComponentSummary {
  Simplex top;         // critical simplex with the largest value
  double top_value;
  double minimum;      // smallest value in the component, always at a vertex
};

// Component of `start` in the sublevel set f < below.
ComponentSummary summarize_component(const MorseFunction& f, VertexId start, double below,
                                     std::vector<VertexId>& stack, std::vector<bool>& seen) {
  const SimplicialTree& tree = f.domain();
  std::fill(seen.begin(), seen.end(), false);
  stack.assign(1, start);
  seen[start] = true;
  ComponentSummary out{Simplex::vertex(start), -std::numeric_limits<double>::infinity(),
                       std::numeric_limits<double>::infinity()};
  bool found = false;
  const auto consider = [&](Simplex s) {
    if (f.is_critical(s) && (!found || f.value(s) > out.top_value)) {
      out.top = s;
      out.top_value = f.value(s);
      found = true;
    }
  };
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    out.minimum = std::min(out.minimum, f.vertex_value(v));
    consider(Simplex::vertex(v));
    for (EdgeId e : tree.incident_edges(v)) {
      if (!(f.edge_value(e) < below)) continue;
      consider(Simplex::edge(e));
      const VertexId w = tree.edge(e).other(v);
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  if (!found) throw std::logic_error("sublevel component without a critical simplex");
  return out;
}

}  // namespace

MergeTree induce_merge_tree(const MorseFunction& f) {
  const SimplicialTree& tree = f.domain();
  const auto& critical = f.critical_simplices();
  const auto top = std::find_if(critical.rbegin(), critical.rend(), [](Simplex s) { return s.is_edge(); });
  if (top == critical.rend()) {
    // Euler characteristic one leaves exactly one critical vertex.
    if (critical.size() != 1) throw std::logic_error("expected a single critical vertex");
    return MergeTree::leaf(f.value(critical.front()));
  }
  if (*top != critical.back()) throw std::logic_error("largest critical value is not an edge");

  std::vector<MergeNode> nodes{{f.value(*top), {}, {}}};
  std::vector<Direction> direction{Direction::L};
  std::vector<std::pair<NodeId, EdgeId>> pending{{0, top->id}};

  std::vector<VertexId> stack;
  std::vector<bool> seen(tree.vertex_count());
  while (!pending.empty()) {
    const auto [node, e] = pending.back();
    pending.pop_back();
    const double c = f.edge_value(e);
    const ComponentSummary u = summarize_component(f, tree.edge(e).lo, c, stack, seen);
    const ComponentSummary v = summarize_component(f, tree.edge(e).hi, c, stack, seen);
    // Distinct vertices never share a value, so the minima cannot tie.
    if (u.minimum == v.minimum) throw std::logic_error("component minima tie");

    const ComponentSummary& keeps = u.minimum < v.minimum ? u : v;
    const ComponentSummary& flips = u.minimum < v.minimum ? v : u;
    const bool keeps_left = direction[node] == Direction::L;
    const ComponentSummary& left = keeps_left ? keeps : flips;
    const ComponentSummary& right = keeps_left ? flips : keeps;

    for (const ComponentSummary* child : {&left, &right}) {
      const NodeId id = nodes.size();
      nodes.push_back({child->top_value, {}, {}});
      direction.push_back(child == &left ? Direction::L : Direction::R);
      if (child->top.is_edge()) pending.emplace_back(id, child->top.id);
      (child == &left ? nodes[node].left : nodes[node].right) = id;
    }
  }
  return MergeTree(std::move(nodes), 0);
}

namespace {

void append_code(const MergeTree& tree, NodeId n, std::string& out) {
  if (tree.is_leaf(n)) {
    out += kLeafGlyph;
    return;
  }
  out += '(';
  append_code(tree, tree.left(n), out);
  append_code(tree, tree.right(n), out);
  out += ')';
}

class ShapeParser {
 public:
  explicit ShapeParser(std::string_view code) : code_(code) {}

  MergeTree parse() {
    const NodeId root = subtree(0);
    if (pos_ != code_.size()) fail("trailing characters");
    return MergeTree(std::move(nodes_), root);
  }

 private:
  NodeId subtree(std::size_t depth) {
    if (depth > code_.size()) fail("nesting too deep");
    const NodeId id = nodes_.size();
    nodes_.emplace_back();
    if (code_.substr(pos_, kLeafGlyph.size()) == kLeafGlyph) {
      pos_ += kLeafGlyph.size();
      return id;
    }
    if (pos_ >= code_.size() || code_[pos_] != '(') fail("expected '(' or a leaf");
    ++pos_;
    const NodeId l = subtree(depth + 1);
    const NodeId r = subtree(depth + 1);
    if (pos_ >= code_.size() || code_[pos_] != ')') fail("expected ')'");
    ++pos_;
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "shape code at byte " + std::to_string(pos_) + ": " + what);
  }

  std::string_view code_;
  std::size_t pos_ = 0;
  std::vector<MergeNode> nodes_;
};

}  // namespace

ShapeCode shape_code(const MergeTree& tree) {
  ShapeCode code;
  append_code(tree, tree.root(), code.text);
  return code;
}

MergeTree parse_shape(std::string_view code) { return ShapeParser(code).parse(); }

bool merge_equivalent(const MergeTree& a, const MergeTree& b) { return shape_code(a) == shape_code(b); }

bool merge_equivalent(const MorseFunction& f, const MorseFunction& g) {
  return merge_equivalent(induce_merge_tree(f), induce_merge_tree(g));
}

std::vector<NodeId> impasses(const MergeTree& tree) {
  std::vector<NodeId> out;
  for (NodeId n = 0; n < tree.size(); ++n) {
    if (!tree.is_leaf(n) && tree.is_leaf(tree.left(n)) && tree.is_leaf(tree.right(n))) out.push_back(n);
  }
  return out;
}

std::size_t impasse_count(const MergeTree& tree) { return impasses(tree).size(); }

bool is_thin(const MergeTree& tree) { return impasse_count(tree) == 1; }

std::vector<EdgeId> impasse_edges(const MorseFunction& f, const MergeTree& induced) {
  std::map<double, Simplex> by_value;
  for (Simplex s : f.critical_simplices()) by_value.emplace(f.value(s), s);
  std::vector<EdgeId> out;
  for (NodeId n : impasses(induced)) {
    const auto value = induced.value(n);
    const auto it = value ? by_value.find(*value) : by_value.end();
    if (it == by_value.end() || !it->second.is_edge()) {
      throw Error(ErrorCode::InvalidArgument, "merge tree was not induced by this function");
    }
    out.push_back(it->second.id);
  }
  return out;
}

namespace {

std::string node_label(const MergeTree& tree, NodeId n) {
  const auto v = tree.value(n);
  return v ? format_value(*v) : std::string{};
}

void append_text(const MergeTree& tree, NodeId n, std::size_t depth, std::ostringstream& out) {
  const auto v = tree.value(n);
  out << std::string(2 * depth, ' ') << (v ? format_value(*v) : "-") << ' ' << to_char(tree.direction(n))
      << '\n';
  if (tree.is_leaf(n)) return;
  append_text(tree, tree.left(n), depth + 1, out);
  append_text(tree, tree.right(n), depth + 1, out);
}

}  // namespace

std::string to_dot(const MergeTree& tree) {
  std::ostringstream out;
  out << "digraph merge_tree {\n"
      << "  rankdir=BT;\n"
      << "  ordering=out;\n"
      << "  node [shape=circle];\n";
  // Preorder keeps the output stable and lists left subtrees first.
  std::vector<NodeId> stack{tree.root()};
  std::vector<NodeId> order;
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    order.push_back(n);
    if (!tree.is_leaf(n)) {
      stack.push_back(tree.right(n));
      stack.push_back(tree.left(n));
    }
  }
  for (NodeId n : order) {
    out << "  n" << n << " [label=\"" << node_label(tree, n) << "\"";
    if (tree.is_leaf(n)) out << ", shape=box";
    out << "];\n";
  }
  for (NodeId n : order) {
    if (tree.is_leaf(n)) continue;
    out << "  n" << n << " -> n" << tree.left(n) << " [label=\"L\"];\n";
    out << "  n" << n << " -> n" << tree.right(n) << " [label=\"R\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const MergeTree& tree) {
  std::ostringstream out;
  append_text(tree, tree.root(), 0, out);
  return out.str();
}

}  // namespace dmtree
