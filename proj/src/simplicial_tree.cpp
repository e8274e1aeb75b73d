#include "dmtree/simplicial_tree.hpp"

#include <algorithm>
#include <numeric>

#include "dmtree/error.hpp"

namespace dmtree {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Forest Forest::build(std::vector<std::string> vertices,
                     const std::vector<NamedEdge>& edges) {
  Forest forest;
  forest.names_ = std::move(vertices);
  forest.incident_.resize(forest.names_.size());
  for (VertexId v = 0; v < forest.names_.size(); ++v) {
    if (!forest.index_.emplace(forest.names_[v], v).second) {
      throw Error(ErrorCode::DuplicateVertex, "vertex '" + forest.names_[v] + "' declared twice");
    }
  }

  DisjointSets sets(forest.names_.size());
  for (const auto& [a, b] : edges) {
    const VertexId u = forest.vertex(a);
    const VertexId v = forest.vertex(b);
    if (u == v) throw Error(ErrorCode::Loop, "edge (" + a + ", " + b + ") is a loop");
    if (forest.find_edge(u, v)) {
      throw Error(ErrorCode::MultiEdge, "edge (" + a + ", " + b + ") appears more than once");
    }
    if (!sets.unite(u, v)) {
      throw Error(ErrorCode::CycleDetected,
                  "edge (" + a + ", " + b + ") closes a cycle; a tree has |V| = |E| + 1");
    }
    const EdgeId e = forest.edges_.size();
    forest.edges_.push_back({std::min(u, v), std::max(u, v)});
    forest.incident_[u].push_back(e);
    forest.incident_[v].push_back(e);
  }
  return forest;
}

std::optional<VertexId> Forest::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Forest::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "no vertex named '" + std::string(name) + "'");
}

std::optional<EdgeId> Forest::find_edge(VertexId u, VertexId v) const {
  if (u >= incident_.size() || v >= incident_.size()) return std::nullopt;
  for (EdgeId e : incident_[u]) {
    if (edges_[e].contains(v) && u != v) return e;
  }
  return std::nullopt;
}

std::vector<std::size_t> Forest::component_labels() const {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(names_.size(), unset);
  std::vector<VertexId> stack;
  std::size_t next = 0;
  for (VertexId start = 0; start < names_.size(); ++start) {
    if (label[start] != unset) continue;
    label[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : incident_[v]) {
        const VertexId w = edges_[e].other(v);
        if (label[w] == unset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t Forest::component_count() const {
  // Acyclic, so every edge merges two components.
  return names_.size() - edges_.size();
}

std::set<Simplex> Forest::component_of(VertexId v) const {
  if (v >= names_.size()) {
    throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
  }
  const auto labels = component_labels();
  std::set<Simplex> out;
  for (VertexId w = 0; w < names_.size(); ++w) {
    if (labels[w] == labels[v]) out.insert(Simplex::vertex(w));
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (labels[edges_[e].lo] == labels[v]) out.insert(Simplex::edge(e));
  }
  return out;
}

std::set<Simplex> Forest::component_of(std::string_view name) const {
  return component_of(vertex(name));
}

bool Forest::same_complex(const Forest& other) const {
  if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count()) return false;
  for (const auto& n : names_) {
    if (!other.find_vertex(n)) return false;
  }
  for (const Edge& e : edges_) {
    if (!other.find_edge(other.vertex(names_[e.lo]), other.vertex(names_[e.hi]))) return false;
  }
  return true;
}

std::string Forest::describe(Simplex s) const {
  if (s.is_vertex()) return name(s.id);
  const Edge& e = edge(s.id);
  return name(e.lo) + "-" + name(e.hi);
}

SimplicialTree::SimplicialTree(Forest forest) : Forest(std::move(forest)) {
  if (vertex_count() == 0) throw Error(ErrorCode::NotConnected, "a tree needs at least one vertex");
  if (component_count() != 1) {
    throw Error(ErrorCode::NotConnected,
                "complex has " + std::to_string(component_count()) + " components");
  }
}

SimplicialTree SimplicialTree::build(std::vector<std::string> vertices,
                                     const std::vector<NamedEdge>& edges) {
  return SimplicialTree(Forest::build(std::move(vertices), edges));
}

std::vector<EdgeId> maximum_matching(const SimplicialTree& tree) {
  const std::size_t n = tree.vertex_count();
  // Depth-first order from vertex 0; visiting it backwards sees children
  // before parents.
  std::vector<VertexId> order;
  std::vector<std::optional<EdgeId>> parent_edge(n);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (EdgeId e : tree.incident_edges(v)) {
      const VertexId w = tree.edge(e).other(v);
      if (!seen[w]) {
        seen[w] = true;
        parent_edge[w] = e;
        stack.push_back(w);
      }
    }
  }

  std::vector<bool> matched(n, false);
  std::vector<EdgeId> matching;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (matched[v] || !parent_edge[v]) continue;
    const VertexId p = tree.edge(*parent_edge[v]).other(v);
    if (!matched[p]) {
      matched[v] = matched[p] = true;
      matching.push_back(*parent_edge[v]);
    }
  }
  std::sort(matching.begin(), matching.end());
  return matching;
}

std::size_t matching_number(const SimplicialTree& tree) { return maximum_matching(tree).size(); }

}  // namespace dmtree
