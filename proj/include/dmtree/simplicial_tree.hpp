#pragma once

// One-dimensional simplicial complexes restricted to forests and trees.
//
// Vertices are addressed externally by opaque string names and internally by
// dense indices. Edges are stored with their endpoints sorted by index, so two
// edges are equal exactly when their endpoint sets are.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dmtree {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId lo;
  VertexId hi;

  bool contains(VertexId v) const noexcept { return v == lo || v == hi; }
  VertexId other(VertexId v) const noexcept { return v == lo ? hi : lo; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class SimplexKind { Vertex = 0, Edge = 1 };

/// A vertex or an edge of a complex, identified by kind and index.
struct Simplex {
  SimplexKind kind;
  std::size_t id;

  static Simplex vertex(VertexId v) noexcept { return {SimplexKind::Vertex, v}; }
  static Simplex edge(EdgeId e) noexcept { return {SimplexKind::Edge, e}; }
  bool is_vertex() const noexcept { return kind == SimplexKind::Vertex; }
  bool is_edge() const noexcept { return kind == SimplexKind::Edge; }

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

using NamedEdge = std::pair<std::string, std::string>;

/// Finite loopless simple graph without cycles.
class Forest {
 public:
  Forest() = default;

  /// Validates and builds a forest.
  /// Throws Error with DuplicateVertex, UnknownVertex, Loop, MultiEdge or
  /// CycleDetected.
  static Forest build(std::vector<std::string> vertices,
                      const std::vector<NamedEdge>& edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t simplex_count() const noexcept { return names_.size() + edges_.size(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Like find_vertex but throws UnknownVertex.
  VertexId vertex(std::string_view name) const;

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  std::span<const EdgeId> incident_edges(VertexId v) const { return incident_.at(v); }
  std::size_t degree(VertexId v) const { return incident_.at(v).size(); }

  /// Component index per vertex, numbered in order of first vertex.
  std::vector<std::size_t> component_labels() const;
  std::size_t component_count() const;

  /// All simplices of the component containing v. Throws UnknownVertex.
  std::set<Simplex> component_of(VertexId v) const;
  std::set<Simplex> component_of(std::string_view name) const;

  /// Same vertex names and the same edges by endpoint names.
  bool same_complex(const Forest& other) const;

  std::string describe(Simplex s) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// A connected forest with |V| = |E| + 1.
class SimplicialTree : public Forest {
 public:
  /// Throws everything Forest::build throws, plus NotConnected (including the
  /// empty complex).
  static SimplicialTree build(std::vector<std::string> vertices,
                              const std::vector<NamedEdge>& edges);

  /// Throws NotConnected unless the forest has exactly one component.
  explicit SimplicialTree(Forest forest);
};

/// Size of a maximum matching, by matching leaves to their parents bottom-up.
std::size_t matching_number(const SimplicialTree& tree);

/// Edges of one maximum matching found by the same greedy pass.
std::vector<EdgeId> maximum_matching(const SimplicialTree& tree);

}  // namespace dmtree
