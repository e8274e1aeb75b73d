#pragma once

// Discrete Morse functions on trees.
//
// A discrete Morse function assigns a real value to every simplex such that
// f(v) <= f(e) whenever v is an endpoint of e, and a value is shared by at
// most two simplices, which must then be an incident vertex/edge pair.
// Simplices whose value is unshared are critical.

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dmtree/simplicial_tree.hpp"

namespace dmtree {

struct LabeledVertex {
  std::string name;
  double value;
};

struct LabeledEdge {
  std::string u;
  std::string v;
  double value;
};

class MorseFunction {
 public:
  /// Checks the discrete Morse conditions and caches criticality.
  /// Throws MissingValue, NonFiniteValue, NotWeaklyIncreasing,
  /// ValueSharedByNonIncident or MoreThanTwoShareValue.
  static MorseFunction validate(std::shared_ptr<const SimplicialTree> domain,
                                std::vector<double> vertex_values,
                                std::vector<double> edge_values);

  /// Builds the tree from the labeled simplices, then validates.
  static MorseFunction from_labels(const std::vector<LabeledVertex>& vertices,
                                   const std::vector<LabeledEdge>& edges);

  const SimplicialTree& domain() const noexcept { return *domain_; }
  const std::shared_ptr<const SimplicialTree>& shared_domain() const noexcept { return domain_; }

  double value(Simplex s) const;
  double vertex_value(VertexId v) const { return vertex_values_.at(v); }
  double edge_value(EdgeId e) const { return edge_values_.at(e); }
  const std::vector<double>& vertex_values() const noexcept { return vertex_values_; }
  const std::vector<double>& edge_values() const noexcept { return edge_values_; }

  bool is_critical(Simplex s) const;
  /// Critical simplices in increasing order of value.
  const std::vector<Simplex>& critical_simplices() const noexcept { return critical_; }
  /// c_0 < c_1 < ... < c_m.
  std::vector<double> critical_values() const;
  std::size_t critical_vertex_count() const noexcept;
  std::size_t critical_edge_count() const noexcept;
  /// True when no value is shared.
  bool all_critical() const noexcept { return critical_.size() == domain_->simplex_count(); }

 private:
  MorseFunction() = default;

  std::shared_ptr<const SimplicialTree> domain_;
  std::vector<double> vertex_values_;
  std::vector<double> edge_values_;
  std::vector<bool> vertex_critical_;
  std::vector<bool> edge_critical_;
  std::vector<Simplex> critical_;
};

/// A paired (vertex, edge) arrow; the two simplices carry the same value.
struct GradientPair {
  VertexId vertex;
  EdgeId edge;
  friend auto operator<=>(const GradientPair&, const GradientPair&) = default;
};

struct GradientVectorField {
  std::set<GradientPair> pairs;
  friend bool operator==(const GradientVectorField&, const GradientVectorField&) = default;
};

GradientVectorField gradient_vector_field(const MorseFunction& f);

/// Sub-forest of the domain spanned by a sublevel set.
struct LevelSubcomplex {
  double threshold = 0.0;
  /// When set, the complex holds values strictly below the threshold: the
  /// level just before a critical value c, taken without subtracting any
  /// epsilon.
  bool strict = false;
  Forest complex;
};

/// All simplices with f(s) <= a.
LevelSubcomplex level_subcomplex(const MorseFunction& f, double a);

/// All simplices with f(s) < c.
LevelSubcomplex level_subcomplex_below(const MorseFunction& f, double c);

struct FiltrationStep {
  double critical_value;
  LevelSubcomplex level;
};

/// One level subcomplex per critical value, in increasing order.
std::vector<FiltrationStep> filtration(const MorseFunction& f);

}  // namespace dmtree
