#include "dmtree/morse_function.hpp"

#include <algorithm>
#include <cmath>

#include "dmtree/error.hpp"
#include "dmtree/format.hpp"

namespace dmtree {

MorseFunction MorseFunction::validate(std::shared_ptr<const SimplicialTree> domain,
                                      std::vector<double> vertex_values,
                                      std::vector<double> edge_values) {
  if (!domain) throw Error(ErrorCode::InvalidArgument, "missing domain");
  const SimplicialTree& tree = *domain;
  if (vertex_values.size() != tree.vertex_count() || edge_values.size() != tree.edge_count()) {
    throw Error(ErrorCode::MissingValue, "every vertex and every edge needs a value");
  }

  MorseFunction f;
  f.domain_ = std::move(domain);
  f.vertex_values_ = std::move(vertex_values);
  f.edge_values_ = std::move(edge_values);

  std::vector<Simplex> order;
  order.reserve(tree.simplex_count());
  for (VertexId v = 0; v < tree.vertex_count(); ++v) order.push_back(Simplex::vertex(v));
  for (EdgeId e = 0; e < tree.edge_count(); ++e) order.push_back(Simplex::edge(e));

  for (Simplex s : order) {
    if (!std::isfinite(f.value(s))) {
      throw Error(ErrorCode::NonFiniteValue, "value of " + tree.describe(s) + " is not finite");
    }
  }

  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    for (VertexId v : {tree.edge(e).lo, tree.edge(e).hi}) {
      if (f.vertex_values_[v] > f.edge_values_[e]) {
        throw Error(ErrorCode::NotWeaklyIncreasing,
                    "f(" + tree.name(v) + ") = " + format_value(f.vertex_values_[v]) + " exceeds f(" +
                        tree.describe(Simplex::edge(e)) + ") = " + format_value(f.edge_values_[e]));
      }
    }
  }

  // Vertices sort before edges at equal value, so a shared pair is (vertex, edge).
  std::stable_sort(order.begin(), order.end(),
                   [&](Simplex a, Simplex b) { return f.value(a) < f.value(b); });
  f.vertex_critical_.assign(tree.vertex_count(), true);
  f.edge_critical_.assign(tree.edge_count(), true);
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && f.value(order[j]) == f.value(order[i])) ++j;
    if (j - i >= 3) {
      throw Error(ErrorCode::MoreThanTwoShareValue,
                  std::to_string(j - i) + " simplices share the value " + format_value(f.value(order[i])));
    }
    if (j - i == 2) {
      const Simplex a = order[i];
      const Simplex b = order[i + 1];
      if (!(a.is_vertex() && b.is_edge() && tree.edge(b.id).contains(a.id))) {
        throw Error(ErrorCode::ValueSharedByNonIncident,
                    tree.describe(a) + " and " + tree.describe(b) + " share the value " +
                        format_value(f.value(a)) + " but are not incident");
      }
      f.vertex_critical_[a.id] = false;
      f.edge_critical_[b.id] = false;
    } else {
      f.critical_.push_back(order[i]);
    }
    i = j;
  }
  return f;
}

MorseFunction MorseFunction::from_labels(const std::vector<LabeledVertex>& vertices,
                                         const std::vector<LabeledEdge>& edges) {
  std::vector<std::string> names;
  std::vector<double> vertex_values;
  for (const auto& v : vertices) {
    names.push_back(v.name);
    vertex_values.push_back(v.value);
  }
  std::vector<NamedEdge> named;
  std::vector<double> edge_values;
  for (const auto& e : edges) {
    named.emplace_back(e.u, e.v);
    edge_values.push_back(e.value);
  }
  auto tree = std::make_shared<const SimplicialTree>(SimplicialTree::build(std::move(names), named));
  return validate(std::move(tree), std::move(vertex_values), std::move(edge_values));
}

double MorseFunction::value(Simplex s) const {
  return s.is_vertex() ? vertex_values_.at(s.id) : edge_values_.at(s.id);
}

bool MorseFunction::is_critical(Simplex s) const {
  return s.is_vertex() ? vertex_critical_.at(s.id) : edge_critical_.at(s.id);
}

std::vector<double> MorseFunction::critical_values() const {
  std::vector<double> out;
  out.reserve(critical_.size());
  for (Simplex s : critical_) out.push_back(value(s));
  return out;
}

std::size_t MorseFunction::critical_vertex_count() const noexcept {
  return static_cast<std::size_t>(std::count(vertex_critical_.begin(), vertex_critical_.end(), true));
}

std::size_t MorseFunction::critical_edge_count() const noexcept {
  return static_cast<std::size_t>(std::count(edge_critical_.begin(), edge_critical_.end(), true));
}

GradientVectorField gradient_vector_field(const MorseFunction& f) {
  const SimplicialTree& tree = f.domain();
  GradientVectorField field;
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    for (VertexId v : {tree.edge(e).lo, tree.edge(e).hi}) {
      if (f.vertex_value(v) >= f.edge_value(e)) field.pairs.insert({v, e});
    }
  }
  return field;
}

namespace {

template <typename Keep>
LevelSubcomplex sublevel(const MorseFunction& f, double threshold, bool strict, Keep keep) {
  const SimplicialTree& tree = f.domain();
  std::vector<std::string> names;
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    if (keep(f.vertex_value(v))) names.push_back(tree.name(v));
  }
  std::vector<NamedEdge> edges;
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    if (keep(f.edge_value(e))) edges.emplace_back(tree.name(tree.edge(e).lo), tree.name(tree.edge(e).hi));
  }
  return {threshold, strict, Forest::build(std::move(names), edges)};
}

}  // namespace

LevelSubcomplex level_subcomplex(const MorseFunction& f, double a) {
  return sublevel(f, a, false, [a](double x) { return x <= a; });
}

LevelSubcomplex level_subcomplex_below(const MorseFunction& f, double c) {
  return sublevel(f, c, true, [c](double x) { return x < c; });
}

std::vector<FiltrationStep> filtration(const MorseFunction& f) {
  std::vector<FiltrationStep> steps;
  for (double c : f.critical_values()) steps.push_back({c, level_subcomplex(f, c)});
  return steps;
}

}  // namespace dmtree
