#include "dmtree/equivalences.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "dmtree/error.hpp"
#include "dmtree/format.hpp"

namespace dmtree {

bool forman_equivalent(const MorseFunction& f, const MorseFunction& g) {
  const SimplicialTree& tf = f.domain();
  const SimplicialTree& tg = g.domain();
  if (!tf.same_complex(tg)) {
    throw Error(ErrorCode::DomainMismatch, "Forman equivalence compares functions on the same tree");
  }
  // Vertex and edge indices may differ between the two trees; compare by name.
  GradientVectorField translated;
  for (const GradientPair& p : gradient_vector_field(g).pairs) {
    const Edge& e = tg.edge(p.edge);
    const VertexId v = tf.vertex(tg.name(p.vertex));
    const EdgeId edge = *tf.find_edge(tf.vertex(tg.name(e.lo)), tf.vertex(tg.name(e.hi)));
    translated.pairs.insert({v, edge});
  }
  return gradient_vector_field(f) == translated;
}

HomologicalSequence homological_sequence(const MorseFunction& f) {
  HomologicalSequence out;
  for (const FiltrationStep& step : filtration(f)) {
    const Forest& level = step.level.complex;
    const std::size_t b0 = level.component_count();
    out.push_back({b0, level.edge_count() + b0 - level.vertex_count()});
  }
  return out;
}

bool homologically_equivalent(const MorseFunction& f, const MorseFunction& g) {
  return homological_sequence(f) == homological_sequence(g);
}

PersistenceDiagram persistence_diagram(const MorseFunction& f) {
  const SimplicialTree& tree = f.domain();
  std::vector<Simplex> order;
  for (VertexId v = 0; v < tree.vertex_count(); ++v) order.push_back(Simplex::vertex(v));
  for (EdgeId e = 0; e < tree.edge_count(); ++e) order.push_back(Simplex::edge(e));
  // A vertex enters before an edge of equal value.
  std::stable_sort(order.begin(), order.end(),
                   [&](Simplex a, Simplex b) { return f.value(a) < f.value(b); });

  std::vector<VertexId> parent(tree.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  const auto find = [&parent](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  PersistenceDiagram diagram;
  for (Simplex s : order) {
    if (s.is_vertex()) continue;
    const Edge& e = tree.edge(s.id);
    const VertexId a = find(e.lo);
    const VertexId b = find(e.hi);
    if (a == b) throw std::logic_error("edge closes a cycle");
    // Roots hold their component minimum, which is the birth value.
    const double birth_a = f.vertex_value(a);
    const double birth_b = f.vertex_value(b);
    if (birth_a == birth_b) throw std::logic_error("elder rule tie");
    const VertexId elder = birth_a < birth_b ? a : b;
    const VertexId younger = birth_a < birth_b ? b : a;
    const double death = f.value(s);
    if (f.vertex_value(younger) < death) diagram.push_back({f.vertex_value(younger), death});
    parent[younger] = elder;
  }
  const auto min_vertex = std::min_element(f.vertex_values().begin(), f.vertex_values().end());
  diagram.push_back({*min_vertex, std::numeric_limits<double>::infinity()});
  std::sort(diagram.begin(), diagram.end());
  return diagram;
}

bool persistence_equivalent(const MorseFunction& f, const MorseFunction& g) {
  return persistence_diagram(f) == persistence_diagram(g);
}

void write_diagram(std::ostream& out, const PersistenceDiagram& diagram) {
  for (const auto& [birth, death] : diagram) out << format_value(birth) << ' ' << format_value(death) << '\n';
}

std::string format_diagram(const PersistenceDiagram& diagram) {
  std::string out;
  for (const auto& [birth, death] : diagram) {
    if (!out.empty()) out += ',';
    out += '(' + format_value(birth) + ',' + format_value(death) + ')';
  }
  return out;
}

std::string format_b0(const HomologicalSequence& sequence) {
  std::string out;
  for (const BettiNumbers& b : sequence) {
    if (!out.empty()) out += ',';
    out += std::to_string(b.b0);
  }
  return out;
}

}  // namespace dmtree
