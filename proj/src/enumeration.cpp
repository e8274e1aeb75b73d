#include "dmtree/enumeration.hpp"

#include <algorithm>
#include <map>

#include "dmtree/error.hpp"
#include "dmtree/simplicial_tree.hpp"

namespace dmtree {

namespace {

class LabelingSearch {
 public:
  LabelingSearch(const SimplicialTree& tree, const std::function<void(const CanonicalLabeling&)>& visit)
      : tree_(tree),
        visit_(visit),
        labels_(tree.simplex_count(), -1),
        placed_endpoints_(tree.edge_count(), 0) {}

  void run() { extend(0); }

 private:
  void extend(int depth) {
    const std::size_t nv = tree_.vertex_count();
    if (static_cast<std::size_t>(depth) == labels_.size()) {
      visit_(labels_);
      return;
    }
    for (std::size_t s = 0; s < labels_.size(); ++s) {
      if (labels_[s] >= 0) continue;
      if (s < nv) {
        labels_[s] = depth;
        for (EdgeId e : tree_.incident_edges(s)) ++placed_endpoints_[e];
        extend(depth + 1);
        for (EdgeId e : tree_.incident_edges(s)) --placed_endpoints_[e];
        labels_[s] = -1;
      } else if (placed_endpoints_[s - nv] == 2) {
        labels_[s] = depth;
        extend(depth + 1);
        labels_[s] = -1;
      }
    }
  }

  const SimplicialTree& tree_;
  const std::function<void(const CanonicalLabeling&)>& visit_;
  CanonicalLabeling labels_;
  std::vector<int> placed_endpoints_;
};

void check_budget(const SimplicialTree& tree, std::size_t budget) {
  if (tree.simplex_count() > budget) {
    throw Error(ErrorCode::BudgetExceeded, "tree has " + std::to_string(tree.simplex_count()) +
                                               " simplices; the enumeration budget is " +
                                               std::to_string(budget));
  }
}

}  // namespace

void for_each_canonical_labeling(const SimplicialTree& tree,
                                 const std::function<void(const CanonicalLabeling&)>& visit,
                                 std::size_t budget) {
  check_budget(tree, budget);
  LabelingSearch(tree, visit).run();
}

MorseFunction labeling_function(std::shared_ptr<const SimplicialTree> tree, const CanonicalLabeling& labels) {
  const std::size_t nv = tree->vertex_count();
  if (labels.size() != tree->simplex_count()) throw Error(ErrorCode::MissingValue, "labeling size mismatch");
  std::vector<double> vertex_values(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(nv));
  std::vector<double> edge_values(labels.begin() + static_cast<std::ptrdiff_t>(nv), labels.end());
  return MorseFunction::validate(std::move(tree), std::move(vertex_values), std::move(edge_values));
}

void for_each_critical_dmf(const std::shared_ptr<const SimplicialTree>& tree,
                           const std::function<void(const MorseFunction&)>& visit, std::size_t budget) {
  for_each_canonical_labeling(
      *tree, [&](const CanonicalLabeling& labels) { visit(labeling_function(tree, labels)); }, budget);
}

std::size_t count_canonical_labelings(const SimplicialTree& tree, std::size_t budget) {
  std::size_t count = 0;
  for_each_canonical_labeling(tree, [&count](const CanonicalLabeling&) { ++count; }, budget);
  return count;
}

std::set<ShapeCode> merge_classes(const std::shared_ptr<const SimplicialTree>& tree, std::size_t budget) {
  std::set<ShapeCode> codes;
  for_each_critical_dmf(
      tree, [&codes](const MorseFunction& f) { codes.insert(shape_code(induce_merge_tree(f))); }, budget);
  return codes;
}

std::size_t count_merge_classes(const std::shared_ptr<const SimplicialTree>& tree, std::size_t budget) {
  return merge_classes(tree, budget).size();
}

bool InvariantReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyTally& p) { return p.failed == 0; });
}

const PropertyTally& InvariantReport::property(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::InvalidArgument, "no property named '" + name + "'");
}

InvariantReport check_invariants(const std::shared_ptr<const SimplicialTree>& tree, std::size_t budget) {
  const SimplicialTree& t = *tree;
  InvariantReport report;
  report.matching_number = matching_number(t);
  for (const char* name : {property::kCritical, property::kFullBinary, property::kNodeCensus,
                           property::kImpasseExists, property::kImpasseMatching, property::kImpasseBound,
                           property::kEulerCount}) {
    report.properties.push_back({name, 0, 0, std::nullopt});
  }
  auto& tallies = report.properties;
  bool first = true;

  for_each_canonical_labeling(
      t,
      [&](const CanonicalLabeling& labels) {
        const auto record = [&](std::size_t index, bool ok) {
          PropertyTally& tally = tallies[index];
          ++tally.checked;
          if (!ok) {
            ++tally.failed;
            if (!tally.witness) tally.witness = labels;
          }
        };
        ++report.functions;
        const MorseFunction f = labeling_function(tree, labels);
        const MergeTree m = induce_merge_tree(f);

        record(0, f.all_critical());

        bool full = true;
        for (const MergeNode& node : m.nodes()) full = full && node.left.has_value() == node.right.has_value();
        full = full && m.leaf_count() == m.internal_count() + 1;
        record(1, full);

        record(2, m.size() == f.critical_simplices().size() && m.leaf_count() == f.critical_vertex_count() &&
                      m.internal_count() == f.critical_edge_count());

        const std::size_t impasse_total = impasse_count(m);
        if (m.size() > 1) record(3, impasse_total >= 1);

        const std::vector<EdgeId> edges = impasse_edges(f, m);
        std::vector<int> touched(t.vertex_count(), 0);
        bool disjoint = true;
        for (EdgeId e : edges) {
          disjoint = disjoint && ++touched[t.edge(e).lo] == 1;
          disjoint = disjoint && ++touched[t.edge(e).hi] == 1;
        }
        record(4, disjoint);
        record(5, impasse_total <= report.matching_number);
        record(6, f.critical_vertex_count() == f.critical_edge_count() + 1);

        if (first) {
          report.min_impasses = report.max_impasses = impasse_total;
          first = false;
        }
        report.min_impasses = std::min(report.min_impasses, impasse_total);
        report.max_impasses = std::max(report.max_impasses, impasse_total);
      },
      budget);
  return report;
}

std::string describe_labeling(const SimplicialTree& tree, const CanonicalLabeling& labels) {
  std::string out;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    const Simplex simplex =
        s < tree.vertex_count() ? Simplex::vertex(s) : Simplex::edge(s - tree.vertex_count());
    if (!out.empty()) out += ' ';
    out += tree.describe(simplex) + '=' + std::to_string(labels[s]);
  }
  return out;
}

namespace {

std::string rooted_code(const std::vector<std::vector<std::size_t>>& adj, std::size_t v, std::size_t parent) {
  std::vector<std::string> children;
  for (std::size_t w : adj[v]) {
    if (w != parent) children.push_back(rooted_code(adj, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

std::string vertex_name(std::size_t i) { return "v" + std::to_string(i); }

SimplicialTree tree_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(vertex_name(i));
  std::vector<NamedEdge> named;
  for (auto [a, b] : edges) named.emplace_back(vertex_name(a), vertex_name(b));
  return SimplicialTree::build(std::move(names), named);
}

}  // namespace

std::vector<SimplicialTree> all_trees(std::size_t n) {
  if (n == 0 || n > 8) throw Error(ErrorCode::InvalidArgument, "all_trees supports 1 <= n <= 8");
  if (n <= 2) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (n == 2) edges.emplace_back(0, 1);
    std::vector<SimplicialTree> out;
    out.push_back(tree_from_edges(n, edges));
    return out;
  }

  // Decode every Pruefer sequence and keep the first tree of each
  // isomorphism class.
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> classes;
  std::vector<std::size_t> seq(n - 2, 0);
  for (;;) {
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t x : seq) ++degree[x];
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t x : seq) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] != 1) continue;
      if (u == n) {
        u = v;
      } else {
        edges.emplace_back(u, v);
      }
    }

    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::string canonical;
    for (std::size_t root = 0; root < n; ++root) {
      std::string code = rooted_code(adj, root, n);
      if (canonical.empty() || code < canonical) canonical = std::move(code);
    }
    classes.emplace(std::move(canonical), std::move(edges));

    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }

  std::vector<SimplicialTree> out;
  for (const auto& [code, edges] : classes) out.push_back(tree_from_edges(n, edges));
  return out;
}

SimplicialTree make_path(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "a path has at least one vertex");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return tree_from_edges(n, edges);
}

}  // namespace dmtree
