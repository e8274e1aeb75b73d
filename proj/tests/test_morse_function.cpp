#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "dmtree/enumeration.hpp"
#include "dmtree/error.hpp"
#include "dmtree/morse_function.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace dmtree;

namespace {

ErrorCode validation_error(const std::vector<LabeledVertex>& vertices, const std::vector<LabeledEdge>& edges) {
  try {
    (void)MorseFunction::from_labels(vertices, edges);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::set<std::string> names(const MorseFunction& f, const std::vector<Simplex>& simplices) {
  std::set<std::string> out;
  for (Simplex s : simplices) out.insert(f.domain().describe(s));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("morse-core");

TEST_CASE("validate") {
  SUBCASE("single critical edge") { CHECK(fixtures::single_edge(0, 1, 2).all_critical()); }
  SUBCASE("vertex above its edge") {
    CHECK(validation_error({{"u", 2}, {"v", 0}}, {{"u", "v", 1}}) == ErrorCode::NotWeaklyIncreasing);
  }
  SUBCASE("six-vertex example is valid and fully critical") {
    const auto f = fixtures::first_example();
    CHECK(f.all_critical());
    CHECK(f.critical_simplices().size() == 11);
  }
  SUBCASE("two vertices share a value") {
    CHECK(validation_error({{"u", 0}, {"v", 0}}, {{"u", "v", 1}}) == ErrorCode::ValueSharedByNonIncident);
  }
  SUBCASE("two edges share a value") {
    CHECK(validation_error({{"a", 0}, {"b", 1}, {"c", 2}}, {{"a", "b", 5}, {"b", "c", 5}}) ==
          ErrorCode::ValueSharedByNonIncident);
  }
  SUBCASE("vertex shares with a non-incident edge") {
    CHECK(validation_error({{"a", 0}, {"b", 1}, {"c", 3}}, {{"a", "b", 3}, {"b", "c", 4}}) ==
          ErrorCode::ValueSharedByNonIncident);
  }
  SUBCASE("three simplices share a value") {
    CHECK(validation_error({{"a", 0}, {"b", 1}, {"c", 0.5}}, {{"a", "b", 1}, {"b", "c", 1}}) ==
          ErrorCode::MoreThanTwoShareValue);
  }
  SUBCASE("missing values") {
    auto tree = std::make_shared<const SimplicialTree>(SimplicialTree::build({"u", "v"}, {{"u", "v"}}));
    try {
      (void)MorseFunction::validate(tree, {0.0}, {1.0});
      FAIL("expected MissingValue");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MissingValue);
    }
  }
  SUBCASE("non-finite value") {
    CHECK(validation_error({{"u", 0}, {"v", std::numeric_limits<double>::quiet_NaN()}}, {{"u", "v", 1}}) ==
          ErrorCode::NonFiniteValue);
  }
  SUBCASE("decimal values") { CHECK(fixtures::single_edge(0.25, 0.5, 0.75).all_critical()); }
}

TEST_CASE("critical_simplices") {
  CHECK(fixtures::first_example().critical_simplices().size() == 11);
  const auto paired = fixtures::single_edge(0, 1, 1);
  CHECK(names(paired, paired.critical_simplices()) == std::set<std::string>{"u"});
  CHECK(fixtures::forman_first().critical_simplices().size() == 5);
  const auto values = fixtures::first_example().critical_values();
  CHECK(std::is_sorted(values.begin(), values.end()));
}

TEST_CASE("gradient_vector_field") {
  CHECK(gradient_vector_field(fixtures::forman_first()).pairs.empty());
  CHECK(gradient_vector_field(fixtures::forman_second()).pairs.empty());

  const auto paired = fixtures::single_edge(0, 1, 1);
  CHECK(gradient_vector_field(paired).pairs == std::set<GradientPair>{{1, 0}});

  const auto path = fixtures::path3(0, 1, 2, 1, 3);
  const auto field = gradient_vector_field(path);
  REQUIRE(field.pairs.size() == 1);
  CHECK(path.domain().name(field.pairs.begin()->vertex) == "v1");
  CHECK(path.domain().describe(Simplex::edge(field.pairs.begin()->edge)) == "v0-v1");
}

TEST_CASE("level_subcomplex") {
  const auto f = fixtures::first_example();
  CHECK(level_subcomplex(f, -1).complex.simplex_count() == 0);
  CHECK(level_subcomplex(f, 10).complex.simplex_count() == 11);
  CHECK(level_subcomplex(f, 100).complex.simplex_count() == 11);

  const auto below = level_subcomplex_below(f, 10);
  CHECK(below.strict);
  CHECK(below.complex.vertex_count() == 6);
  CHECK(below.complex.edge_count() == 4);
  CHECK(below.complex.component_count() == 2);
}

TEST_CASE("filtration") {
  const auto edge = filtration(fixtures::single_edge(0, 1, 2));
  REQUIRE(edge.size() == 3);
  CHECK(edge[0].level.complex.simplex_count() == 1);
  CHECK(edge[1].level.complex.simplex_count() == 2);
  CHECK(edge[2].level.complex.simplex_count() == 3);

  CHECK(filtration(fixtures::forman_first()).size() == 5);
  const auto full = filtration(fixtures::first_example());
  CHECK(full.size() == 11);
  CHECK(full.front().level.complex.simplex_count() == 1);
}

TEST_CASE("critical counts, gradient partition and level nesting hold for random functions") {
  std::mt19937 rng(3);
  int with_pairs = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto tree = std::make_shared<const SimplicialTree>(oracle::random_tree(1 + trial % 9, rng));
    const MorseFunction f = oracle::random_function(tree, rng);
    CHECK(f.critical_vertex_count() == f.critical_edge_count() + 1);

    const auto field = gradient_vector_field(f);
    with_pairs += field.pairs.empty() ? 0 : 1;
    std::set<Simplex> covered;
    for (const auto& p : field.pairs) {
      CHECK(covered.insert(Simplex::vertex(p.vertex)).second);
      CHECK(covered.insert(Simplex::edge(p.edge)).second);
    }
    for (Simplex s : f.critical_simplices()) CHECK(covered.insert(s).second);
    CHECK(covered.size() == tree->simplex_count());

    std::vector<double> thresholds = f.critical_values();
    thresholds.push_back(-1);
    std::sort(thresholds.begin(), thresholds.end());
    std::size_t previous_count = 0;
    const Forest* previous = nullptr;
    std::vector<LevelSubcomplex> levels;
    for (double a : thresholds) levels.push_back(level_subcomplex(f, a));
    for (const auto& level : levels) {
      const Forest& forest = level.complex;
      // Forest::build rejects an edge whose endpoint is missing, so building
      // at all shows the level is closed under faces; check values too.
      for (VertexId v = 0; v < forest.vertex_count(); ++v) {
        CHECK(f.vertex_value(tree->vertex(forest.name(v))) <= level.threshold);
      }
      for (const Edge& e : forest.edges()) {
        CHECK(f.edge_value(*tree->find_edge(tree->vertex(forest.name(e.lo)), tree->vertex(forest.name(e.hi)))) <=
              level.threshold);
      }
      if (previous) {
        CHECK(forest.simplex_count() >= previous_count);
        for (const auto& n : previous->names()) CHECK(forest.find_vertex(n).has_value());
      }
      previous = &forest;
      previous_count = forest.simplex_count();
    }
  }
  CHECK(with_pairs > 50);
}

TEST_CASE("every enumerated critical function has one more critical vertex than critical edge") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : all_trees(n)) {
      auto tree = std::make_shared<const SimplicialTree>(t);
      for_each_critical_dmf(tree, [](const MorseFunction& f) {
        CHECK(f.critical_vertex_count() == f.critical_edge_count() + 1);
      });
    }
  }
}

TEST_SUITE_END();
