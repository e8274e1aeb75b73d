#include <doctest.h>

#include <map>

#include "dmtree/enumeration.hpp"
#include "dmtree/error.hpp"
#include "dmtree/merge_tree.hpp"
#include "dmtree/star_realization.hpp"
#include "fixtures.hpp"

using namespace dmtree;

namespace {

/// Thin tree spelled out as nested joins, the impasse last.
MergeTree build_thin(const std::string& turns) {
  MergeTree tree = MergeTree::join(MergeTree::leaf(), MergeTree::leaf());
  for (std::size_t i = turns.size(); i-- > 0;) {
    tree = turns[i] == 'L' ? MergeTree::join(tree, MergeTree::leaf()) : MergeTree::join(MergeTree::leaf(), tree);
  }
  return tree;
}

}  // namespace

TEST_SUITE_BEGIN("star-realization");

TEST_CASE("LR sequence of a thin tree") {
  SUBCASE("eight internal nodes") {
    const MergeTree m = build_thin("LLRLRRL");
    REQUIRE(m.internal_count() == 8);
    const LRSequence s = lr_sequence(m);
    CHECK(s.size() == 8);
    CHECK(s[0] == Direction::L);
    CHECK(s.to_string() == "LLRLRRL");
  }
  SUBCASE("five internal nodes") {
    const MergeTree m = build_thin("LRRL");
    CHECK(lr_sequence(m).to_string() == "LRRL");
    CHECK(lr_sequence(m) == LRSequence::parse("LRRL"));
  }
  SUBCASE("a single internal node") {
    const LRSequence s = lr_sequence(parse_shape("(••)"));
    CHECK(s.size() == 1);
    CHECK(s.to_string().empty());
  }
  SUBCASE("not thin") {
    try {
      (void)lr_sequence(parse_shape("((••)(••))"));
      FAIL("expected NotThin");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotThin);
    }
    CHECK_THROWS_AS(lr_sequence(parse_shape("•")), Error);
  }
}

TEST_CASE("LR sequences parse and round-trip through thin trees") {
  CHECK_THROWS_AS(LRSequence::parse("LXR"), Error);
  CHECK_THROWS_AS(LRSequence({}), Error);
  CHECK_THROWS_AS(LRSequence({Direction::R}), Error);
  for (const char* text : {"", "L", "R", "LRRL", "RRRRR", "LLRLRRL"}) {
    const LRSequence s = LRSequence::parse(text);
    const MergeTree m = thin_from_lr(s);
    CHECK(is_thin(m));
    CHECK(lr_sequence(m) == s);
    CHECK(shape_code(m) == shape_code(build_thin(text)));
  }
}

TEST_CASE("enumerate_thin lists 2^(n-1) distinct thin trees") {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto trees = enumerate_thin(n);
    CHECK(trees.size() == (std::size_t{1} << (n - 1)));
    std::set<ShapeCode> shapes;
    for (const auto& t : trees) {
      CHECK(is_thin(t));
      CHECK(t.internal_count() == n);
      shapes.insert(shape_code(t));
    }
    CHECK(shapes.size() == trees.size());
  }
  CHECK_THROWS_AS(enumerate_thin(0), Error);
}

TEST_CASE("realization of the LRRL tree") {
  const StarRealization r = realize_on_star(thin_from_lr(LRSequence::parse("LRRL")));
  const MorseFunction& f = r.function;
  CHECK(is_star(*r.star));
  CHECK(r.star->edge_count() == 5);
  CHECK(f.vertex_value(r.center) == 2);
  CHECK(f.all_critical());
  // Edge value to the value of its leaf endpoint.
  std::map<double, double> edge_to_leaf;
  for (EdgeId e = 0; e < r.star->edge_count(); ++e) {
    edge_to_leaf[f.edge_value(e)] = f.vertex_value(r.star->edge(e).other(r.center));
  }
  CHECK(edge_to_leaf == std::map<double, double>{{6, 3}, {7, 1}, {8, 4}, {9, 0}, {10, 5}});
  CHECK(lr_sequence(induce_merge_tree(f)).to_string() == "LRRL");
}

TEST_CASE("two-leaf tree realizes on a single edge") {
  const StarRealization r = realize_on_star(parse_shape("(••)"));
  CHECK(r.star->vertex_count() == 2);
  CHECK(r.function.vertex_value(r.center) == 0);
  CHECK(r.function.edge_value(0) == 2);
  CHECK(shape_code(induce_merge_tree(r.function)).text == "(••)");
}

TEST_CASE("every thin tree with up to ten internal nodes is induced on a star") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& t : enumerate_thin(n)) {
      const StarRealization r = realize_on_star(t);
      CHECK(r.star->edge_count() == n);
      CHECK(r.function.all_critical());
      CHECK(merge_equivalent(induce_merge_tree(r.function), t));
    }
  }
}

TEST_CASE("realize_on_star rejects trees that are not thin") {
  CHECK_THROWS_AS(realize_on_star(parse_shape("(((••)(••))(••))")), Error);
}

TEST_CASE("star merge classes counted by enumeration") {
  for (std::size_t k = 1; k <= 5; ++k) {
    auto star = std::make_shared<const SimplicialTree>(make_star(k));
    const auto classes = merge_classes(star);
    CHECK(classes.size() == count_realizable_on_star(k));
    for (const auto& c : classes) CHECK(is_thin(parse_shape(c.text)));
  }
  CHECK(count_realizable_on_star(6) == 32);
  CHECK(count_realizable_on_star(64) == (std::uint64_t{1} << 63));
  CHECK_THROWS_AS(count_realizable_on_star(0), Error);
}

TEST_CASE("make_star and is_star") {
  CHECK(is_star(make_star(1)));
  CHECK(is_star(make_star(4)));
  CHECK_FALSE(is_star(make_path(4)));
  CHECK(make_star(3).degree(make_star(3).vertex("c")) == 3);
}

TEST_SUITE_END();
