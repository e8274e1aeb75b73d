#pragma once

// Exhaustive enumeration of critical discrete Morse functions on small trees.
//
// A critical function is determined, up to merge equivalence, by the order in
// which it ranks the simplices, so it suffices to visit every canonical
// labeling: a bijection onto 0 .. #simplices-1 in which each vertex is
// labeled below its incident edges. These are the linear extensions of the
// face poset.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dmtree/merge_tree.hpp"

namespace dmtree {

inline constexpr std::size_t kDefaultSimplexBudget = 11;

/// Labels indexed by simplex: vertices 0..V-1 first, then edges.
using CanonicalLabeling = std::vector<int>;

/// Visits every canonical labeling exactly once, by backtracking over the
/// minimal simplices still unlabeled. Throws BudgetExceeded when the tree has
/// more than `budget` simplices.
void for_each_canonical_labeling(const SimplicialTree& tree,
                                 const std::function<void(const CanonicalLabeling&)>& visit,
                                 std::size_t budget = kDefaultSimplexBudget);

/// The function a canonical labeling defines on `tree`.
MorseFunction labeling_function(std::shared_ptr<const SimplicialTree> tree, const CanonicalLabeling& labels);

void for_each_critical_dmf(const std::shared_ptr<const SimplicialTree>& tree,
                           const std::function<void(const MorseFunction&)>& visit,
                           std::size_t budget = kDefaultSimplexBudget);

std::size_t count_canonical_labelings(const SimplicialTree& tree, std::size_t budget = kDefaultSimplexBudget);

/// Distinct shape codes of the merge trees induced by all critical functions.
std::set<ShapeCode> merge_classes(const std::shared_ptr<const SimplicialTree>& tree,
                                  std::size_t budget = kDefaultSimplexBudget);

std::size_t count_merge_classes(const std::shared_ptr<const SimplicialTree>& tree,
                                std::size_t budget = kDefaultSimplexBudget);

struct PropertyTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// First labeling that violated the property.
  std::optional<CanonicalLabeling> witness;
};

struct InvariantReport {
  std::size_t functions = 0;
  std::size_t matching_number = 0;
  std::size_t min_impasses = 0;
  std::size_t max_impasses = 0;
  std::vector<PropertyTally> properties;

  bool all_passed() const;
  const PropertyTally& property(const std::string& name) const;
};

/// Property names used in InvariantReport, in report order.
namespace property {
inline constexpr const char* kCritical = "every simplex critical";
inline constexpr const char* kFullBinary = "merge tree full binary";
inline constexpr const char* kNodeCensus = "nodes match critical simplices";
inline constexpr const char* kImpasseExists = "at least one impasse";
inline constexpr const char* kImpasseMatching = "impasse edges form a matching";
inline constexpr const char* kImpasseBound = "impasses <= matching number";
inline constexpr const char* kEulerCount = "critical vertices = critical edges + 1";
}  // namespace property

/// Runs every property over every critical function on the tree.
InvariantReport check_invariants(const std::shared_ptr<const SimplicialTree>& tree,
                                 std::size_t budget = kDefaultSimplexBudget);

/// "a=0 b=1 a-b=2"
std::string describe_labeling(const SimplicialTree& tree, const CanonicalLabeling& labels);

/// One representative of each isomorphism class of trees on n vertices,
/// with vertices named v0 .. v(n-1). Throws InvalidArgument unless 1 <= n <= 8.
std::vector<SimplicialTree> all_trees(std::size_t n);

/// v0 - v1 - ... - v(n-1). Throws InvalidArgument if n == 0.
SimplicialTree make_path(std::size_t n);

}  // namespace dmtree
