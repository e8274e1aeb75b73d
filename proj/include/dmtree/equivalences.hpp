#pragma once

// Forman, homological and persistence equivalence of discrete Morse functions.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dmtree/morse_function.hpp"

namespace dmtree {

/// Throws DomainMismatch when f and g live on different trees.
bool forman_equivalent(const MorseFunction& f, const MorseFunction& g);

struct BettiNumbers {
  std::size_t b0 = 0;
  std::size_t b1 = 0;
  friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
};

/// Betti numbers of the level subcomplex at each critical value.
using HomologicalSequence = std::vector<BettiNumbers>;

HomologicalSequence homological_sequence(const MorseFunction& f);

/// No domain check: sequences of functions on different trees compare fine.
bool homologically_equivalent(const MorseFunction& f, const MorseFunction& g);

struct PersistencePair {
  double birth;
  double death;  // +inf for the essential class
  friend auto operator<=>(const PersistencePair&, const PersistencePair&) = default;
};

/// Zero-dimensional sublevel persistence pairs, sorted by (birth, death).
/// Pairs of zero persistence are not recorded.
using PersistenceDiagram = std::vector<PersistencePair>;

/// Elder rule: when an edge joins two components, the one born later dies.
PersistenceDiagram persistence_diagram(const MorseFunction& f);

bool persistence_equivalent(const MorseFunction& f, const MorseFunction& g);

/// One "birth death" line per pair, "inf" for an infinite death.
void write_diagram(std::ostream& out, const PersistenceDiagram& diagram);

/// "(0,inf),(1,4),(2,3)"
std::string format_diagram(const PersistenceDiagram& diagram);

/// "1,2,3,2,1"
std::string format_b0(const HomologicalSequence& sequence);

}  // namespace dmtree
