#ifndef FACEIDEAL_HYPERGRAPH_HPP
#define FACEIDEAL_HYPERGRAPH_HPP

#include <span>
#include <vector>

#include "faceideal/bits.hpp"

namespace faceideal {

/// Selects between the OpenMP kernel and its serial reference.
enum class Execution { serial, parallel };

/// Drops duplicates and every set that strictly contains another one.
/// Output is sorted canonically.
std::vector<Mask> minimal_sets(std::span<const Mask> sets);

/// Keeps only inclusion-maximal sets, sorted canonically.
std::vector<Mask> maximal_sets(std::span<const Mask> sets);

// Inclusion-minimal sets meeting every edge. Branches on the vertices of an
// uncovered edge of smallest size; a vertex of the partial transversal that
// loses its last private edge prunes the branch. An empty edge yields no
// transversal at all. Output is canonical.
std::vector<Mask> minimal_transversals(std::span<const Mask> edges,
                                       Execution exec = Execution::parallel);

/// Exhaustive subset scan over `universe` (at most kMaxExhaustive bits).
/// Kept independent of the branching search so each can check the other.
std::vector<Mask> minimal_transversals_bruteforce(std::span<const Mask> edges,
                                                  Mask universe,
                                                  Execution exec = Execution::parallel);

bool is_transversal(Mask t, std::span<const Mask> edges);

}  // namespace faceideal

#endif  // FACEIDEAL_HYPERGRAPH_HPP
