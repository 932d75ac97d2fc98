#ifndef FACEIDEAL_HOMOLOGY_HPP
#define FACEIDEAL_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "faceideal/complex.hpp"
#include "faceideal/hypergraph.hpp"
#include "faceideal/ideal.hpp"

namespace faceideal {

enum class PivotRule {
  first_nonzero,  ///< first nonzero entry of the column, top to bottom
  smallest_abs,   ///< entry of least absolute value in the column
};

/// Rank over Q of an integer matrix (row-major, rows x cols) by
/// fraction-free elimination. Runs in 64-bit with overflow detection and
/// falls back to arbitrary precision when an intermediate overflows.
std::size_t exact_rank(std::vector<std::int64_t> matrix, std::size_t rows, std::size_t cols,
                       PivotRule rule = PivotRule::first_nonzero);

/// b̃_{-1}, b̃_0, ..., b̃_{dim}; index k+1 holds b̃_k.
struct HomologyRanks {
  std::vector<std::uint64_t> reduced;

  std::uint64_t at(int k) const {
    const auto i = static_cast<std::size_t>(k + 1);
    return k >= -1 && i < reduced.size() ? reduced[i] : 0;
  }
  friend bool operator==(const HomologyRanks&, const HomologyRanks&) = default;
};

HomologyRanks reduced_homology(const SimplicialComplex& complex,
                               PivotRule rule = PivotRule::first_nonzero);

/// Same, for the complex given by an explicit face list (closed under subsets).
HomologyRanks reduced_homology(std::span<const Mask> face_list,
                               PivotRule rule = PivotRule::first_nonzero);

struct GradedBettiTable {
  /// (i, j) -> β_{i,j}(I), nonzero entries only
  std::map<std::pair<int, int>, std::uint64_t> graded;

  std::vector<std::uint64_t> totals() const;
  int projdim() const;
};

/// β_{i,j}(I) = Σ_{|W| = j} b̃_{j-i-2}(Δ_W) with Δ the Stanley-Reisner
/// complex of I. The parallel kernel splits the subset range W.
GradedBettiTable hochster_betti(const MonomialIdeal& ideal, Execution exec = Execution::parallel);

struct LinearityWitness {
  int i = 0;
  int j = 0;
};

struct LinearResolutionResult {
  bool linear = false;
  std::optional<LinearityWitness> witness;
};

/// Linearity of an already computed table for generator degree q.
LinearResolutionResult linearity_of(const GradedBettiTable& table, int q);

/// True iff β_{i,j} = 0 whenever j != q + i. Throws for mixed degrees.
LinearResolutionResult linear_resolution_check(const MonomialIdeal& ideal,
                                               Execution exec = Execution::parallel);

}  // namespace faceideal

#endif  // FACEIDEAL_HOMOLOGY_HPP
