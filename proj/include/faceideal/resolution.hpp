#ifndef FACEIDEAL_RESOLUTION_HPP
#define FACEIDEAL_RESOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "faceideal/complex.hpp"
#include "faceideal/hypergraph.hpp"
#include "faceideal/ideal.hpp"

namespace faceideal {

/// e_{G,H} with G a face, G ∪ H = [n]; it lives in F_j for j = |G ∩ H| + 1.
struct BasisElement {
  Mask g = 0;
  Mask h = 0;

  int homological_index() const { return popcount(g & h) + 1; }
  int degree() const { return popcount(g) + popcount(h); }
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// One term sign * var * e_row in ∂_j(e_col). `var` indexes the face ring
/// (x_i at i, y_i at n + i); -1 would mean a unit entry.
struct SignedEntry {
  int sign = 1;
  int var = -1;
  std::size_t row = 0;
  std::size_t col = 0;
};

/// The explicit complex F_0 <- F_1 <- ... <- F_top for S/J_Δ.
struct ResolutionComplex {
  int n = 0;
  /// basis[0] is empty and stands for F_0 = S.
  std::vector<std::vector<BasisElement>> basis;
  /// differentials[j] holds ∂_j for j >= 2; entries sorted by (col, row).
  std::vector<std::vector<SignedEntry>> differentials;
  /// ∂_1(e_{G,H}) = x_G y_H, one monomial per F_1 basis element.
  std::vector<Monomial> augmentation;

  int top() const { return static_cast<int>(basis.size()) - 1; }
  std::size_t rank(int j) const { return j == 0 ? 1 : basis[static_cast<std::size_t>(j)].size(); }
  std::vector<std::size_t> ranks() const;
};

/// Builds F_0..F_{dim Δ + 2}; basis order within F_j is (G lex, H lex).
ResolutionComplex build_resolution(const SimplicialComplex& complex);

/// Number of j in L = G ∩ H below i.
int sigma(Mask intersection, int i);

struct CheckReport {
  bool ok = true;
  std::string message;
};

/// Symbolic ∂_{j-1} ∘ ∂_j = 0 for every j >= 2. Reports the lowest failing
/// column of the lowest failing j.
CheckReport check_complex(const ResolutionComplex& r, Execution exec = Execution::parallel);

/// rank F_{j+1} = β_j (from the f-vector), degrees n + j - 1, and no unit
/// entries in ∂_j for j >= 2.
CheckReport check_ranks_and_degrees(const ResolutionComplex& r, const SimplicialComplex& complex);

/// {∂_1(e)} equals the generators of J_Δ.
CheckReport check_augmentation(const ResolutionComplex& r, const SimplicialComplex& complex);

}  // namespace faceideal

#endif  // FACEIDEAL_RESOLUTION_HPP
