#ifndef FACEIDEAL_FACE_IDEAL_HPP
#define FACEIDEAL_FACE_IDEAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "faceideal/complex.hpp"
#include "faceideal/ideal.hpp"

namespace faceideal {

/// u_F = x_F * y_{[n] \ F} over the face ring x1..xn, y1..yn.
Monomial face_monomial(int n, Face f);

struct FaceIdealResult {
  MonomialIdeal ideal;
  /// face_of[p] is the face whose monomial sits at storage position p.
  std::vector<Face> face_of;
};

FaceIdealResult face_ideal(const SimplicialComplex& complex);

/// I_S for an arbitrary nonempty collection S of subsets of [n].
FaceIdealResult collection_ideal(int n, const std::vector<Face>& collection);

/// Δ with the whiskers {x_i, y_i} attached, on the face-ring vertices.
SimplicialComplex whisker_complex(const SimplicialComplex& complex);

/// Γ on y1..yn: the minimal nonfaces of the copy of Δ on the y-variables.
/// Throws when Δ is the full simplex (no nonfaces).
SimplicialComplex gamma_of(const SimplicialComplex& complex);

// Ideal generated by the facets of Γ (on y1..yn) and the whiskers x_i*y_i,
// reduced to minimal generators. A singleton facet {y_i} of Γ absorbs its
// whisker here, which is where this differs from facet_ideal(W(Γ)).
MonomialIdeal whisker_facet_ideal(int n, const std::vector<Face>& gamma_facets);

struct DualityReport {
  std::vector<Monomial> dual_generators;     ///< (J_Δ)^∨ by transversals
  std::vector<Monomial> whisker_generators;  ///< I(W(Γ)) by construction
  bool equal = false;
  /// Δ is the full simplex: Γ is empty and only the whiskers remain.
  bool degenerate = false;
};

DualityReport verify_duality_theorem(const SimplicialComplex& complex);

struct BettiTable {
  std::vector<std::uint64_t> total;                       ///< β_0 .. β_p
  std::map<std::pair<int, int>, std::uint64_t> graded;    ///< (i, degree) -> β_{i,degree}
  int projdim = 0;
};

/// β_j(J_Δ) = Σ_{i=-1}^{d-1} C(i+1, j) f_i, placed in degree n + j.
BettiTable betti_formula(const SimplicialComplex& complex);

/// Faces by increasing cardinality then lex, so u_G comes before u_F when G ⊂ F.
GeneratorOrder face_order(const FaceIdealResult& result);
GeneratorOrder face_order(const SimplicialComplex& complex);

struct CollectionViolation {
  int condition = 0;  ///< 1: F∩G missing; 2: no x_i ∈ F\G with F\{x_i} in S
  Face f;
  Face g;
};

struct CollectionOrderResult {
  std::optional<FaceIdealResult> ideal;
  std::optional<GeneratorOrder> order;
  std::optional<CollectionViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

/// Checks closure under intersection and the descent condition for every
/// pair G ⊂ F, then orders the generators by cardinality and lex.
CollectionOrderResult collection_order(int n, const std::vector<Face>& collection);

}  // namespace faceideal

#endif  // FACEIDEAL_FACE_IDEAL_HPP
