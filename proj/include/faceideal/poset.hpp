#ifndef FACEIDEAL_POSET_HPP
#define FACEIDEAL_POSET_HPP

#include <string>
#include <utility>
#include <vector>

#include "faceideal/complex.hpp"
#include "faceideal/face_ideal.hpp"
#include "faceideal/hypergraph.hpp"
#include "faceideal/ideal.hpp"

namespace faceideal {

/// Finite poset on elements 0..n-1 with the transitive closure of the
/// given relations. below(i) is the set of j with p_j < p_i.
class Poset {
 public:
  /// Each pair (a, b) means p_a < p_b. Throws on cycles or on n < 1.
  Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& relations);
  /// Unlabelled convenience: labels p1..pn.
  Poset(int n, const std::vector<std::pair<int, int>>& relations);

  int size() const { return static_cast<int>(below_.size()); }
  const VertexUniverse& universe() const { return universe_; }
  Mask below(int i) const { return below_[static_cast<std::size_t>(i)]; }
  Mask above(int i) const;
  bool less(int a, int b) const { return contains(below_[static_cast<std::size_t>(b)], a); }
  bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }
  /// Strict order as (a, b) pairs with p_a < p_b.
  std::vector<std::pair<int, int>> relations() const;

  bool is_chain(Mask s) const;
  bool is_antichain(Mask s) const;
  bool is_order_ideal(Mask s) const;

 private:
  VertexUniverse universe_;
  std::vector<Mask> below_;
};

enum class FamilyKind { chains, antichains, poset_ideals };

struct PosetFamily {
  FamilyKind kind = FamilyKind::chains;
  std::vector<Face> members;  ///< canonical order, includes ∅
};

PosetFamily chains(const Poset& p);
PosetFamily antichains(const Poset& p);
PosetFamily poset_ideals(const Poset& p);

/// Chains / antichains as simplicial complexes on the element labels.
SimplicialComplex chain_complex(const Poset& p);
SimplicialComplex antichain_complex(const Poset& p);

MonomialIdeal chain_ideal(const Poset& p);
MonomialIdeal antichain_ideal(const Poset& p);

/// Simple graph on [n]; edges as 2-element faces in canonical order.
struct Graph {
  int n = 0;
  std::vector<Face> edges;
};

Graph comparability_graph(const Poset& p);
Graph incomparability_graph(const Poset& p);

/// Edge ideal of the whisker graph: edges moved to y1..yn, plus x_i*y_i.
MonomialIdeal whisker_graph_edge_ideal(const Graph& g);

struct ChainTheoremPart {
  std::vector<Monomial> dual_generators;
  std::vector<Monomial> whisker_generators;
  bool equal = false;
  bool degenerate = false;  ///< the graph has no edges
};

struct ChainTheoremReport {
  ChainTheoremPart chain_part;      ///< dual of I_C(P) vs incomparability graph
  ChainTheoremPart antichain_part;  ///< dual of I_A(P) vs comparability graph
  bool ok() const { return chain_part.equal && antichain_part.equal; }
};

ChainTheoremReport verify_chain_theorem(const Poset& p);

/// Largest antichain size.
int dilworth_number(const Poset& p);
/// Longest chain cardinality minus one.
int poset_rank(const Poset& p);

struct ProjdimReport {
  int rank_plus_one = 0;
  int dilworth = 0;
  int projdim_chain_ideal = 0;
  int projdim_antichain_ideal = 0;
  bool chain_linear = false;
  bool antichain_linear = false;
  bool ok() const {
    return projdim_chain_ideal == rank_plus_one && projdim_antichain_ideal == dilworth &&
           chain_linear && antichain_linear;
  }
};

/// Compares the closed formulas against Hochster-formula projective dimensions.
ProjdimReport verify_projdim_corollary(const Poset& p, Execution exec = Execution::parallel);

}  // namespace faceideal

#endif  // FACEIDEAL_POSET_HPP
