#include "faceideal/poset.hpp"

#include <algorithm>

#include "faceideal/homology.hpp"

namespace faceideal {

namespace {

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

}  // namespace

Poset::Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& relations)
    : universe_(std::move(labels)) {
  const int n = universe_.size();
  if (n < 1) throw Error("a poset needs at least one element");
  below_.assign(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error("relation refers to an unknown element");
    if (a == b) throw Error("relation " + universe_.label(a) + " < " + universe_.label(a) + " is reflexive");
    below_[static_cast<std::size_t>(b)] |= bit(a);
  }
  // Warshall closure on down-sets.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (contains(below_[static_cast<std::size_t>(i)], k)) below_[static_cast<std::size_t>(i)] |= below_[static_cast<std::size_t>(k)];
  for (int i = 0; i < n; ++i)
    if (contains(below_[static_cast<std::size_t>(i)], i))
      throw Error("relations contain a cycle through " + universe_.label(i));
}

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relations)
    : Poset(numbered_labels(n), relations) {}

Mask Poset::above(int i) const {
  Mask m = 0;
  for (int j = 0; j < size(); ++j)
    if (less(i, j)) m |= bit(j);
  return m;
}

std::vector<std::pair<int, int>> Poset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int b = 0; b < size(); ++b)
    for_each_bit(below(b), [&](int a) { out.emplace_back(a, b); });
  std::sort(out.begin(), out.end());
  return out;
}

bool Poset::is_chain(Mask s) const {
  bool ok = true;
  for_each_bit(s, [&](int i) {
    const Mask comparable_to_i = below(i) | above(i) | bit(i);
    if (!is_subset(s, comparable_to_i)) ok = false;
  });
  return ok;
}

bool Poset::is_antichain(Mask s) const {
  bool ok = true;
  for_each_bit(s, [&](int i) {
    if (below(i) & s) ok = false;
  });
  return ok;
}

bool Poset::is_order_ideal(Mask s) const {
  bool ok = true;
  for_each_bit(s, [&](int i) {
    if (!is_subset(below(i), s)) ok = false;
  });
  return ok;
}

namespace {

template <class Pred>
PosetFamily enumerate(const Poset& p, FamilyKind kind, Pred pred) {
  if (p.size() > kMaxExhaustive)
    throw Error("poset family enumeration limited to " + std::to_string(kMaxExhaustive) + " elements");
  PosetFamily fam;
  fam.kind = kind;
  const Mask total = bit(p.size());
  for (Mask s = 0; s < total; ++s)
    if (pred(s)) fam.members.push_back(Face{s});
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

SimplicialComplex complex_from_family(const Poset& p, const PosetFamily& fam) {
  std::vector<Mask> sets;
  for (Face f : fam.members) sets.push_back(f.bits);
  std::vector<Face> facets;
  for (Mask m : maximal_sets(sets)) facets.push_back(Face{m});
  return SimplicialComplex(p.universe(), std::move(facets));
}

Graph pair_graph(const Poset& p, bool want_comparable) {
  Graph g;
  g.n = p.size();
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (p.comparable(a, b) == want_comparable) g.edges.push_back(Face{bit(a) | bit(b)});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

ChainTheoremPart compare_part(const MonomialIdeal& ideal, const Graph& g) {
  ChainTheoremPart part;
  part.dual_generators = alexander_dual(ideal).generators();
  part.whisker_generators = whisker_graph_edge_ideal(g).generators();
  part.degenerate = g.edges.empty();
  part.equal = part.dual_generators == part.whisker_generators;
  return part;
}

}  // namespace

PosetFamily chains(const Poset& p) {
  return enumerate(p, FamilyKind::chains, [&](Mask s) { return p.is_chain(s); });
}

PosetFamily antichains(const Poset& p) {
  return enumerate(p, FamilyKind::antichains, [&](Mask s) { return p.is_antichain(s); });
}

PosetFamily poset_ideals(const Poset& p) {
  return enumerate(p, FamilyKind::poset_ideals, [&](Mask s) { return p.is_order_ideal(s); });
}

SimplicialComplex chain_complex(const Poset& p) { return complex_from_family(p, chains(p)); }

SimplicialComplex antichain_complex(const Poset& p) { return complex_from_family(p, antichains(p)); }

MonomialIdeal chain_ideal(const Poset& p) { return face_ideal(chain_complex(p)).ideal; }

MonomialIdeal antichain_ideal(const Poset& p) { return face_ideal(antichain_complex(p)).ideal; }

Graph comparability_graph(const Poset& p) { return pair_graph(p, true); }

Graph incomparability_graph(const Poset& p) { return pair_graph(p, false); }

MonomialIdeal whisker_graph_edge_ideal(const Graph& g) { return whisker_facet_ideal(g.n, g.edges); }

ChainTheoremReport verify_chain_theorem(const Poset& p) {
  ChainTheoremReport report;
  report.chain_part = compare_part(chain_ideal(p), incomparability_graph(p));
  report.antichain_part = compare_part(antichain_ideal(p), comparability_graph(p));
  return report;
}

int dilworth_number(const Poset& p) {
  int best = 0;
  for (Face f : antichains(p).members) best = std::max(best, f.size());
  return best;
}

int poset_rank(const Poset& p) {
  int best = 0;
  for (Face f : chains(p).members) best = std::max(best, f.size());
  return best - 1;
}

ProjdimReport verify_projdim_corollary(const Poset& p, Execution exec) {
  ProjdimReport r;
  r.rank_plus_one = poset_rank(p) + 1;
  r.dilworth = dilworth_number(p);
  const MonomialIdeal ic = chain_ideal(p);
  const MonomialIdeal ia = antichain_ideal(p);
  const GradedBettiTable tc = hochster_betti(ic, exec);
  const GradedBettiTable ta = hochster_betti(ia, exec);
  r.projdim_chain_ideal = tc.projdim();
  r.projdim_antichain_ideal = ta.projdim();
  // Face ideals are generated in degree |P|.
  r.chain_linear = linearity_of(tc, p.size()).linear;
  r.antichain_linear = linearity_of(ta, p.size()).linear;
  return r;
}

}  // namespace faceideal
