#include "faceideal/face_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace faceideal {

Monomial face_monomial(int n, Face f) {
  const Mask all = full_mask(n);
  return Monomial{f.bits | ((all & ~f.bits) << n)};
}

namespace {

void check_face_ring_size(int n) {
  if (n > 31) throw Error("face ideal needs n <= 31 vertices (2n variables), got " + std::to_string(n));
}

Face face_from_monomial(int n, Monomial m) { return Face{m.support & full_mask(n)}; }

}  // namespace

FaceIdealResult collection_ideal(int n, const std::vector<Face>& collection) {
  check_face_ring_size(n);
  if (collection.empty()) throw Error("collection must be nonempty");
  std::vector<Monomial> gens;
  gens.reserve(collection.size());
  for (Face f : collection) {
    if (!is_subset(f.bits, full_mask(n))) throw Error("collection member outside [n]");
    gens.push_back(face_monomial(n, f));
  }
  // All u_F have degree n and distinct supports, so this only dedups.
  MonomialIdeal ideal = minimize(VariableUniverse::face_ring(n), gens);
  std::vector<Face> face_of;
  face_of.reserve(ideal.size());
  for (Monomial g : ideal.generators()) face_of.push_back(face_from_monomial(n, g));
  return {std::move(ideal), std::move(face_of)};
}

FaceIdealResult face_ideal(const SimplicialComplex& complex) {
  return collection_ideal(complex.n(), faces(complex));
}

SimplicialComplex whisker_complex(const SimplicialComplex& complex) {
  const int n = complex.n();
  check_face_ring_size(n);
  std::vector<Face> facets = complex.facets();
  for (int i = 0; i < n; ++i) facets.push_back(Face{bit(i) | bit(n + i)});
  return SimplicialComplex(VariableUniverse::face_ring(n).as_vertices(), std::move(facets));
}

SimplicialComplex gamma_of(const SimplicialComplex& complex) {
  if (complex.is_full_simplex())
    throw Error("Γ is empty for the full simplex: Δ has no minimal nonfaces");
  return SimplicialComplex(VertexUniverse::numbered(complex.n(), "y"), minimal_nonfaces(complex));
}

MonomialIdeal whisker_facet_ideal(int n, const std::vector<Face>& gamma_facets) {
  check_face_ring_size(n);
  std::vector<Monomial> gens;
  for (Face f : gamma_facets) gens.push_back(Monomial{f.bits << n});
  for (int i = 0; i < n; ++i) gens.push_back(Monomial{bit(i) | bit(n + i)});
  return minimize(VariableUniverse::face_ring(n), gens);
}

DualityReport verify_duality_theorem(const SimplicialComplex& complex) {
  const int n = complex.n();
  DualityReport report;
  const MonomialIdeal dual = alexander_dual(face_ideal(complex).ideal);
  report.dual_generators = dual.generators();
  std::vector<Face> gamma_facets;
  if (complex.is_full_simplex()) {
    report.degenerate = true;
  } else {
    gamma_facets = gamma_of(complex).facets();
  }
  report.whisker_generators = whisker_facet_ideal(n, gamma_facets).generators();
  report.equal = report.dual_generators == report.whisker_generators;
  return report;
}

BettiTable betti_formula(const SimplicialComplex& complex) {
  const FVector fv = f_vector(complex);
  const int n = complex.n();
  const int top = fv.d();  // faces have cardinality at most d
  BettiTable table;
  table.total.assign(static_cast<std::size_t>(top + 1), 0);
  for (int j = 0; j <= top; ++j) {
    std::uint64_t sum = 0;
    for (int card = 0; card <= top; ++card)
      sum += binomial(card, j) * fv.counts[static_cast<std::size_t>(card)];
    table.total[static_cast<std::size_t>(j)] = sum;
    table.graded[{j, n + j}] = sum;
  }
  table.projdim = complex.dimension() + 1;
  return table;
}

GeneratorOrder face_order(const FaceIdealResult& result) {
  GeneratorOrder order;
  order.positions.resize(result.face_of.size());
  std::iota(order.positions.begin(), order.positions.end(), std::size_t{0});
  std::sort(order.positions.begin(), order.positions.end(),
            [&](std::size_t a, std::size_t b) { return result.face_of[a] < result.face_of[b]; });
  return order;
}

GeneratorOrder face_order(const SimplicialComplex& complex) { return face_order(face_ideal(complex)); }

CollectionOrderResult collection_order(int n, const std::vector<Face>& collection) {
  if (collection.empty()) throw Error("collection must be nonempty");
  std::vector<Face> members = collection;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::unordered_set<Mask> present;
  for (Face f : members) present.insert(f.bits);

  CollectionOrderResult result;
  for (Face f : members)
    for (Face g : members)
      if (!present.count(f.bits & g.bits)) {
        result.violation = CollectionViolation{1, f, g};
        return result;
      }
  for (Face f : members) {
    for (Face g : members) {
      if (g.bits == f.bits || !is_subset(g.bits, f.bits)) continue;
      bool found = false;
      for_each_bit(f.bits & ~g.bits, [&](int i) {
        if (present.count(f.bits & ~bit(i))) found = true;
      });
      if (!found) {
        result.violation = CollectionViolation{2, f, g};
        return result;
      }
    }
  }
  result.ideal = collection_ideal(n, members);
  result.order = face_order(*result.ideal);
  return result;
}

}  // namespace faceideal
