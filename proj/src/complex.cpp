#include "faceideal/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "faceideal/hypergraph.hpp"

namespace faceideal {

VertexUniverse::VertexUniverse(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kMaxUniverse)
    throw Error("vertex universe exceeds " + std::to_string(kMaxUniverse) + " labels");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!lookup_.emplace(labels_[i], static_cast<int>(i)).second)
      throw Error("duplicate vertex label '" + labels_[i] + "'");
  }
}

VertexUniverse VertexUniverse::numbered(int n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return VertexUniverse(std::move(labels));
}

std::optional<int> VertexUniverse::find(std::string_view label) const {
  auto it = lookup_.find(std::string(label));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int VertexUniverse::index(std::string_view label) const {
  auto i = find(label);
  if (!i) throw Error("unknown vertex label '" + std::string(label) + "'");
  return *i;
}

Face face_of(std::initializer_list<int> vertices) {
  Face f;
  for (int v : vertices) f.bits |= bit(v - 1);
  return f;
}

SimplicialComplex::SimplicialComplex(VertexUniverse universe, std::vector<Face> facets)
    : universe_(std::move(universe)) {
  if (facets.empty()) throw Error("void complex (no facets) is not allowed; use {∅} instead");
  std::vector<Mask> raw;
  raw.reserve(facets.size());
  for (Face f : facets) {
    if (!is_subset(f.bits, universe_.all()))
      throw Error("facet uses a vertex outside the universe");
    raw.push_back(f.bits);
  }
  const std::vector<Mask> kept = maximal_sets(raw);
  if (kept.size() != raw.size()) {
    notes_.push_back("normalized facet list: dropped " + std::to_string(raw.size() - kept.size()) +
                     " duplicate or nested facet(s)");
  }
  facets_.reserve(kept.size());
  for (Mask m : kept) facets_.push_back(Face{m});
}

SimplicialComplex SimplicialComplex::simplex(VertexUniverse universe) {
  const Mask all = universe.all();
  return SimplicialComplex(std::move(universe), {Face{all}});
}

SimplicialComplex SimplicialComplex::empty_complex(VertexUniverse universe) {
  return SimplicialComplex(std::move(universe), {Face{}});
}

int SimplicialComplex::dimension() const {
  int best = 0;
  for (Face f : facets_) best = std::max(best, f.size());
  return best - 1;
}

bool SimplicialComplex::contains_face(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [f](Face g) { return is_subset(f.bits, g.bits); });
}

std::vector<Face> faces(const SimplicialComplex& complex) {
  std::unordered_set<Mask> seen;
  for (Face facet : complex.facets())
    for_each_submask(facet.bits, [&](Mask s) { seen.insert(s); });
  std::vector<Face> out;
  out.reserve(seen.size());
  for (Mask m : seen) out.push_back(Face{m});
  std::sort(out.begin(), out.end());
  return out;
}

FVector f_vector(const SimplicialComplex& complex) {
  FVector fv;
  fv.counts.assign(static_cast<std::size_t>(complex.dimension() + 2), 0);
  for (Face f : faces(complex)) ++fv.counts[static_cast<std::size_t>(f.size())];
  return fv;
}

std::vector<Face> complement_complex(const SimplicialComplex& complex) {
  const Mask all = complex.universe().all();
  std::vector<Face> out;
  for (Face f : faces(complex)) out.push_back(Face{all & ~f.bits});
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex independence_complex(const VertexUniverse& universe,
                                       const std::vector<Mask>& forbidden) {
  if (std::any_of(forbidden.begin(), forbidden.end(), [](Mask e) { return e == 0; }))
    throw Error("independence complex undefined: a facet is empty");
  // Maximal independent sets are complements of minimal transversals.
  const Mask all = universe.all();
  std::vector<Face> facets;
  for (Mask t : minimal_transversals(forbidden)) facets.push_back(Face{all & ~t});
  return SimplicialComplex(universe, std::move(facets));
}

SimplicialComplex independence_complex(const SimplicialComplex& facet_complex) {
  std::vector<Mask> forbidden;
  for (Face f : facet_complex.facets()) forbidden.push_back(f.bits);
  return independence_complex(facet_complex.universe(), forbidden);
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
  // S is a nonface iff it meets the complement of every facet.
  const Mask all = complex.universe().all();
  std::vector<Mask> edges;
  for (Face f : complex.facets()) edges.push_back(all & ~f.bits);
  std::vector<Face> out;
  for (Mask t : minimal_transversals(edges)) out.push_back(Face{t});
  return out;
}

ShellingResult verify_shelling(const SimplicialComplex& complex, const std::vector<Face>& order) {
  {
    std::vector<Face> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != complex.facets())
      throw Error("shelling order is not a permutation of the facets");
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Mask fi = order[i].bits;
    const int codim_one = popcount(fi) - 1;
    for (std::size_t j = 0; j < i; ++j) {
      const Mask meet = order[j].bits & fi;
      bool ok = false;
      for (std::size_t k = 0; k < i && !ok; ++k) {
        const Mask other = order[k].bits & fi;
        ok = is_subset(meet, other) && popcount(other) == codim_one;
      }
      if (!ok) return {false, std::make_pair(static_cast<int>(i + 1), static_cast<int>(j + 1))};
    }
  }
  return {true, std::nullopt};
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int d) {
  if (d < 0 || d > complex.dimension())
    throw Error("skeleton dimension " + std::to_string(d) + " outside [0, " +
                std::to_string(complex.dimension()) + "]");
  std::vector<Face> facets;
  for (Face f : faces(complex))
    if (f.size() == d + 1) facets.push_back(f);
  for (Face f : complex.facets())
    if (f.size() <= d) facets.push_back(f);
  return SimplicialComplex(complex.universe(), std::move(facets));
}

std::string format_face(const VertexUniverse& universe, Face f) {
  std::string s = "{";
  bool first = true;
  for_each_bit(f.bits, [&](int i) {
    if (!first) s += ",";
    s += universe.label(i);
    first = false;
  });
  return s + "}";
}

}  // namespace faceideal
