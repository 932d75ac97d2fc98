#include "faceideal/whisker_hd.hpp"

#include <algorithm>
#include <numeric>

#include "faceideal/hypergraph.hpp"

namespace faceideal {

void WhiskerSpec::validate() const {
  if (k.size() != d.size()) throw Error("whisker spec: k and d have different lengths");
  if (k.empty()) throw Error("whisker spec is empty");
  long total = static_cast<long>(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1) throw Error("whisker spec: k_" + std::to_string(i + 1) + " must be >= 1");
    if (d[i] < 1 || d[i] > k[i])
      throw Error("whisker spec: d_" + std::to_string(i + 1) + " must lie in [1, k_" + std::to_string(i + 1) + "]");
    total += k[i];
  }
  if (total > 62) throw Error("whisker complex needs n + sum(k) <= 62 vertices, got " + std::to_string(total));
}

int WhiskerSpec::cover_size() const {
  int s = n();
  for (std::size_t i = 0; i < k.size(); ++i) s += k[i] - d[i];
  return s;
}

Mask HDWhiskerComplex::base_mask() const {
  Mask m = 0;
  for (int off : offsets) m |= bit(off);
  return m;
}

Mask HDWhiskerComplex::block_mask(int i) const {
  const int off = offsets[static_cast<std::size_t>(i)];
  return full_mask(spec.k[static_cast<std::size_t>(i)] + 1) << off;
}

namespace {

// Calls f(s) for every subset of `pool` of cardinality `size`.
template <class F>
void for_each_subset_of_size(Mask pool, int size, F&& f) {
  const std::vector<int> idx = bit_indices(pool);
  const int m = static_cast<int>(idx.size());
  if (size < 0 || size > m) return;
  std::vector<int> pick(static_cast<std::size_t>(size));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Mask s = 0;
    for (int p : pick) s |= bit(idx[static_cast<std::size_t>(p)]);
    f(s);
    int t = size - 1;
    while (t >= 0 && pick[static_cast<std::size_t>(t)] == m - size + t) --t;
    if (t < 0) return;
    ++pick[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < size; ++u) pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
  }
}

Mask embed_base(const HDWhiskerComplex& w, Mask base_face) {
  Mask m = 0;
  for_each_bit(base_face, [&](int i) { m |= bit(w.offsets[static_cast<std::size_t>(i)]); });
  return m;
}

}  // namespace

std::vector<Mask> HDWhiskerComplex::cover_edges() const {
  std::vector<Mask> edges;
  for (Face f : base.facets())
    if (!f.empty()) edges.push_back(embed_base(*this, f.bits));
  for (int i = 0; i < spec.n(); ++i)
    for_each_subset_of_size(block_mask(i), spec.d[static_cast<std::size_t>(i)] + 1,
                            [&](Mask s) { edges.push_back(s); });
  return minimal_sets(edges);
}

HDWhiskerComplex build_hd_whisker(const SimplicialComplex& base, const WhiskerSpec& spec) {
  spec.validate();
  if (spec.n() != base.n())
    throw Error("whisker spec has " + std::to_string(spec.n()) + " entries for " + std::to_string(base.n()) +
                " base vertices");
  std::vector<Variable> vars;
  std::vector<int> offsets;
  for (int i = 0; i < spec.n(); ++i) {
    offsets.push_back(static_cast<int>(vars.size()));
    vars.push_back({VariableKind::x, i + 1, 0, "x" + std::to_string(i + 1)});
    for (int j = 1; j <= spec.k[static_cast<std::size_t>(i)]; ++j)
      vars.push_back({VariableKind::whisker, i + 1, j, "x" + std::to_string(i + 1) + "^(" + std::to_string(j) + ")"});
  }
  VariableUniverse universe(std::move(vars));
  HDWhiskerComplex w{base, spec, universe, SimplicialComplex::empty_complex(universe.as_vertices()), offsets};
  std::vector<Face> facets;
  for (Face f : base.facets()) facets.push_back(Face{embed_base(w, f.bits)});
  for (int i = 0; i < spec.n(); ++i)
    for_each_subset_of_size(w.block_mask(i), spec.d[static_cast<std::size_t>(i)] + 1,
                            [&](Mask s) { facets.push_back(Face{s}); });
  w.complex = SimplicialComplex(universe.as_vertices(), std::move(facets));
  return w;
}

std::vector<Mask> covers_by_characterization(const HDWhiskerComplex& w) {
  const int n = w.spec.n();
  if (n > kMaxExhaustive) throw Error("base cover enumeration limited to " + std::to_string(kMaxExhaustive) + " vertices");
  std::vector<Mask> base_edges;
  for (Face f : w.base.facets())
    if (!f.empty()) base_edges.push_back(f.bits);
  std::vector<Mask> out;
  for (Mask s = 0; s < bit(n); ++s) {
    if (!is_transversal(s, base_edges)) continue;
    // Cartesian product of per-block choices.
    std::vector<Mask> partial{embed_base(w, s)};
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const int need = w.spec.k[ui] - w.spec.d[ui] + (contains(s, i) ? 0 : 1);
      std::vector<Mask> next;
      for (Mask p : partial)
        for_each_subset_of_size(w.whisker_mask(i), need, [&](Mask c) { next.push_back(p | c); });
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<Mask> minimal_covers(const HDWhiskerComplex& w) {
  std::vector<Mask> by_claim = covers_by_characterization(w);
  const std::vector<Mask> edges = w.cover_edges();
  const Mask all = w.universe.all();
  const std::vector<Mask> reference = popcount(all) <= kMaxExhaustive
                                          ? minimal_transversals_bruteforce(edges, all)
                                          : minimal_transversals(edges);
  if (by_claim != reference)
    throw Error("block characterization gives " + std::to_string(by_claim.size()) +
                " covers but transversal enumeration gives " + std::to_string(reference.size()));
  return by_claim;
}

bool cover_greater(const HDWhiskerComplex& w, Mask a, Mask b) {
  const Mask base = w.base_mask();
  const Mask ba = a & base, bb = b & base;
  if (ba != bb) {
    if (popcount(ba) != popcount(bb)) return popcount(ba) > popcount(bb);
    // Lower position means larger variable.
    return contains(ba, lowest_bit(ba ^ bb));
  }
  const Mask wa = a & ~base, wb = b & ~base;
  if (wa == wb) return false;
  return contains(wa, lowest_bit(wa ^ wb));
}

CoverIdealOrder cover_ideal_order(const HDWhiskerComplex& w, const std::vector<Mask>& covers) {
  std::vector<Monomial> gens;
  for (Mask c : covers) gens.push_back(Monomial{c});
  MonomialIdeal ideal(w.universe, std::move(gens));
  GeneratorOrder order = GeneratorOrder::storage(ideal);
  const auto& g = ideal.generators();
  std::sort(order.positions.begin(), order.positions.end(), [&](std::size_t a, std::size_t b) {
    return cover_greater(w, g[a].support, g[b].support);
  });
  return {std::move(ideal), std::move(order)};
}

GeneralizedReport verify_generalized_theorem(const HDWhiskerComplex& w) {
  GeneralizedReport report;
  report.covers = covers_by_characterization(w);
  const std::vector<Mask> edges = w.cover_edges();
  const Mask all = w.universe.all();
  const std::vector<Mask> reference = popcount(all) <= kMaxExhaustive
                                          ? minimal_transversals_bruteforce(edges, all)
                                          : minimal_transversals(edges);
  report.covers_match_bruteforce = report.covers == reference;
  const int expected = w.spec.cover_size();
  report.degrees_ok = std::all_of(report.covers.begin(), report.covers.end(),
                                  [expected](Mask c) { return popcount(c) == expected; });
  if (report.covers.empty()) return report;

  const CoverIdealOrder ordered = cover_ideal_order(w, report.covers);
  report.quotients = check_linear_quotients(ordered.ideal, ordered.order);

  for (std::size_t p : ordered.order.positions)
    report.shelling_order.push_back(Face{all & ~ordered.ideal.generators()[p].support});
  const SimplicialComplex independence(w.universe.as_vertices(), report.shelling_order);
  report.shelling = verify_shelling(independence, report.shelling_order);
  return report;
}

}  // namespace faceideal
