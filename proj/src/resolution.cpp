#include "faceideal/resolution.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "faceideal/face_ideal.hpp"

namespace faceideal {

int sigma(Mask intersection, int i) { return popcount(intersection & full_mask(i)); }

std::vector<std::size_t> ResolutionComplex::ranks() const {
  std::vector<std::size_t> out;
  for (int j = 0; j <= top(); ++j) out.push_back(rank(j));
  return out;
}

namespace {

std::uint64_t key_of(Mask g, Mask h) { return g | (h << 32); }

bool basis_less(const BasisElement& a, const BasisElement& b) {
  if (a.g != b.g) return canonical_less(a.g, b.g);
  return canonical_less(a.h, b.h);
}

}  // namespace

ResolutionComplex build_resolution(const SimplicialComplex& complex) {
  const int n = complex.n();
  if (n > 31) throw Error("resolution basis keys need n <= 31");
  const Mask all = full_mask(n);
  ResolutionComplex r;
  r.n = n;
  const int top = complex.dimension() + 2;
  r.basis.assign(static_cast<std::size_t>(top + 1), {});
  for (Face g : faces(complex)) {
    const Mask rest = all & ~g.bits;
    for_each_submask(g.bits, [&](Mask l) {
      r.basis[static_cast<std::size_t>(popcount(l) + 1)].push_back({g.bits, rest | l});
    });
  }
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index(r.basis.size());
  for (std::size_t j = 1; j < r.basis.size(); ++j) {
    std::sort(r.basis[j].begin(), r.basis[j].end(), basis_less);
    for (std::size_t p = 0; p < r.basis[j].size(); ++p)
      index[j].emplace(key_of(r.basis[j][p].g, r.basis[j][p].h), p);
  }

  for (const BasisElement& e : r.basis[1]) r.augmentation.push_back(Monomial{e.g | (e.h << n)});

  r.differentials.assign(r.basis.size(), {});
  for (std::size_t j = 2; j < r.basis.size(); ++j) {
    auto& entries = r.differentials[j];
    for (std::size_t col = 0; col < r.basis[j].size(); ++col) {
      const BasisElement e = r.basis[j][col];
      const Mask meet = e.g & e.h;
      for_each_bit(meet, [&](int i) {
        const int s = (sigma(meet, i) % 2 == 0) ? 1 : -1;
        const std::size_t drop_g = index[j - 1].at(key_of(e.g & ~bit(i), e.h));
        const std::size_t drop_h = index[j - 1].at(key_of(e.g, e.h & ~bit(i)));
        entries.push_back({s, i, drop_g, col});
        entries.push_back({-s, n + i, drop_h, col});
      });
    }
    std::sort(entries.begin(), entries.end(), [](const SignedEntry& a, const SignedEntry& b) {
      return std::tie(a.col, a.row) < std::tie(b.col, b.row);
    });
  }
  return r;
}

namespace {

// Half-open entry ranges per column of a differential.
std::vector<std::size_t> column_offsets(const std::vector<SignedEntry>& entries, std::size_t cols) {
  std::vector<std::size_t> off(cols + 1, 0);
  for (const auto& e : entries) ++off[e.col + 1];
  for (std::size_t c = 0; c < cols; ++c) off[c + 1] += off[c];
  return off;
}

// Composite coefficient keyed by (row, variable pair) or, into F_0, by the
// monomial written as (support, squared part).
using Term = std::tuple<std::uint64_t, std::uint64_t, long>;

bool cancels(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end());
  for (std::size_t a = 0; a < terms.size();) {
    long sum = 0;
    std::size_t b = a;
    while (b < terms.size() && std::get<0>(terms[b]) == std::get<0>(terms[a]) &&
           std::get<1>(terms[b]) == std::get<1>(terms[a])) {
      sum += std::get<2>(terms[b]);
      ++b;
    }
    if (sum != 0) return false;
    a = b;
  }
  return true;
}

bool column_vanishes(const ResolutionComplex& r, std::size_t j, std::size_t col,
                     const std::vector<std::size_t>& off_j, const std::vector<std::size_t>& off_prev) {
  const auto& outer = r.differentials[j];
  std::vector<Term> terms;
  for (std::size_t a = off_j[col]; a < off_j[col + 1]; ++a) {
    const SignedEntry& e1 = outer[a];
    if (j == 2) {
      const Mask u = r.augmentation[e1.row].support;
      Mask support = u, squared = 0;
      if (e1.var >= 0) {
        if (contains(u, e1.var)) squared = bit(e1.var);
        support |= bit(e1.var);
      }
      terms.emplace_back(support, squared, e1.sign);
      continue;
    }
    const auto& inner = r.differentials[j - 1];
    for (std::size_t b = off_prev[e1.row]; b < off_prev[e1.row + 1]; ++b) {
      const SignedEntry& e2 = inner[b];
      const int lo = std::min(e1.var, e2.var), hi = std::max(e1.var, e2.var);
      const std::uint64_t pair = (static_cast<std::uint64_t>(lo + 1) << 32) | static_cast<std::uint64_t>(hi + 1);
      terms.emplace_back(e2.row, pair, static_cast<long>(e1.sign) * e2.sign);
    }
  }
  return cancels(terms);
}

}  // namespace

CheckReport check_complex(const ResolutionComplex& r, Execution exec) {
  for (std::size_t j = 2; j < r.basis.size(); ++j) {
    const std::size_t cols = r.basis[j].size();
    const auto off_j = column_offsets(r.differentials[j], cols);
    const auto off_prev = j > 2 ? column_offsets(r.differentials[j - 1], r.basis[j - 1].size())
                                : std::vector<std::size_t>{};
    std::vector<char> bad(cols, 0);
    const auto total = static_cast<std::int64_t>(cols);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
      for (std::int64_t c = 0; c < total; ++c)
        bad[static_cast<std::size_t>(c)] = !column_vanishes(r, j, static_cast<std::size_t>(c), off_j, off_prev);
    } else {
      for (std::int64_t c = 0; c < total; ++c)
        bad[static_cast<std::size_t>(c)] = !column_vanishes(r, j, static_cast<std::size_t>(c), off_j, off_prev);
    }
    auto first = std::find(bad.begin(), bad.end(), 1);
    if (first != bad.end()) {
      const auto col = static_cast<std::size_t>(first - bad.begin());
      return {false, "composite d" + std::to_string(j - 1) + "*d" + std::to_string(j) +
                         " is nonzero on column " + std::to_string(col) + " of F_" + std::to_string(j)};
    }
  }
  return {true, {}};
}

CheckReport check_ranks_and_degrees(const ResolutionComplex& r, const SimplicialComplex& complex) {
  const BettiTable betti = betti_formula(complex);
  if (static_cast<std::size_t>(r.top()) != betti.total.size())
    return {false, "top module F_" + std::to_string(r.top()) + " but projdim + 1 = " +
                       std::to_string(betti.total.size())};
  for (std::size_t j = 0; j < betti.total.size(); ++j) {
    if (r.rank(static_cast<int>(j + 1)) != betti.total[j])
      return {false, "rank F_" + std::to_string(j + 1) + " = " + std::to_string(r.rank(static_cast<int>(j + 1))) +
                         " but beta_" + std::to_string(j) + " = " + std::to_string(betti.total[j])};
  }
  const Mask all = full_mask(r.n);
  for (int j = 1; j <= r.top(); ++j) {
    for (const BasisElement& e : r.basis[static_cast<std::size_t>(j)]) {
      if (e.degree() != r.n + j - 1 || e.homological_index() != j || (e.g | e.h) != all ||
          !complex.contains_face(Face{all & ~e.h}) || !complex.contains_face(Face{e.g}))
        return {false, "basis element of F_" + std::to_string(j) + " violates the (G, H) conditions or degree " +
                           std::to_string(r.n + j - 1)};
    }
  }
  for (std::size_t j = 2; j < r.differentials.size(); ++j) {
    for (const SignedEntry& e : r.differentials[j]) {
      const BasisElement col = r.basis[j][e.col];
      const int i = e.var < 0 ? -1 : e.var % r.n;
      if (e.var < 0 || e.var >= 2 * r.n || !contains(col.g & col.h, i) || (e.sign != 1 && e.sign != -1))
        return {false, "d" + std::to_string(j) + " has a non-variable entry at column " + std::to_string(e.col)};
    }
  }
  return {true, {}};
}

CheckReport check_augmentation(const ResolutionComplex& r, const SimplicialComplex& complex) {
  std::vector<Monomial> image = r.augmentation;
  std::sort(image.begin(), image.end());
  const FaceIdealResult j = face_ideal(complex);
  const auto& gens = j.ideal.generators();
  if (image == gens) return {true, {}};
  const VariableUniverse ring = VariableUniverse::face_ring(r.n);
  std::vector<Monomial> diff;
  std::set_symmetric_difference(image.begin(), image.end(), gens.begin(), gens.end(), std::back_inserter(diff));
  std::string msg = "image of d1 differs from J_Delta on:";
  for (Monomial m : diff) msg += " " + format_monomial(ring, m);
  return {false, msg};
}

}  // namespace faceideal
