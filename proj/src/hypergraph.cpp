#include "faceideal/hypergraph.hpp"

#include <algorithm>

namespace faceideal {

std::vector<Mask> minimal_sets(std::span<const Mask> sets) {
  std::vector<Mask> sorted(sets.begin(), sets.end());
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Mask> kept;
  for (Mask s : sorted) {
    // Anything that could divide s has cardinality <= |s| and is already kept.
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [s](Mask k) { return is_subset(k, s); });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

std::vector<Mask> maximal_sets(std::span<const Mask> sets) {
  std::vector<Mask> sorted(sets.begin(), sets.end());
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Mask> kept;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    const Mask s = *it;
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [s](Mask k) { return is_subset(s, k); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), CanonicalLess{});
  return kept;
}

bool is_transversal(Mask t, std::span<const Mask> edges) {
  return std::all_of(edges.begin(), edges.end(), [t](Mask e) { return (e & t) != 0; });
}

namespace {

class TransversalSearch {
 public:
  explicit TransversalSearch(std::span<const Mask> edges) : edges_(edges) {}

  // Every vertex of t still owns an edge that no other vertex of t meets.
  bool all_private(Mask t) const {
    Mask owners = 0;
    for (Mask e : edges_) {
      const Mask hit = e & t;
      if (hit != 0 && (hit & (hit - 1)) == 0) owners |= hit;
    }
    return owners == t;
  }

  // Uncovered edge with fewest admissible vertices; returns false when
  // every edge is covered.
  bool pick_edge(Mask t, Mask forbidden, Mask& choice) const {
    bool found = false;
    int best = 65;
    for (Mask e : edges_) {
      if (e & t) continue;
      const int c = popcount(e & ~forbidden);
      if (c < best) {
        best = c;
        choice = e & ~forbidden;
        found = true;
        if (c == 0) break;
      }
    }
    return found;
  }

  void run(Mask t, Mask forbidden, std::vector<Mask>& out) const {
    Mask candidates = 0;
    if (!pick_edge(t, forbidden, candidates)) {
      out.push_back(t);
      return;
    }
    Mask tried = 0;
    for_each_bit(candidates, [&](int v) {
      const Mask next = t | bit(v);
      if (all_private(next)) run(next, forbidden | tried, out);
      tried |= bit(v);
    });
  }

  std::span<const Mask> edges() const { return edges_; }

 private:
  std::span<const Mask> edges_;
};

}  // namespace

std::vector<Mask> minimal_transversals(std::span<const Mask> edges, Execution exec) {
  if (std::any_of(edges.begin(), edges.end(), [](Mask e) { return e == 0; })) return {};
  TransversalSearch search(edges);
  std::vector<Mask> out;
  Mask first = 0;
  if (!search.pick_edge(0, 0, first)) return {Mask{0}};

  // Split the root branching so OpenMP can work on independent subtrees.
  const std::vector<int> roots = bit_indices(first);
  std::vector<std::vector<Mask>> parts(roots.size());
  const int count = static_cast<int>(roots.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < count; ++r) {
      const Mask forbidden = first & full_mask(roots[r]);
      search.run(bit(roots[r]), forbidden, parts[r]);
    }
  } else {
    for (int r = 0; r < count; ++r) {
      const Mask forbidden = first & full_mask(roots[r]);
      search.run(bit(roots[r]), forbidden, parts[r]);
    }
  }
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

namespace {

// Spreads the low bits of `r` onto the positions listed in `slots`.
Mask scatter(std::uint64_t r, const std::vector<int>& slots) {
  Mask m = 0;
  for (std::size_t b = 0; b < slots.size(); ++b)
    if ((r >> b) & 1U) m |= bit(slots[b]);
  return m;
}

bool is_minimal_transversal(Mask s, std::span<const Mask> edges) {
  if (!is_transversal(s, edges)) return false;
  bool minimal = true;
  for_each_bit(s, [&](int v) {
    if (minimal && is_transversal(s & ~bit(v), edges)) minimal = false;
  });
  return minimal;
}

}  // namespace

std::vector<Mask> minimal_transversals_bruteforce(std::span<const Mask> edges, Mask universe,
                                                  Execution exec) {
  if (popcount(universe) > kMaxExhaustive)
    throw Error("exhaustive transversal scan limited to " + std::to_string(kMaxExhaustive) +
                " vertices");
  const std::vector<int> slots = bit_indices(universe);
  const std::int64_t total = std::int64_t{1} << slots.size();
  std::vector<Mask> out;
  if (exec == Execution::parallel) {
#pragma omp parallel
    {
      std::vector<Mask> local;
#pragma omp for schedule(static) nowait
      for (std::int64_t r = 0; r < total; ++r) {
        const Mask s = scatter(static_cast<std::uint64_t>(r), slots);
        if (is_minimal_transversal(s, edges)) local.push_back(s);
      }
#pragma omp critical
      out.insert(out.end(), local.begin(), local.end());
    }
  } else {
    for (std::int64_t r = 0; r < total; ++r) {
      const Mask s = scatter(static_cast<std::uint64_t>(r), slots);
      if (is_minimal_transversal(s, edges)) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace faceideal
