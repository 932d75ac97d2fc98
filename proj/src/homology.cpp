#include "faceideal/homology.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <boost/multiprecision/cpp_int.hpp>
#include <unordered_map>

namespace faceideal {

namespace {

struct Overflow {};

// Checked 64-bit arithmetic; throws Overflow so the caller can redo the
// elimination in arbitrary precision.
struct Checked {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
};

struct Big {
  using Int = boost::multiprecision::cpp_int;
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
};

template <class T>
T magnitude(const T& v) {
  return v < 0 ? T(-v) : v;
}

template <class T, class Ops>
std::size_t bareiss_rank(std::vector<T> m, std::size_t rows, std::size_t cols, PivotRule rule) {
  auto at = [&](std::size_t r, std::size_t c) -> T& { return m[r * cols + c]; };
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (at(r, c) == 0) continue;
      if (pivot == rows) {
        pivot = r;
        if (rule == PivotRule::first_nonzero) break;
      } else if (magnitude(at(r, c)) < magnitude(at(pivot, c))) {
        pivot = r;
      }
    }
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t k = c; k < cols; ++k) std::swap(at(pivot, k), at(rank, k));
    const T p = at(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const T lead = at(r, c);
      for (std::size_t k = c + 1; k < cols; ++k) {
        // Exact by Sylvester's identity.
        at(r, k) = Ops::sub(Ops::mul(p, at(r, k)), Ops::mul(lead, at(rank, k))) / prev;
      }
      at(r, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(std::vector<std::int64_t> matrix, std::size_t rows, std::size_t cols, PivotRule rule) {
  if (matrix.size() != rows * cols) throw Error("matrix size does not match its shape");
  if (rows == 0 || cols == 0) return 0;
  try {
    return bareiss_rank<std::int64_t, Checked>(matrix, rows, cols, rule);
  } catch (const Overflow&) {
    std::vector<Big::Int> big(matrix.begin(), matrix.end());
    return bareiss_rank<Big::Int, Big>(std::move(big), rows, cols, rule);
  }
}

namespace {

using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;  // sorted by row

// c2 -= factor * c1, both sorted; rows that newly appear are reported.
void axpy(SparseColumn& c2, const SparseColumn& c1, std::int64_t factor, std::vector<std::uint32_t>& fresh) {
  SparseColumn out;
  out.reserve(c1.size() + c2.size());
  std::size_t a = 0, b = 0;
  while (a < c1.size() || b < c2.size()) {
    if (b == c2.size() || (a < c1.size() && c1[a].first < c2[b].first)) {
      out.emplace_back(c1[a].first, Checked::mul(-factor, c1[a].second));
      fresh.push_back(c1[a].first);
      ++a;
    } else if (a == c1.size() || c2[b].first < c1[a].first) {
      out.push_back(c2[b++]);
    } else {
      const std::int64_t v = Checked::sub(c2[b].second, Checked::mul(factor, c1[a].second));
      if (v != 0) out.emplace_back(c1[a].first, v);
      ++a;
      ++b;
    }
  }
  c2 = std::move(out);
}

// Eliminates on ±1 pivots, which keeps every entry integral without
// division; whatever is left goes to dense fraction-free elimination.
std::size_t sparse_rank(std::vector<SparseColumn> cols, std::size_t rows, PivotRule rule) {
  std::vector<std::vector<std::uint32_t>> row_cols(rows);
  for (std::uint32_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) row_cols[r].push_back(c);
  std::vector<char> alive(cols.size(), 1);
  std::vector<std::uint32_t> order(cols.size());
  for (std::uint32_t c = 0; c < cols.size(); ++c) order[c] = c;
  std::size_t rank = 0;
  std::vector<std::uint32_t> fresh;
  for (bool progress = true; progress;) {
    progress = false;
    if (rule == PivotRule::smallest_abs)
      std::stable_sort(order.begin(), order.end(),
                       [&](std::uint32_t a, std::uint32_t b) { return cols[a].size() < cols[b].size(); });
    for (std::uint32_t c : order) {
      if (!alive[c] || cols[c].empty()) continue;
      std::optional<std::pair<std::uint32_t, std::int64_t>> pivot;
      for (const auto& e : cols[c]) {
        if (e.second != 1 && e.second != -1) continue;
        pivot = e;
        if (rule == PivotRule::first_nonzero) break;
      }
      if (!pivot) continue;
      const auto [r, a] = *pivot;
      alive[c] = 0;
      ++rank;
      progress = true;
      const std::vector<std::uint32_t> touching = row_cols[r];
      for (std::uint32_t c2 : touching) {
        if (!alive[c2]) continue;
        auto it = std::lower_bound(cols[c2].begin(), cols[c2].end(), std::make_pair(r, std::numeric_limits<std::int64_t>::min()));
        if (it == cols[c2].end() || it->first != r) continue;
        fresh.clear();
        axpy(cols[c2], cols[c], it->second * a, fresh);
        for (std::uint32_t nr : fresh) row_cols[nr].push_back(c2);
      }
    }
  }
  std::vector<std::uint32_t> left_cols;
  std::vector<std::int64_t> row_index(rows, -1);
  std::size_t left_rows = 0;
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    if (!alive[c] || cols[c].empty()) continue;
    left_cols.push_back(c);
    for (const auto& e : cols[c])
      if (row_index[e.first] < 0) row_index[e.first] = static_cast<std::int64_t>(left_rows++);
  }
  if (left_cols.empty()) return rank;
  std::vector<std::int64_t> dense(left_rows * left_cols.size(), 0);
  for (std::size_t k = 0; k < left_cols.size(); ++k)
    for (const auto& e : cols[left_cols[k]])
      dense[static_cast<std::size_t>(row_index[e.first]) * left_cols.size() + k] = e.second;
  return rank + exact_rank(std::move(dense), left_rows, left_cols.size(), rule);
}

std::size_t boundary_rank(const std::vector<SparseColumn>& cols, std::size_t rows, PivotRule rule) {
  try {
    return sparse_rank(cols, rows, rule);
  } catch (const Overflow&) {
    std::vector<std::int64_t> dense(rows * cols.size(), 0);
    for (std::size_t k = 0; k < cols.size(); ++k)
      for (const auto& e : cols[k]) dense[e.first * cols.size() + k] = e.second;
    return exact_rank(std::move(dense), rows, cols.size(), rule);
  }
}

}  // namespace

HomologyRanks reduced_homology(std::span<const Mask> face_list, PivotRule rule) {
  HomologyRanks out;
  if (face_list.empty()) return out;
  // by_card[c] lists faces of cardinality c, i.e. the basis of C_{c-1}.
  std::vector<std::vector<Mask>> by_card;
  for (Mask f : face_list) {
    const auto c = static_cast<std::size_t>(popcount(f));
    if (by_card.size() <= c) by_card.resize(c + 1);
    by_card[c].push_back(f);
  }
  for (auto& v : by_card) std::sort(v.begin(), v.end(), CanonicalLess{});

  // ranks[c] = rank of the boundary C_{c-1} -> C_{c-2}; ranks[0] = 0.
  std::vector<std::size_t> ranks(by_card.size() + 1, 0);
  for (std::size_t c = 1; c < by_card.size(); ++c) {
    const auto& cols = by_card[c];
    const auto& rows = by_card[c - 1];
    if (cols.empty() || rows.empty()) continue;
    std::unordered_map<Mask, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);
    std::vector<SparseColumn> m(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      int t = 0;
      for_each_bit(cols[k], [&](int v) {
        m[k].emplace_back(static_cast<std::uint32_t>(row_of.at(cols[k] & ~bit(v))), (t % 2 == 0) ? 1 : -1);
        ++t;
      });
      std::sort(m[k].begin(), m[k].end());
    }
    ranks[c] = boundary_rank(m, rows.size(), rule);
  }
  out.reduced.assign(by_card.size(), 0);
  for (std::size_t c = 0; c < by_card.size(); ++c) {
    const std::size_t dim = by_card[c].size();
    out.reduced[c] = dim - ranks[c] - ranks[c + 1];
  }
  while (out.reduced.size() > 1 && out.reduced.back() == 0) out.reduced.pop_back();
  return out;
}

HomologyRanks reduced_homology(const SimplicialComplex& complex, PivotRule rule) {
  if (complex.n() > 16) throw Error("reduced homology limited to 16 vertices");
  std::vector<Mask> list;
  for (Face f : faces(complex)) list.push_back(f.bits);
  return reduced_homology(list, rule);
}

std::vector<std::uint64_t> GradedBettiTable::totals() const {
  std::vector<std::uint64_t> out;
  for (const auto& [key, value] : graded) {
    const auto i = static_cast<std::size_t>(key.first);
    if (out.size() <= i) out.resize(i + 1, 0);
    out[i] += value;
  }
  return out;
}

int GradedBettiTable::projdim() const {
  int p = 0;
  for (const auto& [key, value] : graded)
    if (value != 0) p = std::max(p, key.first);
  return p;
}

namespace {

// Faces of Δ inside w, read off the face bitmap. A vertex of w lying in
// every maximal face makes the induced complex a cone, which has no reduced
// homology. Returns false for cones.
bool induced_faces(const std::vector<char>& is_face, const std::vector<Mask>& generators, Mask w,
                   std::vector<Mask>& out) {
  // A vertex of w outside every generator inside w is an apex.
  Mask covered = 0;
  for (Mask g : generators)
    if (is_subset(g, w)) covered |= g;
  if (covered != w) return false;
  out.clear();
  Mask apex = w;
  for_each_submask(w, [&](Mask f) {
    if (!is_face[f]) return;
    out.push_back(f);
    if (apex == 0) return;
    bool maximal = true;
    for_each_bit(w & ~f, [&](int v) {
      if (maximal && is_face[f | bit(v)]) maximal = false;
    });
    if (maximal) apex &= f;
  });
  return apex == 0;
}

void accumulate(std::map<std::pair<int, int>, std::uint64_t>& table, Mask w, const HomologyRanks& h) {
  const int j = popcount(w);
  for (std::size_t idx = 0; idx < h.reduced.size(); ++idx) {
    const int k = static_cast<int>(idx) - 1;
    const int i = j - k - 2;
    if (i >= 0 && h.reduced[idx] != 0) table[{i, j}] += h.reduced[idx];
  }
}

}  // namespace

GradedBettiTable hochster_betti(const MonomialIdeal& ideal, Execution exec) {
  if (ideal.is_unit()) throw Error("Hochster formula needs a proper ideal");
  const int nv = ideal.universe().size();
  if (nv > kMaxExhaustive) throw Error("Hochster formula limited to " + std::to_string(kMaxExhaustive) + " variables");
  std::vector<char> is_face(std::size_t{1} << nv, 0);
  for (Face f : faces(stanley_reisner_complex(ideal))) is_face[f.bits] = 1;
  std::vector<Mask> generators;
  for (Monomial g : ideal.generators()) generators.push_back(g.support);

  GradedBettiTable table;
  const auto total = static_cast<std::int64_t>(std::int64_t{1} << nv);
  if (exec == Execution::parallel) {
#pragma omp parallel
    {
      std::map<std::pair<int, int>, std::uint64_t> local;
      std::vector<Mask> buffer;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::int64_t w = 0; w < total; ++w) {
        if (induced_faces(is_face, generators, static_cast<Mask>(w), buffer))
          accumulate(local, static_cast<Mask>(w), reduced_homology(buffer));
      }
#pragma omp critical
      for (const auto& [key, value] : local) table.graded[key] += value;
    }
  } else {
    std::vector<Mask> buffer;
    for (std::int64_t w = 0; w < total; ++w) {
      if (induced_faces(is_face, generators, static_cast<Mask>(w), buffer))
        accumulate(table.graded, static_cast<Mask>(w), reduced_homology(buffer));
    }
  }
  return table;
}

LinearResolutionResult linear_resolution_check(const MonomialIdeal& ideal, Execution exec) {
  const int q = ideal.generators().front().degree();
  for (Monomial g : ideal.generators())
    if (g.degree() != q) throw Error("linear resolution check needs equigenerated ideal");
  return linearity_of(hochster_betti(ideal, exec), q);
}

LinearResolutionResult linearity_of(const GradedBettiTable& table, int q) {
  for (const auto& [key, value] : table.graded) {
    if (value != 0 && key.second != q + key.first)
      return {false, LinearityWitness{key.first, key.second}};
  }
  return {true, std::nullopt};
}

}  // namespace faceideal
