#ifndef FACEIDEAL_BITS_HPP
#define FACEIDEAL_BITS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace faceideal {

/// Squarefree support over a universe of at most 64 positions.
using Mask = std::uint64_t;

/// Hard representational bound: supports must fit in one machine word.
inline constexpr int kMaxUniverse = 63;

/// Exhaustive subset scans are only attempted below this size.
inline constexpr int kMaxExhaustive = 20;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit(int i) { return Mask{1} << i; }

inline bool contains(Mask m, int i) { return (m >> i) & 1U; }

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Mask with the low `n` bits set.
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

/// Canonical order on supports: cardinality first, then lexicographic on
/// the sorted index lists ({0,1} < {0,2} < {1,2}).
inline bool canonical_less(Mask a, Mask b) {
  const int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // The smallest index where the sorted lists diverge is the lowest bit
  // of the symmetric difference; whoever owns it sorts first.
  return contains(a, lowest_bit(a ^ b));
}

struct CanonicalLess {
  bool operator()(Mask a, Mask b) const { return canonical_less(a, b); }
};

/// Calls f(i) for every set bit i in increasing order.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    const int i = lowest_bit(m);
    f(i);
    m &= m - 1;
  }
}

inline std::vector<int> bit_indices(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

/// Calls f(s) for every submask s of m, including 0 and m itself.
template <class F>
void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

/// Exact binomial coefficient for the small arguments used here.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace faceideal

#endif  // FACEIDEAL_BITS_HPP
