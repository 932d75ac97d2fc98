#ifndef FACEIDEAL_COMPLEX_HPP
#define FACEIDEAL_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "faceideal/bits.hpp"

namespace faceideal {

/// Ordered list of distinct vertex labels; index i is bit i of a Face.
class VertexUniverse {
 public:
  VertexUniverse() = default;
  explicit VertexUniverse(std::vector<std::string> labels);

  /// Labels prefix1..prefixN.
  static VertexUniverse numbered(int n, std::string_view prefix = "x");

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<int> find(std::string_view label) const;
  /// Throws Error naming the label when it is unknown.
  int index(std::string_view label) const;
  Mask all() const { return full_mask(size()); }

  friend bool operator==(const VertexUniverse& a, const VertexUniverse& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> lookup_;
};

struct Face {
  Mask bits = 0;

  int size() const { return popcount(bits); }
  bool empty() const { return bits == 0; }
  bool has(int i) const { return contains(bits, i); }

  friend bool operator==(Face a, Face b) { return a.bits == b.bits; }
  /// Canonical order: cardinality, then lexicographic by vertex index.
  friend bool operator<(Face a, Face b) { return canonical_less(a.bits, b.bits); }
};

/// Face from 1-based vertex numbers, so face_of({1, 3}) is {x1, x3}.
Face face_of(std::initializer_list<int> vertices);

/// Counts f_{-1}, f_0, ..., f_{d-1}; counts[i] is the number of faces of
/// cardinality i.
struct FVector {
  std::vector<std::uint64_t> counts;

  /// dim + 1
  int d() const { return static_cast<int>(counts.size()) - 1; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// A finite simplicial complex given by its facets over a declared universe.
/// Vertices of the universe need not be faces. The void complex is not
/// representable; the empty complex {∅} has the single facet ∅.
class SimplicialComplex {
 public:
  /// Duplicate and nested facets are dropped; each drop is recorded in
  /// notes(). Throws on an empty facet list or out-of-universe bits.
  SimplicialComplex(VertexUniverse universe, std::vector<Face> facets);

  static SimplicialComplex simplex(VertexUniverse universe);
  static SimplicialComplex empty_complex(VertexUniverse universe);

  const VertexUniverse& universe() const { return universe_; }
  int n() const { return universe_.size(); }
  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<std::string>& notes() const { return notes_; }

  int dimension() const;
  bool contains_face(Face f) const;
  bool is_full_simplex() const { return facets_.size() == 1 && facets_[0].bits == universe_.all(); }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.universe_ == b.universe_ && a.facets_ == b.facets_;
  }

 private:
  VertexUniverse universe_;
  std::vector<Face> facets_;
  std::vector<std::string> notes_;
};

/// All faces, canonical order; always contains ∅.
std::vector<Face> faces(const SimplicialComplex& complex);

FVector f_vector(const SimplicialComplex& complex);

/// { universe \ F : F a face }, canonical order.
std::vector<Face> complement_complex(const SimplicialComplex& complex);

/// Complex of all subsets of the universe containing no facet of
/// `facet_complex`. Throws if some facet is ∅.
SimplicialComplex independence_complex(const SimplicialComplex& facet_complex);

/// Same as above for an arbitrary clutter of forbidden sets.
SimplicialComplex independence_complex(const VertexUniverse& universe,
                                       const std::vector<Mask>& forbidden);

/// Inclusion-minimal subsets of the universe that are not faces.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex);

/// Outcome of a shelling check. `pair` is 1-based (i, j) with j < i.
struct ShellingResult {
  bool accepted = false;
  std::optional<std::pair<int, int>> pair;
};

// For each i > 1 and j < i there must be k < i with F_j∩F_i ⊆ F_k∩F_i and
// |F_k∩F_i| = |F_i| - 1. Throws if `order` is not a permutation of the facets.
ShellingResult verify_shelling(const SimplicialComplex& complex, const std::vector<Face>& order);

/// Faces of cardinality d+1 together with the facets of smaller size.
SimplicialComplex skeleton(const SimplicialComplex& complex, int d);

std::string format_face(const VertexUniverse& universe, Face f);

}  // namespace faceideal

#endif  // FACEIDEAL_COMPLEX_HPP
