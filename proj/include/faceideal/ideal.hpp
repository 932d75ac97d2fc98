#ifndef FACEIDEAL_IDEAL_HPP
#define FACEIDEAL_IDEAL_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "faceideal/bits.hpp"
#include "faceideal/complex.hpp"

namespace faceideal {

enum class VariableKind { x, y, whisker, named };

/// A polynomial-ring variable. Indices are 1-based as in the labels:
/// x3 is {x, 3, 0}; x2^(1) is {whisker, 2, 1}.
struct Variable {
  VariableKind kind = VariableKind::named;
  int index = 0;
  int slot = 0;
  std::string name;

  /// Parses "x3", "y2", "x1^(2)"; anything else is a named variable.
  static Variable parse(std::string_view label);
  friend bool operator==(const Variable& a, const Variable& b) { return a.name == b.name; }
};

class VariableUniverse {
 public:
  VariableUniverse() = default;
  explicit VariableUniverse(std::vector<Variable> variables);
  static VariableUniverse from_labels(const std::vector<std::string>& labels);

  /// x1..xn, y1..yn in that order: x_i is bit i-1, y_i is bit n+i-1.
  static VariableUniverse face_ring(int n);

  int size() const { return static_cast<int>(vars_.size()); }
  const Variable& var(int i) const { return vars_.at(static_cast<std::size_t>(i)); }
  const std::vector<Variable>& variables() const { return vars_; }
  std::vector<std::string> labels() const;
  VertexUniverse as_vertices() const { return VertexUniverse(labels()); }
  int index(std::string_view name) const;
  Mask all() const { return full_mask(size()); }

  friend bool operator==(const VariableUniverse& a, const VariableUniverse& b) {
    return a.vars_ == b.vars_;
  }

 private:
  std::vector<Variable> vars_;
};

/// Squarefree monomial, i.e. its support.
struct Monomial {
  Mask support = 0;

  int degree() const { return popcount(support); }
  bool is_one() const { return support == 0; }
  bool divides(Monomial other) const { return is_subset(support, other.support); }

  friend bool operator==(Monomial a, Monomial b) { return a.support == b.support; }
  friend bool operator<(Monomial a, Monomial b) { return canonical_less(a.support, b.support); }
};

/// Squarefree monomial ideal stored by its minimal generators in canonical
/// (degree, lex) order.
class MonomialIdeal {
 public:
  MonomialIdeal(VariableUniverse universe, std::vector<Monomial> generators);

  const VariableUniverse& universe() const { return universe_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  /// Index of a generator in storage order, if present.
  std::optional<std::size_t> position(Monomial m) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.universe_ == b.universe_ && a.gens_ == b.gens_;
  }

 private:
  friend MonomialIdeal minimize(const VariableUniverse&, std::span<const Monomial>);
  VariableUniverse universe_;
  std::vector<Monomial> gens_;
};

/// Minimal generating set of the ideal generated by `gens`.
/// Throws on an empty list, or when 1 appears together with other monomials.
MonomialIdeal minimize(const VariableUniverse& universe, std::span<const Monomial> gens);

/// u / gcd(u, v)
inline Monomial colon_monomial(Monomial u, Monomial v) { return Monomial{u.support & ~v.support}; }

/// A sequence of storage positions covering every generator exactly once.
struct GeneratorOrder {
  std::vector<std::size_t> positions;

  static GeneratorOrder storage(const MonomialIdeal& ideal);
  /// Throws unless `positions` is a permutation of 0..m-1.
  void validate(const MonomialIdeal& ideal) const;
};

/// (u_1, ..., u_{t-1}) : u_t for the 1-based position t >= 2 of `order`.
MonomialIdeal prefix_colon(const MonomialIdeal& ideal, const GeneratorOrder& order, std::size_t t);

struct QuotientStep {
  std::size_t t = 0;
  Mask variables = 0;  ///< the colon ideal is generated by these variables
};

struct QuotientViolation {
  std::size_t t = 0;
  Monomial generator;  ///< a minimal generator of the colon of degree > 1
};

struct QuotientCertificate {
  bool ok = true;
  std::vector<QuotientStep> steps;
  std::optional<QuotientViolation> violation;
};

QuotientCertificate check_linear_quotients(const MonomialIdeal& ideal, const GeneratorOrder& order);

/// Dual via minimal transversals of the generator supports. Throws on (1).
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

/// The complex on the variable universe with I = I_Δ. Throws on (1).
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

/// Ideal generated by the facets of a complex over the matching variables.
MonomialIdeal facet_ideal(const SimplicialComplex& complex);

std::string format_monomial(const VariableUniverse& universe, Monomial m);

}  // namespace faceideal

#endif  // FACEIDEAL_IDEAL_HPP
