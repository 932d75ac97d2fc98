#include "faceideal/ideal.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "faceideal/hypergraph.hpp"

namespace faceideal {

namespace {

std::optional<int> parse_positive(std::string_view s) {
  if (s.empty() || s.front() == '0') return std::nullopt;
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v <= 0) return std::nullopt;
  return v;
}

}  // namespace

Variable Variable::parse(std::string_view label) {
  Variable v;
  v.name = std::string(label);
  if (label.size() < 2 || (label[0] != 'x' && label[0] != 'y')) return v;
  const std::string_view rest = label.substr(1);
  if (auto i = parse_positive(rest)) {
    v.kind = label[0] == 'x' ? VariableKind::x : VariableKind::y;
    v.index = *i;
    return v;
  }
  // x{i}^({j})
  const auto caret = rest.find("^(");
  if (label[0] == 'x' && caret != std::string_view::npos && rest.back() == ')') {
    auto i = parse_positive(rest.substr(0, caret));
    auto j = parse_positive(rest.substr(caret + 2, rest.size() - caret - 3));
    if (i && j) {
      v.kind = VariableKind::whisker;
      v.index = *i;
      v.slot = *j;
    }
  }
  return v;
}

VariableUniverse::VariableUniverse(std::vector<Variable> variables) : vars_(std::move(variables)) {
  if (size() > kMaxUniverse)
    throw Error("variable universe exceeds " + std::to_string(kMaxUniverse) + " variables");
  std::vector<std::string> names = labels();
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw Error("duplicate variable name in universe");
}

VariableUniverse VariableUniverse::from_labels(const std::vector<std::string>& labels) {
  std::vector<Variable> vars;
  for (const auto& l : labels) vars.push_back(Variable::parse(l));
  return VariableUniverse(std::move(vars));
}

VariableUniverse VariableUniverse::face_ring(int n) {
  if (2 * n > kMaxUniverse) throw Error("face ring needs 2n <= 63 variables");
  std::vector<Variable> vars;
  for (int i = 1; i <= n; ++i) vars.push_back({VariableKind::x, i, 0, "x" + std::to_string(i)});
  for (int i = 1; i <= n; ++i) vars.push_back({VariableKind::y, i, 0, "y" + std::to_string(i)});
  return VariableUniverse(std::move(vars));
}

std::vector<std::string> VariableUniverse::labels() const {
  std::vector<std::string> out;
  out.reserve(vars_.size());
  for (const auto& v : vars_) out.push_back(v.name);
  return out;
}

int VariableUniverse::index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  throw Error("unknown variable '" + std::string(name) + "'");
}

MonomialIdeal::MonomialIdeal(VariableUniverse universe, std::vector<Monomial> generators)
    : universe_(std::move(universe)), gens_(std::move(generators)) {
  if (gens_.empty()) throw Error("the zero ideal is not supported");
  for (Monomial g : gens_)
    if (!is_subset(g.support, universe_.all()))
      throw Error("generator uses a variable outside the universe");
  std::sort(gens_.begin(), gens_.end());
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gens_[j].divides(gens_[i]))
        throw Error("generators are not a minimal system: " + format_monomial(universe_, gens_[j]) +
                    " divides " + format_monomial(universe_, gens_[i]));
}

std::optional<std::size_t> MonomialIdeal::position(Monomial m) const {
  auto it = std::lower_bound(gens_.begin(), gens_.end(), m);
  if (it == gens_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - gens_.begin());
}

MonomialIdeal minimize(const VariableUniverse& universe, std::span<const Monomial> gens) {
  if (gens.empty()) throw Error("cannot minimize an empty generator list");
  const bool has_one = std::any_of(gens.begin(), gens.end(), [](Monomial m) { return m.is_one(); });
  const bool has_other = std::any_of(gens.begin(), gens.end(), [](Monomial m) { return !m.is_one(); });
  if (has_one && has_other) throw Error("constant monomial 1 listed together with other generators");
  std::vector<Mask> supports;
  supports.reserve(gens.size());
  for (Monomial m : gens) supports.push_back(m.support);
  std::vector<Monomial> kept;
  for (Mask m : minimal_sets(supports)) kept.push_back(Monomial{m});
  return MonomialIdeal(universe, std::move(kept));
}

GeneratorOrder GeneratorOrder::storage(const MonomialIdeal& ideal) {
  GeneratorOrder o;
  o.positions.resize(ideal.size());
  std::iota(o.positions.begin(), o.positions.end(), std::size_t{0});
  return o;
}

void GeneratorOrder::validate(const MonomialIdeal& ideal) const {
  std::vector<std::size_t> sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted.size() == ideal.size();
  for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == i;
  if (!ok) throw Error("generator order is not a permutation of the generators");
}

namespace {

std::vector<Monomial> prefix_colons(const MonomialIdeal& ideal, const GeneratorOrder& order,
                                    std::size_t t) {
  const auto& gens = ideal.generators();
  const Monomial last = gens[order.positions[t - 1]];
  std::vector<Monomial> colons;
  colons.reserve(t - 1);
  for (std::size_t s = 0; s + 1 < t; ++s) {
    const Monomial c = colon_monomial(gens[order.positions[s]], last);
    if (c.is_one())
      throw Error("prefix generator divides generator at position " + std::to_string(t) +
                  "; not a minimal system");
    colons.push_back(c);
  }
  return colons;
}

}  // namespace

MonomialIdeal prefix_colon(const MonomialIdeal& ideal, const GeneratorOrder& order, std::size_t t) {
  order.validate(ideal);
  if (t < 2 || t > ideal.size())
    throw Error("prefix colon position " + std::to_string(t) + " outside [2, " +
                std::to_string(ideal.size()) + "]");
  const auto colons = prefix_colons(ideal, order, t);
  return minimize(ideal.universe(), colons);
}

QuotientCertificate check_linear_quotients(const MonomialIdeal& ideal, const GeneratorOrder& order) {
  order.validate(ideal);
  QuotientCertificate cert;
  for (std::size_t t = 2; t <= ideal.size(); ++t) {
    const auto colons = prefix_colons(ideal, order, t);
    // A minimal generator of degree > 1 exists iff some colon monomial
    // avoids every variable that occurs as a colon on its own.
    Mask linear = 0;
    for (Monomial c : colons)
      if (c.degree() == 1) linear |= c.support;
    std::optional<Monomial> offender;
    for (Monomial c : colons) {
      if ((c.support & linear) == 0 && (!offender || c < *offender)) offender = c;
    }
    if (offender) {
      // Report a genuine minimal generator: the smallest undominated colon.
      cert.ok = false;
      cert.violation = QuotientViolation{t, *offender};
      return cert;
    }
    cert.steps.push_back({t, linear});
  }
  return cert;
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw Error("Alexander dual of the unit ideal (1) is undefined");
  std::vector<Mask> edges;
  for (Monomial g : ideal.generators()) edges.push_back(g.support);
  std::vector<Monomial> gens;
  for (Mask t : minimal_transversals(edges)) gens.push_back(Monomial{t});
  return MonomialIdeal(ideal.universe(), std::move(gens));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw Error("Stanley-Reisner complex of (1) would be void");
  std::vector<Mask> forbidden;
  for (Monomial g : ideal.generators()) forbidden.push_back(g.support);
  return independence_complex(ideal.universe().as_vertices(), forbidden);
}

MonomialIdeal facet_ideal(const SimplicialComplex& complex) {
  std::vector<Monomial> gens;
  for (Face f : complex.facets()) gens.push_back(Monomial{f.bits});
  return minimize(VariableUniverse::from_labels(complex.universe().labels()), gens);
}

std::string format_monomial(const VariableUniverse& universe, Monomial m) {
  if (m.is_one()) return "1";
  std::string s;
  for_each_bit(m.support, [&](int i) {
    if (!s.empty()) s += "*";
    s += universe.var(i).name;
  });
  return s;
}

}  // namespace faceideal
