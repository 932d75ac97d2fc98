#ifndef FACEIDEAL_TESTS_HELPERS_HPP
#define FACEIDEAL_TESTS_HELPERS_HPP

#include <sstream>
#include <string>
#include <vector>

#include "faceideal/ideal.hpp"

namespace faceideal::testing {

/// "x1*y2" over `u`; "1" is the unit monomial.
inline Monomial mono(const VariableUniverse& u, const std::string& text) {
  Monomial m;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '*'))
    if (part != "1") m.support |= bit(u.index(part));
  return m;
}

inline std::vector<Monomial> monos(const VariableUniverse& u, const std::vector<std::string>& texts) {
  std::vector<Monomial> out;
  for (const auto& t : texts) out.push_back(mono(u, t));
  return out;
}

inline std::vector<std::string> names(const VariableUniverse& u, const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (Monomial m : ms) out.push_back(format_monomial(u, m));
  return out;
}

inline MonomialIdeal ideal_of(const VariableUniverse& u, const std::vector<std::string>& texts) {
  return minimize(u, monos(u, texts));
}

/// Order listing the generators of `ideal` as given in `texts`.
inline GeneratorOrder order_of(const MonomialIdeal& ideal, const std::vector<std::string>& texts) {
  GeneratorOrder order;
  for (const auto& t : texts) order.positions.push_back(ideal.position(mono(ideal.universe(), t)).value());
  return order;
}

inline VariableUniverse plain_ring(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return VariableUniverse::from_labels(labels);
}

}  // namespace faceideal::testing

#endif  // FACEIDEAL_TESTS_HELPERS_HPP
