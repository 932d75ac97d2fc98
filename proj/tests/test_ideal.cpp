#include <doctest.h>

#include <random>

#include "enumerate.hpp"
#include "faceideal/hypergraph.hpp"
#include "faceideal/ideal.hpp"
#include "helpers.hpp"

using namespace faceideal;
using namespace faceideal::testing;

namespace {

const VariableUniverse R2 = VariableUniverse::face_ring(2);

std::vector<std::string> gens_of(const MonomialIdeal& i) { return names(i.universe(), i.generators()); }

}  // namespace

TEST_CASE("variable parsing") {
  const auto x3 = Variable::parse("x3");
  CHECK(x3.kind == VariableKind::x);
  CHECK(x3.index == 3);
  const auto y2 = Variable::parse("y2");
  CHECK(y2.kind == VariableKind::y);
  CHECK(y2.index == 2);
  const auto w = Variable::parse("x1^(2)");
  CHECK(w.kind == VariableKind::whisker);
  CHECK(w.index == 1);
  CHECK(w.slot == 2);
  CHECK(Variable::parse("a").kind == VariableKind::named);
  CHECK(Variable::parse("x").kind == VariableKind::named);
}

TEST_CASE("face ring layout") {
  const auto r = VariableUniverse::face_ring(3);
  CHECK(r.labels() == std::vector<std::string>{"x1", "x2", "x3", "y1", "y2", "y3"});
  CHECK(r.index("y1") == 3);
  CHECK_THROWS_AS(r.index("z9"), Error);
}

TEST_CASE("minimize") {
  CHECK(gens_of(ideal_of(R2, {"x1*y2", "x1"})) == std::vector<std::string>{"x1"});
  CHECK(gens_of(ideal_of(R2, {"y1*y2", "x1*y2", "x2*y1"})) ==
        std::vector<std::string>{"x1*y2", "x2*y1", "y1*y2"});
  CHECK(gens_of(ideal_of(R2, {"x1*x2", "x1*x2"})) == std::vector<std::string>{"x1*x2"});
  CHECK_THROWS_AS(ideal_of(R2, {}), Error);
  CHECK_THROWS_AS(ideal_of(R2, {"1", "x1"}), Error);
  CHECK(ideal_of(R2, {"1"}).is_unit());
}

TEST_CASE("minimize is idempotent and order independent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Monomial> gens;
    const int m = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < m; ++i) gens.push_back(Monomial{1 + rng() % 63});
    const auto once = minimize(plain_ring(6), gens);
    CHECK(minimize(plain_ring(6), once.generators()) == once);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(minimize(plain_ring(6), gens) == once);
    std::vector<Mask> raw;
    for (Monomial g : gens) raw.push_back(g.support);
    std::vector<Mask> got;
    for (Monomial g : once.generators()) got.push_back(g.support);
    CHECK(got == oracle::minimal_generators(raw));
  }
}

TEST_CASE("constructor rejects non-minimal systems") {
  CHECK_THROWS_AS(MonomialIdeal(R2, monos(R2, {"x1", "x1*y2"})), Error);
  CHECK_THROWS_AS(MonomialIdeal(R2, {}), Error);
}

TEST_CASE("colon_monomial") {
  CHECK(colon_monomial(mono(R2, "y1*y2"), mono(R2, "x1*y2")) == mono(R2, "y1"));
  CHECK(colon_monomial(mono(R2, "x1*y2"), mono(R2, "x1*y2")).is_one());
  CHECK(colon_monomial(mono(R2, "x1*y2"), mono(R2, "x2*y1")) == mono(R2, "x1*y2"));
}

TEST_CASE("prefix_colon") {
  const auto i = ideal_of(R2, {"y1*y2", "x1*y2", "x2*y1"});
  const auto order = order_of(i, {"y1*y2", "x1*y2", "x2*y1"});
  CHECK(gens_of(prefix_colon(i, order, 2)) == std::vector<std::string>{"y1"});

  const auto i4 = ideal_of(R2, {"y1*y2", "x1*y2", "x2*y1", "x1*x2"});
  const auto order4 = order_of(i4, {"y1*y2", "x1*y2", "x2*y1", "x1*x2"});
  CHECK(gens_of(prefix_colon(i4, order4, 4)) == std::vector<std::string>{"y1", "y2"});
  CHECK_THROWS_AS(prefix_colon(i4, order4, 1), Error);
  CHECK_THROWS_AS(prefix_colon(i4, order4, 5), Error);
}

TEST_CASE("check_linear_quotients") {
  const auto i = ideal_of(R2, {"y1*y2", "x1*y2", "x2*y1"});
  const auto cert = check_linear_quotients(i, order_of(i, {"y1*y2", "x1*y2", "x2*y1"}));
  CHECK(cert.ok);
  REQUIRE(cert.steps.size() == 2);
  CHECK(cert.steps[0].t == 2);
  CHECK(cert.steps[0].variables == mono(R2, "y1").support);
  CHECK(cert.steps[1].t == 3);
  CHECK(cert.steps[1].variables == mono(R2, "y2").support);

  const auto r4 = plain_ring(4);
  const auto disjoint = ideal_of(r4, {"x1*x2", "x3*x4"});
  for (const auto& listed : {std::vector<std::string>{"x1*x2", "x3*x4"}, std::vector<std::string>{"x3*x4", "x1*x2"}}) {
    const auto bad = check_linear_quotients(disjoint, order_of(disjoint, listed));
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.violation);
    CHECK(bad.violation->t == 2);
    CHECK(bad.violation->generator == mono(r4, listed[0]));
  }

  const auto single = ideal_of(r4, {"x1"});
  const auto vacuous = check_linear_quotients(single, GeneratorOrder::storage(single));
  CHECK(vacuous.ok);
  CHECK(vacuous.steps.empty());

  CHECK_THROWS_AS(check_linear_quotients(i, GeneratorOrder{{0, 1}}), Error);
  CHECK_THROWS_AS(check_linear_quotients(i, GeneratorOrder{{0, 1, 1}}), Error);
}

TEST_CASE("accepted certificates agree with brute-force colon generators") {
  std::mt19937_64 rng(5);
  int accepted = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto ideal = random_squarefree_ideal(5, rng);
    GeneratorOrder order = GeneratorOrder::storage(ideal);
    std::shuffle(order.positions.begin(), order.positions.end(), rng);
    const auto cert = check_linear_quotients(ideal, order);
    const auto& g = ideal.generators();
    bool all_linear = true;
    for (std::size_t t = 2; t <= g.size(); ++t) {
      std::vector<Mask> colons;
      for (std::size_t s = 0; s + 1 < t; ++s)
        colons.push_back(g[order.positions[s]].support & ~g[order.positions[t - 1]].support);
      const auto minimal = oracle::minimal_generators(colons);
      Mask vars = 0;
      bool linear = true;
      for (Mask c : minimal) {
        if (popcount(c) != 1) linear = false;
        vars |= c;
      }
      if (cert.ok) CHECK(cert.steps[t - 2].variables == vars);
      if (!linear) {
        all_linear = false;
        if (!cert.ok && cert.violation->t == t) {
          CHECK(std::find(minimal.begin(), minimal.end(), cert.violation->generator.support) != minimal.end());
        }
        break;
      }
    }
    CHECK(cert.ok == all_linear);
    accepted += cert.ok;
  }
  CHECK(accepted > 0);
}

TEST_CASE("alexander_dual") {
  CHECK(gens_of(alexander_dual(ideal_of(R2, {"y1*y2", "x1*y2", "x2*y1"}))) ==
        std::vector<std::string>{"x1*y1", "x2*y2", "y1*y2"});
  const auto r2 = plain_ring(2);
  CHECK(gens_of(alexander_dual(ideal_of(r2, {"x1"}))) == std::vector<std::string>{"x1"});
  CHECK(gens_of(alexander_dual(ideal_of(r2, {"x1*x2"}))) == std::vector<std::string>{"x1", "x2"});
  CHECK_THROWS_AS(alexander_dual(ideal_of(r2, {"1"})), Error);
}

TEST_CASE("dual generators are minimal transversals by subset scan") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ideal = random_squarefree_ideal(8, rng);
    std::vector<Mask> edges;
    for (Monomial g : ideal.generators()) edges.push_back(g.support);
    std::vector<Mask> got;
    const auto dual = alexander_dual(ideal);
    for (Monomial g : dual.generators()) got.push_back(g.support);
    CHECK(got == oracle::minimal_transversals(edges, 8));
  }
}

TEST_CASE("stanley_reisner_complex") {
  const auto r2 = plain_ring(2);
  CHECK(stanley_reisner_complex(ideal_of(r2, {"x1*x2"})).facets() == std::vector<Face>{face_of({1}), face_of({2})});
  const auto r3 = plain_ring(3);
  CHECK(stanley_reisner_complex(ideal_of(r3, {"x1*x2", "x2*x3"})).facets() ==
        std::vector<Face>{face_of({2}), face_of({1, 3})});
  CHECK(stanley_reisner_complex(ideal_of(r3, {"x1*x2*x3"})).facets() ==
        std::vector<Face>{face_of({1, 2}), face_of({1, 3}), face_of({2, 3})});
}

TEST_CASE("format_monomial") {
  CHECK(format_monomial(R2, mono(R2, "y2*x1")) == "x1*y2");
  CHECK(format_monomial(R2, Monomial{}) == "1");
}

TEST_CASE("facet_ideal") {
  const SimplicialComplex c(VertexUniverse::numbered(3), {face_of({1, 2}), face_of({3})});
  CHECK(gens_of(facet_ideal(c)) == std::vector<std::string>{"x3", "x1*x2"});
}
