#include <doctest.h>

#include <random>

#include "enumerate.hpp"
#include "faceideal/face_ideal.hpp"
#include "faceideal/hypergraph.hpp"
#include "faceideal/whisker_hd.hpp"
#include "helpers.hpp"

using namespace faceideal;
using namespace faceideal::testing;

namespace {

SimplicialComplex make(int n, std::vector<Face> facets) {
  return SimplicialComplex(VertexUniverse::numbered(n), std::move(facets));
}

std::vector<std::string> facet_labels(const SimplicialComplex& c) {
  std::vector<std::string> out;
  for (Face f : c.facets()) out.push_back(format_face(c.universe(), f));
  return out;
}

const SimplicialComplex kEdge = make(2, {face_of({1, 2})});

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW((WhiskerSpec{{2, 1}, {1, 1}}.validate()));
  CHECK_THROWS_AS((WhiskerSpec{{2, 1}, {3, 1}}.validate()), Error);
  CHECK_THROWS_AS((WhiskerSpec{{0}, {0}}.validate()), Error);
  CHECK_THROWS_AS((WhiskerSpec{{1, 1}, {1}}.validate()), Error);
  CHECK_THROWS_AS((WhiskerSpec{{40, 40}, {1, 1}}.validate()), Error);
  CHECK_THROWS_AS(build_hd_whisker(kEdge, WhiskerSpec::ordinary(3)), Error);
  CHECK((WhiskerSpec{{2, 1}, {1, 1}}.cover_size() == 3));
}

TEST_CASE("build_hd_whisker examples") {
  auto w = build_hd_whisker(kEdge, WhiskerSpec::ordinary(2));
  CHECK(facet_labels(w.complex) == std::vector<std::string>{"{x1,x1^(1)}", "{x1,x2}", "{x2,x2^(1)}"});

  w = build_hd_whisker(kEdge, {{2, 1}, {1, 1}});
  CHECK(facet_labels(w.complex) == std::vector<std::string>{"{x1,x1^(1)}", "{x1,x1^(2)}", "{x1,x2}",
                                                           "{x1^(1),x1^(2)}", "{x2,x2^(1)}"});

  const auto triangle = SimplicialComplex::simplex(VertexUniverse::numbered(3));
  w = build_hd_whisker(triangle, {{2, 2, 2}, {2, 2, 2}});
  CHECK(facet_labels(w.complex) ==
        std::vector<std::string>{"{x1,x1^(1),x1^(2)}", "{x1,x2,x3}", "{x2,x2^(1),x2^(2)}", "{x3,x3^(1),x3^(2)}"});
}

TEST_CASE("ordinary whiskers coincide with the whisker complex") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& c : complexes_up_to_iso(n)) {
      const auto w = build_hd_whisker(c, WhiskerSpec::ordinary(n));
      // x_i -> 2(i-1), y_i -> 2(i-1)+1
      std::vector<Face> mapped;
      const auto plain = whisker_complex(c);
      for (Face f : plain.facets()) {
        Mask m = 0;
        for_each_bit(f.bits, [&](int v) { m |= bit(v < n ? 2 * v : 2 * (v - n) + 1); });
        mapped.push_back(Face{m});
      }
      std::sort(mapped.begin(), mapped.end());
      CHECK(w.complex.facets() == mapped);
    }
  }
}

TEST_CASE("minimal covers of the edge with a doubled whisker") {
  const auto w = build_hd_whisker(kEdge, {{2, 1}, {1, 1}});
  const auto covers = minimal_covers(w);
  CHECK(covers.size() == 5);
  for (Mask c : covers) CHECK(popcount(c) == 3);

  const auto ordered = cover_ideal_order(w, covers);
  std::vector<std::string> listed;
  for (std::size_t p : ordered.order.positions)
    listed.push_back(format_monomial(w.universe, ordered.ideal.generators()[p]));
  CHECK(listed == std::vector<std::string>{"x1*x1^(1)*x2", "x1*x1^(2)*x2", "x1*x1^(1)*x2^(1)",
                                           "x1*x1^(2)*x2^(1)", "x1^(1)*x1^(2)*x2"});

  const auto report = verify_generalized_theorem(w);
  CHECK(report.ok());
  CHECK(report.shelling_order.size() == 5);
}

TEST_CASE("ordinary covers are the minimal covers of the whisker graph") {
  const auto w = build_hd_whisker(kEdge, WhiskerSpec::ordinary(2));
  const auto covers = minimal_covers(w);
  const auto expected = alexander_dual(face_ideal(make(2, {face_of({1}), face_of({2})})).ideal);
  CHECK(covers.size() == expected.size());
  CHECK(verify_generalized_theorem(w).ok());
}

TEST_CASE("cover comparator") {
  const auto w = build_hd_whisker(kEdge, {{2, 1}, {1, 1}});
  const Mask x1 = bit(0), a = bit(1), b = bit(2), x2 = bit(3), c = bit(4);
  CHECK(cover_greater(w, x1 | x2 | a, x1 | a | c));
  CHECK(cover_greater(w, x1 | a | c, x2 | a | b));
  CHECK(cover_greater(w, x1 | a | c, x1 | b | c));
  CHECK_FALSE(cover_greater(w, x1 | b | c, x1 | a | c));
  CHECK_FALSE(cover_greater(w, x1 | a | c, x1 | a | c));
}

TEST_CASE("empty base complex") {
  const auto w = build_hd_whisker(make(2, {Face{0}}), {{2, 1}, {1, 1}});
  const auto report = verify_generalized_theorem(w);
  CHECK(report.ok());
}

TEST_CASE("random specs on four vertices") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const auto base = random_complex(4, rng);
    WhiskerSpec spec;
    for (int i = 0; i < 4; ++i) {
      spec.k.push_back(1 + static_cast<int>(rng() % 3));
      spec.d.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(spec.k.back())));
    }
    const auto w = build_hd_whisker(base, spec);
    const auto report = verify_generalized_theorem(w);
    CHECK(report.ok());
    const auto edges = w.cover_edges();
    CHECK(report.covers == minimal_transversals(edges, Execution::serial));
  }
}
