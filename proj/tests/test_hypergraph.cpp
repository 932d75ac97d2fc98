#include <doctest.h>

#include <random>

#include "enumerate.hpp"
#include "faceideal/hypergraph.hpp"

using namespace faceideal;

TEST_CASE("minimal_sets drops duplicates and supersets") {
  const std::vector<Mask> sets{0b011, 0b001, 0b011, 0b110};
  CHECK(minimal_sets(sets) == std::vector<Mask>{0b001, 0b110});
}

TEST_CASE("maximal_sets keeps the top layer") {
  const std::vector<Mask> sets{0b001, 0b011, 0b100, 0b011};
  CHECK(maximal_sets(sets) == std::vector<Mask>{0b100, 0b011});
}

TEST_CASE("transversal edge cases") {
  CHECK(minimal_transversals(std::vector<Mask>{}) == std::vector<Mask>{0});
  CHECK(minimal_transversals(std::vector<Mask>{0}).empty());
  CHECK(minimal_transversals(std::vector<Mask>{0b11}) == std::vector<Mask>{0b01, 0b10});
}

TEST_CASE("triangle edges") {
  const std::vector<Mask> edges{0b011, 0b101, 0b110};
  CHECK(minimal_transversals(edges) == std::vector<Mask>{0b011, 0b101, 0b110});
}

TEST_CASE("branch search agrees with subset-scan oracles") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<Mask> edges;
    const int m = static_cast<int>(rng() % 7);
    for (int i = 0; i < m; ++i) edges.push_back(1 + rng() % full_mask(n));
    const auto expected = testing::oracle::minimal_transversals(edges, n);
    CHECK(minimal_transversals(edges, Execution::serial) == expected);
    CHECK(minimal_transversals(edges, Execution::parallel) == expected);
    CHECK(minimal_transversals_bruteforce(edges, full_mask(n), Execution::serial) == expected);
    CHECK(minimal_transversals_bruteforce(edges, full_mask(n), Execution::parallel) == expected);
    for (Mask t : expected) CHECK(is_transversal(t, edges));
  }
}
