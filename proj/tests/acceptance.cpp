// Acceptance suite: one PASS/FAIL line per criterion. Exhaustive families
// come from tests/support; each line reports instance counts and wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "enumerate.hpp"
#include "faceideal/face_ideal.hpp"
#include "faceideal/homology.hpp"
#include "faceideal/hypergraph.hpp"
#include "faceideal/poset.hpp"
#include "faceideal/resolution.hpp"
#include "faceideal/whisker_hd.hpp"

using namespace faceideal;
using namespace faceideal::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t instances = 0;
  std::string detail;  // first failure

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string describe(const SimplicialComplex& c) {
  std::string s = "n=" + std::to_string(c.n()) + " facets";
  for (Face f : c.facets()) s += " " + format_face(c.universe(), f);
  return s;
}

std::vector<SimplicialComplex> reps_up_to(int n_max) {
  std::vector<SimplicialComplex> out;
  for (int n = 1; n <= n_max; ++n) {
    auto part = complexes_up_to_iso(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Outcome duality() {
  Outcome o;
  for (const auto& c : reps_up_to(5)) {
    ++o.instances;
    if (!verify_duality_theorem(c).equal) o.fail(describe(c));
  }
  std::mt19937_64 rng(20240501);
  for (int t = 0; t < 500; ++t) {
    const auto c = random_complex(1 + static_cast<int>(rng() % 8), rng);
    ++o.instances;
    if (!verify_duality_theorem(c).equal) o.fail(describe(c));
  }
  return o;
}

Outcome betti() {
  Outcome o;
  for (const auto& c : reps_up_to(5)) {
    ++o.instances;
    const auto formula = betti_formula(c);
    const auto oracle = hochster_betti(face_ideal(c).ideal);
    if (oracle.totals() != formula.total) o.fail("totals differ: " + describe(c));
    if (oracle.projdim() != c.dimension() + 1 || formula.projdim != c.dimension() + 1)
      o.fail("projdim != dim + 1: " + describe(c));
    for (const auto& [key, value] : oracle.graded)
      if (key.second != c.n() + key.first) o.fail("nonlinear entry: " + describe(c));
  }
  return o;
}

Outcome resolution() {
  Outcome o;
  for (const auto& c : reps_up_to(6)) {
    ++o.instances;
    const auto r = build_resolution(c);
    for (const auto& rep : {check_complex(r), check_ranks_and_degrees(r, c), check_augmentation(r, c)})
      if (!rep.ok) o.fail(rep.message + ": " + describe(c));
  }
  const auto r = build_resolution(SimplicialComplex::simplex(VertexUniverse::numbered(2)));
  for (std::size_t j = 2; j < r.differentials.size(); ++j) {
    for (std::size_t e = 0; e < r.differentials[j].size(); ++e) {
      auto bad = r;
      bad.differentials[j][e].sign *= -1;
      ++o.instances;
      if (check_complex(bad).ok) o.fail("sign flip in d" + std::to_string(j) + " entry " + std::to_string(e) + " undetected");
    }
  }
  return o;
}

Outcome linear_quotients() {
  Outcome o;
  for (const auto& c : reps_up_to(6)) {
    ++o.instances;
    const auto j = face_ideal(c);
    const auto order = face_order(j);
    const auto cert = check_linear_quotients(j.ideal, order);
    if (!cert.ok || cert.steps.size() + 1 != j.ideal.size()) {
      o.fail("no full certificate: " + describe(c));
      continue;
    }
    for (const auto& step : cert.steps) {
      const Face f = j.face_of[order.positions[step.t - 1]];
      Mask expected = 0;
      for_each_bit(f.bits, [&](int i) {
        if (c.contains_face(Face{f.bits & ~bit(i)})) expected |= bit(c.n() + i);
      });
      if (step.variables != expected) o.fail("colon mismatch at t=" + std::to_string(step.t) + ": " + describe(c));
    }
  }
  return o;
}

Outcome general_collections() {
  Outcome o;
  auto run = [&](int n, const std::vector<Face>& members, const std::string& what) {
    ++o.instances;
    const auto res = collection_order(n, members);
    if (!res.ok()) {
      o.fail(what + " violates condition " + std::to_string(res.violation->condition));
      return;
    }
    if (!check_linear_quotients(res.ideal->ideal, *res.order).ok) o.fail(what + " lacks linear quotients");
  };
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : naturally_labelled_posets(n)) {
      run(n, chains(p).members, "chains");
      run(n, antichains(p).members, "antichains");
      run(n, poset_ideals(p).members, "poset ideals");
    }
  }
  for (const auto& c : reps_up_to(6)) run(c.n(), faces(c), "faces of " + describe(c));
  return o;
}

Outcome poset_theorems() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : naturally_labelled_posets(n)) {
      ++o.instances;
      std::ostringstream name;
      name << "poset n=" << n << " relations";
      for (auto [a, b] : p.relations()) name << " " << a + 1 << "<" << b + 1;
      if (!verify_chain_theorem(p).ok()) o.fail("chain theorem: " + name.str());
      const auto pd = verify_projdim_corollary(p);
      if (!pd.ok()) o.fail("projdim corollary: " + name.str());
      // Oracles independent of the library's poset invariants.
      if (pd.dilworth != oracle::min_chain_partition(p)) o.fail("dilworth vs chain partition: " + name.str());
    }
  }
  return o;
}

bool check_hd(const SimplicialComplex& base, const WhiskerSpec& spec, Outcome& o) {
  ++o.instances;
  const auto w = build_hd_whisker(base, spec);
  const auto covers = covers_by_characterization(w);
  const auto brute = minimal_transversals_bruteforce(w.cover_edges(), w.universe.all(), Execution::parallel);
  std::ostringstream name;
  name << describe(base) << " k=";
  for (int k : spec.k) name << k;
  name << " d=";
  for (int d : spec.d) name << d;
  if (covers != brute) {
    o.fail("covers differ from brute force: " + name.str());
    return false;
  }
  const auto rep = verify_generalized_theorem(w);
  if (!rep.ok()) o.fail("generalized theorem: " + name.str());
  return rep.ok();
}

Outcome higher_whiskers() {
  Outcome o;
  // (k, d) choices per vertex with d <= k <= 3
  std::vector<std::pair<int, int>> choices;
  for (int k = 1; k <= 3; ++k)
    for (int d = 1; d <= k; ++d) choices.emplace_back(k, d);
  for (int n = 1; n <= 3; ++n) {
    const auto complexes = all_complexes(n);
    std::size_t combos = 1;
    for (int i = 0; i < n; ++i) combos *= choices.size();
    for (const auto& base : complexes) {
      for (std::size_t code = 0; code < combos; ++code) {
        WhiskerSpec spec;
        std::size_t rest = code;
        for (int i = 0; i < n; ++i) {
          spec.k.push_back(choices[rest % choices.size()].first);
          spec.d.push_back(choices[rest % choices.size()].second);
          rest /= choices.size();
        }
        check_hd(base, spec, o);
      }
    }
  }
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    const auto base = random_complex(4, rng);
    WhiskerSpec spec;
    for (int i = 0; i < 4; ++i) {
      const auto& c = choices[rng() % choices.size()];
      spec.k.push_back(c.first);
      spec.d.push_back(c.second);
    }
    check_hd(base, spec, o);
  }
  return o;
}

Outcome involution_and_pivots() {
  Outcome o;
  std::mt19937_64 rng(99);
  for (int t = 0; t < 1000; ++t) {
    const auto ideal = random_squarefree_ideal(1 + static_cast<int>(rng() % 10), rng);
    ++o.instances;
    if (!(alexander_dual(alexander_dual(ideal)) == ideal)) o.fail("(I^v)^v != I on trial " + std::to_string(t));
    const auto delta = stanley_reisner_complex(ideal);
    if (reduced_homology(delta, PivotRule::first_nonzero) != reduced_homology(delta, PivotRule::smallest_abs))
      o.fail("pivot rules disagree on trial " + std::to_string(t));
  }
  for (const auto& c : reps_up_to(6)) {
    ++o.instances;
    if (reduced_homology(c, PivotRule::first_nonzero) != reduced_homology(c, PivotRule::smallest_abs))
      o.fail("pivot rules disagree: " + describe(c));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"duality: dual of J_Delta equals I(W(Gamma))", duality},
      {"betti formula matches Hochster, projdim = dim + 1, linear", betti},
      {"explicit resolution checks and sign mutation", resolution},
      {"linear quotients with colon y_j iff F - x_j in Delta", linear_quotients},
      {"collections of chains, antichains, faces, poset ideals", general_collections},
      {"chain theorem and projdim corollary", poset_theorems},
      {"higher whiskers: covers, degrees, quotients, shelling", higher_whiskers},
      {"dual involution and pivot-rule agreement", involution_and_pivots},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%d] %s (%zu instances, %.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.instances,
                secs, o.pass ? "" : " first failure: ", o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
