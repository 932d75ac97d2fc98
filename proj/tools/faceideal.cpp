// Command line front end. Every command prints one JSON report on stdout:
// {command, inputs, outputs, checks, timing}. Exit status is 0 when all
// checks pass, 1 when a check fails and 2 on bad input.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "faceideal/face_ideal.hpp"
#include "faceideal/homology.hpp"
#include "faceideal/json_io.hpp"
#include "faceideal/poset.hpp"
#include "faceideal/resolution.hpp"
#include "faceideal/whisker_hd.hpp"

using namespace faceideal;
using faceideal::io::json;

namespace {

struct Options {
  bool pretty = false;
  bool oracle = false;
  bool matrices = false;
  std::string input;
  std::string order_file;
  std::string spec_file;
  std::vector<int> k;
  std::vector<int> d;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

  json inputs = json::object();
  json outputs = json::object();

  void check(const std::string& name, bool pass, json witness = nullptr) {
    json c = {{"name", name}, {"pass", pass}};
    if (!pass) c["witness"] = witness.is_null() ? json::object() : std::move(witness);
    checks_.push_back(std::move(c));
    all_pass_ = all_pass_ && pass;
  }

  int emit() const {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const json out = {{"command", command_}, {"inputs", inputs}, {"outputs", outputs},
                      {"checks", checks_},   {"timing", {{"seconds", secs}}}};
    std::cout << out.dump(2) << "\n";
    return all_pass_ ? 0 : 1;
  }

 private:
  std::string command_;
  std::chrono::steady_clock::time_point start_;
  json checks_ = json::array();
  bool all_pass_ = true;
};

// Desk-scale limits; FACEIDEAL_MAX_N replaces every one of them.
int limit(int fallback) {
  if (const char* env = std::getenv("FACEIDEAL_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(std::string("FACEIDEAL_MAX_N is not an integer: ") + env);
    }
  }
  return fallback;
}

void require_at_most(const std::string& what, int value, int fallback) {
  const int cap = limit(fallback);
  if (value > cap)
    throw Error(what + " is " + std::to_string(value) + " but the limit is " + std::to_string(cap) +
                " (set FACEIDEAL_MAX_N to override)");
}

constexpr int kResolutionVertices = 10;
constexpr int kOracleVariables = 12;
constexpr int kChainTheoremElements = 10;
constexpr int kProjdimElements = 5;
constexpr int kPosetFamilyElements = 20;

SimplicialComplex load_complex(const std::string& path) { return io::complex_from_json(io::load_file(path)); }

json faces_json(const SimplicialComplex& c, const std::vector<Face>& fs) {
  return io::faces_to_json(c.universe(), fs);
}

void echo_complex(Report& r, const Options& o, const SimplicialComplex& c) {
  r.inputs["file"] = o.input;
  r.inputs["complex"] = io::complex_to_json(c);
  if (!c.notes().empty()) r.inputs["notes"] = c.notes();
}

WhiskerSpec resolve_spec(const Options& o, int n) {
  if (!o.spec_file.empty()) return io::spec_from_json(io::load_file(o.spec_file));
  if (!o.k.empty() || !o.d.empty()) {
    WhiskerSpec s{o.k, o.d};
    s.validate();
    return s;
  }
  return WhiskerSpec::ordinary(n);
}

int cmd_face_ideal(const Options& o) {
  Report r("face-ideal");
  const auto c = load_complex(o.input);
  echo_complex(r, o, c);
  const auto j = face_ideal(c);
  r.outputs["ideal"] = io::ideal_to_json(j.ideal, o.pretty);
  r.outputs["face_of"] = faces_json(c, j.face_of);
  return r.emit();
}

int cmd_dual(const Options& o) {
  Report r("dual");
  const auto ideal = io::ideal_from_json(io::load_file(o.input));
  r.inputs["file"] = o.input;
  r.inputs["ideal"] = io::ideal_to_json(ideal, o.pretty);
  r.outputs["ideal"] = io::ideal_to_json(alexander_dual(ideal), o.pretty);
  return r.emit();
}

int cmd_whisker(const Options& o) {
  Report r("whisker");
  const auto c = load_complex(o.input);
  echo_complex(r, o, c);
  if (o.spec_file.empty() && o.k.empty() && o.d.empty()) {
    r.outputs["complex"] = io::complex_to_json(whisker_complex(c));
  } else {
    const auto spec = resolve_spec(o, c.n());
    r.inputs["spec"] = io::spec_to_json(spec);
    r.outputs["complex"] = io::complex_to_json(build_hd_whisker(c, spec).complex);
  }
  return r.emit();
}

int cmd_verify_duality(const Options& o) {
  Report r("verify duality");
  const auto c = load_complex(o.input);
  echo_complex(r, o, c);
  const auto rep = verify_duality_theorem(c);
  const auto ring = VariableUniverse::face_ring(c.n());
  const json dual = io::monomials_to_json(ring, rep.dual_generators, o.pretty);
  const json whisker = io::monomials_to_json(ring, rep.whisker_generators, o.pretty);
  r.outputs["dual"] = dual;
  r.outputs["whisker_ideal"] = whisker;
  r.outputs["degenerate"] = rep.degenerate;
  r.check("dual equals I(W(Gamma))", rep.equal, {{"dual", dual}, {"whisker_ideal", whisker}});
  return r.emit();
}

int cmd_verify_resolution(const Options& o) {
  Report r("verify resolution");
  const auto c = load_complex(o.input);
  echo_complex(r, o, c);
  require_at_most("vertex count for the resolution", c.n(), kResolutionVertices);
  const auto res = build_resolution(c);
  r.outputs["resolution"] = io::resolution_to_json(res, o.matrices);
  for (const auto& [name, rep] : {std::pair{"d^2 = 0", check_complex(res)},
                                  std::pair{"ranks and degrees", check_ranks_and_degrees(res, c)},
                                  std::pair{"augmentation", check_augmentation(res, c)}})
    r.check(name, rep.ok, {{"message", rep.message}});
  return r.emit();
}

int cmd_verify_quotients(const Options& o) {
  Report r("verify quotients");
  const auto c = load_complex(o.input);
  echo_complex(r, o, c);
  const auto j = face_ideal(c);
  const auto order = face_order(j);
  const auto cert = check_linear_quotients(j.ideal, order);
  std::vector<Face> listed;
  for (std::size_t p : order.positions) listed.push_back(j.face_of[p]);
  r.outputs["order"] = faces_json(c, listed);
  r.outputs["certificate"] = io::certificate_to_json(j.ideal.universe(), cert, o.pretty);
  r.check("linear quotients", cert.ok, io::certificate_to_json(j.ideal.universe(), cert, o.pretty)["violation"]);
  if (cert.ok) {
    // The colon at F must be generated by the y_j with F minus x_j a face.
    json mismatch = nullptr;
    for (const auto& step : cert.steps) {
      const Face f = listed[step.t - 1];
      Mask expected = 0;
      for_each_bit(f.bits, [&](int i) {
        if (c.contains_face(Face{f.bits & ~bit(i)})) expected |= bit(c.n() + i);
      });
      if (expected != step.variables && mismatch.is_null())
        mismatch = {{"t", step.t}, {"face", format_face(c.universe(), f)}};
    }
    r.check("colon variables", mismatch.is_null(), mismatch);
  }
  return r.emit();
}

json chain_part_json(const VariableUniverse& ring, const ChainTheoremPart& part, bool pretty) {
  return {{"dual", io::monomials_to_json(ring, part.dual_generators, pretty)},
          {"whisker_ideal", io::monomials_to_json(ring, part.whisker_generators, pretty)},
          {"degenerate", part.degenerate}};
}

int cmd_verify_chain(const Options& o) {
  Report r("verify chain-theorem");
  const auto p = io::poset_from_json(io::load_file(o.input));
  r.inputs["file"] = o.input;
  r.inputs["poset"] = io::poset_to_json(p);
  require_at_most("poset size for the chain theorem", p.size(), kChainTheoremElements);
  const auto rep = verify_chain_theorem(p);
  const auto ring = VariableUniverse::face_ring(p.size());
  const json a = chain_part_json(ring, rep.chain_part, o.pretty);
  const json b = chain_part_json(ring, rep.antichain_part, o.pretty);
  r.outputs["chain_part"] = a;
  r.outputs["antichain_part"] = b;
  r.check("chain ideal dual vs incomparability whiskers", rep.chain_part.equal, a);
  r.check("antichain ideal dual vs comparability whiskers", rep.antichain_part.equal, b);
  if (p.size() <= limit(kProjdimElements)) {
    const auto pd = verify_projdim_corollary(p);
    const json w = {{"rank_plus_one", pd.rank_plus_one},
                    {"dilworth", pd.dilworth},
                    {"projdim_chain_ideal", pd.projdim_chain_ideal},
                    {"projdim_antichain_ideal", pd.projdim_antichain_ideal},
                    {"chain_linear", pd.chain_linear},
                    {"antichain_linear", pd.antichain_linear}};
    r.outputs["projdim"] = w;
    r.check("projective dimensions", pd.ok(), w);
  } else {
    r.outputs["projdim"] = "skipped: poset larger than " + std::to_string(limit(kProjdimElements));
  }
  return r.emit();
}

int cmd_verify_generalized(const Options& o) {
  Report r("verify generalized");
  const auto c = load_complex(o.input);
  echo_complex(r, o, c);
  const auto spec = resolve_spec(o, c.n());
  r.inputs["spec"] = io::spec_to_json(spec);
  const auto w = build_hd_whisker(c, spec);
  const auto rep = verify_generalized_theorem(w);
  std::vector<Monomial> covers;
  for (Mask m : rep.covers) covers.push_back(Monomial{m});
  const SimplicialComplex ind(w.universe.as_vertices(), {Face{0}});
  r.outputs["covers"] = io::monomials_to_json(w.universe, covers, o.pretty);
  r.outputs["certificate"] = io::certificate_to_json(w.universe, rep.quotients, o.pretty);
  r.outputs["shelling_order"] = io::faces_to_json(ind.universe(), rep.shelling_order);
  r.check("covers match transversal enumeration", rep.covers_match_bruteforce);
  r.check("cover degrees", rep.degrees_ok, {{"expected", spec.cover_size()}});
  r.check("linear quotients", rep.quotients.ok,
          io::certificate_to_json(w.universe, rep.quotients, o.pretty)["violation"]);
  json pair = nullptr;
  if (rep.shelling.pair) pair = {{"pair", {rep.shelling.pair->first, rep.shelling.pair->second}}};
  r.check("shelling", rep.shelling.accepted, pair);
  return r.emit();
}

int cmd_betti(const Options& o) {
  Report r("betti");
  const auto c = load_complex(o.input);
  echo_complex(r, o, c);
  const auto table = betti_formula(c);
  r.outputs["betti"] = io::betti_to_json(table);
  if (o.oracle) {
    require_at_most("variable count for the Hochster oracle", 2 * c.n(), kOracleVariables);
    const auto oracle = hochster_betti(face_ideal(c).ideal);
    r.outputs["oracle"] = io::betti_to_json(oracle);
    const bool same = oracle.totals() == table.total && oracle.projdim() == table.projdim;
    r.check("formula matches Hochster", same,
            {{"formula", table.total}, {"oracle", oracle.totals()}});
    const auto lin = linearity_of(oracle, c.n());
    json w = nullptr;
    if (lin.witness) w = {{"i", lin.witness->i}, {"j", lin.witness->j}};
    r.check("linear resolution", lin.linear, w);
  }
  return r.emit();
}

int cmd_poset(const std::string& what, const Options& o) {
  Report r("poset " + what);
  const auto p = io::poset_from_json(io::load_file(o.input));
  r.inputs["file"] = o.input;
  r.inputs["poset"] = io::poset_to_json(p);
  require_at_most("poset size", p.size(), kPosetFamilyElements);
  if (what == "dilworth") {
    r.outputs["dilworth"] = dilworth_number(p);
  } else if (what == "rank") {
    r.outputs["rank"] = poset_rank(p);
  } else {
    const PosetFamily fam = what == "chains" ? chains(p) : what == "antichains" ? antichains(p) : poset_ideals(p);
    r.outputs["members"] = io::faces_to_json(p.universe(), fam.members);
  }
  return r.emit();
}

int cmd_shelling(const Options& o) {
  Report r("shelling");
  const auto c = load_complex(o.input);
  echo_complex(r, o, c);
  const auto order = io::faces_from_json(c.universe(), io::load_file(o.order_file));
  r.inputs["order"] = faces_json(c, order);
  const auto res = verify_shelling(c, order);
  json w = nullptr;
  if (res.pair) w = {{"pair", {res.pair->first, res.pair->second}}};
  r.check("shelling", res.accepted, w);
  return r.emit();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face ideals, whisker complexes and their verification checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "render monomials as strings like x1*y2");

  auto input = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("input", o.input, what)->required()->check(CLI::ExistingFile);
  };
  auto spec_options = [&](CLI::App* sub) {
    auto* k = sub->add_option("--k", o.k, "whisker counts, e.g. 2,1")->delimiter(',');
    auto* d = sub->add_option("--d", o.d, "whisker dimensions, e.g. 1,1")->delimiter(',');
    k->needs(d);
    d->needs(k);
    sub->add_option("--spec", o.spec_file, "whisker spec JSON")->check(CLI::ExistingFile)->excludes(k)->excludes(d);
  };

  std::function<int()> action;

  auto* face = app.add_subcommand("face-ideal", "generators of the face ideal J_Delta");
  input(face, "complex JSON");
  face->callback([&] { action = [&] { return cmd_face_ideal(o); }; });

  auto* dual = app.add_subcommand("dual", "Alexander dual of a squarefree ideal");
  input(dual, "ideal JSON");
  dual->callback([&] { action = [&] { return cmd_dual(o); }; });

  auto* whisker = app.add_subcommand("whisker", "whisker complex, or its higher version with --k/--d");
  input(whisker, "complex JSON");
  spec_options(whisker);
  whisker->callback([&] { action = [&] { return cmd_whisker(o); }; });

  auto* verify = app.add_subcommand("verify", "theorem checks");
  verify->require_subcommand(1);
  auto* v_dual = verify->add_subcommand("duality", "dual of J_Delta against I(W(Gamma))");
  input(v_dual, "complex JSON");
  v_dual->callback([&] { action = [&] { return cmd_verify_duality(o); }; });
  auto* v_res = verify->add_subcommand("resolution", "explicit resolution checks");
  input(v_res, "complex JSON");
  v_res->add_flag("--matrices", o.matrices, "include basis and differential entries");
  v_res->callback([&] { action = [&] { return cmd_verify_resolution(o); }; });
  auto* v_quot = verify->add_subcommand("quotients", "linear quotients of J_Delta in face order");
  input(v_quot, "complex JSON");
  v_quot->callback([&] { action = [&] { return cmd_verify_quotients(o); }; });
  auto* v_chain = verify->add_subcommand("chain-theorem", "chain and antichain ideal duals");
  input(v_chain, "poset JSON");
  v_chain->callback([&] { action = [&] { return cmd_verify_chain(o); }; });
  auto* v_gen = verify->add_subcommand("generalized", "shellability of higher whisker independence complexes");
  input(v_gen, "complex JSON");
  spec_options(v_gen);
  v_gen->callback([&] { action = [&] { return cmd_verify_generalized(o); }; });

  auto* betti = app.add_subcommand("betti", "Betti numbers of J_Delta from the f-vector");
  input(betti, "complex JSON");
  betti->add_flag("--oracle", o.oracle, "cross-check with the Hochster formula");
  betti->callback([&] { action = [&] { return cmd_betti(o); }; });

  auto* poset = app.add_subcommand("poset", "poset families and invariants");
  poset->require_subcommand(1);
  for (const std::string what : {"chains", "antichains", "ideals", "dilworth", "rank"}) {
    auto* sub = poset->add_subcommand(what, "poset " + what);
    input(sub, "poset JSON");
    sub->callback([&, what] { action = [&, what] { return cmd_poset(what, o); }; });
  }

  auto* shell = app.add_subcommand("shelling", "check a facet order for the shelling condition");
  input(shell, "complex JSON");
  shell->add_option("--order", o.order_file, "facet order JSON")->required()->check(CLI::ExistingFile);
  shell->callback([&] { action = [&] { return cmd_shelling(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
