#include "faceideal/json_io.hpp"

#include <fstream>
#include <sstream>

namespace faceideal::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw Error("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw Error(std::string("missing field \"") + name + "\"");
  return *it;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(std::string(what) + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

json labels_of(const VertexUniverse& u, Mask m) {
  json arr = json::array();
  for_each_bit(m, [&](int i) { arr.push_back(u.label(i)); });
  return arr;
}

Monomial parse_monomial(const VariableUniverse& universe, const json& g) {
  Monomial m;
  auto add = [&](const std::string& name) {
    if (name == "1") return;
    m.support |= bit(universe.index(name));
  };
  if (g.is_string()) {
    std::stringstream ss(g.get<std::string>());
    std::string part;
    while (std::getline(ss, part, '*')) add(part);
  } else if (g.is_array()) {
    for (const auto& v : g) {
      if (!v.is_string()) throw Error("generator entries must be variable labels");
      add(v.get<std::string>());
    }
  } else {
    throw Error("generator must be a list of labels or a string like \"x1*y2\"");
  }
  return m;
}

}  // namespace

SimplicialComplex complex_from_json(const json& j) {
  VertexUniverse universe(string_list(field(j, "vertices"), "\"vertices\""));
  const json& facets = field(j, "facets");
  if (!facets.is_array()) throw Error("\"facets\" must be an array of label lists");
  return SimplicialComplex(universe, faces_from_json(universe, facets));
}

json complex_to_json(const SimplicialComplex& c) {
  return {{"vertices", c.universe().labels()}, {"facets", faces_to_json(c.universe(), c.facets())}};
}

std::vector<Face> faces_from_json(const VertexUniverse& universe, const json& j) {
  if (!j.is_array()) throw Error("expected an array of faces");
  std::vector<Face> out;
  for (const auto& f : j) {
    Face face;
    for (const auto& label : string_list(f, "face")) face.bits |= bit(universe.index(label));
    out.push_back(face);
  }
  return out;
}

json faces_to_json(const VertexUniverse& universe, const std::vector<Face>& faces) {
  json arr = json::array();
  for (Face f : faces) arr.push_back(labels_of(universe, f.bits));
  return arr;
}

MonomialIdeal ideal_from_json(const json& j) {
  const VariableUniverse universe = VariableUniverse::from_labels(string_list(field(j, "variables"), "\"variables\""));
  const json& gens = field(j, "generators");
  if (!gens.is_array()) throw Error("\"generators\" must be an array");
  std::vector<Monomial> monomials;
  for (const auto& g : gens) monomials.push_back(parse_monomial(universe, g));
  return minimize(universe, monomials);
}

json monomials_to_json(const VariableUniverse& universe, const std::vector<Monomial>& gens, bool pretty) {
  json arr = json::array();
  for (Monomial g : gens) {
    if (pretty) {
      arr.push_back(format_monomial(universe, g));
    } else {
      json names = json::array();
      for_each_bit(g.support, [&](int i) { names.push_back(universe.var(i).name); });
      arr.push_back(names);
    }
  }
  return arr;
}

json ideal_to_json(const MonomialIdeal& ideal, bool pretty) {
  return {{"variables", ideal.universe().labels()},
          {"generators", monomials_to_json(ideal.universe(), ideal.generators(), pretty)}};
}

Poset poset_from_json(const json& j) {
  std::vector<std::string> labels = string_list(field(j, "elements"), "\"elements\"");
  VertexUniverse lookup(labels);
  std::vector<std::pair<int, int>> relations;
  auto rel = j.find("relations");
  if (rel != j.end()) {
    if (!rel->is_array()) throw Error("\"relations\" must be an array of pairs");
    for (const auto& r : *rel) {
      const auto pair = string_list(r, "relation");
      if (pair.size() != 2) throw Error("each relation must be a pair [lower, upper]");
      relations.emplace_back(lookup.index(pair[0]), lookup.index(pair[1]));
    }
  }
  return Poset(std::move(labels), relations);
}

json poset_to_json(const Poset& p) {
  json rel = json::array();
  for (auto [a, b] : p.relations()) rel.push_back({p.universe().label(a), p.universe().label(b)});
  return {{"elements", p.universe().labels()}, {"relations", rel}};
}

WhiskerSpec spec_from_json(const json& j) {
  WhiskerSpec s;
  try {
    s.k = field(j, "k").get<std::vector<int>>();
    s.d = field(j, "d").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw Error(std::string("whisker spec: ") + e.what());
  }
  s.validate();
  return s;
}

json spec_to_json(const WhiskerSpec& s) { return {{"k", s.k}, {"d", s.d}}; }

namespace {

json graded_json(const std::map<std::pair<int, int>, std::uint64_t>& graded) {
  json g = json::object();
  for (const auto& [key, value] : graded)
    if (value != 0) g[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
  return g;
}

}  // namespace

json betti_to_json(const BettiTable& t) {
  return {{"graded", graded_json(t.graded)}, {"total", t.total}, {"projdim", t.projdim}};
}

json betti_to_json(const GradedBettiTable& t) {
  return {{"graded", graded_json(t.graded)}, {"total", t.totals()}, {"projdim", t.projdim()}};
}

json certificate_to_json(const VariableUniverse& universe, const QuotientCertificate& c, bool pretty) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    std::vector<Monomial> vars;
    for_each_bit(s.variables, [&](int i) { vars.push_back(Monomial{bit(i)}); });
    steps.push_back({{"t", s.t}, {"colon", monomials_to_json(universe, vars, pretty)}});
  }
  json out = {{"ok", c.ok}, {"steps", steps}};
  if (c.violation) {
    out["violation"] = {{"t", c.violation->t},
                        {"generator", format_monomial(universe, c.violation->generator)}};
  }
  return out;
}

json resolution_to_json(const ResolutionComplex& r, bool with_matrices) {
  json modules = json::array();
  for (int j = 0; j <= r.top(); ++j) {
    modules.push_back({{"index", j}, {"rank", r.rank(j)}, {"degree", j == 0 ? 0 : r.n + j - 1}});
  }
  json out = {{"n", r.n}, {"ranks", r.ranks()}, {"modules", modules}};
  if (!with_matrices) return out;
  const VertexUniverse vertices = VertexUniverse::numbered(r.n, "");
  const VariableUniverse ring = VariableUniverse::face_ring(r.n);
  json basis = json::array();
  for (int j = 1; j <= r.top(); ++j) {
    json elems = json::array();
    for (const auto& e : r.basis[static_cast<std::size_t>(j)])
      elems.push_back({{"G", labels_of(vertices, e.g)}, {"H", labels_of(vertices, e.h)}});
    basis.push_back({{"index", j}, {"elements", elems}});
  }
  json diffs = json::array();
  json d1 = json::array();
  for (std::size_t c = 0; c < r.augmentation.size(); ++c)
    d1.push_back({{"col", c}, {"monomial", format_monomial(ring, r.augmentation[c])}});
  diffs.push_back({{"index", 1}, {"entries", d1}});
  for (std::size_t j = 2; j < r.differentials.size(); ++j) {
    json entries = json::array();
    for (const auto& e : r.differentials[j])
      entries.push_back({{"row", e.row}, {"col", e.col}, {"sign", e.sign},
                         {"var", e.var < 0 ? std::string("1") : ring.var(e.var).name}});
    diffs.push_back({{"index", j}, {"entries", entries}});
  }
  out["basis"] = basis;
  out["differentials"] = diffs;
  return out;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace faceideal::io
