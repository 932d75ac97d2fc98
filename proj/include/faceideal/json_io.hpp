#ifndef FACEIDEAL_JSON_IO_HPP
#define FACEIDEAL_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "faceideal/complex.hpp"
#include "faceideal/face_ideal.hpp"
#include "faceideal/homology.hpp"
#include "faceideal/ideal.hpp"
#include "faceideal/poset.hpp"
#include "faceideal/resolution.hpp"
#include "faceideal/whisker_hd.hpp"

namespace faceideal::io {

using nlohmann::json;

// {"vertices": [...], "facets": [[...], ...]}
SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& c);

/// A list of faces given by vertex labels, e.g. a shelling order.
std::vector<Face> faces_from_json(const VertexUniverse& universe, const json& j);
json faces_to_json(const VertexUniverse& universe, const std::vector<Face>& faces);

// {"variables": [...], "generators": [["x1","y2"], ...]}; a generator may
// also be written as a string "x1*y2". Generators are minimized on load.
MonomialIdeal ideal_from_json(const json& j);
/// pretty renders generators as "x1*y2" strings.
json ideal_to_json(const MonomialIdeal& ideal, bool pretty = false);
json monomials_to_json(const VariableUniverse& universe, const std::vector<Monomial>& gens, bool pretty);

// {"elements": [...], "relations": [["p1","p2"], ...]} meaning p1 < p2.
Poset poset_from_json(const json& j);
json poset_to_json(const Poset& p);

// {"k": [...], "d": [...]}
WhiskerSpec spec_from_json(const json& j);
json spec_to_json(const WhiskerSpec& s);

// {"graded": {"i,j": value}, "total": [...], "projdim": p}
json betti_to_json(const BettiTable& t);
json betti_to_json(const GradedBettiTable& t);

json certificate_to_json(const VariableUniverse& universe, const QuotientCertificate& c, bool pretty);

/// Ranks, degree table and check results; sparse matrices on request.
json resolution_to_json(const ResolutionComplex& r, bool with_matrices);

/// Reads a whole file; throws Error with the path on failure.
json load_file(const std::string& path);

}  // namespace faceideal::io

#endif  // FACEIDEAL_JSON_IO_HPP
