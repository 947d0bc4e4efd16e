#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tropadic/complexes.hpp"
#include "tropadic/laurent.hpp"
#include "tropadic/gubler.hpp"
#include "tropadic/tilted.hpp"

namespace tropadic::io {

using Json = nlohmann::json;

/// Exact numbers travel as strings "p/q"; JSON integers are accepted on
/// input, floats raise NonRationalPoint.
Json to_json(const Rational& q);
Rational rational_from(const Json& j);
Json to_json(const RatVec& v);
RatVec rat_vec_from(const Json& j);
Json to_json(const IntVec& v);
IntVec int_vec_from(const Json& j);

/// {"terms": [{"e": "p/q", "c": "p/q"}, ...]} by ascending exponent.
Json to_json(const ValuedCoeff& a);
ValuedCoeff valued_coeff_from(const Json& j);
/// {"rank", "exponents": [u, ...], "coefficients": [coeff, ...]}; input may
/// also be a string in the polynomial grammar over vars.
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from(const Json& j, const std::vector<std::string>& vars);

/// {"dim", "equations", "inequalities"} with {"normal", "bound"} rows, plus
/// "empty" for the empty set. Input may instead give "vertices", "rays" and
/// "lineality".
Json to_json(const Polyhedron& p);
Polyhedron polyhedron_from(const Json& j);

/// {"dim", "maximal_cones": [[ray, ...], ...]}.
Json to_json(const Fan& f);
Fan fan_from(const Json& j);

/// {"rule", "n_min", "n_max", "isolated": [[a, b] or [a], ...]}.
Json to_json(const Rank1Family& f);
Rank1Family family_from(const Json& j);

/// {"fan", "faces", "incidence"} or, for families, {"fan", "family", ...}.
/// A missing fan means the trivial fan.
Json to_json(const ExtendedComplex& c);
ExtendedComplex complex_from(const Json& j);
/// The face list exactly as written, without adding missing faces.
std::vector<Polyhedron> raw_faces_from(const Json& j);
Fan complex_fan_from(const Json& j);

Json to_json(const ValidationReport& r);
Json to_json(const RefinementMap& m);
RefinementMap refinement_map_from(const Json& j);

/// Polynomials are strings in the input grammar over the given variables.
Json to_json(const EmbeddingData& e);
EmbeddingData embedding_from(const Json& j);

Json to_json(const TiltedGenerator& g, const std::vector<std::string>& vars);
TiltedGenerator tilted_generator_from(const Json& j);
Json to_json(const TiltedPresentation& t, const std::vector<std::string>& vars);
/// The polyhedron is not serialized and must be supplied.
TiltedPresentation tilted_from(const Json& j, const Polyhedron& p);

Json to_json(const GublerSkeleton& s);
GublerSkeleton skeleton_from(const Json& j);
Json to_json(const SkeletonMorphism& m, const std::vector<std::string>& vars);
SkeletonMorphism morphism_from(const Json& j);
Json to_json(const std::vector<AdicStratum>& strata, const std::vector<std::string>& vars);

ResiduePoly residue_poly_from(const std::string& text, const std::vector<std::string>& vars);

/// Two-space indentation, sorted keys, trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// Face poset (Hasse diagram, faces pointing to the faces containing them).
std::string complex_dot(const ExtendedComplex& c);
/// Graph on faces (or on the chain and isolated faces of a family) with an
/// edge for every nonempty intersection.
std::string adjacency_dot(const ExtendedComplex& c);
/// Chart poset annotated with initial forms; empty charts are greyed out.
std::string skeleton_dot(const GublerSkeleton& s);

}  // namespace tropadic::io
