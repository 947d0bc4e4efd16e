#include "tropadic/io.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "tropadic/error.hpp"
#include "tropadic/laurent.hpp"
#include "tropadic/series.hpp"

namespace tropadic::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
    return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw Error(ErrorKind::Parse, std::string("field '") + key + "' must be an array");
    return a;
}

std::int64_t integer_from(const Json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_float()) throw Error(ErrorKind::NonRationalPoint, "floating-point number " + j.dump() + " rejected");
    if (j.is_string()) return to_int64(rational_from(j));
    throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

std::size_t index_from(const Json& j) {
    const auto v = integer_from(j);
    if (v < 0) throw Error(ErrorKind::Parse, "negative index " + j.dump());
    return static_cast<std::size_t>(v);
}

bool bool_from(const Json& j) {
    if (!j.is_boolean()) throw Error(ErrorKind::Parse, "expected a boolean, got " + j.dump());
    return j.get<bool>();
}

std::string string_from(const Json& j) {
    if (!j.is_string()) throw Error(ErrorKind::Parse, "expected a string, got " + j.dump());
    return j.get<std::string>();
}

std::vector<std::string> strings_from(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(string_from(x));
    return out;
}

Json halfspace_json(const HalfSpace& h) { return Json{{"normal", to_json(h.normal)}, {"bound", to_json(h.bound)}}; }

std::vector<HalfSpace> halfspaces_from(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of halfspaces");
    std::vector<HalfSpace> out;
    for (const auto& h : j) out.push_back({int_vec_from(field(h, "normal")), rational_from(field(h, "bound"))});
    return out;
}

/// [a, b] or [a] in Q^1.
Polyhedron interval_from(const Json& j) {
    if (j.is_object()) return polyhedron_from(j);
    if (!j.is_array() || j.empty() || j.size() > 2) throw Error(ErrorKind::Parse, "expected [a, b] or [a]");
    const Rational a = rational_from(j[0]);
    const Rational b = j.size() == 2 ? rational_from(j[1]) : a;
    if (b < a) throw Error(ErrorKind::Parse, "interval with lower end above upper end");
    return Polyhedron::box({{a, b}});
}

Json interval_json(const Polyhedron& p) {
    const RatVec lo = p.minimize({Rational(1)}).point, hi = p.maximize({Rational(1)}).point;
    if (lo == hi) return Json::array({to_json(lo[0])});
    return Json::array({to_json(lo[0]), to_json(hi[0])});
}

std::vector<std::string> variables_of(const EmbeddingData& e) {
    return e.variables.empty() ? default_variables(e.fan.ambient_dim()) : e.variables;
}

Json forms_json(const std::vector<ResiduePoly>& forms, const std::vector<std::string>& vars) {
    Json out = Json::array();
    for (const auto& f : forms) out.push_back(to_string(f, vars));
    return out;
}

std::vector<ResiduePoly> forms_from(const Json& j, const std::vector<std::string>& vars) {
    std::vector<ResiduePoly> out;
    for (const auto& s : strings_from(j)) out.push_back(residue_poly_from(s, vars));
    return out;
}

Json tilted_json(const TiltedPresentation& t, const std::function<std::string(const TiltedGenerator&)>& name) {
    Json gens = Json::array();
    for (const auto& g : t.generators) gens.push_back({{"u", to_json(g.u)}, {"gamma", to_json(g.gamma)}, {"name", name(g)}});
    Json rel = Json::array();
    for (const auto& r : special_fiber_relations(t)) rel.push_back(to_string(r));
    return Json{{"denominator", t.denominator},
                {"generators", gens},
                {"positive_part", t.positive_part},
                {"relations", rel}};
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string face_label(const ExtendedComplex& c, std::size_t i) {
    const Polyhedron& p = c.face(i);
    std::string label = std::to_string(i) + ": dim " + std::to_string(p.dim());
    if (p.dim() == 0) {
        label += " ";
        std::string pt;
        for (const auto& x : relative_interior_point(p)) pt += (pt.empty() ? "" : ",") + to_string(x);
        label += "(" + pt + ")";
    }
    return label;
}

void hasse_edges(const ExtendedComplex& c, std::ostringstream& os, const char* arrow) {
    for (std::size_t j = 0; j < c.size(); ++j)
        for (auto i : c.faces_of(j))
            if (c.face(i).dim() + 1 == c.face(j).dim())
                os << "  f" << i << " " << arrow << " f" << j << ";\n";
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_float()) throw Error(ErrorKind::NonRationalPoint, "floating-point number " + j.dump() + " rejected; use \"p/q\"");
    throw Error(ErrorKind::Parse, "expected a rational, got " + j.dump());
}

Json to_json(const RatVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

RatVec rat_vec_from(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of rationals");
    RatVec out;
    for (const auto& x : j) out.push_back(rational_from(x));
    return out;
}

Json to_json(const IntVec& v) { return Json(v); }

IntVec int_vec_from(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of integers");
    IntVec out;
    for (const auto& x : j) out.push_back(integer_from(x));
    return out;
}

Json to_json(const ValuedCoeff& a) {
    Json terms = Json::array();
    for (const auto& [e, c] : a.terms()) terms.push_back({{"e", to_json(e)}, {"c", to_json(c)}});
    return Json{{"terms", terms}};
}

ValuedCoeff valued_coeff_from(const Json& j) {
    if (j.is_string() || j.is_number()) return ValuedCoeff(rational_from(j));
    std::map<Rational, Rational> terms;
    for (const auto& t : array_field(j, "terms")) terms[rational_from(field(t, "e"))] += rational_from(field(t, "c"));
    return ValuedCoeff::from_terms(terms);
}

Json to_json(const LaurentPoly& f) {
    Json exps = Json::array(), coeffs = Json::array();
    for (const auto& [u, a] : f.terms()) {
        exps.push_back(to_json(u));
        coeffs.push_back(to_json(a));
    }
    return Json{{"rank", f.rank()}, {"exponents", exps}, {"coefficients", coeffs}};
}

LaurentPoly laurent_from(const Json& j, const std::vector<std::string>& vars) {
    if (j.is_string()) return parse_polynomial(j.get<std::string>(), vars);
    const std::size_t rank = index_from(field(j, "rank"));
    const auto& exps = array_field(j, "exponents");
    const auto& coeffs = array_field(j, "coefficients");
    if (exps.size() != coeffs.size()) throw Error(ErrorKind::Parse, "exponents and coefficients differ in length");
    LaurentPoly f(rank);
    for (std::size_t i = 0; i < exps.size(); ++i) {
        const IntVec u = int_vec_from(exps[i]);
        if (u.size() != rank) throw Error(ErrorKind::DimensionMismatch, "exponent length differs from rank");
        f.add_term(u, valued_coeff_from(coeffs[i]));
    }
    return f;
}

Json to_json(const Polyhedron& p) {
    Json out{{"dim", p.ambient_dim()}};
    if (p.is_empty()) {
        out["empty"] = true;
        return out;
    }
    Json eq = Json::array(), in = Json::array();
    for (const auto& h : p.equations()) eq.push_back(halfspace_json(h));
    for (const auto& h : p.inequalities()) in.push_back(halfspace_json(h));
    out["equations"] = eq;
    out["inequalities"] = in;
    return out;
}

Polyhedron polyhedron_from(const Json& j) {
    const std::size_t dim = index_from(field(j, "dim"));
    if (j.contains("empty") && bool_from(j.at("empty"))) return Polyhedron::empty(dim);
    auto check = [dim](const Polyhedron& p) {
        if (p.ambient_dim() != dim) throw Error(ErrorKind::DimensionMismatch, "polyhedron rows disagree with dim");
        return p;
    };
    auto sized = [dim](auto rows) {
        for (const auto& r : rows)
            if (r.normal.size() != dim) throw Error(ErrorKind::DimensionMismatch, "normal length differs from dim");
        return rows;
    };
    if (j.contains("inequalities") || j.contains("equations")) {
        const auto in = j.contains("inequalities") ? sized(halfspaces_from(j.at("inequalities"))) : std::vector<HalfSpace>{};
        const auto eq = j.contains("equations") ? sized(halfspaces_from(j.at("equations"))) : std::vector<HalfSpace>{};
        return check(Polyhedron::from_halfspaces(dim, in, eq));
    }
    if (j.contains("vertices")) {
        std::vector<RatVec> verts;
        for (const auto& v : array_field(j, "vertices")) verts.push_back(rat_vec_from(v));
        std::vector<IntVec> rays, lin;
        if (j.contains("rays"))
            for (const auto& r : array_field(j, "rays")) rays.push_back(int_vec_from(r));
        if (j.contains("lineality"))
            for (const auto& r : array_field(j, "lineality")) lin.push_back(int_vec_from(r));
        for (const auto& v : verts)
            if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "vertex length differs from dim");
        for (const auto& r : rays)
            if (r.size() != dim) throw Error(ErrorKind::DimensionMismatch, "ray length differs from dim");
        for (const auto& r : lin)
            if (r.size() != dim) throw Error(ErrorKind::DimensionMismatch, "lineality length differs from dim");
        return check(Polyhedron::from_generators(dim, verts, rays, lin));
    }
    return Polyhedron::universe(dim);
}

Json to_json(const Fan& f) {
    Json cones = Json::array();
    for (auto i : f.maximal_cones()) cones.push_back(Json(f.cone(i).rays()));
    return Json{{"dim", f.ambient_dim()}, {"maximal_cones", cones}};
}

Fan fan_from(const Json& j) {
    const std::size_t dim = index_from(field(j, "dim"));
    std::vector<std::vector<IntVec>> cones;
    for (const auto& c : array_field(j, "maximal_cones")) {
        if (!c.is_array()) throw Error(ErrorKind::Parse, "a cone is a list of rays");
        std::vector<IntVec> rays;
        for (const auto& r : c) {
            rays.push_back(int_vec_from(r));
            if (rays.back().size() != dim) throw Error(ErrorKind::DimensionMismatch, "ray length differs from dim");
        }
        cones.push_back(std::move(rays));
    }
    if (cones.empty()) return Fan::trivial(dim);
    return Fan::from_rays(dim, cones);
}

Json to_json(const Rank1Family& f) {
    Json iso = Json::array();
    for (const auto& p : f.isolated) iso.push_back(interval_json(p));
    return Json{{"rule", f.rule_text()},
                {"n_min", f.n_min},
                {"n_max", f.n_max ? Json(*f.n_max) : Json(nullptr)},
                {"isolated", iso}};
}

Rank1Family family_from(const Json& j) {
    Rank1Family f = Rank1Family::parse_rule(string_from(field(j, "rule")));
    if (j.contains("n_min")) f.n_min = integer_from(j.at("n_min"));
    if (j.contains("n_max") && !j.at("n_max").is_null()) f.n_max = integer_from(j.at("n_max"));
    if (j.contains("isolated"))
        for (const auto& p : array_field(j, "isolated")) f.isolated.push_back(interval_from(p));
    return f;
}

Json to_json(const ExtendedComplex& c) {
    Json faces = Json::array(), inc = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
        faces.push_back(to_json(c.face(i)));
        inc.push_back(c.faces_of(i));
    }
    Json out{{"fan", to_json(c.fan())}, {"faces", faces}, {"incidence", inc}};
    if (c.is_family()) out["family"] = to_json(*c.family());
    return out;
}

Fan complex_fan_from(const Json& j) {
    if (j.contains("fan")) return fan_from(j.at("fan"));
    if (j.contains("family")) return Fan::trivial(1);
    if (j.contains("dim")) return Fan::trivial(index_from(j.at("dim")));
    const auto& faces = array_field(j, "faces");
    if (faces.empty()) throw Error(ErrorKind::Parse, "a complex without faces needs 'dim' or 'fan'");
    if (faces[0].is_object()) return Fan::trivial(index_from(field(faces[0], "dim")));
    return Fan::trivial(1);
}

std::vector<Polyhedron> raw_faces_from(const Json& j) {
    std::vector<Polyhedron> out;
    if (!j.contains("faces")) return out;
    for (const auto& p : array_field(j, "faces")) out.push_back(p.is_object() ? polyhedron_from(p) : interval_from(p));
    return out;
}

ExtendedComplex complex_from(const Json& j) {
    if (j.contains("family")) {
        const ExtendedComplex c = ExtendedComplex::from_family(family_from(j.at("family")));
        if (j.contains("fan") && fan_from(j.at("fan")) != c.fan())
            throw Error(ErrorKind::InvalidArgument, "families live over the trivial fan of Q^1");
        return c;
    }
    return ExtendedComplex::from_polyhedra(complex_fan_from(j), raw_faces_from(j));
}

Json to_json(const ValidationReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back({{"kind", std::string(violation_kind_name(x.kind))}, {"faces", x.faces}, {"message", x.message}});
    return Json{{"ok", r.ok()}, {"violations", v}};
}

Json to_json(const RefinementMap& m) { return Json{{"assignment", m.assignment}}; }

RefinementMap refinement_map_from(const Json& j) {
    RefinementMap m;
    for (const auto& x : array_field(j, "assignment")) m.assignment.push_back(index_from(x));
    return m;
}

Json to_json(const EmbeddingData& e) {
    const auto vars = variables_of(e);
    Json gens = Json::array(), text = Json::array();
    for (const auto& g : e.generators) {
        gens.push_back(to_json(g));
        text.push_back(to_string(g, vars));
    }
    Json strata = Json::array();
    for (const auto& [k, list] : e.stratum_ideals) {
        Json g = Json::array(), t = Json::array();
        for (const auto& f : list) {
            g.push_back(to_json(f));
            t.push_back(to_string(f, vars));
        }
        strata.push_back({{"cone", e.fan.cone(k).rays()}, {"generators", g}, {"generators_text", t}});
    }
    return Json{{"fan", to_json(e.fan)},
                {"variables", vars},
                {"generators", gens},
                {"generators_text", text},
                {"tropical_basis_asserted", e.tropical_basis_asserted},
                {"stratum_ideals", strata}};
}

EmbeddingData embedding_from(const Json& j) {
    EmbeddingData e;
    e.fan = fan_from(field(j, "fan"));
    const std::size_t n = e.fan.ambient_dim();
    e.variables = j.contains("variables") ? strings_from(j.at("variables")) : default_variables(n);
    if (e.variables.size() != n) throw Error(ErrorKind::DimensionMismatch, "one variable per coordinate of N");
    if (j.contains("generators"))
        for (const auto& g : array_field(j, "generators")) e.generators.push_back(laurent_from(g, e.variables));
    if (j.contains("tropical_basis_asserted")) e.tropical_basis_asserted = bool_from(j.at("tropical_basis_asserted"));
    if (j.contains("stratum_ideals")) {
        for (const auto& s : array_field(j, "stratum_ideals")) {
            std::vector<IntVec> rays;
            for (const auto& r : array_field(s, "cone")) rays.push_back(int_vec_from(r));
            const auto k = e.fan.index_of(Cone::from_rays(n, rays));
            if (!k) throw Error(ErrorKind::InvalidArgument, "stratum ideal for a cone outside the fan");
            auto& list = e.stratum_ideals[*k];
            for (const auto& g : array_field(s, "generators")) list.push_back(laurent_from(g, e.variables));
        }
    }
    e.validate();
    return e;
}

Json to_json(const TiltedGenerator& g, const std::vector<std::string>& vars) {
    return Json{{"u", to_json(g.u)}, {"gamma", to_json(g.gamma)}, {"name", to_string(g, vars)}};
}

TiltedGenerator tilted_generator_from(const Json& j) {
    return {int_vec_from(field(j, "u")), rational_from(field(j, "gamma"))};
}

Json to_json(const TiltedPresentation& t, const std::vector<std::string>& vars) {
    return tilted_json(t, [&vars](const TiltedGenerator& g) { return to_string(g, vars); });
}

TiltedPresentation tilted_from(const Json& j, const Polyhedron& p) {
    TiltedPresentation t;
    t.polyhedron = p;
    t.denominator = integer_from(field(j, "denominator"));
    for (const auto& g : array_field(j, "generators")) t.generators.push_back(tilted_generator_from(g));
    for (const auto& i : array_field(j, "positive_part")) t.positive_part.push_back(index_from(i));
    return t;
}

Json to_json(const GublerSkeleton& s) {
    const auto vars = variables_of(s.embedding);
    const Fan& fan = s.complex.fan();
    Json charts = Json::array();
    for (const auto& ch : s.charts) {
        Json boundary = Json::array();
        for (const auto& b : ch.boundary) {
            const StratumLattice lattice(fan.cone(b.stratum));
            auto name = [&](const TiltedGenerator& g) {
                return to_string(TiltedGenerator{lattice.embed(g.u), g.gamma}, vars);
            };
            boundary.push_back({{"stratum", b.stratum},
                                {"cone", fan.cone(b.stratum).rays()},
                                {"sample", to_json(b.sample)},
                                {"evaluated", b.evaluated},
                                {"initial_forms", forms_json(b.initial_forms, vars)},
                                {"empty", b.empty},
                                {"tilted", tilted_json(b.tilted, name)}});
        }
        charts.push_back({{"face", ch.face},
                          {"recession", ch.recession},
                          {"sample", to_json(ch.sample)},
                          {"initial_forms", forms_json(ch.initial_forms, vars)},
                          {"empty", ch.empty},
                          {"tilted", to_json(ch.tilted, vars)},
                          {"boundary", boundary}});
    }
    Json gluing = Json::array();
    for (const auto& a : s.gluing) gluing.push_back(Json::array({a.from, a.to}));
    return Json{{"embedding", to_json(s.embedding)},
                {"complex", to_json(s.complex)},
                {"denominator", s.denominator},
                {"charts", charts},
                {"gluing", gluing},
                {"strata", to_json(adic_trop_strata(s), vars)},
                {"warnings", s.warnings}};
}

GublerSkeleton skeleton_from(const Json& j) {
    GublerSkeleton s;
    s.embedding = embedding_from(field(j, "embedding"));
    s.complex = complex_from(field(j, "complex"));
    s.denominator = integer_from(field(j, "denominator"));
    const auto vars = variables_of(s.embedding);
    const Fan& fan = s.complex.fan();
    for (const auto& c : array_field(j, "charts")) {
        Chart ch;
        ch.face = index_from(field(c, "face"));
        if (ch.face >= s.complex.size()) throw Error(ErrorKind::Parse, "chart for an unknown face");
        ch.recession = index_from(field(c, "recession"));
        ch.sample = rat_vec_from(field(c, "sample"));
        ch.initial_forms = forms_from(field(c, "initial_forms"), vars);
        ch.empty = bool_from(field(c, "empty"));
        const Polyhedron& face = s.complex.face(ch.face);
        ch.tilted = tilted_from(field(c, "tilted"), face);
        const auto closed = closure_strata(face, fan);
        for (const auto& b : array_field(c, "boundary")) {
            BoundaryChart bc;
            bc.stratum = index_from(field(b, "stratum"));
            const auto it = closed.strata.find(bc.stratum);
            if (it == closed.strata.end()) throw Error(ErrorKind::Parse, "boundary chart off the closure of its face");
            bc.sample = rat_vec_from(field(b, "sample"));
            bc.evaluated = bool_from(field(b, "evaluated"));
            bc.initial_forms = forms_from(field(b, "initial_forms"), vars);
            bc.empty = bool_from(field(b, "empty"));
            bc.tilted = tilted_from(field(b, "tilted"), it->second);
            ch.boundary.push_back(std::move(bc));
        }
        s.charts.push_back(std::move(ch));
    }
    for (const auto& a : array_field(j, "gluing")) {
        if (!a.is_array() || a.size() != 2) throw Error(ErrorKind::Parse, "a gluing arrow is [from, to]");
        s.gluing.push_back({index_from(a[0]), index_from(a[1])});
    }
    if (j.contains("warnings")) s.warnings = strings_from(j.at("warnings"));
    return s;
}

Json to_json(const SkeletonMorphism& m, const std::vector<std::string>& vars) {
    Json arrows = Json::array();
    for (const auto& a : m.arrows) {
        Json sub = Json::array();
        for (const auto& g : a.substitution) sub.push_back(to_json(g, vars));
        arrows.push_back({{"source", a.source}, {"target", a.target}, {"substitution", sub}});
    }
    return Json{{"assignment", m.map.assignment}, {"arrows", arrows}};
}

SkeletonMorphism morphism_from(const Json& j) {
    SkeletonMorphism m;
    m.map = refinement_map_from(j);
    for (const auto& a : array_field(j, "arrows")) {
        ChartArrow arrow{index_from(field(a, "source")), index_from(field(a, "target")), {}};
        for (const auto& g : array_field(a, "substitution")) arrow.substitution.push_back(tilted_generator_from(g));
        m.arrows.push_back(std::move(arrow));
    }
    return m;
}

Json to_json(const std::vector<AdicStratum>& strata, const std::vector<std::string>& vars) {
    Json out = Json::array();
    for (const auto& s : strata)
        out.push_back({{"face", s.face},
                       {"stratum", s.stratum},
                       {"sample", to_json(s.sample)},
                       {"initial_forms", forms_json(s.initial_forms, vars)}});
    return out;
}

ResiduePoly residue_poly_from(const std::string& text, const std::vector<std::string>& vars) {
    const LaurentPoly f = parse_polynomial(text, vars);
    ResiduePoly r{f.rank(), {}};
    for (const auto& [u, a] : f.terms()) {
        if (*a.valuation() != 0 || a.terms().size() != 1)
            throw Error(ErrorKind::Parse, "residue polynomials have plain rational coefficients: '" + text + "'");
        r.terms.emplace(u, a.residue());
    }
    return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

std::string complex_dot(const ExtendedComplex& c) {
    std::ostringstream os;
    os << "digraph faces {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < c.size(); ++i)
        os << "  f" << i << " [label=\"" << escape(face_label(c, i)) << "\"];\n";
    if (c.is_family()) os << "  chain [label=\"" << escape(c.family()->rule_text()) << " intervals\", shape=ellipse];\n";
    hasse_edges(c, os, "->");
    os << "}\n";
    return os.str();
}

std::string adjacency_dot(const ExtendedComplex& c) {
    std::ostringstream os;
    os << "graph adjacency {\n";
    if (c.is_family()) {
        const Rank1Family& f = *c.family();
        os << "  n0 [label=\"" << escape(f.rule_text()) << " intervals\"];\n";
        for (std::size_t k = 0; k < f.isolated.size(); ++k)
            os << "  n" << k + 1 << " [label=\"" << escape(interval_json(f.isolated[k]).dump()) << "\"];\n";
        for (const auto& comp : adjacency_components(c))
            for (std::size_t k = 1; k < comp.size(); ++k) os << "  n" << comp[0] << " -- n" << comp[k] << ";\n";
        os << "}\n";
        return os.str();
    }
    for (std::size_t i = 0; i < c.size(); ++i) os << "  f" << i << " [label=\"" << escape(face_label(c, i)) << "\"];\n";
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!c.face(i).intersect(c.face(j)).is_empty()) os << "  f" << i << " -- f" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string skeleton_dot(const GublerSkeleton& s) {
    const auto vars = variables_of(s.embedding);
    std::ostringstream os;
    os << "digraph charts {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const auto& ch : s.charts) {
        std::string label = escape(face_label(s.complex, ch.face));
        for (const auto& f : ch.initial_forms) label += "\\n" + escape(to_string(f, vars));
        os << "  f" << ch.face << " [label=\"" << label << "\"";
        if (ch.empty) os << ", style=filled, fillcolor=lightgrey";
        os << "];\n";
    }
    hasse_edges(s.complex, os, "->");
    os << "}\n";
    return os.str();
}

}  // namespace tropadic::io
