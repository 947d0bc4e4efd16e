#include "doctest.h"

#include "support.hpp"
#include "tropadic/error.hpp"
#include "tropadic/io.hpp"

using namespace tropadic;
using namespace test_support;
using io::Json;

namespace {

Fan p2_fan() { return Fan::from_rays(2, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, -1}}, {{-1, -1}, {1, 0}}}); }

const std::vector<std::string> xy{"x", "y"};

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidArgument;
}

Json reparse(const Json& j) { return io::parse_json(io::dump(j)); }

Polyhedron random_polyhedron(Gen& g, std::size_t n) {
    std::vector<RatVec> verts;
    const auto nv = g.integer(1, 4);
    for (std::int64_t i = 0; i < nv; ++i) verts.push_back(g.rat_vec(n, -3, 3, 4));
    std::vector<IntVec> rays;
    if (g.coin()) rays.push_back(g.nonzero_int_vec(n, -2, 2));
    return Polyhedron::from_generators(n, verts, rays);
}

LaurentPoly random_poly(Gen& g, std::size_t n) {
    LaurentPoly f(n);
    const auto terms = g.integer(1, 4);
    for (std::int64_t i = 0; i < terms; ++i) {
        std::map<Rational, Rational> c;
        c[g.rational(-2, 2, 3)] = g.rational(-3, 3, 2);
        if (g.coin()) c[g.rational(-2, 2, 3)] = Rational(g.integer(1, 5));
        f.add_term(g.int_vec(n, -2, 2), ValuedCoeff::from_terms(c));
    }
    return f;
}

ExtendedComplex star_x() {
    auto wedge = [](std::vector<RatVec> verts, std::vector<IntVec> rays) {
        return Polyhedron::from_generators(2, verts, rays);
    };
    return ExtendedComplex::from_polyhedra(p2_fan(), {
                                                         Cone::from_rays(2, {{0, 1}, {-1, -1}}).polyhedron(),
                                                         wedge({{0, 0}, {1, 0}}, {{0, 1}}),
                                                         wedge({{0, 0}, {1, 0}}, {{-1, -1}}),
                                                         wedge({{1, 0}}, {{1, 0}, {0, 1}}),
                                                         wedge({{1, 0}}, {{1, 0}, {-1, -1}}),
                                                     });
}

EmbeddingData line_embedding() {
    EmbeddingData e;
    e.fan = p2_fan();
    e.variables = xy;
    e.generators = {parse_polynomial("x + y + 1", xy)};
    return e;
}

}  // namespace

TEST_CASE("rationals travel as exact strings") {
    CHECK(io::to_json(q(-3, 6)) == Json("-1/2"));
    CHECK(io::rational_from(Json("4/6")) == q(2, 3));
    CHECK(io::rational_from(Json(7)) == q(7));
    CHECK(kind_of([] { io::rational_from(Json(0.5)); }) == ErrorKind::NonRationalPoint);
    CHECK(kind_of([] { io::rational_from(Json("0.5")); }) == ErrorKind::NonRationalPoint);
    CHECK(kind_of([] { io::rational_from(Json("1e3")); }) == ErrorKind::NonRationalPoint);
    CHECK(kind_of([] { io::rational_from(Json("abc")); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::rational_from(Json(true)); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::int_vec_from(Json::array({1, 2.5})); }) == ErrorKind::NonRationalPoint);
}

TEST_CASE("polyhedron JSON") {
    const Polyhedron box = Polyhedron::box({{q(0), q(1)}, {q(-1, 2), q(2)}});
    const Json j = io::to_json(box);
    CHECK(j.at("dim") == 2);
    CHECK(j.at("inequalities").size() == 4);
    CHECK(io::polyhedron_from(reparse(j)) == box);

    const Polyhedron e = Polyhedron::empty(3);
    CHECK(io::to_json(e).at("empty") == true);
    CHECK(io::polyhedron_from(reparse(io::to_json(e))) == e);

    const Json v = io::parse_json(R"({"dim": 2, "vertices": [["0","0"], ["1","0"]], "rays": [[0,1]]})");
    CHECK(io::polyhedron_from(v) == Polyhedron::from_generators(2, {{q(0), q(0)}, {q(1), q(0)}}, {{0, 1}}));
    CHECK(io::polyhedron_from(io::parse_json(R"({"dim": 2})")) == Polyhedron::universe(2));
    CHECK(kind_of([] { io::polyhedron_from(io::parse_json(R"({"vertices": []})")); }) == ErrorKind::Parse);
    CHECK(kind_of([] {
              io::polyhedron_from(io::parse_json(R"({"dim": 2, "inequalities": [{"normal": [1], "bound": "0"}]})"));
          }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("property: polyhedra survive a JSON round trip") {
    Gen g(7101);
    for (int trial = 0; trial < 60; ++trial) {
        const Polyhedron p = random_polyhedron(g, static_cast<std::size_t>(g.integer(1, 3)));
        CHECK(io::polyhedron_from(reparse(io::to_json(p))) == p);
        const auto gen = generators(p);
        Json alt{{"dim", p.ambient_dim()}, {"vertices", Json::array()}, {"rays", Json::array()}};
        for (const auto& v : gen.vertices) alt["vertices"].push_back(io::to_json(v));
        for (const auto& r : gen.rays) alt["rays"].push_back(io::to_json(r));
        CHECK(io::polyhedron_from(alt) == p);
    }
}

TEST_CASE("fans, families and complexes round trip") {
    const Fan fan = p2_fan();
    CHECK(io::fan_from(reparse(io::to_json(fan))) == fan);
    CHECK(io::fan_from(io::parse_json(R"({"dim": 3, "maximal_cones": []})")) == Fan::trivial(3));

    const ExtendedComplex c = star_x();
    const Json j = io::to_json(c);
    CHECK(j.at("faces").size() == c.size());
    CHECK(io::complex_from(reparse(j)) == c);

    Rank1Family f = Rank1Family::parse_rule("1/n");
    f.isolated.push_back(Polyhedron::point({q(0)}));
    const ExtendedComplex fam = ExtendedComplex::from_family(f);
    const Json fj = reparse(io::to_json(fam));
    CHECK(fj.at("family").at("rule") == "1/n");
    CHECK(fj.at("family").at("n_max").is_null());
    CHECK(fj.at("family").at("isolated") == Json::parse(R"([["0"]])"));
    CHECK(io::complex_from(fj) == fam);

    const Json short_form = io::parse_json(R"({"faces": [["0", "1"], ["1"], ["0"]]})");
    const ExtendedComplex seg = io::complex_from(short_form);
    CHECK(seg.size() == 3);
    CHECK(seg.fan() == Fan::trivial(1));
    CHECK(io::raw_faces_from(io::parse_json(R"({"faces": [["0", "1"]]})")).size() == 1);
    CHECK(kind_of([] { io::complex_from(io::parse_json(R"({"faces": [["2", "1"]]})")); }) == ErrorKind::Parse);
}

TEST_CASE("refinement maps round trip") {
    RefinementMap m{{0, 2, 2, 1}};
    CHECK(io::refinement_map_from(reparse(io::to_json(m))) == m);
}

TEST_CASE("coefficients and polynomials use exponent and coefficient arrays") {
    const ValuedCoeff a = ValuedCoeff::from_terms({{q(0), q(3)}, {q(2), q(1)}});
    const Json aj = io::to_json(a);
    CHECK(aj == Json::parse(R"({"terms": [{"e": "0", "c": "3"}, {"e": "2", "c": "1"}]})"));
    CHECK(io::valued_coeff_from(aj) == a);
    CHECK(io::valued_coeff_from(Json("5/2")) == ValuedCoeff(q(5, 2)));

    const LaurentPoly f = parse_polynomial("(3 + t^2)*x^2*y^-1 + t*x", xy);
    const Json fj = io::to_json(f);
    CHECK(fj.at("rank") == 2);
    CHECK(fj.at("exponents") == Json::parse("[[1,0],[2,-1]]"));
    CHECK(io::laurent_from(reparse(fj), xy) == f);
    CHECK(io::laurent_from(Json("(3 + t^2)*x^2*y^-1 + t*x"), xy) == f);
    CHECK(kind_of([] { io::laurent_from(io::parse_json(R"({"rank": 2, "exponents": [[1]], "coefficients": ["1"]})"), xy); }) ==
          ErrorKind::DimensionMismatch);

    Gen g(7202);
    for (int trial = 0; trial < 80; ++trial) {
        const LaurentPoly p = random_poly(g, 2);
        CHECK(io::laurent_from(reparse(io::to_json(p)), xy) == p);
        CHECK(io::laurent_from(Json(to_string(p, xy)), xy) == p);
    }
}

TEST_CASE("embeddings round trip") {
    EmbeddingData e = line_embedding();
    e.stratum_ideals[*e.fan.index_of(Cone::from_rays(2, {{1, 0}}))] = {parse_polynomial("y + 1", xy)};
    const Json j = reparse(io::to_json(e));
    CHECK(j.at("generators_text") == Json::parse(R"(["x + y + 1"])"));
    const EmbeddingData back = io::embedding_from(j);
    CHECK(back == e);
    CHECK(back.variables == xy);

    const Json text = io::parse_json(R"({
        "fan": {"dim": 2, "maximal_cones": [[[1,0],[0,1]], [[0,1],[-1,-1]], [[-1,-1],[1,0]]]},
        "generators": ["x + y + 1"]})");
    const EmbeddingData plain = io::embedding_from(text);
    CHECK(plain == line_embedding());
    CHECK(plain.variables == xy);

    Json outside = text;
    outside["stratum_ideals"] = Json::parse(R"([{"cone": [[1,0]], "generators": ["x + 1"]}])");
    CHECK(kind_of([&] { io::embedding_from(outside); }) == ErrorKind::ExponentOutsideSublattice);
    Json zero = text;
    zero["generators"] = Json::parse(R"(["0"])");
    CHECK(kind_of([&] { io::embedding_from(zero); }) == ErrorKind::ZeroPolynomial);
}

TEST_CASE("tilted presentations carry names and relations") {
    const Polyhedron p = Polyhedron::box({{q(0), q(1)}});
    const TiltedPresentation t = tilted_algebra(p, 1);
    const Json j = reparse(io::to_json(t, {"x"}));
    std::vector<std::string> names;
    for (const auto& g : j.at("generators")) names.push_back(g.at("name"));
    CHECK(names == std::vector<std::string>{"x", "t*x^-1", "t"});
    CHECK(j.at("positive_part") == Json::parse("[2]"));
    bool vanishing = false;
    for (const auto& r : j.at("relations")) vanishing = vanishing || r == "g1*g2 = 0";
    CHECK(vanishing);
    const TiltedPresentation back = io::tilted_from(j, p);
    CHECK(back.generators == t.generators);
    CHECK(back.positive_part == t.positive_part);
    CHECK(back.denominator == 1);
}

TEST_CASE("skeletons and morphisms round trip") {
    const GublerSkeleton fine = build_skeleton(line_embedding(), star_x(), 1, true);
    const Json j = reparse(io::to_json(fine));
    CHECK(j.at("strata").size() == 6);
    const GublerSkeleton back = io::skeleton_from(j);
    CHECK(back.complex == fine.complex);
    CHECK(back.gluing == fine.gluing);
    REQUIRE(back.charts.size() == fine.charts.size());
    for (std::size_t i = 0; i < fine.charts.size(); ++i) {
        CHECK(back.charts[i].initial_forms == fine.charts[i].initial_forms);
        CHECK(back.charts[i].tilted.generators == fine.charts[i].tilted.generators);
        CHECK(back.charts[i].tilted.polyhedron == fine.complex.face(i));
        CHECK(back.charts[i].boundary.size() == fine.charts[i].boundary.size());
    }
    CHECK(io::dump(io::to_json(back)) == io::dump(io::to_json(fine)));

    const auto coarse_faces = std::vector<Polyhedron>{Cone::from_rays(2, {{1, 0}, {0, 1}}).polyhedron(),
                                                      Cone::from_rays(2, {{0, 1}, {-1, -1}}).polyhedron(),
                                                      Cone::from_rays(2, {{-1, -1}, {1, 0}}).polyhedron()};
    const GublerSkeleton coarse =
        build_skeleton(line_embedding(), ExtendedComplex::from_polyhedra(p2_fan(), coarse_faces), 1);
    const SkeletonMorphism m = skeleton_morphism(fine, coarse);
    CHECK(io::morphism_from(reparse(io::to_json(m, xy))) == m);
}

TEST_CASE("JSON reading errors") {
    CHECK(kind_of([] { io::parse_json("{"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::read_json_file("/nonexistent/file.json"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::fan_from(io::parse_json(R"({"dim": 2})")); }) == ErrorKind::Parse);
    CHECK(io::dump(Json{{"b", 1}, {"a", 2}}) == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
}

TEST_CASE("DOT output") {
    const ExtendedComplex c = io::complex_from(io::parse_json(R"({"faces": [["0", "1"]]})"));
    const std::string dot = io::complex_dot(c);
    CHECK(dot.rfind("digraph faces {", 0) == 0);
    CHECK(dot.find("f0 -> f2;") != std::string::npos);
    CHECK(dot.find("f1 -> f2;") != std::string::npos);

    const GublerSkeleton s = build_skeleton(line_embedding(), star_x(), 1);
    const std::string sdot = io::skeleton_dot(s);
    CHECK(sdot.find("x + y + 1") != std::string::npos);
    CHECK(sdot.find("fillcolor=lightgrey") != std::string::npos);
    CHECK(sdot.find("\\\\n") == std::string::npos);

    Rank1Family f = Rank1Family::parse_rule("1/n");
    f.isolated.push_back(Polyhedron::point({q(0)}));
    const std::string adot = io::adjacency_dot(ExtendedComplex::from_family(f));
    CHECK(adot.find("n1 [label=\"[\\\"0\\\"]\"]") != std::string::npos);
    CHECK(adot.find("--") == std::string::npos);
}
