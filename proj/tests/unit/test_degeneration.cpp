#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "support.hpp"
#include "tropadic/degeneration.hpp"
#include "tropadic/error.hpp"
#include "tropadic/tilted.hpp"

using namespace tropadic;
using namespace test_support;

namespace {

LaurentPoly P(const char* text) { return parse_polynomial(text); }
LaurentPoly P(const char* text, std::vector<std::string> vars) { return parse_polynomial(text, vars); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidArgument;
}

LaurentPoly random_poly(Gen& g, std::size_t n, int max_terms) {
    LaurentPoly f(n);
    const int k = static_cast<int>(g.integer(1, max_terms));
    for (int i = 0; i < k; ++i) {
        ValuedCoeff a = ValuedCoeff::monomial(g.rational(-3, 3, 2) + (g.coin() ? 0 : 1), g.rational(-2, 3, 3));
        if (g.coin()) a += ValuedCoeff::monomial(1, *a.valuation() + g.rational(1, 2, 2));
        if (a.is_zero()) a = 1;
        f.add_term(g.int_vec(n, -2, 2), a);
    }
    if (f.is_zero()) f.add_term(IntVec(n, 0), 1);
    return f;
}

// Brute-force tilted monomials: (u, gamma) with |u_i| <= b, gamma in (1/D)Z,
// 0 <= D*gamma <= gb, checked against the vertices and rays of P.
std::vector<TiltedGenerator> tilted_monomials(const Polyhedron& p, std::int64_t d, std::int64_t b, std::int64_t gb) {
    const VRep v = vrep(p);
    std::vector<TiltedGenerator> out;
    for (const auto& u : int_box(p.ambient_dim(), b)) {
        bool rays_ok = true;
        for (const auto& r : v.rays)
            if (dot(u, r) < 0) rays_ok = false;
        if (!rays_ok) continue;
        for (std::int64_t g = -gb; g <= gb; ++g) {
            const Rational gamma(g, d);
            bool ok = true;
            for (const auto& x : v.vertices)
                if (gamma + dot(u, x) < 0) ok = false;
            if (ok) out.push_back({u, gamma});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("valued coefficients") {
    const ValuedCoeff a = ValuedCoeff(3) + ValuedCoeff::monomial(1, 2);
    CHECK(*a.valuation() == 0);
    CHECK(a.residue() == 3);
    CHECK(to_string(a) == "3 + t^2");
    const ValuedCoeff b = ValuedCoeff::monomial(-2, q(1, 2));
    CHECK(to_string(b) == "-2*t^{1/2}");
    CHECK(*(a * b).valuation() == q(1, 2));
    CHECK((a * b).residue() == -6);
    CHECK((a - a).is_zero());
    CHECK_FALSE((a - a).valuation().has_value());
    CHECK(to_string(ValuedCoeff::monomial(1, -1)) == "t^-1");
    // val(ab) = val(a) + val(b), val(a + b) >= min.
    Gen g(11);
    for (int i = 0; i < 50; ++i) {
        ValuedCoeff x = ValuedCoeff::monomial(g.rational(-3, 3, 3) + 4, g.rational(-2, 2, 4));
        x += ValuedCoeff::monomial(1, g.rational(-2, 2, 4));
        ValuedCoeff y = ValuedCoeff::monomial(g.rational(1, 3, 3), g.rational(-2, 2, 4));
        if (x.is_zero()) continue;
        CHECK(*(x * y).valuation() == *x.valuation() + *y.valuation());
        const ValuedCoeff s = x + y;
        if (!s.is_zero()) CHECK(*s.valuation() >= std::min(*x.valuation(), *y.valuation()));
    }
}

TEST_CASE("polynomial parser") {
    const auto parsed = parse_polynomials({"(3 + t^2)*x^2*y^-1 + t*x"});
    CHECK(parsed.variables == std::vector<std::string>{"x", "y"});
    const LaurentPoly& f = parsed.polys[0];
    CHECK(f.size() == 2);
    CHECK(f.terms().at({2, -1}) == ValuedCoeff(3) + ValuedCoeff::monomial(1, 2));
    CHECK(f.terms().at({1, 0}) == ValuedCoeff::monomial(1, 1));
    CHECK(to_string(f) == "(3 + t^2)*x^2*y^-1 + t*x");

    CHECK(to_string(P("t^{1/2}*x1 - 1 + x3"), {"x1", "x2", "x3"}) == "t^{1/2}*x1 + x3 - 1");
    CHECK(P("t^{1/2}*x1 - 1 + x3").rank() == 3);
    CHECK(P("x - x") == LaurentPoly(1));
    CHECK(P("-x^2 + 3/4").terms().at({0}) == ValuedCoeff(q(3, 4)));
    CHECK(P("(x + 1)^2") == P("x^2 + 2*x + 1"));
    CHECK(P("(t*x)^-2") == P("t^-2*x^-2"));
    CHECK(P("t^(-1/3)*a*b", {"a", "b"}).terms().at({1, 1}) == ValuedCoeff::monomial(1, q(-1, 3)));
    CHECK(P("y + 1").rank() == 2);
    CHECK(P("1 + t").rank() == 0);
    CHECK(P("x + 1", {"x", "y"}).rank() == 2);
    CHECK(P("u*v + 1").rank() == 2);

    CHECK(kind_of([] { P("1.5*x"); }) == ErrorKind::NonRationalPoint);
    CHECK(kind_of([] { P("2e3*x"); }) == ErrorKind::NonRationalPoint);
    CHECK(kind_of([] { P("x + "); }) == ErrorKind::Parse);
    CHECK(kind_of([] { P("x^(1/2)"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { P("x + q", {"x"}); }) == ErrorKind::Parse);
    CHECK(kind_of([] { P("x ? 1"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_polynomials({"x"}, {"x", "t"}); }) == ErrorKind::Parse);

    Gen g(12);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = g.integer(1, 3);
        const LaurentPoly h = random_poly(g, n, 5);
        CHECK(parse_polynomial(to_string(h), default_variables(n)) == h);
    }
}

TEST_CASE("residue polynomial printing") {
    CHECK(to_string(initial_form(P("x + y + 1"), rv({0, 0}))) == "x + y + 1");
    CHECK(to_string(initial_form(P("2*x^2*y^-1 - 1/2*x + 1"), rv({0, 0}))) == "2*x^2*y^-1 - 1/2*x + 1");
    CHECK(to_string(ResiduePoly{2, {}}) == "0");
    CHECK(to_string(ResiduePoly{2, {{{0, 0}, -1}}}) == "-1");
}

TEST_CASE("tropical evaluation and initial forms") {
    const LaurentPoly line = P("x + y + 1");
    auto tv = trop_eval(line, rv({0, 0}));
    CHECK(tv.value == 0);
    CHECK(tv.argmin == std::vector<IntVec>{{0, 0}, {0, 1}, {1, 0}});
    tv = trop_eval(line, rv({1, 0}));
    CHECK(tv.value == 0);
    CHECK(tv.argmin == std::vector<IntVec>{{0, 0}, {0, 1}});
    tv = trop_eval(P("t*x + 1"), rv({0}));
    CHECK(tv.value == 0);
    CHECK(tv.argmin == std::vector<IntVec>{{0}});

    CHECK(to_string(initial_form(line, rv({0, 0}))) == "x + y + 1");
    CHECK(to_string(initial_form(line, rv({1, 0}))) == "y + 1");
    CHECK(to_string(initial_form(P("t*x + 1"), rv({0}))) == "1");
    CHECK(initial_form(P("t*x + 1"), rv({0})).is_monomial());
    CHECK(to_string(initial_form(P("(2 + t)*x - t^{1/2}"), rv({q(1, 2)}))) == "2*x - 1");

    CHECK(kind_of([] { trop_eval(LaurentPoly(1), rv({0})); }) == ErrorKind::ZeroPolynomial);
    CHECK(kind_of([] { initial_form(LaurentPoly(2), rv({0, 0})); }) == ErrorKind::ZeroPolynomial);
}

TEST_CASE("monomial polyhedra") {
    CHECK(monomial_polyhedron(P("x")) == Polyhedron::from_halfspaces(1, {{{1}, 0}}));
    CHECK(monomial_polyhedron(P("t*x^-1")) == Polyhedron::from_halfspaces(1, {{{-1}, -1}}));
    CHECK(monomial_polyhedron(P("x + t*x^-1")) == Polyhedron::box({{0, 1}}));
    CHECK(monomial_polyhedron(P("t^-1 + x")).is_empty());
    CHECK(monomial_polyhedron(P("1 + x")) == Polyhedron::from_halfspaces(1, {{{1}, 0}}));
}

TEST_CASE("property: membership lemma") {
    Gen g(13);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = g.integer(1, 3);
        const LaurentPoly f = random_poly(g, n, 4);
        const RatVec w = g.rat_vec(n, -3, 3, 4);
        bool brute = true;
        for (const auto& [u, a] : f.terms())
            if (*a.valuation() + dot(u, w) < 0) brute = false;
        CHECK(in_tilted_ring(f, w) == brute);
        CHECK(monomial_polyhedron(f).contains(w) == brute);
    }
}

TEST_CASE("property: union lemma") {
    // For f in R[M]^w, P_f is admissible after intersecting with a cone of
    // the fan of P^2 containing its recession directions, and contains w.
    const Fan p2 = Fan::from_rays(2, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, -1}}, {{-1, -1}, {1, 0}}});
    Gen g(14);
    int tested = 0;
    for (int i = 0; i < 150; ++i) {
        const LaurentPoly f = random_poly(g, 2, 4);
        const RatVec w = g.rat_vec(2, -2, 2, 3);
        if (!in_tilted_ring(f, w)) continue;
        const Polyhedron pf = monomial_polyhedron(f);
        REQUIRE(pf.contains(w));
        bool found = false;
        for (auto s : p2.maximal_cones()) {
            const Polyhedron piece = pf.intersect(p2.cone(s).polyhedron().translate(w));
            if (!piece.contains(w)) continue;
            // Stay inside one cone of the fan: use w + sigma restricted to P_f.
            if (is_admissible(piece, p2).admissible) found = true;
            for (const auto& face : faces(p2.cone(s).polyhedron())) {
                const Polyhedron pc = pf.intersect(face.translate(w));
                if (pc.contains(w) && is_admissible(pc, p2).admissible) found = true;
            }
        }
        CHECK(found);
        ++tested;
    }
    CHECK(tested > 30);
}

TEST_CASE("corner locus examples") {
    const Polyhedron box = Polyhedron::box({{-3, 3}, {-3, 3}});
    const auto cells = hypersurface_trop(P("x + y + 1"), box);
    REQUIRE(cells.size() == 4);
    CHECK(cells[0].cell == Polyhedron::point(rv({0, 0})));
    std::set<IntVec> rays;
    for (std::size_t i = 1; i < 4; ++i) {
        const VRep v = vrep(cells[i].cell);
        CHECK(v.vertices == std::vector<RatVec>{rv({0, 0})});
        REQUIRE(v.rays.size() == 1);
        rays.insert(v.rays[0]);
        CHECK(cells[i].initial.terms.size() == 2);
    }
    CHECK(rays == std::set<IntVec>{{1, 0}, {0, 1}, {-1, -1}});

    auto one = hypersurface_trop(P("x + 1"), Polyhedron::box({{-3, 3}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].cell == Polyhedron::point(rv({0})));
    one = hypersurface_trop(P("x^2 + x + 1"), Polyhedron::box({{-3, 3}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].cell == Polyhedron::point(rv({0})));
    CHECK(to_string(one[0].initial) == "x^2 + x + 1");
    CHECK(hypersurface_trop(P("1 + t"), Polyhedron()).empty());
    CHECK(hypersurface_trop(P("t*x^3"), Polyhedron::box({{-3, 3}})).empty());

    // x + 1 in rank 2: the line v1 = 0, a cell with lineality.
    const auto wall = hypersurface_trop(P("x + 1", {"x", "y"}), box);
    REQUIRE(wall.size() == 1);
    CHECK(wall[0].cell == Polyhedron::from_halfspaces(2, {}, {{{1, 0}, 0}}));
}

TEST_CASE("property: corner locus agrees with initial forms on a grid") {
    Gen g(15);
    int nonempty = 0;
    for (int i = 0; i < 25; ++i) {
        const std::size_t n = g.integer(1, 2);
        const LaurentPoly f = random_poly(g, n, 4);
        std::vector<std::pair<Rational, Rational>> bounds(n, {Rational(-3), Rational(3)});
        const Polyhedron box = Polyhedron::box(bounds);
        const auto cells = hypersurface_trop(f, box);
        nonempty += !cells.empty();
        for (const auto& w : grid(n, -3, 3, n == 1 ? 6 : 3)) {
            bool on = false;
            for (const auto& c : cells) on = on || c.cell.contains(w);
            CHECK(on == !initial_form(f, w).is_monomial());
        }
        for (const auto& c : cells) {
            // Constant on the relative interior: compare two independent samples.
            const RatVec a = relative_interior_point(c.cell);
            const Generators gen = generators(c.cell);
            RatVec b = a;
            for (std::size_t k = 0; k < n; ++k) b[k] = (a[k] * 2 + gen.vertices.front()[k]) / 3;
            if (!gen.rays.empty())
                for (std::size_t k = 0; k < n; ++k) b[k] += gen.rays.front()[k] * 5;
            CHECK(initial_form(f, a) == c.initial);
            CHECK(initial_form(f, b) == c.initial);
        }
    }
    CHECK(nonempty >= 15);
}

TEST_CASE("property: unit rescaling leaves initial forms unchanged") {
    Gen g(16);
    const ValuedCoeff unit = ValuedCoeff(1) + ValuedCoeff::monomial(g.rational(-2, 2, 2), q(1, 3));
    for (int i = 0; i < 25; ++i) {
        const LaurentPoly f = random_poly(g, 2, 4);
        const LaurentPoly h = f * LaurentPoly::constant(2, unit);
        for (int j = 0; j < 5; ++j) {
            const RatVec w = g.rat_vec(2, -3, 3, 3);
            CHECK(initial_form(f, w) == initial_form(h, w));
        }
        const Polyhedron box = Polyhedron::box({{-3, 3}, {-3, 3}});
        const auto a = hypersurface_trop(f, box);
        const auto b = hypersurface_trop(h, box);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].cell == b[k].cell);
    }
}

TEST_CASE("initial degeneration ideals") {
    const LaurentPoly line = P("x + y + 1");
    auto id = initial_degeneration_ideal({line}, rv({0, 0}), false);
    REQUIRE(id.forms.size() == 1);
    CHECK(to_string(id.forms[0]) == "x + y + 1");
    CHECK(id.provenance == "principal");
    CHECK(id.warnings.empty());
    // At (2,2) only the constant is minimal; the binomial x + y appears at (-2,-2).
    CHECK(to_string(initial_degeneration_ideal({line}, rv({2, 2}), false).forms[0]) == "1");
    CHECK(to_string(initial_degeneration_ideal({line}, rv({-2, -2}), false).forms[0]) == "x + y");
    CHECK(to_string(initial_degeneration_ideal({P("x + 1")}, rv({0}), false).forms[0]) == "x + 1");

    const LaurentPoly a = P("x + y + 1"), b = P("x - y", {"x", "y"});
    CHECK(kind_of([&] { initial_degeneration_ideal({a, b}, rv({0, 0}), false); }) == ErrorKind::InvalidArgument);
    id = initial_degeneration_ideal({a, b}, rv({0, 0}), true);
    CHECK(id.forms.size() == 2);
    CHECK(id.provenance == "asserted tropical basis");
    CHECK(id.warnings == std::vector<std::string>{"UnverifiedBasis"});
    CHECK(initial_degeneration_ideal({}, rv({0, 0}), false).forms.empty());
}

TEST_CASE("initial forms on boundary strata") {
    const StratumLattice half_line(Cone::from_rays(1, {{1}}));
    CHECK(to_string(initial_form_on_stratum(P("1 + t", {"x"}), {1, {}}, half_line)) == "1");

    const StratumLattice ray(Cone::from_rays(2, {{0, 1}}));
    const std::vector<std::string> xy{"x", "y"};
    CHECK(to_string(initial_form_on_stratum(P("x + 1", xy), {1, rv({0})}, ray)) == "x + 1");
    CHECK(to_string(initial_form_on_stratum(P("t^2*x + 1", xy), {1, rv({1})}, ray)) == "1");
    CHECK(to_string(initial_form_on_stratum(P("t^2*x + 1", xy), {1, rv({-2})}, ray)) == "x + 1");
    CHECK(kind_of([&] { initial_form_on_stratum(P("y + 1", xy), {1, rv({0})}, ray); }) ==
          ErrorKind::ExponentOutsideSublattice);
    CHECK(kind_of([&] { initial_form_on_stratum(P("x + 1", xy), {1, rv({0, 0})}, ray); }) ==
          ErrorKind::DimensionMismatch);
}

TEST_CASE("tilted algebras") {
    const std::vector<std::string> x{"x"};
    auto names = [](const TiltedPresentation& t) {
        std::vector<std::string> out;
        for (const auto& g : t.generators) out.push_back(to_string(g, default_variables(t.polyhedron.ambient_dim())));
        return out;
    };
    auto t = tilted_algebra(Polyhedron::point(rv({0})), 1);
    CHECK(names(t) == std::vector<std::string>{"x", "x^-1", "t"});
    CHECK(t.positive_part == std::vector<std::size_t>{2});

    t = tilted_algebra(Polyhedron::box({{0, 1}}), 1);
    CHECK(names(t) == std::vector<std::string>{"x", "t*x^-1", "t"});
    CHECK(t.positive_part == std::vector<std::size_t>{2});

    t = tilted_algebra(Polyhedron::from_halfspaces(2, {{{1, 0}, 0}, {{0, 1}, 0}}), 1);
    CHECK(names(t) == std::vector<std::string>{"x", "y", "t"});

    t = tilted_algebra(Polyhedron::box({{0, q(1, 2)}}), 2);
    CHECK(names(t) == std::vector<std::string>{"x", "t^{1/2}*x^-1", "t^{1/2}"});

    CHECK(kind_of([] { tilted_algebra(Polyhedron::box({{0, q(1, 2)}}), 1); }) == ErrorKind::DenominatorMismatch);
    CHECK(kind_of([] { tilted_algebra(Polyhedron::from_halfspaces(2, {{{1, 0}, 0}}), 1); }) ==
          ErrorKind::NotAdmissible);
    CHECK(kind_of([] { tilted_algebra(Polyhedron::empty(1), 1); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("special fiber relations") {
    using K = FiberRelation::Kind;
    auto rel = special_fiber_relations(tilted_algebra(Polyhedron::box({{0, 1}}), 1));
    std::vector<std::string> text;
    for (const auto& r : rel) text.push_back(to_string(r));
    CHECK(std::count(text.begin(), text.end(), "g3 = 0") == 1);
    CHECK(std::count(text.begin(), text.end(), "g1*g2 = g3") == 1);
    CHECK(std::count(text.begin(), text.end(), "g1*g2 = 0") == 1);
    CHECK(std::find(rel.begin(), rel.end(), FiberRelation{K::Vanishing, {0, 1}, {}}) != rel.end());

    rel = special_fiber_relations(tilted_algebra(Polyhedron::point(rv({0})), 1));
    for (const auto& r : rel)
        if (r.kind == K::Vanishing) CHECK(r.lhs == std::vector<std::size_t>{2});
    CHECK(std::find(rel.begin(), rel.end(), FiberRelation{K::Equality, {0, 1}, {}}) != rel.end());

    rel = special_fiber_relations(tilted_algebra(Polyhedron::from_halfspaces(2, {{{1, 0}, 0}, {{0, 1}, 0}}), 1));
    int vanishing = 0;
    for (const auto& r : rel)
        if (r.kind == K::Vanishing) {
            ++vanishing;
            CHECK(r.lhs == std::vector<std::size_t>{2});
        }
    CHECK(vanishing == 1);
}

TEST_CASE("property: tilted generators satisfy and generate") {
    Gen g(17);
    int tested = 0;
    for (int i = 0; i < 80; ++i) {
        const std::size_t n = g.integer(1, 2);
        const std::int64_t d = g.integer(1, 3);
        std::vector<HalfSpace> hs;
        for (int k = 0; k < static_cast<int>(n) + 2; ++k)
            hs.push_back({g.nonzero_int_vec(n, -2, 2), Rational(g.integer(-3 * d, d), d)});
        const Polyhedron p = Polyhedron::from_halfspaces(n, hs);
        if (p.is_empty() || !p.is_pointed()) continue;
        bool on_level = true;
        for (const auto& h : p.halfspaces()) on_level = on_level && denominator(Rational(h.bound * d)) == 1;
        if (!on_level) continue;
        const auto t = tilted_algebra(p, d);
        ++tested;
        for (const auto& gen : t.generators) CHECK(tilted_minimum(p, gen) >= 0);
        // Every tilted monomial in a box is a nonnegative combination.
        std::set<std::pair<IntVec, Rational>> reach{{IntVec(n, 0), Rational(0)}};
        std::vector<std::pair<IntVec, Rational>> todo(reach.begin(), reach.end());
        while (!todo.empty()) {
            auto [u, gamma] = todo.back();
            todo.pop_back();
            for (const auto& gen : t.generators) {
                IntVec w = u;
                bool in = true;
                for (std::size_t k = 0; k < n; ++k) {
                    w[k] += gen.u[k];
                    if (std::abs(w[k]) > 6) in = false;
                }
                const Rational gg = gamma + gen.gamma;
                if (in && gg <= 12 && reach.insert({w, gg}).second) todo.push_back({w, gg});
            }
        }
        for (const auto& m : tilted_monomials(p, d, 2, 4 * d)) CHECK(reach.count({m.u, m.gamma}) == 1);
    }
    CHECK(tested >= 15);
}
