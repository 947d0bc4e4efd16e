#include "tropadic/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "tropadic/error.hpp"

namespace tropadic {

namespace {

using linalg::IntMatrix;
using linalg::RatMatrix;

IntMatrix span_generators(const Cone& sigma) {
    auto [rays, lin] = sigma.generators();
    IntMatrix out = rays;
    out.insert(out.end(), lin.begin(), lin.end());
    return out;
}

}  // namespace

StratumLattice::StratumLattice(const Cone& sigma) : cone_(sigma) {
    basis_ = linalg::integer_kernel(span_generators(sigma), sigma.ambient_dim());
}

RatVec StratumLattice::project(const RatVec& v) const {
    RatVec out;
    out.reserve(basis_.size());
    for (const auto& m : basis_) out.push_back(dot(m, v));
    return out;
}

IntVec StratumLattice::project(const IntVec& v) const {
    IntVec out;
    out.reserve(basis_.size());
    for (const auto& m : basis_) out.push_back(dot(m, v));
    return out;
}

std::optional<IntVec> StratumLattice::coordinates(const IntVec& u) const {
    if (u.size() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "character length");
    if (basis_.empty()) {
        if (is_zero(u)) return IntVec{};
        return std::nullopt;
    }
    auto c = linalg::span_coordinates(basis_, to_rational(u));
    if (!c) return std::nullopt;
    IntVec out;
    for (const auto& x : *c) {
        if (denominator(x) != 1) return std::nullopt;
        out.push_back(to_int64(x));
    }
    return out;
}

IntVec StratumLattice::embed(const IntVec& coords) const {
    if (coords.size() != basis_.size()) throw Error(ErrorKind::DimensionMismatch, "stratum coordinates");
    IntVec u(ambient_dim(), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t k = 0; k < u.size(); ++k) u[k] += coords[i] * basis_[i][k];
    return u;
}

Cone dual_cone(const Cone& sigma) {
    std::vector<IntVec> rays, lin;
    for (const auto& h : sigma.polyhedron().inequalities()) rays.push_back(h.normal);
    for (const auto& h : sigma.polyhedron().equations()) lin.push_back(h.normal);
    return Cone::from_rays(sigma.ambient_dim(), rays, lin);
}

namespace {

// Simplicial cones covering a pointed cone, as lists of rays.
std::vector<std::vector<IntVec>> triangulate(const Polyhedron& cone, const std::vector<IntVec>& rays) {
    const int d = cone.dim();
    if (d <= 0) return {};
    if (static_cast<int>(rays.size()) == d) return {rays};
    const IntVec& apex = rays.front();
    std::vector<std::vector<IntVec>> out;
    for (std::size_t i = 0; i < cone.inequalities().size(); ++i) {
        const HalfSpace& h = cone.inequalities()[i];
        if (dot(h.normal, apex) == 0) continue;
        std::vector<IntVec> on_facet;
        for (const auto& r : rays)
            if (dot(h.normal, r) == 0) on_facet.push_back(r);
        for (auto& simplex : triangulate(cone.facet(i), on_facet)) {
            simplex.insert(simplex.begin(), apex);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

// Nonzero lattice points sum lambda_i s_i with 0 <= lambda_i < 1, for a
// full-rank square system of generators.
void parallelepiped_points(const std::vector<IntVec>& gens, std::set<IntVec>& out) {
    const std::size_t k = gens.size();
    IntMatrix s(k, IntVec(k));  // columns are generators
    RatMatrix sr(k, RatVec(k));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i) {
            s[i][j] = gens[j][i];
            sr[i][j] = gens[j][i];
        }
    const linalg::ColumnEchelon ce = linalg::column_echelon(s, k);
    std::vector<std::int64_t> diag(k);
    for (std::size_t i = 0; i < k; ++i) diag[i] = std::abs(to_int64(ce.h[i][i]));

    IntVec z(k, 0);
    for (;;) {
        const auto lambda = linalg::solve_square(sr, to_rational(z));
        IntVec pt(k, 0);
        RatVec frac(k);
        for (std::size_t j = 0; j < k; ++j) frac[j] = (*lambda)[j] - floor((*lambda)[j]);
        for (std::size_t i = 0; i < k; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < k; ++j) acc += frac[j] * s[i][j];
            pt[i] = to_int64(acc);
        }
        if (!is_zero(pt)) out.insert(pt);
        std::size_t i = 0;
        while (i < k && ++z[i] == diag[i]) z[i++] = 0;
        if (i == k) break;
    }
}

std::vector<IntVec> hilbert_basis_full(const Cone& sigma) {
    const std::vector<IntVec> rays = sigma.rays();
    std::set<IntVec> cand(rays.begin(), rays.end());
    for (const auto& simplex : triangulate(sigma.polyhedron(), rays)) parallelepiped_points(simplex, cand);
    std::vector<IntVec> out;
    for (const auto& g : cand) {
        bool reducible = false;
        for (const auto& h : cand) {
            if (h == g) continue;
            IntVec diff(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) diff[i] = g[i] - h[i];
            if (sigma.contains(to_rational(diff))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.push_back(g);
    }
    return out;
}

// Expresses a cone living in span(basis) in the coordinates of that basis.
Cone pull_back(const Cone& sigma, const IntMatrix& basis) {
    const std::size_t k = basis.size();
    std::vector<HalfSpace> ineqs;
    for (const auto& h : sigma.polyhedron().inequalities()) {
        IntVec a(k);
        for (std::size_t i = 0; i < k; ++i) a[i] = dot(basis[i], h.normal);
        ineqs.push_back({a, 0});
    }
    return Cone(Polyhedron::from_halfspaces(k, ineqs));
}

IntVec push_forward(const IntVec& c, const IntMatrix& basis, std::size_t n) {
    IntVec v(n, 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t k = 0; k < n; ++k) v[k] += c[i] * basis[i][k];
    return v;
}

}  // namespace

std::vector<IntVec> hilbert_basis(const Cone& sigma) {
    if (!sigma.is_pointed()) throw Error(ErrorKind::NotPointed, "Hilbert basis of a cone containing a line");
    const std::size_t n = sigma.ambient_dim();
    if (sigma.dim() == 0) return {};
    if (sigma.dim() == static_cast<int>(n)) return hilbert_basis_full(sigma);
    IntMatrix eqs;
    for (const auto& h : sigma.polyhedron().equations()) eqs.push_back(h.normal);
    const IntMatrix span_basis = linalg::integer_kernel(eqs, n);
    std::vector<IntVec> out;
    for (const auto& c : hilbert_basis_full(pull_back(sigma, span_basis)))
        out.push_back(push_forward(c, span_basis, n));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> hilbert_basis(const Cone& sigma, const linalg::IntMatrix& lattice_basis) {
    const std::size_t n = sigma.ambient_dim();
    if (lattice_basis.size() != n || linalg::rank(
            [&] {
                RatMatrix m;
                for (const auto& b : lattice_basis) m.push_back(to_rational(b));
                return m;
            }(),
            n) != n)
        throw Error(ErrorKind::InvalidArgument, "lattice basis must have full rank");
    if (!sigma.is_pointed()) throw Error(ErrorKind::NotPointed, "Hilbert basis of a cone containing a line");
    // In lattice coordinates c (v = sum c_i b_i) the constraint <a, v> >= 0
    // becomes <(<a, b_i>)_i, c> >= 0.
    std::vector<HalfSpace> ineqs, eqs;
    for (const auto& h : sigma.polyhedron().inequalities()) {
        IntVec a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = dot(lattice_basis[i], h.normal);
        ineqs.push_back({a, 0});
    }
    for (const auto& h : sigma.polyhedron().equations()) {
        IntVec a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = dot(lattice_basis[i], h.normal);
        eqs.push_back({a, 0});
    }
    const Cone local(Polyhedron::from_halfspaces(n, ineqs, eqs));
    std::vector<IntVec> out;
    for (const auto& c : hilbert_basis(local)) out.push_back(push_forward(c, lattice_basis, n));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> semigroup_generators(const Cone& sigma) {
    if (sigma.is_pointed()) return hilbert_basis(sigma);
    const std::size_t n = sigma.ambient_dim();
    const IntMatrix lin = sigma.polyhedron().lineality_basis();
    const IntMatrix quot = linalg::integer_kernel(lin, n);  // basis of L^perp ∩ Z^n
    const std::size_t k = quot.size();

    std::vector<HalfSpace> ineqs;
    for (const auto& h : sigma.polyhedron().inequalities()) {
        auto c = linalg::span_coordinates(quot, to_rational(h.normal));
        if (!c) throw Error(ErrorKind::InvalidArgument, "constraint normal not orthogonal to lineality");
        ineqs.push_back({primitive(*c), 0});
    }
    std::vector<HalfSpace> eqs;
    for (const auto& h : sigma.polyhedron().equations()) {
        auto c = linalg::span_coordinates(quot, to_rational(h.normal));
        if (!c) throw Error(ErrorKind::InvalidArgument, "constraint normal not orthogonal to lineality");
        eqs.push_back({primitive(*c), 0});
    }
    const Cone pointed(Polyhedron::from_halfspaces(k, ineqs, eqs));

    // quot * V = [H | 0] with H unimodular lower triangular.
    const linalg::ColumnEchelon ce = linalg::column_echelon(quot, n);
    RatMatrix gram(lin.size(), RatVec(lin.size()));
    for (std::size_t i = 0; i < lin.size(); ++i)
        for (std::size_t j = 0; j < lin.size(); ++j) gram[i][j] = dot(lin[i], lin[j]);

    std::set<IntVec> out;
    for (const auto& l : lin) {
        out.insert(l);
        IntVec neg = l;
        for (auto& x : neg) x = -x;
        out.insert(neg);
    }
    for (const auto& y : hilbert_basis(pointed)) {
        std::vector<Integer> z(k);
        for (std::size_t i = 0; i < k; ++i) {
            Integer acc = y[i];
            for (std::size_t j = 0; j < i; ++j) acc -= ce.h[i][j] * z[j];
            z[i] = acc / ce.h[i][i];
        }
        IntVec x(n);
        for (std::size_t r = 0; r < n; ++r) {
            Integer acc = 0;
            for (std::size_t j = 0; j < k; ++j) acc += ce.v[r][j] * z[j];
            x[r] = to_int64(acc);
        }
        // Canonical lift: lineality coordinates of the orthogonal projection in [0, 1).
        RatVec rhs(lin.size());
        for (std::size_t i = 0; i < lin.size(); ++i) rhs[i] = dot(lin[i], to_rational(x));
        const auto coef = linalg::solve_square(gram, rhs);
        for (std::size_t i = 0; i < lin.size(); ++i) {
            const std::int64_t f = to_int64(floor((*coef)[i]));
            for (std::size_t r = 0; r < n; ++r) x[r] -= f * lin[i][r];
        }
        out.insert(x);
    }
    return {out.begin(), out.end()};
}

Polyhedron project(const Polyhedron& p, const StratumLattice& lattice) {
    const VRep v = vrep(p);
    std::vector<RatVec> verts;
    for (const auto& x : v.vertices) verts.push_back(lattice.project(x));
    std::vector<IntVec> rays;
    for (const auto& r : v.rays) {
        IntVec pr = lattice.project(r);
        if (!is_zero(pr)) rays.push_back(std::move(pr));
    }
    return Polyhedron::from_generators(lattice.quotient_rank(), verts, rays);
}

ExtendedPolyhedron closure_strata(const Polyhedron& p, const Fan& fan) {
    const Admissibility adm = is_admissible(p, fan);
    if (!adm.admissible) throw Error(ErrorKind::NotAdmissible, adm.reason);
    ExtendedPolyhedron e{p, *adm.cone, {}};
    for (auto j : fan.closed_faces_of(*adm.cone)) {
        if (j == 0) {
            e.strata.emplace(0, p);
            continue;
        }
        e.strata.emplace(j, project(p, StratumLattice(fan.cone(j))));
    }
    return e;
}

bool extended_contains(const ExtendedPolyhedron& e, const ExtendedPoint& x) {
    auto it = e.strata.find(x.stratum);
    if (it == e.strata.end()) return false;
    if (it->second.ambient_dim() != x.coords.size())
        throw Error(ErrorKind::DimensionMismatch, "extended point coordinates");
    return it->second.contains(x.coords);
}

}  // namespace tropadic
