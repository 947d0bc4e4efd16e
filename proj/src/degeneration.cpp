#include "tropadic/degeneration.hpp"

#include <algorithm>
#include <set>

#include "tropadic/error.hpp"

namespace tropadic {

namespace {

void require_nonzero(const LaurentPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no tropicalization");
}

void require_rank(const LaurentPoly& f, const RatVec& w) {
    if (f.rank() != w.size()) throw Error(ErrorKind::DimensionMismatch, "point and polynomial ranks differ");
}

}  // namespace

TropValue trop_eval(const LaurentPoly& f, const RatVec& w) {
    require_nonzero(f);
    require_rank(f, w);
    TropValue out;
    bool first = true;
    for (const auto& [u, a] : f.terms()) {
        const Rational v = *a.valuation() + dot(u, w);
        if (first || v < out.value) {
            out.value = v;
            out.argmin.clear();
            first = false;
        }
        if (v == out.value) out.argmin.push_back(u);
    }
    return out;
}

ResiduePoly initial_form(const LaurentPoly& f, const RatVec& w) {
    const TropValue tv = trop_eval(f, w);
    ResiduePoly r{f.rank(), {}};
    for (const auto& u : tv.argmin) r.terms.emplace(u, f.terms().at(u).residue());
    return r;
}

Polyhedron monomial_polyhedron(const LaurentPoly& f) {
    const std::size_t n = f.rank();
    std::vector<HalfSpace> hs;
    for (const auto& [u, a] : f.terms()) {
        const Rational val = *a.valuation();
        if (is_zero(u)) {
            if (val < 0) return Polyhedron::empty(n);
            continue;
        }
        hs.push_back({u, -val});
    }
    return Polyhedron::from_halfspaces(n, hs);
}

bool in_tilted_ring(const LaurentPoly& f, const RatVec& w) {
    require_rank(f, w);
    for (const auto& [u, a] : f.terms())
        if (*a.valuation() + dot(u, w) < 0) return false;
    return true;
}

std::vector<CornerRegion> corner_regions(const LaurentPoly& f) {
    require_nonzero(f);
    const std::size_t n = f.rank();
    std::vector<CornerRegion> out;
    for (const auto& [u, a] : f.terms()) {
        // val(a_u) + <u, w> <= val(a_v) + <v, w>  <=>  <v - u, w> >= val(a_u) - val(a_v)
        std::vector<HalfSpace> hs;
        for (const auto& [v, b] : f.terms()) {
            if (v == u) continue;
            IntVec d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = v[i] - u[i];
            hs.push_back({d, *a.valuation() - *b.valuation()});
        }
        Polyhedron r = Polyhedron::from_halfspaces(n, hs);
        if (!r.is_empty()) out.push_back({u, std::move(r)});
    }
    return out;
}

std::vector<Polyhedron> corner_subdivision(const LaurentPoly& f) {
    std::set<Polyhedron> all;
    for (const auto& r : corner_regions(f))
        for (auto& face : faces(r.region)) all.insert(std::move(face));
    return {all.begin(), all.end()};
}

std::vector<TropCell> hypersurface_trop(const LaurentPoly& f, const Polyhedron& box) {
    require_nonzero(f);
    if (box.ambient_dim() != f.rank()) throw Error(ErrorKind::DimensionMismatch, "box and polynomial ranks differ");
    std::vector<TropCell> out;
    if (f.size() < 2) return out;
    for (const auto& cell : corner_subdivision(f)) {
        const RatVec w = relative_interior_point(cell);
        const TropValue tv = trop_eval(f, w);
        if (tv.argmin.size() < 2) continue;
        Polyhedron clipped = cell.intersect(box);
        if (clipped.is_empty()) continue;
        out.push_back({cell, std::move(clipped), tv.argmin, initial_form(f, w)});
    }
    return out;
}

InitialIdeal initial_degeneration_ideal(const std::vector<LaurentPoly>& gens, const RatVec& w,
                                        bool tropical_basis_asserted) {
    InitialIdeal out;
    if (gens.size() > 1 && !tropical_basis_asserted)
        throw Error(ErrorKind::InvalidArgument,
                    "several generators need an asserted tropical basis; initial forms of arbitrary "
                    "generators need not generate the initial ideal");
    for (const auto& g : gens) out.forms.push_back(initial_form(g, w));
    if (gens.empty()) {
        out.provenance = "zero ideal";
    } else if (gens.size() == 1) {
        out.provenance = "principal";
    } else {
        out.provenance = "asserted tropical basis";
        out.warnings.push_back("UnverifiedBasis");
    }
    return out;
}

ResiduePoly initial_form_on_stratum(const LaurentPoly& f, const ExtendedPoint& x, const StratumLattice& lattice) {
    require_nonzero(f);
    if (f.rank() != lattice.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "polynomial rank and lattice");
    if (x.coords.size() != lattice.quotient_rank())
        throw Error(ErrorKind::DimensionMismatch, "stratum coordinates have the wrong length");
    // <u, w> for u = sum c_i m_i and w with coordinates <m_i, w> = x_i.
    bool first = true;
    Rational best;
    std::vector<IntVec> argmin;
    for (const auto& [u, a] : f.terms()) {
        const auto c = lattice.coordinates(u);
        if (!c)
            throw Error(ErrorKind::ExponentOutsideSublattice,
                        "exponent " + monomial_string(u, default_variables(u.size())) + " is not in M_sigma");
        Rational v = *a.valuation();
        for (std::size_t i = 0; i < c->size(); ++i) v += (*c)[i] * x.coords[i];
        if (first || v < best) {
            best = v;
            argmin.clear();
            first = false;
        }
        if (v == best) argmin.push_back(u);
    }
    ResiduePoly r{f.rank(), {}};
    for (const auto& u : argmin) r.terms.emplace(u, f.terms().at(u).residue());
    return r;
}

}  // namespace tropadic
