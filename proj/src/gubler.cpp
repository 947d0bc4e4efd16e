#include "tropadic/gubler.hpp"

#include <algorithm>
#include <set>

#include "tropadic/error.hpp"

namespace tropadic {

namespace {

LaurentPoly to_stratum_coordinates(const LaurentPoly& f, const StratumLattice& lattice) {
    LaurentPoly out(lattice.quotient_rank());
    for (const auto& [u, a] : f.terms()) {
        const auto c = lattice.coordinates(u);
        if (!c) throw Error(ErrorKind::ExponentOutsideSublattice, "stratum ideal exponent is not in M_sigma");
        out.add_term(*c, a);
    }
    return out;
}

/// Trop of the ideal within the box: the corner locus of a single
/// generator, or the intersection of corner loci for an asserted basis.
std::vector<Polyhedron> trop_cells(const std::vector<LaurentPoly>& gens, const Polyhedron& box) {
    if (gens.empty()) return {box};
    std::vector<Polyhedron> cells;
    for (const auto& cell : hypersurface_trop(gens.front(), box)) cells.push_back(cell.clipped);
    for (std::size_t k = 1; k < gens.size(); ++k) {
        std::set<Polyhedron> next;
        for (const auto& other : hypersurface_trop(gens[k], box))
            for (const auto& c : cells) {
                Polyhedron m = c.intersect(other.clipped);
                if (!m.is_empty()) next.insert(std::move(m));
            }
        cells.assign(next.begin(), next.end());
    }
    return cells;
}

bool contains_cone(const Fan& fan, std::size_t rec, std::size_t k) {
    const auto closed = fan.closed_faces_of(rec);
    return std::binary_search(closed.begin(), closed.end(), k);
}

std::string point_text(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

bool any_monomial(const std::vector<ResiduePoly>& forms) {
    return std::any_of(forms.begin(), forms.end(), [](const ResiduePoly& r) { return r.is_monomial(); });
}

}  // namespace

void EmbeddingData::validate() const {
    const std::size_t n = fan.ambient_dim();
    for (const auto& g : generators) {
        if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "ideal generators must be nonzero");
        if (g.rank() != n) throw Error(ErrorKind::DimensionMismatch, "generator rank differs from the fan");
    }
    for (const auto& [k, gens] : stratum_ideals) {
        if (k >= fan.size()) throw Error(ErrorKind::InvalidArgument, "stratum ideal for an unknown cone");
        const StratumLattice lattice(fan.cone(k));
        for (const auto& g : gens) {
            if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "stratum ideal generators must be nonzero");
            if (g.rank() != n) throw Error(ErrorKind::DimensionMismatch, "stratum generator rank differs from the fan");
            to_stratum_coordinates(g, lattice);
        }
    }
}

CoverDecision covers(const ExtendedComplex& c, const EmbeddingData& e, const std::optional<Polyhedron>& box) {
    e.validate();
    if (c.is_family()) throw Error(ErrorKind::FamilyNotSupported, "cover checks need a finite complex");
    const Fan& fan = c.fan();
    if (fan != e.fan) throw Error(ErrorKind::EmbeddingMismatch, "complex and embedding use different fans");
    const std::size_t n = fan.ambient_dim();
    if (box && box->ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "box dimension");
    if (e.generators.size() > 1 && !e.tropical_basis_asserted)
        throw Error(ErrorKind::InvalidArgument, "several generators need an asserted tropical basis");

    CoverDecision d;
    if (e.generators.size() > 1) d.warnings.push_back("UnverifiedBasis");
    const Polyhedron region = box ? *box : Polyhedron::universe(n);
    std::vector<std::pair<Polyhedron, std::size_t>> maximal;
    for (auto i : c.maximal_faces()) {
        const auto adm = is_admissible(c.face(i), fan);
        if (!adm.admissible) throw Error(ErrorKind::NotAdmissible, to_string(c.face(i)) + ": " + adm.reason);
        maximal.emplace_back(c.face(i), *adm.cone);
    }
    std::vector<Polyhedron> pieces;
    for (const auto& [p, rec] : maximal) pieces.push_back(p);
    for (const auto& cell : trop_cells(e.generators, region)) {
        const CoverResult r = covers_region(cell, pieces);
        if (!r.covered) {
            d.covered = false;
            d.witness = r.witness;
            return d;
        }
    }
    for (const auto& [k, gens] : e.stratum_ideals) {
        if (k == 0) continue;
        const StratumLattice lattice(fan.cone(k));
        std::vector<LaurentPoly> local;
        for (const auto& g : gens) local.push_back(to_stratum_coordinates(g, lattice));
        const Polyhedron stratum_box = box ? project(*box, lattice) : Polyhedron::universe(lattice.quotient_rank());
        std::vector<Polyhedron> stratum_pieces;
        for (const auto& [p, rec] : maximal)
            if (contains_cone(fan, rec, k)) stratum_pieces.push_back(project(p, lattice));
        for (const auto& cell : trop_cells(local, stratum_box)) {
            const CoverResult r = covers_region(cell, stratum_pieces);
            if (!r.covered) {
                d.covered = false;
                d.witness = ExtendedPoint{k, r.witness->coords};
                return d;
            }
        }
    }
    return d;
}

ExtendedComplex refine_by_corner_locus(const ExtendedComplex& c, const LaurentPoly& f) {
    std::vector<Polyhedron> regions;
    for (const auto& r : corner_regions(f))
        if (r.region.dim() == static_cast<int>(c.ambient_dim())) regions.push_back(r.region);
    std::set<Polyhedron> cells;
    for (auto i : c.maximal_faces())
        for (const auto& r : regions) {
            Polyhedron m = c.face(i).intersect(r);
            if (m.is_empty()) continue;
            const auto adm = is_admissible(m, c.fan());
            if (!adm.admissible)
                throw Error(ErrorKind::NotAdmissible, "refining by the corner locus gives " + to_string(m) + ": " +
                                                          adm.reason + "; supply a finer complex");
            cells.insert(std::move(m));
        }
    ExtendedComplex out = ExtendedComplex::from_polyhedra(c.fan(), {cells.begin(), cells.end()});
    return out == c ? c : out;
}

GublerSkeleton build_skeleton(const EmbeddingData& e, const ExtendedComplex& c, std::int64_t denominator,
                              bool validate_samples) {
    if (denominator <= 0) throw Error(ErrorKind::InvalidArgument, "denominator must be positive");
    const CoverDecision cov = covers(c, e);
    if (!cov.covered)
        throw Error(ErrorKind::NotACover, "the complex misses the tropicalization at stratum " +
                                              std::to_string(cov.witness->stratum) + " point " +
                                              point_text(cov.witness->coords));
    GublerSkeleton s;
    s.embedding = e;
    s.denominator = denominator;
    s.warnings = cov.warnings;
    s.complex = e.generators.size() == 1 ? refine_by_corner_locus(c, e.generators.front()) : c;
    const Fan& fan = s.complex.fan();

    for (std::size_t i = 0; i < s.complex.size(); ++i) {
        const Polyhedron& face = s.complex.face(i);
        const auto adm = is_admissible(face, fan);
        if (!adm.admissible) throw Error(ErrorKind::NotAdmissible, to_string(face) + ": " + adm.reason);
        Chart ch;
        ch.face = i;
        ch.recession = *adm.cone;
        ch.tilted = tilted_algebra(face, denominator);
        ch.sample = relative_interior_point(face);
        if (!e.generators.empty())
            ch.initial_forms = initial_degeneration_ideal(e.generators, ch.sample, e.tropical_basis_asserted).forms;
        ch.empty = any_monomial(ch.initial_forms);
        if (validate_samples && face.dim() > 0 && !e.generators.empty()) {
            const RatVec v = generators(face).vertices.front();
            RatVec second(ch.sample.size());
            for (std::size_t k = 0; k < second.size(); ++k) second[k] = (ch.sample[k] + v[k]) / 2;
            const auto forms = initial_degeneration_ideal(e.generators, second, e.tropical_basis_asserted).forms;
            if (forms != ch.initial_forms)
                s.warnings.push_back("NonConstantInitialForms: face " + std::to_string(i));
        }
        for (const auto& [k, piece] : closure_strata(face, fan).strata) {
            if (k == 0) continue;
            BoundaryChart b;
            b.stratum = k;
            b.tilted = tilted_algebra(piece, denominator);
            b.sample = relative_interior_point(piece);
            if (auto it = e.stratum_ideals.find(k); it != e.stratum_ideals.end()) {
                b.evaluated = true;
                const StratumLattice lattice(fan.cone(k));
                for (const auto& g : it->second)
                    b.initial_forms.push_back(initial_form_on_stratum(g, {k, b.sample}, lattice));
                b.empty = any_monomial(b.initial_forms);
            }
            ch.boundary.push_back(std::move(b));
        }
        s.charts.push_back(std::move(ch));
    }
    for (std::size_t j = 0; j < s.complex.size(); ++j)
        for (auto i : s.complex.faces_of(j)) s.gluing.push_back({i, j});
    return s;
}

SkeletonMorphism skeleton_morphism(const GublerSkeleton& fine, const GublerSkeleton& coarse) {
    if (!(fine.embedding == coarse.embedding))
        throw Error(ErrorKind::EmbeddingMismatch, "skeletons belong to different embeddings");
    if (fine.denominator % coarse.denominator != 0)
        throw Error(ErrorKind::InvalidArgument, "the coarse denominator must divide the fine one");
    SkeletonMorphism m;
    m.map = refinement_map(fine.complex, coarse.complex);
    for (std::size_t i = 0; i < fine.charts.size(); ++i) {
        const std::size_t j = m.map.assignment[i];
        ChartArrow a{i, j, coarse.charts[j].tilted.generators};
        for (const auto& g : a.substitution)
            if (tilted_minimum(fine.complex.face(i), g) < 0)
                throw Error(ErrorKind::NotARefinement, "a generator of face " + std::to_string(j) +
                                                           " is not regular on face " + std::to_string(i));
        m.arrows.push_back(std::move(a));
    }
    return m;
}

SkeletonMorphism compose(const SkeletonMorphism& second, const SkeletonMorphism& first) {
    SkeletonMorphism out;
    out.map = compose(second.map, first.map);
    for (const auto& a : first.arrows) {
        const ChartArrow& b = second.arrows.at(a.target);
        out.arrows.push_back({a.source, b.target, b.substitution});
    }
    return out;
}

std::vector<AdicStratum> adic_trop_strata(const GublerSkeleton& s) {
    std::vector<AdicStratum> out;
    for (const auto& ch : s.charts) {
        if (!ch.empty) out.push_back({ch.face, 0, ch.sample, ch.initial_forms});
        for (const auto& b : ch.boundary)
            if (b.evaluated && !b.empty) out.push_back({ch.face, b.stratum, b.sample, b.initial_forms});
    }
    return out;
}

std::optional<AdaptedModel> adapted_to(const GublerSkeleton& s, const std::vector<Polyhedron>& v) {
    const auto faces = is_union_of_faces(v, s.complex);
    if (!faces) return std::nullopt;
    AdaptedModel out;
    out.faces = *faces;
    GublerSkeleton& sub = out.sub;
    sub.embedding = s.embedding;
    sub.denominator = s.denominator;
    sub.warnings = s.warnings;
    std::vector<Polyhedron> polys;
    for (auto i : *faces) polys.push_back(s.complex.face(i));
    sub.complex = ExtendedComplex::from_polyhedra(s.complex.fan(), polys);
    for (std::size_t i = 0; i < sub.complex.size(); ++i) {
        Chart ch = s.charts[*s.complex.index_of(sub.complex.face(i))];
        ch.face = i;
        sub.charts.push_back(std::move(ch));
    }
    for (std::size_t j = 0; j < sub.complex.size(); ++j)
        for (auto i : sub.complex.faces_of(j)) sub.gluing.push_back({i, j});
    return out;
}

}  // namespace tropadic
