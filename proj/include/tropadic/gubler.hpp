#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropadic/complexes.hpp"
#include "tropadic/degeneration.hpp"
#include "tropadic/tilted.hpp"

namespace tropadic {

/// A closed embedding of X into the toric variety Y_Sigma, given by the
/// ideal of X ∩ T and optionally by ideals on boundary strata.
struct EmbeddingData {
    Fan fan;
    std::vector<LaurentPoly> generators;
    bool tropical_basis_asserted = false;
    /// Cone index -> generators in K[M_sigma], written with ambient exponents.
    std::map<std::size_t, std::vector<LaurentPoly>> stratum_ideals;
    /// Variable names used when printing; empty means the defaults.
    std::vector<std::string> variables;

    /// Throws ZeroPolynomial, DimensionMismatch, ExponentOutsideSublattice.
    void validate() const;

    friend bool operator==(const EmbeddingData& a, const EmbeddingData& b) {
        return a.fan == b.fan && a.generators == b.generators &&
               a.tropical_basis_asserted == b.tropical_basis_asserted && a.stratum_ideals == b.stratum_ideals;
    }
};

struct CoverDecision {
    bool covered = true;
    std::optional<ExtendedPoint> witness;
    std::vector<std::string> warnings;
};

/// Does |c| contain Trop(X) (within the box, when given)? Boundary strata
/// with supplied ideals are checked too.
CoverDecision covers(const ExtendedComplex& c, const EmbeddingData& e,
                     const std::optional<Polyhedron>& box = std::nullopt);

/// The chart of a face on a boundary stratum of its closure.
struct BoundaryChart {
    std::size_t stratum = 0;
    TiltedPresentation tilted;  // of pi_sigma(P), in M_sigma coordinates
    RatVec sample;              // stratum coordinates
    bool evaluated = false;     // stratum ideal supplied
    std::vector<ResiduePoly> initial_forms;
    bool empty = false;
};

struct Chart {
    std::size_t face = 0;
    std::size_t recession = 0;  // cone index of the recession cone
    TiltedPresentation tilted;
    RatVec sample;
    std::vector<ResiduePoly> initial_forms;
    /// Some sampled initial form is a monomial, hence a unit: X has no
    /// points over the relative interior.
    bool empty = false;
    std::vector<BoundaryChart> boundary;
};

/// Open immersion of the chart of face `from` into the chart of `to`.
struct GluingArrow {
    std::size_t from = 0, to = 0;

    friend bool operator==(const GluingArrow& a, const GluingArrow& b) { return a.from == b.from && a.to == b.to; }
};

struct GublerSkeleton {
    EmbeddingData embedding;
    ExtendedComplex complex;  // the input complex, refined by the corner locus when principal
    std::int64_t denominator = 1;
    std::vector<Chart> charts;  // one per face, same order
    std::vector<GluingArrow> gluing;
    std::vector<std::string> warnings;
};

/// Throws NotACover, DenominatorMismatch, NotAdmissible (when refining by
/// the corner locus leaves the fan).
GublerSkeleton build_skeleton(const EmbeddingData& e, const ExtendedComplex& c, std::int64_t denominator,
                              bool validate_samples = false);

/// Maximal faces of c intersected with the full-dimensional corner regions
/// of f; c itself when it already refines them.
ExtendedComplex refine_by_corner_locus(const ExtendedComplex& c, const LaurentPoly& f);

struct ChartArrow {
    std::size_t source = 0;  // face of the finer skeleton
    std::size_t target = 0;  // face of the coarser skeleton
    /// Image of each generator of the target chart in the source chart's
    /// tilted algebra, as the monomial t^gamma chi^u.
    std::vector<TiltedGenerator> substitution;

    friend bool operator==(const ChartArrow& a, const ChartArrow& b) {
        return a.source == b.source && a.target == b.target && a.substitution == b.substitution;
    }
};

struct SkeletonMorphism {
    RefinementMap map;
    std::vector<ChartArrow> arrows;  // one per face of the finer skeleton

    friend bool operator==(const SkeletonMorphism& a, const SkeletonMorphism& b) {
        return a.map == b.map && a.arrows == b.arrows;
    }
};

/// Throws EmbeddingMismatch, NotARefinement, InvalidArgument when the
/// denominator of the coarse skeleton does not divide the fine one.
SkeletonMorphism skeleton_morphism(const GublerSkeleton& fine, const GublerSkeleton& coarse);

/// (first then second).
SkeletonMorphism compose(const SkeletonMorphism& second, const SkeletonMorphism& first);

struct AdicStratum {
    std::size_t face = 0;
    std::size_t stratum = 0;  // cone index; 0 is the dense torus
    RatVec sample;
    std::vector<ResiduePoly> initial_forms;
};

/// Non-empty strata, one per face and evaluated boundary stratum.
std::vector<AdicStratum> adic_trop_strata(const GublerSkeleton& s);

struct AdaptedModel {
    std::vector<std::size_t> faces;  // indices into the skeleton's complex
    GublerSkeleton sub;
};

std::optional<AdaptedModel> adapted_to(const GublerSkeleton& s, const std::vector<Polyhedron>& v);

}  // namespace tropadic
