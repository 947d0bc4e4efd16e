#pragma once

#include <string>
#include <vector>

#include "tropadic/laurent.hpp"
#include "tropadic/polyhedron.hpp"
#include "tropadic/toric.hpp"

namespace tropadic {

struct TropValue {
    Rational value;
    std::vector<IntVec> argmin;  // ascending
};

/// min_u val(a_u) + <u, w>. Throws ZeroPolynomial.
TropValue trop_eval(const LaurentPoly& f, const RatVec& w);

/// Residues of the terms attaining the minimum. Throws ZeroPolynomial.
ResiduePoly initial_form(const LaurentPoly& f, const RatVec& w);

/// {v : val(a_u) + <u, v> >= 0 for all u in supp(f)}; possibly empty.
Polyhedron monomial_polyhedron(const LaurentPoly& f);

/// f lies in the tilted ring at w: every term has val(a_u) + <u, w> >= 0.
bool in_tilted_ring(const LaurentPoly& f, const RatVec& w);

/// Region of N_Q where the term u attains the minimum.
struct CornerRegion {
    IntVec exponent;
    Polyhedron region;
};

/// Nonempty regions of linearity of trop(f), one per term that is minimal
/// somewhere. Throws ZeroPolynomial.
std::vector<CornerRegion> corner_regions(const LaurentPoly& f);

/// All faces of the regions of linearity, canonically sorted.
std::vector<Polyhedron> corner_subdivision(const LaurentPoly& f);

struct TropCell {
    Polyhedron cell;                 // face of the corner subdivision
    Polyhedron clipped;              // cell ∩ box
    std::vector<IntVec> argmin;      // terms minimal on the relative interior
    ResiduePoly initial;             // constant on the relative interior
};

/// The corner locus of f: faces of the corner subdivision on which at least
/// two terms are minimal, restricted to those meeting the box.
std::vector<TropCell> hypersurface_trop(const LaurentPoly& f, const Polyhedron& box);

struct InitialIdeal {
    std::vector<ResiduePoly> forms;
    std::string provenance;            // "principal", "asserted tropical basis" or "zero ideal"
    std::vector<std::string> warnings; // e.g. "UnverifiedBasis"
};

/// Initial forms of the generators at w. Without an asserted tropical basis
/// only principal ideals are accepted (InvalidArgument otherwise).
InitialIdeal initial_degeneration_ideal(const std::vector<LaurentPoly>& gens, const RatVec& w,
                                        bool tropical_basis_asserted);

/// Initial form inside K[M_sigma] at a point of the stratum of sigma. The
/// result keeps ambient exponents. Throws ExponentOutsideSublattice.
ResiduePoly initial_form_on_stratum(const LaurentPoly& f, const ExtendedPoint& x,
                                    const StratumLattice& lattice);

}  // namespace tropadic
