#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tropadic/fan.hpp"

namespace tropadic {

/// Coordinates on the stratum N_Q / span(sigma) of the extended
/// tropicalization, fixed by a lattice basis of M_sigma = span(sigma)^perp ∩ M.
class StratumLattice {
public:
    explicit StratumLattice(const Cone& sigma);

    const Cone& cone() const { return cone_; }
    std::size_t ambient_dim() const { return cone_.ambient_dim(); }
    std::size_t quotient_rank() const { return basis_.size(); }
    /// Rows form a basis of M_sigma in Hermite normal form.
    const linalg::IntMatrix& dual_basis() const { return basis_; }

    /// Image of v under N_Q -> N_Q / span(sigma) ≅ Q^r.
    RatVec project(const RatVec& v) const;
    IntVec project(const IntVec& v) const;
    /// Coordinates of u in the basis of M_sigma; nullopt if u is not in M_sigma.
    std::optional<IntVec> coordinates(const IntVec& u) const;
    /// The character of M with the given M_sigma coordinates.
    IntVec embed(const IntVec& coords) const;

private:
    Cone cone_;
    linalg::IntMatrix basis_;
};

/// A point of trop(Y_Sigma): a stratum (cone index) and coordinates on
/// N_Q / span(cone).
struct ExtendedPoint {
    std::size_t stratum = 0;
    RatVec coords;

    friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
        return a.stratum == b.stratum && a.coords == b.coords;
    }
};

/// The closure of an admissible polyhedron in trop(Y_Sigma), stored as its
/// pieces on each stratum it meets.
struct ExtendedPolyhedron {
    Polyhedron finite;
    std::size_t recession_index = 0;
    /// Cone index -> projected polyhedron pi_tau(P) in stratum coordinates.
    std::map<std::size_t, Polyhedron> strata;

    friend bool operator==(const ExtendedPolyhedron& a, const ExtendedPolyhedron& b) {
        return a.finite == b.finite && a.strata == b.strata;
    }
};

/// {u : <u, v> >= 0 for all v in sigma}.
Cone dual_cone(const Cone& sigma);

/// Minimal generating set of the semigroup sigma ∩ Z^n, by triangulating
/// sigma and enumerating the fundamental parallelepiped of every simplicial
/// piece. Throws NotPointed.
std::vector<IntVec> hilbert_basis(const Cone& sigma);

/// Same, for the lattice with the given basis (rows, full rank).
std::vector<IntVec> hilbert_basis(const Cone& sigma, const linalg::IntMatrix& lattice_basis);

/// Semigroup generators of sigma ∩ Z^n for a cone that may contain lines:
/// ± a lattice basis of the lineality space followed by canonical lifts of
/// the Hilbert basis of the pointed quotient. Sorted lexicographically.
std::vector<IntVec> semigroup_generators(const Cone& sigma);

/// Image of a polyhedron in stratum coordinates.
Polyhedron project(const Polyhedron& p, const StratumLattice& lattice);

/// Throws NotAdmissible.
ExtendedPolyhedron closure_strata(const Polyhedron& p, const Fan& fan);

bool extended_contains(const ExtendedPolyhedron& e, const ExtendedPoint& x);

}  // namespace tropadic
