#pragma once

#include <string>
#include <vector>

#include "tropadic/polyhedron.hpp"

namespace tropadic {

/// The monomial t^gamma chi^u.
struct TiltedGenerator {
    IntVec u;
    Rational gamma;

    friend bool operator==(const TiltedGenerator& a, const TiltedGenerator& b) {
        return a.u == b.u && a.gamma == b.gamma;
    }
};

/// Monomial generators of R[M]^P at level D: the semigroup
/// {(u, gamma) in M x (1/D)Z : gamma + <u, v> >= 0 for all v in P}.
struct TiltedPresentation {
    Polyhedron polyhedron;
    std::int64_t denominator = 1;
    /// Ordered by u descending lexicographically, then gamma ascending; the
    /// uniformizer t^{1/D} is always present and always last.
    std::vector<TiltedGenerator> generators;
    /// Indices of generators with gamma + <u, v> > 0 on all of P, i.e. those
    /// vanishing on the special fiber.
    std::vector<std::size_t> positive_part;

    std::size_t uniformizer() const { return generators.size() - 1; }
};

/// Throws DenominatorMismatch when a bound of P is not in (1/D)Z, and
/// NotAdmissible when P is empty or not pointed.
TiltedPresentation tilted_algebra(const Polyhedron& p, std::int64_t denominator);

/// min over P of gamma + <u, v>; the generator must lie in R[M]^P.
Rational tilted_minimum(const Polyhedron& p, const TiltedGenerator& g);

/// Cone of (u, D*gamma) in Z^n x Z cut out by the defining inequalities.
Cone tilted_cone(const Polyhedron& p, std::int64_t denominator);

struct FiberRelation {
    enum class Kind {
        Vanishing,         // the product of lhs is 0 modulo m
        Equality,          // the product of lhs equals the product of rhs (1 when rhs is empty)
    };
    Kind kind;
    std::vector<std::size_t> lhs;
    std::vector<std::size_t> rhs;

    friend bool operator==(const FiberRelation& a, const FiberRelation& b) {
        return a.kind == b.kind && a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

/// Degree <= 2 binomial and monomial relations among the generator residues
/// on the special fiber: single generators in the positive part vanish;
/// products g_i g_j equal to a generator, to another product or to 1 give
/// equalities; products with positive minimum whose factors survive vanish.
std::vector<FiberRelation> special_fiber_relations(const TiltedPresentation& t);

/// "t*x^-1", "x", "t".
std::string to_string(const TiltedGenerator& g, const std::vector<std::string>& vars);
/// "g1*g2 = g3", "g3 = 0", "g1*g2 = 1" with 1-based generator names.
std::string to_string(const FiberRelation& r);

}  // namespace tropadic
