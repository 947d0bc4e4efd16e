#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropadic/fan.hpp"
#include "tropadic/toric.hpp"

namespace tropadic {

/// An interval of Q with open, closed or infinite ends; used to describe
/// supports in rank one.
struct Interval {
    Rational lo, hi;
    bool lo_closed = true, hi_closed = true;
    bool lo_inf = false, hi_inf = false;

    bool contains(const Rational& x) const;
    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed && a.hi_closed == b.hi_closed &&
               a.lo_inf == b.lo_inf && a.hi_inf == b.hi_inf;
    }
};

/// "[0,1]", "(0,1]", "{0}", "[1,inf)".
std::string to_string(const Interval& i);

/// An infinite (or long) family of intervals hull(b(n), b(n+1)) in Q^1 for
/// n >= n_min, with breakpoints b(n) = c/(n+d) + e or b(n) = c r^n + e
/// (0 < r < 1), together with finitely many isolated faces.
struct Rank1Family {
    enum class Rule { Harmonic, Geometric };
    Rule rule = Rule::Harmonic;
    Rational c = 1, d = 0, e = 0, r = Rational(1, 2);
    std::int64_t n_min = 1;
    std::optional<std::int64_t> n_max;  // last interval index; nullopt = infinite
    std::vector<Polyhedron> isolated;   // points or bounded intervals

    /// Parses "1/n", "c/(n+d) + e", "c*r^n + e", "r^n" (spaces optional).
    static Rank1Family parse_rule(const std::string& text);
    std::string rule_text() const;

    Rational breakpoint(std::int64_t n) const;
    /// hull(b(n), b(n+1)).
    Polyhedron interval(std::int64_t n) const;
    /// lim b(n) when the range is infinite.
    Rational limit() const { return e; }
};

/// Violations are data, not errors.
struct Violation {
    enum class Kind { Inadmissible, MissingFace, BadIntersection, InvalidFamily };
    Kind kind;
    std::vector<std::size_t> faces;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

std::string_view violation_kind_name(Violation::Kind k);

/// A finite extended (Q, Sigma)-admissible polyhedral complex, or a rank-one
/// family descriptor.
///
/// Faces are the finite parts of the extended polyhedra, closed under taking
/// faces and sorted by (dimension, canonical form); a face index is stable
/// for a given set of faces.
class ExtendedComplex {
public:
    /// Adds all faces of the given polyhedra; empty ones are ignored. No
    /// validation takes place here.
    static ExtendedComplex from_polyhedra(const Fan& fan, const std::vector<Polyhedron>& polys);
    /// The cones of the fan as a complex.
    static ExtendedComplex from_fan(const Fan& fan);
    static ExtendedComplex from_family(const Rank1Family& family);

    const Fan& fan() const { return fan_; }
    std::size_t ambient_dim() const { return fan_.ambient_dim(); }
    std::size_t size() const { return faces_.size(); }
    const std::vector<Polyhedron>& faces() const { return faces_; }
    const Polyhedron& face(std::size_t i) const { return faces_.at(i); }
    /// Proper faces of face i.
    const std::vector<std::size_t>& faces_of(std::size_t i) const { return incidence_.at(i); }
    std::optional<std::size_t> index_of(const Polyhedron& p) const;
    std::vector<std::size_t> maximal_faces() const;
    const std::optional<Rank1Family>& family() const { return family_; }
    bool is_family() const { return family_.has_value(); }

    /// Closure of face i in trop(Y_Sigma); throws NotAdmissible.
    ExtendedPolyhedron closure(std::size_t i) const;
    /// Index in the fan of the recession cone of face i, if it is a cone of the fan.
    std::optional<std::size_t> recession_index(std::size_t i) const;

    friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
        return a.fan_ == b.fan_ && a.faces_ == b.faces_ && a.family_.has_value() == b.family_.has_value();
    }

private:
    Fan fan_;
    std::vector<Polyhedron> faces_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::optional<Rank1Family> family_;
};

/// Checks admissibility of every member, that every face of a member is
/// listed, and that pairwise intersections are common faces.
ValidationReport validate_complex(const Fan& fan, const std::vector<Polyhedron>& faces);
ValidationReport validate_complex(const ExtendedComplex& c);

bool support_contains(const ExtendedComplex& c, const ExtendedPoint& x);

/// Support of a rank-one complex or family as a union of disjoint intervals.
std::vector<Interval> support_intervals(const ExtendedComplex& c);

/// Result of an exact covering test.
struct CoverResult {
    bool covered = true;
    std::optional<ExtendedPoint> witness;  // an uncovered point
};

/// Is region contained in the union of pieces? Decided by recursive
/// polyhedral complementation.
CoverResult covers_region(const Polyhedron& region, const std::vector<Polyhedron>& pieces);

/// |c| = trop(Y_Sigma), stratum by stratum. Throws FamilyNotSupported.
CoverResult completeness(const ExtendedComplex& c);
bool is_complete(const ExtendedComplex& c);

/// Faces: all nonempty intersections of maximal faces, with their faces.
/// Throws SupportMismatch unless all supports agree, InvalidArgument for
/// different fans, FamilyNotSupported for families.
ExtendedComplex common_refinement(const std::vector<ExtendedComplex>& complexes);

struct RefinementMap {
    std::vector<std::size_t> assignment;  // face of the finer complex -> face of the coarser

    friend bool operator==(const RefinementMap& a, const RefinementMap& b) { return a.assignment == b.assignment; }
};

/// Each face of `fine` goes to the minimal face of `coarse` containing it.
/// Throws NotARefinement naming a face that fits nowhere.
RefinementMap refinement_map(const ExtendedComplex& fine, const ExtendedComplex& coarse);

/// (first then second): fine -> mid -> coarse.
RefinementMap compose(const RefinementMap& second, const RefinementMap& first);

/// Connected components of the graph with an edge between faces that meet.
/// For a family the nodes are 0 = the chain of intervals and k + 1 = the
/// k-th isolated face.
std::vector<std::vector<std::size_t>> adjacency_components(const ExtendedComplex& c);

/// The limit of the breakpoints of an infinite family.
std::optional<Rational> detect_accumulation(const Rank1Family& f);

/// False exactly when an accumulation point lies in the support.
bool is_locally_finite(const ExtendedComplex& c);

/// Faces of c whose union is the union of the given polyhedra (with their
/// boundary strata), closed under faces and ascending; nullopt when some
/// polyhedron is not a union of faces.
std::optional<std::vector<std::size_t>> is_union_of_faces(const std::vector<Polyhedron>& v,
                                                          const ExtendedComplex& c);

}  // namespace tropadic
