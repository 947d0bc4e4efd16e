#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropadic/linalg.hpp"
#include "tropadic/lp.hpp"

namespace tropadic {

/// {v : <normal, v> >= bound}, or the hyperplane <normal, v> = bound when
/// stored among a polyhedron's equations.
struct HalfSpace {
    IntVec normal;
    Rational bound;

    bool satisfied_by(const RatVec& v) const { return dot(normal, v) >= bound; }

    friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
        return a.normal == b.normal && a.bound == b.bound;
    }
    friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.bound < b.bound;
    }
};

/// Vertices and primitive ray generators of a pointed polyhedron, both
/// sorted lexicographically.
struct VRep {
    std::vector<RatVec> vertices;
    std::vector<IntVec> rays;
};

/// An exact rational polyhedron in Q^n with integer normals.
///
/// Values are always canonical: the affine hull is stored as equations in
/// reduced echelon form (primitive integer rows), the remaining facet
/// inequalities are reduced modulo those equations, made primitive, stripped
/// of redundancy with exact LPs and sorted. Two polyhedra are equal as sets
/// iff they compare equal.
class Polyhedron {
public:
    /// The single point Q^0.
    Polyhedron() = default;

    static Polyhedron universe(std::size_t dim);
    static Polyhedron empty(std::size_t dim);
    static Polyhedron point(const RatVec& p);
    static Polyhedron box(const std::vector<std::pair<Rational, Rational>>& bounds);

    static Polyhedron from_halfspaces(std::size_t dim, const std::vector<HalfSpace>& inequalities,
                                      const std::vector<HalfSpace>& equations = {});
    static Polyhedron from_constraints(const lp::Constraints& c);

    /// conv(vertices) + cone(rays) + span(lineality). No vertices means empty.
    static Polyhedron from_generators(std::size_t dim, const std::vector<RatVec>& vertices,
                                      const std::vector<IntVec>& rays,
                                      const std::vector<IntVec>& lineality = {});

    std::size_t ambient_dim() const { return ambient_; }
    bool is_empty() const { return empty_; }
    /// Dimension of the affine hull; -1 when empty.
    int dim() const;

    const std::vector<HalfSpace>& equations() const { return equations_; }
    const std::vector<HalfSpace>& inequalities() const { return inequalities_; }
    /// Inequalities with each equation expanded into an opposite pair.
    std::vector<HalfSpace> halfspaces() const;
    lp::Constraints constraints() const;

    bool contains(const RatVec& v) const;
    bool is_pointed() const;
    bool is_bounded() const;
    /// Lattice basis of the lineality space (Hermite normal form).
    linalg::IntMatrix lineality_basis() const;

    Polyhedron intersect(const Polyhedron& other) const;
    /// The face on which inequality `index` is tight.
    Polyhedron facet(std::size_t index) const;
    Polyhedron translate(const RatVec& w) const;
    /// Adds constraints, re-canonicalising.
    Polyhedron with(const std::vector<HalfSpace>& inequalities,
                    const std::vector<HalfSpace>& equations = {}) const;

    lp::Result minimize(const RatVec& objective) const;
    lp::Result maximize(const RatVec& objective) const;

    friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
        return a.ambient_ == b.ambient_ && a.empty_ == b.empty_ && a.equations_ == b.equations_ &&
               a.inequalities_ == b.inequalities_;
    }
    friend bool operator!=(const Polyhedron& a, const Polyhedron& b) { return !(a == b); }
    /// Canonical total order: dimension first, then representation.
    friend bool operator<(const Polyhedron& a, const Polyhedron& b);

private:
    friend class PolyhedronBuilder;
    Polyhedron(std::size_t ambient, bool empty) : ambient_(ambient), empty_(empty) {}

    std::size_t ambient_ = 0;
    bool empty_ = false;
    std::vector<HalfSpace> equations_;
    std::vector<HalfSpace> inequalities_;
};

/// A polyhedral cone (all bounds zero).
class Cone {
public:
    /// Throws InvalidArgument unless p is a nonempty cone.
    explicit Cone(Polyhedron p);

    static Cone zero(std::size_t dim);
    static Cone from_rays(std::size_t dim, const std::vector<IntVec>& rays,
                          const std::vector<IntVec>& lineality = {});

    const Polyhedron& polyhedron() const { return poly_; }
    std::size_t ambient_dim() const { return poly_.ambient_dim(); }
    int dim() const { return poly_.dim(); }
    bool is_pointed() const { return poly_.is_pointed(); }
    bool contains(const RatVec& v) const { return poly_.contains(v); }
    /// Primitive extreme rays; throws NotPointed.
    std::vector<IntVec> rays() const;
    /// Rays of the cone modulo lineality, together with a lineality basis.
    std::pair<std::vector<IntVec>, linalg::IntMatrix> generators() const;

    friend bool operator==(const Cone& a, const Cone& b) { return a.poly_ == b.poly_; }
    friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }
    friend bool operator<(const Cone& a, const Cone& b) { return a.poly_ < b.poly_; }

private:
    Polyhedron poly_;
};

/// {v : v + P subset P}; throws EmptyPolyhedron.
Cone recession_cone(const Polyhedron& p);

/// Throws EmptyPolyhedron or NotPointed.
VRep vrep(const Polyhedron& p);

/// Vertices and rays of the pointed part P ∩ lin(P)^perp, plus a lattice
/// basis of the lineality space. Throws EmptyPolyhedron.
struct Generators {
    std::vector<RatVec> vertices;
    std::vector<IntVec> rays;
    linalg::IntMatrix lineality;
};
Generators generators(const Polyhedron& p);

/// Q subset P as sets.
bool is_subset(const Polyhedron& q, const Polyhedron& p);

/// Q is a nonempty face of P (Q = P included).
bool face_of(const Polyhedron& q, const Polyhedron& p);

/// All nonempty faces of P in canonical order (P last among equal dims).
std::vector<Polyhedron> faces(const Polyhedron& p);

/// Barycenter of the vertices plus the sum of the primitive rays, computed
/// on the pointed part P ∩ lin(P)^perp. Deterministic; throws EmptyPolyhedron.
RatVec relative_interior_point(const Polyhedron& p);

/// Extreme rays of the pointed cone {a x >= 0, e x = 0}.
std::vector<IntVec> extreme_rays(std::size_t dim, const linalg::RatMatrix& a,
                                 const linalg::RatMatrix& e);

std::string to_string(const Polyhedron& p);

}  // namespace tropadic
