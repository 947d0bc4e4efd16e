#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropadic/polyhedron.hpp"

namespace tropadic {

/// A rational polyhedral fan of pointed cones.
///
/// Cones are closed under taking faces and kept in canonical order
/// (dimension, then representation), so the zero cone is always index 0 and
/// an index identifies a cone across every object built on the same fan.
class Fan {
public:
    /// Adds missing faces, then checks that every cone is pointed and that
    /// pairwise intersections are common faces. Throws InvalidFan.
    static Fan from_cones(std::size_t dim, const std::vector<Cone>& cones);
    static Fan from_rays(std::size_t dim, const std::vector<std::vector<IntVec>>& cone_rays);
    /// The fan {0}.
    static Fan trivial(std::size_t dim);

    std::size_t ambient_dim() const { return dim_; }
    std::size_t size() const { return cones_.size(); }
    const std::vector<Cone>& cones() const { return cones_; }
    const Cone& cone(std::size_t i) const { return cones_.at(i); }
    std::optional<std::size_t> index_of(const Cone& c) const;
    /// Indices of the proper faces of cone i.
    const std::vector<std::size_t>& faces_of(std::size_t i) const { return faces_.at(i); }
    /// Indices of the faces of cone i including i itself, ascending.
    std::vector<std::size_t> closed_faces_of(std::size_t i) const;
    /// Maximal cones, by index.
    std::vector<std::size_t> maximal_cones() const;

    friend bool operator==(const Fan& a, const Fan& b) { return a.dim_ == b.dim_ && a.cones_ == b.cones_; }
    friend bool operator!=(const Fan& a, const Fan& b) { return !(a == b); }

private:
    std::size_t dim_ = 0;
    std::vector<Cone> cones_;
    std::vector<std::vector<std::size_t>> faces_;
};

struct Admissibility {
    bool admissible = false;
    std::optional<std::size_t> cone;  // index of the recession cone in the fan
    std::string reason;               // diagnostic when not admissible
};

/// P is (Q, fan)-admissible: nonempty, pointed, and its recession cone is a
/// cone of the fan. Integer normals and rational bounds hold by construction.
Admissibility is_admissible(const Polyhedron& p, const Fan& fan);

}  // namespace tropadic
