#include "tropadic/fan.hpp"

#include <algorithm>
#include <set>

#include "tropadic/error.hpp"

namespace tropadic {

Fan Fan::from_cones(std::size_t dim, const std::vector<Cone>& cones) {
    std::set<Cone> all{Cone::zero(dim)};
    for (const auto& c : cones) {
        if (c.ambient_dim() != dim) throw Error(ErrorKind::DimensionMismatch, "fan cone dimension");
        if (!c.is_pointed()) throw Error(ErrorKind::InvalidFan, "fan cone is not pointed: " + to_string(c.polyhedron()));
        for (auto& f : faces(c.polyhedron())) all.insert(Cone(std::move(f)));
    }
    Fan fan;
    fan.dim_ = dim;
    fan.cones_.assign(all.begin(), all.end());
    const std::size_t n = fan.cones_.size();
    fan.faces_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Polyhedron& a = fan.cones_[i].polyhedron();
            const Polyhedron& b = fan.cones_[j].polyhedron();
            const Polyhedron meet = a.intersect(b);
            if (!face_of(meet, a) || !face_of(meet, b))
                throw Error(ErrorKind::InvalidFan,
                            "cones " + to_string(a) + " and " + to_string(b) + " do not meet in a common face");
            if (meet == a) fan.faces_[j].push_back(i);
        }
    }
    return fan;
}

Fan Fan::from_rays(std::size_t dim, const std::vector<std::vector<IntVec>>& cone_rays) {
    std::vector<Cone> cones;
    for (const auto& rays : cone_rays) cones.push_back(Cone::from_rays(dim, rays));
    return from_cones(dim, cones);
}

Fan Fan::trivial(std::size_t dim) { return from_cones(dim, {}); }

std::optional<std::size_t> Fan::index_of(const Cone& c) const {
    auto it = std::lower_bound(cones_.begin(), cones_.end(), c);
    if (it != cones_.end() && *it == c) return static_cast<std::size_t>(it - cones_.begin());
    return std::nullopt;
}

std::vector<std::size_t> Fan::closed_faces_of(std::size_t i) const {
    std::vector<std::size_t> out = faces_.at(i);
    out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> Fan::maximal_cones() const {
    std::vector<bool> covered(cones_.size(), false);
    for (const auto& fs : faces_)
        for (auto j : fs) covered[j] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cones_.size(); ++i)
        if (!covered[i]) out.push_back(i);
    return out;
}

Admissibility is_admissible(const Polyhedron& p, const Fan& fan) {
    Admissibility a;
    if (p.ambient_dim() != fan.ambient_dim()) {
        a.reason = "ambient dimension differs from the fan";
        return a;
    }
    if (p.is_empty()) {
        a.reason = "polyhedron is empty";
        return a;
    }
    if (!p.is_pointed()) {
        a.reason = "polyhedron is not pointed (nonzero lineality space)";
        return a;
    }
    const Cone rc = recession_cone(p);
    a.cone = fan.index_of(rc);
    if (!a.cone) {
        a.reason = "recession cone " + to_string(rc.polyhedron()) + " is not a cone of the fan";
        return a;
    }
    a.admissible = true;
    return a;
}

}  // namespace tropadic
