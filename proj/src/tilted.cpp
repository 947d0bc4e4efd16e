#include "tropadic/tilted.hpp"

#include <algorithm>
#include <map>

#include "tropadic/error.hpp"
#include "tropadic/laurent.hpp"
#include "tropadic/series.hpp"
#include "tropadic/toric.hpp"

namespace tropadic {

Cone tilted_cone(const Polyhedron& p, std::int64_t denominator) {
    const std::size_t n = p.ambient_dim();
    const VRep v = vrep(p);
    // g + D <u, vert> >= 0 for each vertex, <u, ray> >= 0 for each ray.
    std::vector<HalfSpace> hs;
    for (const auto& vert : v.vertices) {
        RatVec a(n + 1);
        for (std::size_t i = 0; i < n; ++i) a[i] = vert[i] * denominator;
        a[n] = 1;
        hs.push_back({primitive(a), 0});
    }
    for (const auto& r : v.rays) {
        IntVec a = r;
        a.push_back(0);
        hs.push_back({a, 0});
    }
    return Cone(Polyhedron::from_halfspaces(n + 1, hs));
}

Rational tilted_minimum(const Polyhedron& p, const TiltedGenerator& g) {
    const VRep v = vrep(p);
    Rational best;
    bool first = true;
    for (const auto& vert : v.vertices) {
        const Rational x = g.gamma + dot(g.u, vert);
        if (first || x < best) best = x;
        first = false;
    }
    return best;
}

TiltedPresentation tilted_algebra(const Polyhedron& p, std::int64_t denominator) {
    if (denominator <= 0) throw Error(ErrorKind::InvalidArgument, "denominator must be positive");
    if (p.is_empty()) throw Error(ErrorKind::NotAdmissible, "tilted algebra of an empty polyhedron");
    if (!p.is_pointed()) throw Error(ErrorKind::NotAdmissible, "tilted algebra needs a pointed polyhedron");
    for (const auto& h : p.halfspaces())
        if (Integer(denominator) % boost::multiprecision::denominator(h.bound) != 0)
            throw Error(ErrorKind::DenominatorMismatch,
                        "bound " + to_string(h.bound) + " is not in (1/" + std::to_string(denominator) + ")Z");

    const std::size_t n = p.ambient_dim();
    TiltedPresentation t;
    t.polyhedron = p;
    t.denominator = denominator;
    const TiltedGenerator uniformizer{IntVec(n, 0), Rational(1, denominator)};
    for (const auto& g : semigroup_generators(tilted_cone(p, denominator))) {
        TiltedGenerator tg{IntVec(g.begin(), g.begin() + n), Rational(g[n], denominator)};
        if (!(tg == uniformizer)) t.generators.push_back(std::move(tg));
    }
    std::sort(t.generators.begin(), t.generators.end(), [](const TiltedGenerator& a, const TiltedGenerator& b) {
        if (a.u != b.u) return a.u > b.u;
        return a.gamma < b.gamma;
    });
    t.generators.push_back(uniformizer);
    for (std::size_t i = 0; i < t.generators.size(); ++i)
        if (tilted_minimum(p, t.generators[i]) > 0) t.positive_part.push_back(i);
    return t;
}

std::vector<FiberRelation> special_fiber_relations(const TiltedPresentation& t) {
    using Key = std::pair<IntVec, Rational>;
    const auto& gens = t.generators;
    const std::size_t k = gens.size();
    std::vector<bool> vanishes(k, false);
    std::vector<FiberRelation> out;
    for (auto i : t.positive_part) {
        vanishes[i] = true;
        out.push_back({FiberRelation::Kind::Vanishing, {i}, {}});
    }
    std::map<Key, std::size_t> single;
    for (std::size_t i = 0; i < k; ++i) single.emplace(Key{gens[i].u, gens[i].gamma}, i);
    std::map<Key, std::pair<std::size_t, std::size_t>> first_pair;
    const Key one{IntVec(t.polyhedron.ambient_dim(), 0), Rational(0)};
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            TiltedGenerator s{gens[i].u, gens[i].gamma + gens[j].gamma};
            for (std::size_t r = 0; r < s.u.size(); ++r) s.u[r] += gens[j].u[r];
            const Key key{s.u, s.gamma};
            if (key == one) {
                out.push_back({FiberRelation::Kind::Equality, {i, j}, {}});
            } else if (auto it = single.find(key); it != single.end()) {
                out.push_back({FiberRelation::Kind::Equality, {i, j}, {it->second}});
            } else if (auto pt = first_pair.find(key); pt != first_pair.end()) {
                out.push_back({FiberRelation::Kind::Equality, {i, j}, {pt->second.first, pt->second.second}});
            } else {
                first_pair.emplace(key, std::make_pair(i, j));
            }
            if (!vanishes[i] && !vanishes[j] && tilted_minimum(t.polyhedron, s) > 0)
                out.push_back({FiberRelation::Kind::Vanishing, {i, j}, {}});
        }
    }
    return out;
}

std::string to_string(const TiltedGenerator& g, const std::vector<std::string>& vars) {
    const std::string mono = monomial_string(g.u, vars);
    if (g.gamma == 0) return mono;
    if (mono == "1") return power_of_t(g.gamma);
    return power_of_t(g.gamma) + "*" + mono;
}

std::string to_string(const FiberRelation& r) {
    auto product = [](const std::vector<std::size_t>& idx) {
        if (idx.empty()) return std::string("1");
        std::string s;
        for (auto i : idx) {
            if (!s.empty()) s += "*";
            s += "g" + std::to_string(i + 1);
        }
        return s;
    };
    if (r.kind == FiberRelation::Kind::Vanishing) return product(r.lhs) + " = 0";
    return product(r.lhs) + " = " + product(r.rhs);
}

}  // namespace tropadic
