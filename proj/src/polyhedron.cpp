#include "tropadic/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tropadic/error.hpp"

namespace tropadic {

namespace {

using linalg::RatMatrix;

// Calls f(indices) for every k-subset of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
    if (k > m) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        f(idx);
        if (k == 0) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Primitive integer rescaling by a positive factor; returns (normal, factor).
std::pair<IntVec, Rational> primitive_scaling(const RatVec& a) {
    IntVec n = primitive(a);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0) return {n, Rational(n[k]) / a[k]};
    return {n, Rational(1)};
}

struct RawSystem {
    std::size_t dim;
    RatMatrix ia;
    RatVec ib;
    RatMatrix ea;
    RatVec eb;
};

lp::Constraints to_lp(std::size_t dim, const RatMatrix& ia, const RatVec& ib, const RatMatrix& ea,
                      const RatVec& eb) {
    lp::Constraints c;
    c.dim = dim;
    c.ineq_a = ia;
    c.ineq_b = ib;
    c.eq_a = ea;
    c.eq_b = eb;
    return c;
}

}  // namespace

class PolyhedronBuilder {
public:
    static Polyhedron canonicalize(RawSystem s);
};

Polyhedron PolyhedronBuilder::canonicalize(RawSystem s) {
    const std::size_t n = s.dim;
    // Zero normals are either vacuous or contradictory.
    {
        RatMatrix ia;
        RatVec ib;
        for (std::size_t i = 0; i < s.ia.size(); ++i) {
            if (s.ia[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "normal length");
            if (is_zero(s.ia[i])) {
                if (s.ib[i] > 0) return Polyhedron::empty(n);
                continue;
            }
            ia.push_back(std::move(s.ia[i]));
            ib.push_back(std::move(s.ib[i]));
        }
        s.ia = std::move(ia);
        s.ib = std::move(ib);
        RatMatrix ea;
        RatVec eb;
        for (std::size_t i = 0; i < s.ea.size(); ++i) {
            if (s.ea[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "normal length");
            if (is_zero(s.ea[i])) {
                if (s.eb[i] != 0) return Polyhedron::empty(n);
                continue;
            }
            ea.push_back(std::move(s.ea[i]));
            eb.push_back(std::move(s.eb[i]));
        }
        s.ea = std::move(ea);
        s.eb = std::move(eb);
    }
    if (n == 0) return Polyhedron::universe(0);

    const lp::Result start = lp::minimize(to_lp(n, s.ia, s.ib, s.ea, s.eb), RatVec(n, Rational(0)));
    if (start.status != lp::Status::Optimal) return Polyhedron::empty(n);

    // Implicit equalities.
    {
        RatMatrix ia;
        RatVec ib;
        const auto all = to_lp(n, s.ia, s.ib, s.ea, s.eb);
        for (std::size_t i = 0; i < s.ia.size(); ++i) {
            bool implicit = false;
            if (dot(s.ia[i], start.point) == s.ib[i]) {
                const lp::Result r = lp::maximize(all, s.ia[i]);
                implicit = r.status == lp::Status::Optimal && r.value == s.ib[i];
            }
            if (implicit) {
                s.ea.push_back(s.ia[i]);
                s.eb.push_back(s.ib[i]);
            } else {
                ia.push_back(s.ia[i]);
                ib.push_back(s.ib[i]);
            }
        }
        s.ia = std::move(ia);
        s.ib = std::move(ib);
    }

    Polyhedron out(n, false);

    // Equations in reduced echelon form.
    RatMatrix aug;
    for (std::size_t i = 0; i < s.ea.size(); ++i) {
        RatVec row = s.ea[i];
        row.push_back(s.eb[i]);
        aug.push_back(std::move(row));
    }
    const linalg::RowEchelon ech = linalg::rref(aug, n + 1);
    RatMatrix eq_rows;
    RatVec eq_rhs;
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
        if (ech.pivots[r] == n) return Polyhedron::empty(n);  // unreachable after the LP
        RatVec a(ech.rows[r].begin(), ech.rows[r].begin() + static_cast<std::ptrdiff_t>(n));
        const Rational b = ech.rows[r][n];
        auto [normal, factor] = primitive_scaling(a);
        out.equations_.push_back({normal, b * factor});
        eq_rows.push_back(std::move(a));
        eq_rhs.push_back(b);
    }

    // Reduce inequalities modulo the equations, make primitive, dedupe.
    std::map<IntVec, Rational> tightest;
    for (std::size_t i = 0; i < s.ia.size(); ++i) {
        RatVec a = s.ia[i];
        Rational b = s.ib[i];
        for (std::size_t r = 0; r < eq_rows.size(); ++r) {
            const std::size_t p = ech.pivots[r];
            if (a[p] == 0) continue;
            const Rational f = a[p];
            for (std::size_t k = 0; k < n; ++k) a[k] -= f * eq_rows[r][k];
            b -= f * eq_rhs[r];
        }
        if (is_zero(a)) continue;  // vacuous on the affine hull (feasibility already known)
        auto [normal, factor] = primitive_scaling(a);
        Rational bound = b * factor;
        auto it = tightest.find(normal);
        if (it == tightest.end())
            tightest.emplace(std::move(normal), std::move(bound));
        else if (bound > it->second)
            it->second = std::move(bound);
    }
    std::vector<HalfSpace> cand;
    for (auto& [normal, bound] : tightest) cand.push_back({normal, bound});

    // Redundancy removal.
    RatMatrix eq_a;
    RatVec eq_b;
    for (const auto& e : out.equations_) {
        eq_a.push_back(to_rational(e.normal));
        eq_b.push_back(e.bound);
    }
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        lp::Constraints c = to_lp(n, {}, {}, eq_a, eq_b);
        for (std::size_t j = 0; j < cand.size(); ++j)
            if (j != i && keep[j]) c.add_inequality(to_rational(cand[j].normal), cand[j].bound);
        const lp::Result r = lp::minimize(c, to_rational(cand[i].normal));
        if (r.status == lp::Status::Optimal && r.value >= cand[i].bound) keep[i] = false;
    }
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (keep[i]) out.inequalities_.push_back(std::move(cand[i]));
    std::sort(out.inequalities_.begin(), out.inequalities_.end());
    return out;
}

Polyhedron Polyhedron::universe(std::size_t dim) { return Polyhedron(dim, false); }

Polyhedron Polyhedron::empty(std::size_t dim) { return Polyhedron(dim, true); }

Polyhedron Polyhedron::point(const RatVec& p) {
    std::vector<HalfSpace> eqs;
    for (std::size_t i = 0; i < p.size(); ++i) {
        IntVec e(p.size(), 0);
        e[i] = 1;
        eqs.push_back({e, p[i]});
    }
    return from_halfspaces(p.size(), {}, eqs);
}

Polyhedron Polyhedron::box(const std::vector<std::pair<Rational, Rational>>& bounds) {
    const std::size_t n = bounds.size();
    std::vector<HalfSpace> hs;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        hs.push_back({e, bounds[i].first});
        e[i] = -1;
        hs.push_back({e, -bounds[i].second});
    }
    return from_halfspaces(n, hs);
}

Polyhedron Polyhedron::from_halfspaces(std::size_t dim, const std::vector<HalfSpace>& inequalities,
                                       const std::vector<HalfSpace>& equations) {
    RawSystem s{dim, {}, {}, {}, {}};
    for (const auto& h : inequalities) {
        s.ia.push_back(to_rational(h.normal));
        s.ib.push_back(h.bound);
    }
    for (const auto& h : equations) {
        s.ea.push_back(to_rational(h.normal));
        s.eb.push_back(h.bound);
    }
    return PolyhedronBuilder::canonicalize(std::move(s));
}

Polyhedron Polyhedron::from_constraints(const lp::Constraints& c) {
    return PolyhedronBuilder::canonicalize({c.dim, c.ineq_a, c.ineq_b, c.eq_a, c.eq_b});
}

std::vector<IntVec> extreme_rays(std::size_t dim, const RatMatrix& a, const RatMatrix& e) {
    std::set<IntVec> found;
    const std::size_t re = linalg::rank(e, dim);
    if (re + 1 > dim) return {};
    const std::size_t k = dim - 1 - re;
    for_each_subset(a.size(), k, [&](const std::vector<std::size_t>& idx) {
        RatMatrix m = e;
        for (auto i : idx) m.push_back(a[i]);
        const RatMatrix ns = linalg::nullspace(m, dim);
        if (ns.size() != 1) return;
        for (int sign : {1, -1}) {
            RatVec d = ns[0];
            if (sign < 0)
                for (auto& x : d) x = -x;
            bool ok = true;
            for (const auto& row : a)
                if (dot(row, d) < 0) {
                    ok = false;
                    break;
                }
            if (ok) found.insert(primitive(d));
        }
    });
    return {found.begin(), found.end()};
}

Polyhedron Polyhedron::from_generators(std::size_t dim, const std::vector<RatVec>& vertices,
                                       const std::vector<IntVec>& rays,
                                       const std::vector<IntVec>& lineality) {
    if (vertices.empty()) return empty(dim);
    // Homogenise and dualise: the facets of cone{(v,1),(r,0),±(l,0)} are the
    // extreme rays of its dual modulo the dual's lineality space.
    const std::size_t h = dim + 1;
    RatMatrix gens;
    for (const auto& v : vertices) {
        if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "vertex length");
        RatVec g = v;
        g.push_back(1);
        gens.push_back(std::move(g));
    }
    for (const auto& r : rays) {
        if (r.size() != dim) throw Error(ErrorKind::DimensionMismatch, "ray length");
        RatVec g = to_rational(r);
        g.push_back(0);
        gens.push_back(std::move(g));
    }
    for (const auto& l : lineality) {
        if (l.size() != dim) throw Error(ErrorKind::DimensionMismatch, "lineality length");
        RatVec g = to_rational(l);
        g.push_back(0);
        gens.push_back(g);
        for (auto& x : g) x = -x;
        gens.push_back(std::move(g));
    }
    const RatMatrix dual_lin = linalg::nullspace(gens, h);
    const std::vector<IntVec> dual_rays = extreme_rays(h, gens, dual_lin);

    RawSystem s{dim, {}, {}, {}, {}};
    for (const auto& y : dual_rays) {
        RatVec a(y.begin(), y.end() - 1);
        s.ia.push_back(std::move(a));
        s.ib.push_back(Rational(-y.back()));
    }
    for (const auto& y : dual_lin) {
        RatVec a(y.begin(), y.end() - 1);
        s.ea.push_back(std::move(a));
        s.eb.push_back(-y.back());
    }
    return PolyhedronBuilder::canonicalize(std::move(s));
}

int Polyhedron::dim() const {
    if (empty_) return -1;
    return static_cast<int>(ambient_ - equations_.size());
}

std::vector<HalfSpace> Polyhedron::halfspaces() const {
    std::vector<HalfSpace> out;
    for (const auto& e : equations_) {
        out.push_back(e);
        IntVec neg = e.normal;
        for (auto& x : neg) x = -x;
        out.push_back({neg, -e.bound});
    }
    out.insert(out.end(), inequalities_.begin(), inequalities_.end());
    return out;
}

lp::Constraints Polyhedron::constraints() const {
    lp::Constraints c;
    c.dim = ambient_;
    if (empty_) {
        // 0 >= 1
        c.add_inequality(RatVec(ambient_, Rational(0)), 1);
        return c;
    }
    for (const auto& e : equations_) c.add_equation(to_rational(e.normal), e.bound);
    for (const auto& h : inequalities_) c.add_inequality(to_rational(h.normal), h.bound);
    return c;
}

bool Polyhedron::contains(const RatVec& v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "point length");
    if (empty_) return false;
    for (const auto& e : equations_)
        if (dot(e.normal, v) != e.bound) return false;
    for (const auto& h : inequalities_)
        if (!h.satisfied_by(v)) return false;
    return true;
}

bool Polyhedron::is_pointed() const {
    if (empty_) return false;
    RatMatrix m;
    for (const auto& h : halfspaces()) m.push_back(to_rational(h.normal));
    return linalg::rank(m, ambient_) == ambient_;
}

bool Polyhedron::is_bounded() const {
    if (empty_) return true;
    return recession_cone(*this).dim() == 0;
}

linalg::IntMatrix Polyhedron::lineality_basis() const {
    linalg::IntMatrix rows;
    for (const auto& h : halfspaces()) rows.push_back(h.normal);
    return linalg::integer_kernel(rows, ambient_);
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "intersect");
    if (empty_ || other.empty_) return empty(ambient_);
    std::vector<HalfSpace> ineqs = inequalities_;
    ineqs.insert(ineqs.end(), other.inequalities_.begin(), other.inequalities_.end());
    std::vector<HalfSpace> eqs = equations_;
    eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
    return from_halfspaces(ambient_, ineqs, eqs);
}

Polyhedron Polyhedron::facet(std::size_t index) const {
    if (index >= inequalities_.size()) throw Error(ErrorKind::InvalidArgument, "facet index");
    std::vector<HalfSpace> eqs = equations_;
    eqs.push_back(inequalities_[index]);
    return from_halfspaces(ambient_, inequalities_, eqs);
}

Polyhedron Polyhedron::translate(const RatVec& w) const {
    if (empty_) return *this;
    std::vector<HalfSpace> ineqs, eqs;
    for (const auto& h : inequalities_) ineqs.push_back({h.normal, h.bound + dot(h.normal, w)});
    for (const auto& h : equations_) eqs.push_back({h.normal, h.bound + dot(h.normal, w)});
    return from_halfspaces(ambient_, ineqs, eqs);
}

Polyhedron Polyhedron::with(const std::vector<HalfSpace>& inequalities,
                            const std::vector<HalfSpace>& equations) const {
    if (empty_) return *this;
    std::vector<HalfSpace> ineqs = inequalities_;
    ineqs.insert(ineqs.end(), inequalities.begin(), inequalities.end());
    std::vector<HalfSpace> eqs = equations_;
    eqs.insert(eqs.end(), equations.begin(), equations.end());
    return from_halfspaces(ambient_, ineqs, eqs);
}

lp::Result Polyhedron::minimize(const RatVec& objective) const {
    return lp::minimize(constraints(), objective);
}

lp::Result Polyhedron::maximize(const RatVec& objective) const {
    return lp::maximize(constraints(), objective);
}

bool operator<(const Polyhedron& a, const Polyhedron& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.equations_ != b.equations_) return a.equations_ < b.equations_;
    return a.inequalities_ < b.inequalities_;
}

Cone::Cone(Polyhedron p) : poly_(std::move(p)) {
    if (poly_.is_empty()) throw Error(ErrorKind::InvalidArgument, "a cone cannot be empty");
    for (const auto& h : poly_.halfspaces())
        if (h.bound != 0) throw Error(ErrorKind::InvalidArgument, "cone constraints must have zero bounds");
}

Cone Cone::zero(std::size_t dim) { return Cone(Polyhedron::point(RatVec(dim, Rational(0)))); }

Cone Cone::from_rays(std::size_t dim, const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality) {
    return Cone(Polyhedron::from_generators(dim, {RatVec(dim, Rational(0))}, rays, lineality));
}

std::vector<IntVec> Cone::rays() const {
    if (!is_pointed()) throw Error(ErrorKind::NotPointed, "cone has a nonzero lineality space");
    return vrep(poly_).rays;
}

std::pair<std::vector<IntVec>, linalg::IntMatrix> Cone::generators() const {
    const linalg::IntMatrix lin = poly_.lineality_basis();
    std::vector<HalfSpace> eqs;
    for (const auto& l : lin) eqs.push_back({l, 0});
    const Polyhedron pointed = poly_.with({}, eqs);
    return {vrep(pointed).rays, lin};
}

Cone recession_cone(const Polyhedron& p) {
    if (p.is_empty()) throw Error(ErrorKind::EmptyPolyhedron, "recession cone of an empty polyhedron");
    std::vector<HalfSpace> ineqs, eqs;
    for (const auto& h : p.inequalities()) ineqs.push_back({h.normal, 0});
    for (const auto& h : p.equations()) eqs.push_back({h.normal, 0});
    return Cone(Polyhedron::from_halfspaces(p.ambient_dim(), ineqs, eqs));
}

VRep vrep(const Polyhedron& p) {
    if (p.is_empty()) throw Error(ErrorKind::EmptyPolyhedron, "vrep of an empty polyhedron");
    if (!p.is_pointed()) throw Error(ErrorKind::NotPointed, "vrep requires a pointed polyhedron");
    const std::size_t n = p.ambient_dim();
    VRep out;
    RatMatrix eq_a, ineq_a;
    RatVec eq_b;
    for (const auto& e : p.equations()) {
        eq_a.push_back(to_rational(e.normal));
        eq_b.push_back(e.bound);
    }
    for (const auto& h : p.inequalities()) ineq_a.push_back(to_rational(h.normal));

    std::set<RatVec> verts;
    const std::size_t k = n - eq_a.size();
    for_each_subset(ineq_a.size(), k, [&](const std::vector<std::size_t>& idx) {
        RatMatrix m = eq_a;
        RatVec b = eq_b;
        for (auto i : idx) {
            m.push_back(ineq_a[i]);
            b.push_back(p.inequalities()[i].bound);
        }
        auto x = linalg::solve_square(m, b);
        if (x && p.contains(*x)) verts.insert(std::move(*x));
    });
    out.vertices.assign(verts.begin(), verts.end());
    out.rays = extreme_rays(n, ineq_a, eq_a);
    return out;
}

bool is_subset(const Polyhedron& q, const Polyhedron& p) {
    if (q.ambient_dim() != p.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "is_subset");
    if (q.is_empty()) return true;
    if (p.is_empty()) return false;
    const lp::Constraints c = q.constraints();
    for (const auto& h : p.halfspaces()) {
        const lp::Result r = lp::minimize(c, to_rational(h.normal));
        if (r.status != lp::Status::Optimal || r.value < h.bound) return false;
    }
    return true;
}

bool face_of(const Polyhedron& q, const Polyhedron& p) {
    if (q.is_empty() || p.is_empty()) return false;
    if (!is_subset(q, p)) return false;
    std::vector<HalfSpace> tight;
    const lp::Constraints c = q.constraints();
    for (const auto& h : p.inequalities()) {
        const lp::Result r = lp::maximize(c, to_rational(h.normal));
        if (r.status == lp::Status::Optimal && r.value == h.bound) tight.push_back(h);
    }
    return p.with({}, tight) == q;
}

std::vector<Polyhedron> faces(const Polyhedron& p) {
    if (p.is_empty()) return {};
    std::set<Polyhedron> seen{p};
    std::vector<Polyhedron> stack{p};
    while (!stack.empty()) {
        const Polyhedron q = std::move(stack.back());
        stack.pop_back();
        for (std::size_t i = 0; i < q.inequalities().size(); ++i) {
            Polyhedron f = q.facet(i);
            if (f.is_empty() || seen.count(f)) continue;
            seen.insert(f);
            stack.push_back(std::move(f));
        }
    }
    return {seen.begin(), seen.end()};
}

Generators generators(const Polyhedron& p) {
    if (p.is_empty()) throw Error(ErrorKind::EmptyPolyhedron, "generators of an empty polyhedron");
    Generators g;
    if (p.is_pointed()) {
        VRep v = vrep(p);
        g.vertices = std::move(v.vertices);
        g.rays = std::move(v.rays);
        return g;
    }
    g.lineality = p.lineality_basis();
    std::vector<HalfSpace> eqs;
    for (const auto& l : g.lineality) eqs.push_back({l, 0});
    VRep v = vrep(p.with({}, eqs));
    g.vertices = std::move(v.vertices);
    g.rays = std::move(v.rays);
    return g;
}

RatVec relative_interior_point(const Polyhedron& p) {
    if (p.is_empty()) throw Error(ErrorKind::EmptyPolyhedron, "relative interior of an empty polyhedron");
    const std::size_t n = p.ambient_dim();
    if (n == 0) return {};
    const Generators g = generators(p);
    RatVec x(n, Rational(0));
    for (const auto& vert : g.vertices)
        for (std::size_t i = 0; i < n; ++i) x[i] += vert[i];
    for (auto& xi : x) xi /= static_cast<long>(g.vertices.size());
    for (const auto& r : g.rays)
        for (std::size_t i = 0; i < n; ++i) x[i] += r[i];
    return x;
}

std::string to_string(const Polyhedron& p) {
    if (p.is_empty()) return "{empty}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    auto term = [&](const HalfSpace& h, const char* rel) {
        if (!first) os << ", ";
        first = false;
        os << "<(";
        for (std::size_t i = 0; i < h.normal.size(); ++i) os << (i ? "," : "") << h.normal[i];
        os << "),v> " << rel << " " << to_string(h.bound);
    };
    for (const auto& e : p.equations()) term(e, "=");
    for (const auto& h : p.inequalities()) term(h, ">=");
    os << "}";
    return os.str();
}

}  // namespace tropadic
