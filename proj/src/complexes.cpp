#include "tropadic/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>

#include "tropadic/error.hpp"

namespace tropadic {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<std::size_t>> groups() {
        std::map<std::size_t, std::vector<std::size_t>> g;
        for (std::size_t i = 0; i < parent.size(); ++i) g[find(i)].push_back(i);
        std::vector<std::vector<std::size_t>> out;
        for (auto& [root, members] : g) out.push_back(std::move(members));
        return out;
    }
};

Rational parse_signed(std::string s) {
    if (!s.empty() && s.front() == '(') s = s.substr(1, s.size() - 2);
    if (!s.empty() && s.front() == '+') s = s.substr(1);
    return parse_rational(s);
}

std::string factor_text(const Rational& q) {
    if (denominator(q) == 1) return to_string(q);
    return "(" + to_string(q) + ")";
}

std::string offset_text(const Rational& q) {
    if (q == 0) return "";
    return (q > 0 ? "+" : "-") + to_string(q > 0 ? q : Rational(-q));
}

Rational power(const Rational& r, std::int64_t n) {
    Rational base = n >= 0 ? r : Rational(1 / r);
    Rational out = 1;
    for (std::int64_t k = 0; k < (n >= 0 ? n : -n); ++k) out *= base;
    return out;
}

/// Interval of a polyhedron in Q^1.
Interval interval_of(const Polyhedron& p) {
    Interval iv;
    const auto lo = p.minimize({Rational(1)});
    const auto hi = p.maximize({Rational(1)});
    iv.lo_inf = lo.status == lp::Status::Unbounded;
    iv.hi_inf = hi.status == lp::Status::Unbounded;
    if (!iv.lo_inf) iv.lo = lo.value;
    if (!iv.hi_inf) iv.hi = hi.value;
    iv.lo_closed = !iv.lo_inf;
    iv.hi_closed = !iv.hi_inf;
    return iv;
}

bool intervals_meet(const Interval& a, const Interval& b) {
    // Largest lower end and smallest upper end.
    bool lo_inf = a.lo_inf && b.lo_inf;
    Rational lo;
    bool lo_closed = true;
    if (!lo_inf) {
        if (a.lo_inf || (!b.lo_inf && b.lo > a.lo)) {
            lo = b.lo;
            lo_closed = b.lo_closed;
        } else if (b.lo_inf || a.lo > b.lo) {
            lo = a.lo;
            lo_closed = a.lo_closed;
        } else {
            lo = a.lo;
            lo_closed = a.lo_closed && b.lo_closed;
        }
    }
    bool hi_inf = a.hi_inf && b.hi_inf;
    Rational hi;
    bool hi_closed = true;
    if (!hi_inf) {
        if (a.hi_inf || (!b.hi_inf && b.hi < a.hi)) {
            hi = b.hi;
            hi_closed = b.hi_closed;
        } else if (b.hi_inf || a.hi < b.hi) {
            hi = a.hi;
            hi_closed = a.hi_closed;
        } else {
            hi = a.hi;
            hi_closed = a.hi_closed && b.hi_closed;
        }
    }
    if (lo_inf || hi_inf) return true;
    if (lo < hi) return true;
    return lo == hi && lo_closed && hi_closed;
}

/// Support of the interval chain of an infinite family.
Interval chain_support(const Rank1Family& f) {
    const Rational b0 = f.breakpoint(f.n_min);
    Interval iv;
    if (b0 > f.e) {
        iv.lo = f.e;
        iv.hi = b0;
        iv.lo_closed = false;
    } else {
        iv.lo = b0;
        iv.hi = f.e;
        iv.hi_closed = false;
    }
    return iv;
}

/// Is x one of the breakpoints b(n), n >= n_min, of an infinite family?
bool is_breakpoint(const Rank1Family& f, const Rational& x) {
    if (x == f.e) return false;
    if (f.rule == Rank1Family::Rule::Harmonic) {
        const Rational n = f.c / (x - f.e) - f.d;
        return denominator(n) == 1 && n >= f.n_min;
    }
    const bool decreasing = f.breakpoint(f.n_min) > f.e;
    for (std::int64_t n = f.n_min;; ++n) {
        const Rational b = f.breakpoint(n);
        if (b == x) return true;
        if (decreasing ? b < x : b > x) return false;
    }
}

std::optional<std::string> family_rule_problem(const Rank1Family& f) {
    if (f.c == 0) return "the breakpoint rule is constant";
    if (f.rule == Rank1Family::Rule::Geometric && !(f.r > 0 && f.r < 1))
        return "a geometric rule needs 0 < r < 1";
    if (f.rule == Rank1Family::Rule::Harmonic && f.n_min + f.d <= 0)
        return "the harmonic rule has a pole at or after n_min";
    if (f.n_max && *f.n_max < f.n_min) return "empty range of n";
    return std::nullopt;
}

/// A convex set given by closed constraints and strict ones (a x < b).
struct OpenRegion {
    lp::Constraints closed;
    std::vector<std::pair<RatVec, Rational>> strict;
};

/// Some point of the region, found by maximising the slack of the strict constraints.
std::optional<RatVec> sample(const OpenRegion& r) {
    const std::size_t n = r.closed.dim;
    if (r.strict.empty()) {
        const auto res = lp::minimize(r.closed, RatVec(n, 0));
        if (res.status == lp::Status::Infeasible) return std::nullopt;
        return res.point;
    }
    lp::Constraints lifted;
    lifted.dim = n + 1;
    auto lift = [n](const RatVec& a, Rational last) {
        RatVec out = a;
        out.resize(n + 1);
        out[n] = std::move(last);
        return out;
    };
    for (std::size_t i = 0; i < r.closed.ineq_a.size(); ++i) lifted.add_inequality(lift(r.closed.ineq_a[i], 0), r.closed.ineq_b[i]);
    for (std::size_t i = 0; i < r.closed.eq_a.size(); ++i) lifted.add_equation(lift(r.closed.eq_a[i], 0), r.closed.eq_b[i]);
    for (const auto& [a, b] : r.strict) {
        RatVec neg(n);
        for (std::size_t i = 0; i < n; ++i) neg[i] = -a[i];
        lifted.add_inequality(lift(neg, -1), -b);  // a x + eps <= b
    }
    lifted.add_inequality(lift(RatVec(n, 0), -1), -1);  // eps <= 1
    RatVec objective(n + 1, 0);
    objective[n] = 1;
    const auto res = lp::maximize(lifted, objective);
    if (res.status != lp::Status::Optimal || res.value <= 0) return std::nullopt;
    return RatVec(res.point.begin(), res.point.begin() + static_cast<std::ptrdiff_t>(n));
}

/// region ⊆ pieces[idx] ∪ pieces[idx+1] ∪ ...: split region minus the
/// current piece into convex parts and recurse on the later pieces.
bool covered_from(OpenRegion region, const std::vector<Polyhedron>& pieces, std::size_t idx,
                  std::optional<RatVec>& witness) {
    const auto pt = sample(region);
    if (!pt) return true;
    if (idx == pieces.size()) {
        witness = pt;
        return false;
    }
    const Polyhedron& p = pieces[idx];
    OpenRegion meet = region;
    for (const auto& h : p.halfspaces()) meet.closed.add_inequality(to_rational(h.normal), h.bound);
    if (!sample(meet)) return covered_from(std::move(region), pieces, idx + 1, witness);
    for (const auto& h : p.halfspaces()) {
        OpenRegion part = region;
        part.strict.emplace_back(to_rational(h.normal), h.bound);
        if (!covered_from(std::move(part), pieces, idx + 1, witness)) return false;
        region.closed.add_inequality(to_rational(h.normal), h.bound);
    }
    return true;
}

void check_same_fan(const ExtendedComplex& a, const ExtendedComplex& b, ErrorKind kind) {
    if (a.fan() != b.fan()) throw Error(kind, "complexes are defined over different fans");
}

}  // namespace

bool Interval::contains(const Rational& x) const {
    if (!lo_inf && (x < lo || (x == lo && !lo_closed))) return false;
    if (!hi_inf && (x > hi || (x == hi && !hi_closed))) return false;
    return true;
}

std::string to_string(const Interval& i) {
    if (!i.lo_inf && !i.hi_inf && i.lo == i.hi) return "{" + to_string(i.lo) + "}";
    std::string s = i.lo_closed ? "[" : "(";
    s += i.lo_inf ? "-inf" : to_string(i.lo);
    s += ",";
    s += i.hi_inf ? "inf" : to_string(i.hi);
    s += i.hi_closed ? "]" : ")";
    return s;
}

Rank1Family Rank1Family::parse_rule(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    static const std::string coeff = R"(([+-]?\d+|\([+-]?\d+/\d+\)))";
    static const std::string offset = R"(([+-]\d+(?:/\d+)?))";
    static const std::regex harmonic("^" + coeff + R"(/(?:n|\(n)" + offset + R"(\)))" + offset + "?$");
    static const std::regex geometric("^(?:" + coeff + R"(\*)?)" + coeff + R"(\^n)" + offset + "?$");
    std::smatch m;
    Rank1Family f;
    if (std::regex_match(s, m, harmonic)) {
        f.rule = Rule::Harmonic;
        f.c = parse_signed(m[1]);
        f.d = m[2].matched ? parse_signed(m[2]) : Rational(0);
        f.e = m[3].matched ? parse_signed(m[3]) : Rational(0);
    } else if (std::regex_match(s, m, geometric)) {
        f.rule = Rule::Geometric;
        f.c = m[1].matched ? parse_signed(m[1]) : Rational(1);
        f.r = parse_signed(m[2]);
        f.e = m[3].matched ? parse_signed(m[3]) : Rational(0);
    } else {
        throw Error(ErrorKind::Parse, "unrecognised breakpoint rule '" + text + "'");
    }
    if (auto problem = family_rule_problem(f)) throw Error(ErrorKind::InvalidArgument, *problem);
    return f;
}

std::string Rank1Family::rule_text() const {
    if (rule == Rule::Harmonic) {
        std::string den = d == 0 ? "n" : "(n" + offset_text(d) + ")";
        return factor_text(c) + "/" + den + offset_text(e);
    }
    std::string s = c == 1 ? "" : factor_text(c) + "*";
    return s + factor_text(r) + "^n" + offset_text(e);
}

Rational Rank1Family::breakpoint(std::int64_t n) const {
    if (rule == Rule::Harmonic) return c / (n + d) + e;
    return c * power(r, n) + e;
}

Polyhedron Rank1Family::interval(std::int64_t n) const {
    const Rational a = breakpoint(n), b = breakpoint(n + 1);
    return Polyhedron::box({{a < b ? a : b, a < b ? b : a}});
}

std::string_view violation_kind_name(Violation::Kind k) {
    switch (k) {
    case Violation::Kind::Inadmissible: return "Inadmissible";
    case Violation::Kind::MissingFace: return "MissingFace";
    case Violation::Kind::BadIntersection: return "BadIntersection";
    case Violation::Kind::InvalidFamily: return "InvalidFamily";
    }
    return "Unknown";
}

ExtendedComplex ExtendedComplex::from_polyhedra(const Fan& fan, const std::vector<Polyhedron>& polys) {
    std::set<Polyhedron> all;
    for (const auto& p : polys) {
        if (p.ambient_dim() != fan.ambient_dim())
            throw Error(ErrorKind::DimensionMismatch, "face and fan dimensions differ");
        if (p.is_empty()) continue;
        if (all.count(p)) continue;
        for (auto& f : tropadic::faces(p)) all.insert(std::move(f));
    }
    ExtendedComplex c;
    c.fan_ = fan;
    c.faces_.assign(all.begin(), all.end());
    c.incidence_.resize(c.faces_.size());
    for (std::size_t j = 0; j < c.faces_.size(); ++j) {
        for (const auto& f : tropadic::faces(c.faces_[j])) {
            if (f == c.faces_[j]) continue;
            c.incidence_[j].push_back(*c.index_of(f));
        }
        std::sort(c.incidence_[j].begin(), c.incidence_[j].end());
    }
    return c;
}

ExtendedComplex ExtendedComplex::from_fan(const Fan& fan) {
    std::vector<Polyhedron> polys;
    for (const auto& cone : fan.cones()) polys.push_back(cone.polyhedron());
    return from_polyhedra(fan, polys);
}

ExtendedComplex ExtendedComplex::from_family(const Rank1Family& family) {
    if (auto problem = family_rule_problem(family)) throw Error(ErrorKind::InvalidArgument, *problem);
    std::vector<Polyhedron> polys = family.isolated;
    for (const auto& p : polys)
        if (p.ambient_dim() != 1 || !p.is_bounded())
            throw Error(ErrorKind::InvalidArgument, "isolated faces must be points or bounded intervals in Q^1");
    if (family.n_max) {
        for (std::int64_t n = family.n_min; n <= *family.n_max; ++n) polys.push_back(family.interval(n));
        return from_polyhedra(Fan::trivial(1), polys);
    }
    ExtendedComplex c = from_polyhedra(Fan::trivial(1), polys);
    c.family_ = family;
    return c;
}

std::optional<std::size_t> ExtendedComplex::index_of(const Polyhedron& p) const {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), p);
    if (it == faces_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - faces_.begin());
}

std::vector<std::size_t> ExtendedComplex::maximal_faces() const {
    std::vector<bool> covered(faces_.size(), false);
    for (const auto& inc : incidence_)
        for (auto i : inc) covered[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (!covered[i]) out.push_back(i);
    return out;
}

ExtendedPolyhedron ExtendedComplex::closure(std::size_t i) const { return closure_strata(face(i), fan_); }

std::optional<std::size_t> ExtendedComplex::recession_index(std::size_t i) const {
    return is_admissible(face(i), fan_).cone;
}

ValidationReport validate_complex(const Fan& fan, const std::vector<Polyhedron>& faces_list) {
    ValidationReport report;
    const std::set<Polyhedron> listed(faces_list.begin(), faces_list.end());
    for (std::size_t i = 0; i < faces_list.size(); ++i) {
        const auto adm = is_admissible(faces_list[i], fan);
        if (!adm.admissible) {
            report.violations.push_back(
                {Violation::Kind::Inadmissible, {i}, to_string(faces_list[i]) + ": " + adm.reason});
            continue;
        }
        for (const auto& f : faces(faces_list[i]))
            if (!listed.count(f))
                report.violations.push_back({Violation::Kind::MissingFace, {i},
                                             "face " + to_string(f) + " of " + to_string(faces_list[i]) +
                                                 " is not listed"});
    }
    for (std::size_t i = 0; i < faces_list.size(); ++i) {
        for (std::size_t j = i + 1; j < faces_list.size(); ++j) {
            const Polyhedron meet = faces_list[i].intersect(faces_list[j]);
            if (meet.is_empty()) continue;
            if (face_of(meet, faces_list[i]) && face_of(meet, faces_list[j])) continue;
            report.violations.push_back({Violation::Kind::BadIntersection, {i, j},
                                         "intersection " + to_string(meet) + " is not a face of both"});
        }
    }
    return report;
}

ValidationReport validate_complex(const ExtendedComplex& c) {
    ValidationReport report = validate_complex(c.fan(), c.faces());
    if (!c.is_family()) return report;
    const Rank1Family& f = *c.family();
    if (auto problem = family_rule_problem(f)) {
        report.violations.push_back({Violation::Kind::InvalidFamily, {}, *problem});
        return report;
    }
    const Interval chain = chain_support(f);
    for (std::size_t k = 0; k < f.isolated.size(); ++k) {
        const Interval iv = interval_of(f.isolated[k]);
        if (!intervals_meet(iv, chain)) continue;
        const bool point_meet = (iv.lo == iv.hi && is_breakpoint(f, iv.lo)) ||
                                (iv.hi == chain.lo && is_breakpoint(f, iv.hi)) ||
                                (iv.lo == chain.hi && is_breakpoint(f, iv.lo));
        if (!point_meet)
            report.violations.push_back({Violation::Kind::InvalidFamily, {k},
                                         "isolated face " + to_string(iv) +
                                             " meets the interval chain outside a breakpoint"});
    }
    return report;
}

bool support_contains(const ExtendedComplex& c, const ExtendedPoint& x) {
    if (c.is_family() && x.stratum == 0 && x.coords.size() == 1 && chain_support(*c.family()).contains(x.coords[0]))
        return true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (x.stratum == 0) {
            if (x.coords.size() == c.ambient_dim() && c.face(i).contains(x.coords)) return true;
            continue;
        }
        const auto adm = is_admissible(c.face(i), c.fan());
        if (!adm.admissible) continue;
        if (extended_contains(c.closure(i), x)) return true;
    }
    return false;
}

std::vector<Interval> support_intervals(const ExtendedComplex& c) {
    if (c.ambient_dim() != 1) throw Error(ErrorKind::DimensionMismatch, "supports as intervals need rank one");
    std::vector<Interval> pieces;
    for (auto i : c.maximal_faces()) pieces.push_back(interval_of(c.face(i)));
    if (c.is_family()) pieces.push_back(chain_support(*c.family()));
    std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
        if (a.lo_inf != b.lo_inf) return a.lo_inf;
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    std::vector<Interval> out;
    for (const auto& p : pieces) {
        if (!out.empty()) {
            Interval& last = out.back();
            const bool touches = last.hi_inf || p.lo_inf || p.lo < last.hi ||
                                 (p.lo == last.hi && (p.lo_closed || last.hi_closed));
            if (touches) {
                if (last.hi_inf) continue;
                if (p.hi_inf) {
                    last.hi_inf = true;
                    last.hi_closed = false;
                } else if (p.hi > last.hi) {
                    last.hi = p.hi;
                    last.hi_closed = p.hi_closed;
                } else if (p.hi == last.hi) {
                    last.hi_closed = last.hi_closed || p.hi_closed;
                }
                continue;
            }
        }
        out.push_back(p);
    }
    return out;
}

CoverResult covers_region(const Polyhedron& region, const std::vector<Polyhedron>& pieces) {
    for (const auto& p : pieces)
        if (p.ambient_dim() != region.ambient_dim())
            throw Error(ErrorKind::DimensionMismatch, "pieces and region have different dimensions");
    std::optional<RatVec> w;
    CoverResult r;
    r.covered = region.is_empty() || covered_from({region.constraints(), {}}, pieces, 0, w);
    if (w) r.witness = ExtendedPoint{0, *w};
    return r;
}

CoverResult completeness(const ExtendedComplex& c) {
    if (c.is_family()) throw Error(ErrorKind::FamilyNotSupported, "completeness of an infinite family");
    const Fan& fan = c.fan();
    std::vector<std::pair<Polyhedron, std::size_t>> maximal;
    for (auto i : c.maximal_faces()) {
        const auto adm = is_admissible(c.face(i), fan);
        if (!adm.admissible) throw Error(ErrorKind::NotAdmissible, to_string(c.face(i)) + ": " + adm.reason);
        maximal.emplace_back(c.face(i), *adm.cone);
    }
    for (std::size_t k = 0; k < fan.size(); ++k) {
        std::vector<Polyhedron> pieces;
        std::optional<StratumLattice> lattice;
        if (k != 0) lattice.emplace(fan.cone(k));
        for (const auto& [p, rec] : maximal) {
            const auto closed = fan.closed_faces_of(rec);
            if (!std::binary_search(closed.begin(), closed.end(), k)) continue;
            pieces.push_back(k == 0 ? p : project(p, *lattice));
        }
        const std::size_t r = k == 0 ? fan.ambient_dim() : lattice->quotient_rank();
        CoverResult res = covers_region(Polyhedron::universe(r), pieces);
        if (!res.covered) {
            res.witness->stratum = k;
            return res;
        }
    }
    return {};
}

bool is_complete(const ExtendedComplex& c) { return completeness(c).covered; }

ExtendedComplex common_refinement(const std::vector<ExtendedComplex>& complexes) {
    if (complexes.empty()) throw Error(ErrorKind::InvalidArgument, "common refinement of no complexes");
    for (const auto& c : complexes) {
        if (c.is_family()) throw Error(ErrorKind::FamilyNotSupported, "common refinement of an infinite family");
        check_same_fan(complexes.front(), c, ErrorKind::InvalidArgument);
    }
    auto maximal_polys = [](const ExtendedComplex& c) {
        std::vector<Polyhedron> out;
        for (auto i : c.maximal_faces()) out.push_back(c.face(i));
        return out;
    };
    std::vector<Polyhedron> current = maximal_polys(complexes.front());
    for (std::size_t k = 1; k < complexes.size(); ++k) {
        const std::vector<Polyhedron> other = maximal_polys(complexes[k]);
        using Side = std::pair<const std::vector<Polyhedron>*, const std::vector<Polyhedron>*>;
        for (const auto& [a, b] : {Side{&current, &other}, Side{&other, &current}}) {
            for (const auto& p : *a) {
                const CoverResult res = covers_region(p, *b);
                if (!res.covered) {
                    std::string w;
                    for (const auto& x : res.witness->coords) w += (w.empty() ? "" : ",") + to_string(x);
                    throw Error(ErrorKind::SupportMismatch, "supports differ at (" + w + ")");
                }
            }
        }
        std::set<Polyhedron> next;
        for (const auto& p : current)
            for (const auto& q : other) {
                Polyhedron m = p.intersect(q);
                if (!m.is_empty()) next.insert(std::move(m));
            }
        current.assign(next.begin(), next.end());
    }
    return ExtendedComplex::from_polyhedra(complexes.front().fan(), current);
}

RefinementMap refinement_map(const ExtendedComplex& fine, const ExtendedComplex& coarse) {
    if (fine.is_family() || coarse.is_family())
        throw Error(ErrorKind::FamilyNotSupported, "refinement maps of infinite families");
    check_same_fan(fine, coarse, ErrorKind::NotARefinement);
    RefinementMap map;
    for (std::size_t i = 0; i < fine.size(); ++i) {
        const RatVec x = relative_interior_point(fine.face(i));
        std::optional<std::size_t> carrier;
        for (std::size_t j = 0; j < coarse.size() && !carrier; ++j)
            if (coarse.face(j).contains(x)) carrier = j;
        if (!carrier || !is_subset(fine.face(i), coarse.face(*carrier)))
            throw Error(ErrorKind::NotARefinement,
                        "face " + to_string(fine.face(i)) + " lies in no face of the coarser complex");
        map.assignment.push_back(*carrier);
    }
    return map;
}

RefinementMap compose(const RefinementMap& second, const RefinementMap& first) {
    RefinementMap out;
    for (auto i : first.assignment) out.assignment.push_back(second.assignment.at(i));
    return out;
}

std::vector<std::vector<std::size_t>> adjacency_components(const ExtendedComplex& c) {
    if (c.is_family()) {
        const Rank1Family& f = *c.family();
        const Interval chain = chain_support(f);
        UnionFind uf(f.isolated.size() + 1);
        std::vector<Interval> iso;
        for (const auto& p : f.isolated) iso.push_back(interval_of(p));
        for (std::size_t k = 0; k < iso.size(); ++k) {
            if (intervals_meet(iso[k], chain)) uf.unite(0, k + 1);
            for (std::size_t l = k + 1; l < iso.size(); ++l)
                if (intervals_meet(iso[k], iso[l])) uf.unite(k + 1, l + 1);
        }
        return uf.groups();
    }
    UnionFind uf(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        for (auto i : c.faces_of(j)) uf.unite(i, j);
    const auto maximal = c.maximal_faces();
    for (std::size_t a = 0; a < maximal.size(); ++a)
        for (std::size_t b = a + 1; b < maximal.size(); ++b) {
            if (uf.find(maximal[a]) == uf.find(maximal[b])) continue;
            if (!c.face(maximal[a]).intersect(c.face(maximal[b])).is_empty()) uf.unite(maximal[a], maximal[b]);
        }
    return uf.groups();
}

std::optional<Rational> detect_accumulation(const Rank1Family& f) {
    if (f.n_max) return std::nullopt;
    return f.limit();
}

bool is_locally_finite(const ExtendedComplex& c) {
    if (!c.is_family()) return true;
    const auto acc = detect_accumulation(*c.family());
    return !(acc && support_contains(c, ExtendedPoint{0, {*acc}}));
}

std::optional<std::vector<std::size_t>> is_union_of_faces(const std::vector<Polyhedron>& v,
                                                          const ExtendedComplex& c) {
    if (c.is_family()) throw Error(ErrorKind::FamilyNotSupported, "subcomplexes of an infinite family");
    std::set<std::size_t> chosen;
    for (const auto& member : v) {
        if (member.ambient_dim() != c.ambient_dim())
            throw Error(ErrorKind::DimensionMismatch, "domain and complex dimensions differ");
        if (member.is_empty()) continue;
        std::vector<std::size_t> inside;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (is_subset(c.face(i), member)) inside.push_back(i);
        std::set<std::size_t> non_maximal;
        for (auto j : inside)
            for (auto i : c.faces_of(j)) non_maximal.insert(i);
        std::vector<std::size_t> tops;
        std::vector<Polyhedron> pieces;
        for (auto i : inside)
            if (!non_maximal.count(i)) {
                tops.push_back(i);
                pieces.push_back(c.face(i));
            }
        if (!covers_region(member, pieces).covered) return std::nullopt;
        const auto adm = is_admissible(member, c.fan());
        if (adm.admissible) {
            const ExtendedPolyhedron closed = closure_strata(member, c.fan());
            for (const auto& [k, piece] : closed.strata) {
                if (k == 0) continue;
                const StratumLattice lattice(c.fan().cone(k));
                std::vector<Polyhedron> projected;
                for (auto i : tops) {
                    const auto rec = c.recession_index(i);
                    if (!rec) continue;
                    const auto faces_k = c.fan().closed_faces_of(*rec);
                    if (std::binary_search(faces_k.begin(), faces_k.end(), k))
                        projected.push_back(project(c.face(i), lattice));
                }
                if (!covers_region(piece, projected).covered) return std::nullopt;
            }
        }
        chosen.insert(inside.begin(), inside.end());
    }
    return std::vector<std::size_t>(chosen.begin(), chosen.end());
}

}  // namespace tropadic
