#pragma once

#include "tropadic/linalg.hpp"

namespace tropadic::lp {

/// {x in Q^dim : ineq_a x >= ineq_b, eq_a x = eq_b}
struct Constraints {
    std::size_t dim = 0;
    linalg::RatMatrix ineq_a;
    RatVec ineq_b;
    linalg::RatMatrix eq_a;
    RatVec eq_b;

    void add_inequality(RatVec a, Rational b) {
        ineq_a.push_back(std::move(a));
        ineq_b.push_back(std::move(b));
    }
    void add_equation(RatVec a, Rational b) {
        eq_a.push_back(std::move(a));
        eq_b.push_back(std::move(b));
    }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Rational value;
    RatVec point;  // an optimal vertex-or-face point when status is Optimal
};

/// Minimises objective . x with a two-phase dense simplex over Q using
/// Bland's rule, so the pivot sequence and the returned point are
/// deterministic.
Result minimize(const Constraints& c, const RatVec& objective);

Result maximize(const Constraints& c, const RatVec& objective);

bool feasible(const Constraints& c);

}  // namespace tropadic::lp
