#include "tropadic/lp.hpp"

#include <optional>

#include "tropadic/error.hpp"

namespace tropadic::lp {

namespace {

class Tableau {
public:
    Tableau(linalg::RatMatrix rows, RatVec rhs, std::vector<std::size_t> basis, std::size_t cols)
        : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)), cols_(cols) {}

    // Returns false when unbounded.
    bool optimize(const RatVec& cost, const std::vector<bool>& allowed) {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < cols_ && !entering; ++j) {
                if (!allowed[j] || is_basic(j)) continue;
                Rational d = cost[j];
                for (std::size_t r = 0; r < rows_.size(); ++r)
                    if (rows_[r][j] != 0) d -= cost[basis_[r]] * rows_[r][j];
                if (d < 0) entering = j;
            }
            if (!entering) return true;
            const std::size_t j = *entering;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (rows_[r][j] <= 0) continue;
                Rational ratio = rhs_[r] / rows_[r][j];
                if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = std::move(ratio);
                }
            }
            if (!leave) return false;
            pivot(*leave, j);
        }
    }

    void pivot(std::size_t r, std::size_t j) {
        const Rational inv = 1 / rows_[r][j];
        for (auto& x : rows_[r]) x *= inv;
        rhs_[r] *= inv;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (k == r || rows_[k][j] == 0) continue;
            const Rational f = rows_[k][j];
            for (std::size_t c = 0; c < cols_; ++c)
                if (rows_[r][c] != 0) rows_[k][c] -= f * rows_[r][c];
            rhs_[k] -= f * rhs_[r];
        }
        basis_[r] = j;
    }

    void drop_row(std::size_t r) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    bool is_basic(std::size_t j) const {
        for (auto b : basis_)
            if (b == j) return true;
        return false;
    }

    Rational value(std::size_t j) const {
        for (std::size_t r = 0; r < basis_.size(); ++r)
            if (basis_[r] == j) return rhs_[r];
        return 0;
    }

    Rational objective(const RatVec& cost) const {
        Rational s = 0;
        for (std::size_t r = 0; r < basis_.size(); ++r) s += cost[basis_[r]] * rhs_[r];
        return s;
    }

    const linalg::RatMatrix& rows() const { return rows_; }
    const std::vector<std::size_t>& basis() const { return basis_; }

private:
    linalg::RatMatrix rows_;
    RatVec rhs_;
    std::vector<std::size_t> basis_;
    std::size_t cols_;
};

void check_shapes(const Constraints& c, const RatVec& objective) {
    if (objective.size() != c.dim || c.ineq_a.size() != c.ineq_b.size() || c.eq_a.size() != c.eq_b.size())
        throw Error(ErrorKind::DimensionMismatch, "lp: inconsistent constraint shapes");
    for (const auto& a : c.ineq_a)
        if (a.size() != c.dim) throw Error(ErrorKind::DimensionMismatch, "lp: row length");
    for (const auto& a : c.eq_a)
        if (a.size() != c.dim) throw Error(ErrorKind::DimensionMismatch, "lp: row length");
}

}  // namespace

Result minimize(const Constraints& c, const RatVec& objective) {
    check_shapes(c, objective);
    const std::size_t n = c.dim;
    const std::size_t m = c.ineq_a.size();
    const std::size_t p = c.eq_a.size();
    Result res;

    if (n == 0) {
        for (const auto& b : c.ineq_b)
            if (b > 0) return res;
        for (const auto& b : c.eq_b)
            if (b != 0) return res;
        res.status = Status::Optimal;
        res.value = 0;
        return res;
    }

    // Columns: x+ (n), x- (n), surplus (m), artificial (m + p).
    const std::size_t rows = m + p;
    const std::size_t art0 = 2 * n + m;
    const std::size_t cols = art0 + rows;
    linalg::RatMatrix t(rows, RatVec(cols, Rational(0)));
    RatVec rhs(rows);
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const RatVec& a = r < m ? c.ineq_a[r] : c.eq_a[r - m];
        Rational b = r < m ? c.ineq_b[r] : c.eq_b[r - m];
        const int sign = b < 0 ? -1 : 1;
        for (std::size_t k = 0; k < n; ++k) {
            t[r][k] = a[k] * sign;
            t[r][n + k] = -a[k] * sign;
        }
        if (r < m) t[r][2 * n + r] = -sign;
        t[r][art0 + r] = 1;
        rhs[r] = b * sign;
        basis[r] = art0 + r;
    }
    Tableau tab(std::move(t), std::move(rhs), std::move(basis), cols);

    RatVec phase1(cols, Rational(0));
    for (std::size_t j = art0; j < cols; ++j) phase1[j] = 1;
    std::vector<bool> all(cols, true);
    tab.optimize(phase1, all);
    if (tab.objective(phase1) > 0) return res;

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < tab.basis().size();) {
        if (tab.basis()[r] < art0) {
            ++r;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < art0 && !col; ++j)
            if (tab.rows()[r][j] != 0) col = j;
        if (col) {
            tab.pivot(r, *col);
            ++r;
        } else {
            tab.drop_row(r);
        }
    }

    RatVec phase2(cols, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        phase2[k] = objective[k];
        phase2[n + k] = -objective[k];
    }
    std::vector<bool> allowed(cols, true);
    for (std::size_t j = art0; j < cols; ++j) allowed[j] = false;
    if (!tab.optimize(phase2, allowed)) {
        res.status = Status::Unbounded;
        return res;
    }
    res.status = Status::Optimal;
    res.point.resize(n);
    for (std::size_t k = 0; k < n; ++k) res.point[k] = tab.value(k) - tab.value(n + k);
    res.value = dot(objective, res.point);
    return res;
}

Result maximize(const Constraints& c, const RatVec& objective) {
    RatVec neg = objective;
    for (auto& x : neg) x = -x;
    Result r = minimize(c, neg);
    if (r.status == Status::Optimal) r.value = -r.value;
    return r;
}

bool feasible(const Constraints& c) {
    return minimize(c, RatVec(c.dim, Rational(0))).status == Status::Optimal;
}

}  // namespace tropadic::lp
