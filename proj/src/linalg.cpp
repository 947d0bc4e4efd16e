#include "tropadic/linalg.hpp"

#include <utility>

#include "tropadic/error.hpp"

namespace tropadic::linalg {

RowEchelon rref(const RatMatrix& m, std::size_t cols) {
    RatMatrix a = m;
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        const Rational inv = 1 / a[row][c];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
        }
        out.pivots.push_back(c);
        ++row;
    }
    a.resize(row);
    out.rows = std::move(a);
    return out;
}

std::size_t rank(const RatMatrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

RatMatrix nullspace(const RatMatrix& m, std::size_t cols) {
    const RowEchelon e = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    RatMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b, std::size_t cols) {
    RatMatrix aug;
    aug.reserve(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        RatVec row = m[r];
        row.push_back(b[r]);
        aug.push_back(std::move(row));
    }
    const RowEchelon e = rref(aug, cols + 1);
    RatVec x(cols, Rational(0));
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (e.pivots[r] == cols) return std::nullopt;
        x[e.pivots[r]] = e.rows[r][cols];
    }
    return x;
}

std::optional<RatVec> solve_square(const RatMatrix& m, const RatVec& b) {
    const std::size_t n = m.size();
    if (rank(m, n) != n) return std::nullopt;
    return solve(m, b, n);
}

namespace {

using BigMatrix = std::vector<std::vector<Integer>>;

BigMatrix to_big(const IntMatrix& a, std::size_t cols) {
    BigMatrix out(a.size(), std::vector<Integer>(cols));
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out[r][c] = a[r][c];
    return out;
}

void column_axpy(BigMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : m) row[dst] -= q * row[src];
}

void column_swap(BigMatrix& m, std::size_t i, std::size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

void column_negate(BigMatrix& m, std::size_t i) {
    for (auto& row : m) row[i] = -row[i];
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& a, std::size_t cols) {
    ColumnEchelon out;
    out.h = to_big(a, cols);
    out.v.assign(cols, std::vector<Integer>(cols, Integer(0)));
    for (std::size_t i = 0; i < cols; ++i) out.v[i][i] = 1;

    std::size_t col = 0;
    for (std::size_t i = 0; i < out.h.size() && col < cols; ++i) {
        for (std::size_t j = col + 1; j < cols; ++j) {
            while (out.h[i][j] != 0) {
                const Integer q = out.h[i][col] / out.h[i][j];
                column_axpy(out.h, col, j, q);
                column_axpy(out.v, col, j, q);
                column_swap(out.h, col, j);
                column_swap(out.v, col, j);
            }
        }
        if (out.h[i][col] == 0) continue;
        if (out.h[i][col] < 0) {
            column_negate(out.h, col);
            column_negate(out.v, col);
        }
        ++col;
    }
    out.rank = col;
    return out;
}

IntMatrix hermite_normal_form(const IntMatrix& rows, std::size_t cols) {
    BigMatrix a = to_big(rows, cols);
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < a.size(); ++c) {
        for (std::size_t r = pr + 1; r < a.size(); ++r) {
            while (a[r][c] != 0) {
                const Integer q = a[pr][c] / a[r][c];
                for (std::size_t k = 0; k < cols; ++k) a[pr][k] -= q * a[r][k];
                std::swap(a[pr], a[r]);
            }
        }
        if (a[pr][c] == 0) continue;
        if (a[pr][c] < 0)
            for (auto& x : a[pr]) x = -x;
        for (std::size_t r = 0; r < pr; ++r) {
            Integer q = a[r][c] / a[pr][c];
            if (a[r][c] - q * a[pr][c] < 0) q -= 1;
            if (q != 0)
                for (std::size_t k = 0; k < cols; ++k) a[r][k] -= q * a[pr][k];
        }
        ++pr;
    }
    IntMatrix out;
    for (std::size_t r = 0; r < pr; ++r) {
        IntVec row(cols);
        for (std::size_t k = 0; k < cols; ++k) row[k] = to_int64(a[r][k]);
        out.push_back(std::move(row));
    }
    return out;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols) {
    const ColumnEchelon e = column_echelon(a, cols);
    IntMatrix basis;
    for (std::size_t j = e.rank; j < cols; ++j) {
        IntVec v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = to_int64(e.v[i][j]);
        basis.push_back(std::move(v));
    }
    return hermite_normal_form(basis, cols);
}

std::optional<RatVec> span_coordinates(const IntMatrix& basis, const RatVec& v) {
    const std::size_t n = v.size();
    // Solve basis^T c = v.
    RatMatrix m(n, RatVec(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t k = 0; k < n; ++k) m[k][i] = basis[i][k];
    return solve(m, v, basis.size());
}

}  // namespace tropadic::linalg
