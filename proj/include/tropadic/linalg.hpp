#pragma once

#include <optional>
#include <vector>

#include "tropadic/rational.hpp"

// Exact dense linear algebra over Q and Z at the sizes this library needs
// (ambient rank at most five or six).
namespace tropadic::linalg {

using RatMatrix = std::vector<RatVec>;
using IntMatrix = std::vector<IntVec>;

struct RowEchelon {
    RatMatrix rows;                    // nonzero rows only, pivot entries equal to one
    std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form. `cols` is needed when `m` has no rows.
RowEchelon rref(const RatMatrix& m, std::size_t cols);

std::size_t rank(const RatMatrix& m, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column.
RatMatrix nullspace(const RatMatrix& m, std::size_t cols);

/// Some solution of m x = b, if one exists.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b, std::size_t cols);

/// Unique solution of a square system, or nullopt when singular.
std::optional<RatVec> solve_square(const RatMatrix& m, const RatVec& b);

struct ColumnEchelon {
    std::vector<std::vector<Integer>> h;   // a * v, nonzero columns first, lower echelon
    std::vector<std::vector<Integer>> v;   // unimodular, n x n
    std::size_t rank = 0;
};

/// Unimodular column reduction of an r x n integer matrix.
ColumnEchelon column_echelon(const IntMatrix& a, std::size_t cols);

/// Row-style Hermite normal form of a matrix with independent rows.
IntMatrix hermite_normal_form(const IntMatrix& rows, std::size_t cols);

/// Lattice basis of {x in Z^n : a x = 0}, in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols);

/// Coefficients c with sum c_i basis_i = v, when v is in the Q-span; the
/// coefficients are rational when v is not a lattice vector.
std::optional<RatVec> span_coordinates(const IntMatrix& basis, const RatVec& v);

}  // namespace tropadic::linalg
