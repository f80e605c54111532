#ifndef ELLSURF_LINALG_HPP
#define ELLSURF_LINALG_HPP

#include <optional>
#include <vector>

#include "ellsurf/place.hpp"
#include "ellsurf/ratfunc.hpp"

namespace ellsurf {

inline RatFunc zero_like(const RatFunc&) { return RatFunc::zero(); }
inline RatFunc one_like(const RatFunc&) { return RatFunc::one(); }
inline bool field_is_zero(const RatFunc& x) { return x.is_zero(); }
inline RatFunc field_inv(const RatFunc& x) { return x.inverse(); }

// Dense exact Gaussian elimination over any of the coefficient fields.
template <class F>
using Matrix = std::vector<std::vector<F>>;

// Reduces A (and the optional right-hand sides carried in it) to row echelon
// form in place; returns the pivot column of each nonzero row.
template <class F>
std::vector<size_t> row_echelon(Matrix<F>& A, size_t ncols) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < A.size(); ++col) {
        size_t sel = row;
        while (sel < A.size() && field_is_zero(A[sel][col])) ++sel;
        if (sel == A.size()) continue;
        std::swap(A[row], A[sel]);
        F inv = field_inv(A[row][col]);
        for (size_t j = col; j < A[row].size(); ++j) A[row][j] = A[row][j] * inv;
        for (size_t i = 0; i < A.size(); ++i) {
            if (i == row || field_is_zero(A[i][col])) continue;
            F c = A[i][col];
            for (size_t j = col; j < A[i].size(); ++j) A[i][j] = A[i][j] - c * A[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Solves A x = b exactly; nullopt when inconsistent. Underdetermined systems
// return the solution with free variables set to zero.
template <class F>
std::optional<std::vector<F>> solve_linear(Matrix<F> A, const std::vector<F>& b) {
    if (A.empty()) return std::vector<F>{};
    size_t n = A[0].size();
    for (size_t i = 0; i < A.size(); ++i) A[i].push_back(b[i]);
    auto pivots = row_echelon(A, n);
    for (size_t i = pivots.size(); i < A.size(); ++i)
        if (!field_is_zero(A[i][n])) return std::nullopt;
    F z = zero_like(b.empty() ? A[0][0] : b[0]);
    std::vector<F> x(n, z);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = A[i][n];
    return x;
}

// Basis of the null space of A (ncols unknowns).
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> A, size_t ncols, const F& model_zero) {
    auto pivots = row_echelon(A, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    F one = one_like(model_zero);
    for (size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<F> v(ncols, model_zero);
        v[free_col] = one;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = zero_like(model_zero) - A[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
size_t matrix_rank(Matrix<F> A, size_t ncols) {
    return row_echelon(A, ncols).size();
}

} // namespace ellsurf

#endif
