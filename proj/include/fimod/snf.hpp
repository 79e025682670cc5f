#pragma once

#include "fimod/matrix.hpp"

#include <optional>

namespace fimod {

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithResult {
    Mat u, d, v;
    std::size_t rank = 0; // number of nonzero diagonal entries
};

/// Smith normal form of an integer matrix (entries must have denominator 1).
SmithResult smith_normal_form(const Mat& m);

/// Basis of the integer kernel {x : M x = 0}, one basis vector per column.
Mat z_kernel_basis(const Mat& m);

/// One integer solution X of M X = B, or nullopt if no integral solution.
std::optional<Mat> z_solve(const Mat& m, const Mat& b);

Int det_sign_free(const Mat& m); // |det| of a square integer matrix, via SNF

} // namespace fimod
