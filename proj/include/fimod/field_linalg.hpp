#pragma once

#include "fimod/matrix.hpp"

#include <optional>
#include <vector>

namespace fimod {

/// Arithmetic of the base field: F_p when p > 0, otherwise Q. Prime-field
/// values are kept as least non-negative residues with denominator 1.
struct FieldOps {
    long p = 0;

    Scalar normalize(const Scalar& x) const { return p ? mod_p(x, p) : x; }
    Scalar inv(const Scalar& x) const;
    bool is_zero(const Scalar& x) const { return p ? normalize(x) == 0 : x == 0; }

    void normalize_in_place(Mat& m) const;
};

/// Row echelon data of one elimination run.
struct Echelon {
    Mat r;                          // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per nonzero row
    std::size_t rank = 0;
};

Echelon rref(Mat m, const FieldOps& f);

std::size_t rank(const Mat& m, const FieldOps& f);

/// Basis of {x : M x = 0}, one basis vector per column.
Mat kernel_basis(const Mat& m, const FieldOps& f);

/// Any X with M X = B, or nullopt if the system is inconsistent.
std::optional<Mat> solve(const Mat& m, const Mat& b, const FieldOps& f);

/// Inverse of a square matrix; throws ValidationError if singular.
Mat inverse(const Mat& m, const FieldOps& f);

/// Indices of a maximal linearly independent subset of the columns of M,
/// scanned left to right (deterministic basis choice for column spans).
std::vector<std::size_t> independent_columns(const Mat& m, const FieldOps& f);

} // namespace fimod
