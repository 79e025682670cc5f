#pragma once

#include "fimod/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fimod {

/// Dense matrix of exact rationals, row-major. Zero-by-n and n-by-zero shapes
/// are legal and behave as expected under multiplication and stacking.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<long>> init);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& other) const = default;

    bool is_zero() const;
    bool is_integer() const;
    bool is_identity() const;

    Mat transpose() const;
    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat operator-() const;
    Mat scaled(const Scalar& c) const;

    Mat col(std::size_t j) const;
    Mat cols_slice(std::size_t j0, std::size_t j1) const; // columns [j0, j1)
    Mat rows_slice(std::size_t i0, std::size_t i1) const; // rows [i0, i1)

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    std::string str() const; // for diagnostics
private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// [A | B] side by side; row counts must match.
Mat hstack(const Mat& a, const Mat& b);
Mat hstack(const std::vector<Mat>& parts, std::size_t rows_hint);

/// A over B; column counts must match.
Mat vstack(const Mat& a, const Mat& b);
Mat vstack(const std::vector<Mat>& parts, std::size_t cols_hint);

/// Block-diagonal assembly.
Mat block_diag(const std::vector<Mat>& blocks);

} // namespace fimod
