#include "fimod/field_linalg.hpp"

#include "fimod/errors.hpp"

namespace fimod {

Scalar FieldOps::inv(const Scalar& x) const {
    if (p == 0) {
        if (x == 0)
            throw ValidationError("division by zero");
        return 1 / x;
    }
    Scalar r = normalize(x);
    if (r == 0)
        throw ValidationError("division by zero mod " + std::to_string(p));
    return Scalar(inverse_mod(r.get_num(), Int(p)));
}

void FieldOps::normalize_in_place(Mat& m) const {
    if (!p)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = mod_p(m.at(i, j), p);
}

Echelon rref(Mat m, const FieldOps& f) {
    f.normalize_in_place(m);
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && f.is_zero(m.at(piv, col)))
            ++piv;
        if (piv == m.rows())
            continue;
        m.swap_rows(row, piv);
        Scalar s = f.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) = f.normalize(m.at(row, j) * s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || f.is_zero(m.at(i, col)))
                continue;
            Scalar c = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = f.normalize(m.at(i, j) - c * m.at(row, j));
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rank = row;
    e.r = std::move(m);
    return e;
}

std::size_t rank(const Mat& m, const FieldOps& f) { return rref(m, f).rank; }

Mat kernel_basis(const Mat& m, const FieldOps& f) {
    Echelon e = rref(m, f);
    std::vector<std::size_t> free_cols;
    {
        std::size_t k = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (k < e.pivots.size() && e.pivots[k] == j)
                ++k;
            else
                free_cols.push_back(j);
        }
    }
    Mat basis(m.cols(), free_cols.size());
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        std::size_t jf = free_cols[b];
        basis.at(jf, b) = 1;
        for (std::size_t i = 0; i < e.rank; ++i)
            basis.at(e.pivots[i], b) = f.normalize(-e.r.at(i, jf));
    }
    return basis;
}

std::optional<Mat> solve(const Mat& m, const Mat& b, const FieldOps& f) {
    if (m.rows() != b.rows())
        throw ValidationError("solve shape mismatch");
    Echelon e = rref(hstack(m, b), f);
    // Inconsistent iff some pivot lands in the B block.
    for (std::size_t p : e.pivots)
        if (p >= m.cols())
            return std::nullopt;
    Mat x(m.cols(), b.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(e.pivots[i], j) = e.r.at(i, m.cols() + j);
    return x;
}

Mat inverse(const Mat& m, const FieldOps& f) {
    if (m.rows() != m.cols())
        throw ValidationError("inverse of non-square matrix");
    Echelon e = rref(hstack(m, Mat::identity(m.rows())), f);
    if (e.rank != m.rows())
        throw ValidationError("matrix not invertible");
    return e.r.cols_slice(m.cols(), 2 * m.cols());
}

std::vector<std::size_t> independent_columns(const Mat& m, const FieldOps& f) {
    return rref(m, f).pivots;
}

} // namespace fimod
