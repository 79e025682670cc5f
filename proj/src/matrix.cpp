#include "fimod/matrix.hpp"

#include "fimod/errors.hpp"

#include <sstream>

namespace fimod {

Mat::Mat(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_)
            throw ValidationError("ragged matrix initializer");
        for (long v : row)
            data_.emplace_back(v);
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

bool Mat::is_integer() const {
    for (const auto& x : data_)
        if (x.get_den() != 1)
            return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_)
        throw ValidationError("matrix product shape mismatch");
    Mat p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

Mat Mat::operator+(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ValidationError("matrix sum shape mismatch");
    Mat s(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        s.data_[k] = data_[k] + rhs.data_[k];
    return s;
}

Mat Mat::operator-(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ValidationError("matrix difference shape mismatch");
    Mat s(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        s.data_[k] = data_[k] - rhs.data_[k];
    return s;
}

Mat Mat::operator-() const {
    Mat s(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        s.data_[k] = -data_[k];
    return s;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat s(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        s.data_[k] = c * data_[k];
    return s;
}

Mat Mat::col(std::size_t j) const { return cols_slice(j, j + 1); }

Mat Mat::cols_slice(std::size_t j0, std::size_t j1) const {
    Mat s(rows_, j1 - j0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = j0; j < j1; ++j)
            s.at(i, j - j0) = at(i, j);
    return s;
}

Mat Mat::rows_slice(std::size_t i0, std::size_t i1) const {
    Mat s(i1 - i0, cols_);
    for (std::size_t i = i0; i < i1; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            s.at(i - i0, j) = at(i, j);
    return s;
}

void Mat::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap(at(i, k), at(j, k));
}

void Mat::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap(at(k, i), at(k, j));
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << format_scalar(at(i, j));
    }
    os << "] (" << rows_ << "x" << cols_ << ")";
    return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows())
        throw ValidationError("hstack row mismatch");
    Mat s(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            s.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            s.at(i, a.cols() + j) = b.at(i, j);
    }
    return s;
}

Mat hstack(const std::vector<Mat>& parts, std::size_t rows_hint) {
    std::size_t cols = 0;
    for (const auto& p : parts)
        cols += p.cols();
    Mat s(rows_hint, cols);
    std::size_t off = 0;
    for (const auto& p : parts) {
        if (p.rows() != rows_hint)
            throw ValidationError("hstack row mismatch");
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j)
                s.at(i, off + j) = p.at(i, j);
        off += p.cols();
    }
    return s;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols())
        throw ValidationError("vstack column mismatch");
    Mat s(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            s.at(a.rows() + i, j) = b.at(i, j);
    return s;
}

Mat vstack(const std::vector<Mat>& parts, std::size_t cols_hint) {
    std::size_t rows = 0;
    for (const auto& p : parts)
        rows += p.rows();
    Mat s(rows, cols_hint);
    std::size_t off = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols_hint)
            throw ValidationError("vstack column mismatch");
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j)
                s.at(off + i, j) = p.at(i, j);
        off += p.rows();
    }
    return s;
}

Mat block_diag(const std::vector<Mat>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Mat s(rows, cols);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                s.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return s;
}

} // namespace fimod
