#include "fimod/snf.hpp"

#include "fimod/errors.hpp"

namespace fimod {

namespace {

void require_integer(const Mat& m, const char* who) {
    if (!m.is_integer())
        throw ValidationError(std::string(who) + ": matrix has non-integer entries");
}

// Locate the entry of smallest nonzero absolute value in the trailing block.
bool find_pivot(const Mat& d, std::size_t s, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < d.rows(); ++i)
        for (std::size_t j = s; j < d.cols(); ++j) {
            if (d.at(i, j) == 0)
                continue;
            Int a = abs(d.at(i, j).get_num());
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

void add_row(Mat& m, std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0)
        return;
    Scalar f(factor);
    for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(dst, j) += f * m.at(src, j);
}

void add_col(Mat& m, std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0)
        return;
    Scalar f(factor);
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.at(i, dst) += f * m.at(i, src);
}

} // namespace

SmithResult smith_normal_form(const Mat& m) {
    require_integer(m, "smith_normal_form");
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithResult r;
    r.u = Mat::identity(rows);
    r.v = Mat::identity(cols);
    r.d = m;
    Mat& d = r.d;

    const std::size_t nmin = std::min(rows, cols);
    for (std::size_t s = 0; s < nmin; ++s) {
        std::size_t pi = s, pj = s;
        if (!find_pivot(d, s, pi, pj))
            break; // trailing block is zero
        d.swap_rows(s, pi);
        r.u.swap_rows(s, pi);
        d.swap_cols(s, pj);
        r.v.swap_cols(s, pj);

        for (;;) {
            // Clear column s below the pivot and row s right of the pivot.
            bool dirty = false;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (d.at(i, s) == 0)
                    continue;
                Int q = d.at(i, s).get_num() / d.at(s, s).get_num();
                add_row(d, i, s, -q);
                add_row(r.u, i, s, -q);
                if (d.at(i, s) != 0)
                    dirty = true;
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (d.at(s, j) == 0)
                    continue;
                Int q = d.at(s, j).get_num() / d.at(s, s).get_num();
                add_col(d, j, s, -q);
                add_col(r.v, j, s, -q);
                if (d.at(s, j) != 0)
                    dirty = true;
            }
            if (!dirty) {
                // Remainders are strictly smaller than the pivot, so re-pivot
                // converges; once clean, enforce divisibility into the rest.
                bool divides = true;
                std::size_t bi = s, bj = s;
                for (std::size_t i = s + 1; i < rows && divides; ++i)
                    for (std::size_t j = s + 1; j < cols && divides; ++j)
                        if (d.at(i, j).get_num() % d.at(s, s).get_num() != 0) {
                            bi = i;
                            bj = j;
                            divides = false;
                        }
                if (divides)
                    break;
                add_row(d, s, bi, 1);
                add_row(r.u, s, bi, 1);
                (void)bj;
            }
            std::size_t qi = s, qj = s;
            find_pivot(d, s, qi, qj);
            d.swap_rows(s, qi);
            r.u.swap_rows(s, qi);
            d.swap_cols(s, qj);
            r.v.swap_cols(s, qj);
        }
        if (d.at(s, s) < 0) {
            for (std::size_t j = 0; j < cols; ++j)
                d.at(s, j) = -d.at(s, j);
            for (std::size_t j = 0; j < rows; ++j)
                r.u.at(s, j) = -r.u.at(s, j);
        }
    }
    for (std::size_t s = 0; s < nmin; ++s)
        if (d.at(s, s) != 0)
            ++r.rank;
    return r;
}

Mat z_kernel_basis(const Mat& m) {
    if (m.cols() == 0)
        return Mat(0, 0);
    if (m.rows() == 0)
        return Mat::identity(m.cols());
    SmithResult s = smith_normal_form(m);
    // M x = 0  <=>  D (V^-1 x) = 0, so the kernel is V applied to the
    // coordinate vectors past the rank.
    return s.v.cols_slice(s.rank, m.cols());
}

std::optional<Mat> z_solve(const Mat& m, const Mat& b) {
    require_integer(b, "z_solve");
    if (m.rows() != b.rows())
        throw ValidationError("z_solve shape mismatch");
    if (m.cols() == 0)
        return b.is_zero() ? std::optional<Mat>(Mat(0, b.cols())) : std::nullopt;
    if (m.rows() == 0)
        return Mat(m.cols(), b.cols());
    SmithResult s = smith_normal_form(m);
    Mat ub = s.u * b;
    Mat w(m.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i < s.rank) {
                Int num = ub.at(i, j).get_num();
                Int den = s.d.at(i, i).get_num();
                if (num % den != 0)
                    return std::nullopt;
                w.at(i, j) = Scalar(num / den);
            } else if (ub.at(i, j) != 0) {
                return std::nullopt;
            }
        }
    }
    return s.v * w;
}

Int det_sign_free(const Mat& m) {
    if (m.rows() != m.cols())
        throw ValidationError("det of non-square matrix");
    SmithResult s = smith_normal_form(m);
    Int det = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        det *= s.d.at(i, i).get_num();
    return abs(det);
}

} // namespace fimod
