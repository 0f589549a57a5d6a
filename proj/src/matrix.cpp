#include "aybe/matrix.hpp"

#include "aybe/error.hpp"

namespace aybe {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::unit(int n, int i, int j) {
    Mat m(n, n);
    m(i, j) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Rational Mat::trace() const {
    Rational t = 0;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(Error::Kind::SizeMismatch, "matrix addition size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(Error::Kind::SizeMismatch, "matrix subtraction size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Mat& Mat::operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
        throw Error(Error::Kind::SizeMismatch, "matrix product size mismatch");
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (bkj != 0) c(i, j) += aik * bkj;
            }
        }
    return c;
}

Mat operator-(const Mat& a) {
    Mat c = a;
    return c *= Rational(-1);
}

} // namespace aybe
