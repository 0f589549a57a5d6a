#pragma once

#include <vector>

#include "aybe/rational.hpp"

namespace aybe {

// Dense matrix of rationals, row-major, 0-based indexing.
// Matrix units and tensor coefficients follow the same 0-based convention
// throughout the library; the serializers shift to 1-based on output.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n);
    static Mat unit(int n, int i, int j); // e_ij

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    Rational trace() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const Rational& s);

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, const Rational& s) { return a *= s; }
    friend Mat operator*(const Rational& s, Mat a) { return a *= s; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a);

    bool operator==(const Mat& o) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

} // namespace aybe
