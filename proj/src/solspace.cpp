#include "aybe/solspace.hpp"

#include <string>
#include <utility>

#include "aybe/error.hpp"
#include "aybe/linalg.hpp"

namespace aybe {

WPoly::WPoly(int n_in, int split_in, Mat c0_in, Mat c1_in, Mat c2_in)
    : n(n_in), split(split_in), c0(std::move(c0_in)), c1(std::move(c1_in)), c2(std::move(c2_in)) {
    auto square = [&](const Mat& m) { return m.rows() == n && m.cols() == n; };
    if (n <= 0 || split <= 0 || split >= n || !square(c0) || !square(c1) || !square(c2))
        throw Error(Error::Kind::SizeMismatch, "WPoly: bad dimensions");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool top_right = i < split && j >= split;
            const bool bottom_left = i >= split && j < split;
            if (top_right && c1(i, j) != 0)
                throw Error(Error::Kind::SizeMismatch, "WPoly: c1 top-right block must vanish");
            if (!bottom_left && c2(i, j) != 0)
                throw Error(Error::Kind::SizeMismatch,
                            "WPoly: c2 supported outside bottom-left block");
        }
}

Mat WPoly::eval(const Rational& z) const {
    return c0 + c1 * z + c2 * (z * z);
}

WPoly& WPoly::operator+=(const WPoly& o) {
    c0 += o.c0;
    c1 += o.c1;
    c2 += o.c2;
    return *this;
}

WPoly operator*(WPoly f, const Rational& s) {
    f.c0 *= s;
    f.c1 *= s;
    f.c2 *= s;
    return f;
}

Mat f_zero_part(const WPoly& f) {
    Mat out(f.n, f.n);
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j) {
            const bool top = i < f.split;
            const bool left = j < f.split;
            if (top && left) out(i, j) = f.c1(i, j);
            else if (top && !left) out(i, j) = f.c0(i, j);
            else if (!top && left) out(i, j) = f.c2(i, j);
            else out(i, j) = f.c1(i, j);
        }
    return out;
}

Mat f_eps_part(const WPoly& f) {
    Mat out(f.n, f.n);
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j) {
            const bool top = i < f.split;
            const bool left = j < f.split;
            if (top && left) out(i, j) = f.c0(i, j);
            else if (!top && !left) out(i, j) = f.c0(i, j);
            else if (!top && left) out(i, j) = f.c1(i, j);
            // top-right stays zero
        }
    return out;
}

namespace {

// Coordinates of W_{n,d}: all of c0, then c1 outside its top-right block,
// then the bottom-left block of c2; row-major within each group.
std::vector<WPoly> coordinate_basis(int n, int split) {
    std::vector<WPoly> basis;
    basis.reserve(static_cast<std::size_t>(2 * n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            basis.emplace_back(n, split, Mat::unit(n, i, j), Mat(n, n), Mat(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i < split && j >= split) continue;
            basis.emplace_back(n, split, Mat(n, n), Mat::unit(n, i, j), Mat(n, n));
        }
    for (int i = split; i < n; ++i)
        for (int j = 0; j < split; ++j)
            basis.emplace_back(n, split, Mat(n, n), Mat(n, n), Mat::unit(n, i, j));
    return basis;
}

Mat constraint_value(const WPoly& f, const Mat& j, const Rational& y1_minus_v) {
    const Mat f0 = f_zero_part(f);
    return f0 * j - j * f0 + f0 * y1_minus_v + f_eps_part(f);
}

} // namespace

std::vector<WPoly> sol_basis(const BlockedJ& j, const Rational& v, const Rational& y1) {
    const int n = j.n;
    const auto coords = coordinate_basis(n, j.split);
    const int dim_w = static_cast<int>(coords.size());
    const Rational t = y1 - v;

    Mat constraint(n * n, dim_w);
    for (int col = 0; col < dim_w; ++col) {
        const Mat value = constraint_value(coords[col], j.matrix, t);
        for (int i = 0; i < n; ++i)
            for (int jj = 0; jj < n; ++jj) constraint(i * n + jj, col) = value(i, jj);
    }

    std::vector<WPoly> basis;
    for (const auto& vec : kernel_basis(constraint)) {
        WPoly f(n, j.split, Mat(n, n), Mat(n, n), Mat(n, n));
        for (int col = 0; col < dim_w; ++col)
            if (vec[col] != 0) f += coords[col] * vec[col];
        basis.push_back(std::move(f));
    }
    return basis;
}

Mat res_map(const WPoly& f, const Rational& y1) {
    return f.eval(y1);
}

Mat ev_map(const WPoly& f, const Rational& y1, const Rational& y2) {
    if (y1 == y2)
        throw Error(Error::Kind::CoincidingPoints, "ev_map: y1 == y2");
    return f.eval(y2) * (Rational(1) / (y2 - y1));
}

Mat rtilde_endomorphism(int n, int d, const Rational& v, const Rational& y1, const Rational& y2) {
    if (v == 0)
        throw Error(Error::Kind::SingularResidue, "rtilde: res is not invertible at v = 0");
    if (y1 == y2)
        throw Error(Error::Kind::CoincidingPoints, "rtilde: y1 == y2");

    const BlockedJ j = build_j(n, d);
    const auto basis = sol_basis(j, v, y1);
    const int nn = n * n;
    if (static_cast<int>(basis.size()) != nn)
        throw Error(Error::Kind::DimensionDrop,
                    "rtilde: solution space has dimension " + std::to_string(basis.size()) +
                        " != " + std::to_string(nn));

    Mat res_cols(nn, nn), ev_cols(nn, nn);
    for (int k = 0; k < nn; ++k) {
        const Mat r = res_map(basis[k], y1);
        const Mat e = ev_map(basis[k], y1, y2);
        for (int i = 0; i < n; ++i)
            for (int jj = 0; jj < n; ++jj) {
                res_cols(i * n + jj, k) = r(i, jj);
                ev_cols(i * n + jj, k) = e(i, jj);
            }
    }
    const auto res_inv = invert(res_cols);
    if (!res_inv)
        throw Error(Error::Kind::SingularResidue, "rtilde: res is not invertible on Sol");
    return ev_cols * *res_inv;
}

Tensor2 compute_r(int n, int d, const Rational& v, const Rational& y1, const Rational& y2) {
    return can_inv(rtilde_endomorphism(n, d, v, y1, y2));
}

} // namespace aybe
