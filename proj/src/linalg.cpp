#include "aybe/linalg.hpp"

#include <utility>

#include "aybe/error.hpp"

namespace aybe {
namespace {

struct IntEchelon {
    std::vector<std::vector<BigInt>> row;
    std::vector<int> pivot_cols;
    int cols = 0;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

std::vector<std::vector<BigInt>> scale_to_integers(const Mat& m) {
    std::vector<std::vector<BigInt>> g(m.rows(), std::vector<BigInt>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        BigInt scale = 1;
        for (int j = 0; j < m.cols(); ++j)
            scale = lcm(scale, denominator(m(i, j)));
        for (int j = 0; j < m.cols(); ++j)
            g[i][j] = numerator(m(i, j)) * (scale / denominator(m(i, j)));
    }
    return g;
}

// One-step Bareiss with row pivoting: after step k every entry is a
// (k+1)x(k+1) minor of the scaled input, so the division is exact.
IntEchelon echelon(const Mat& m) {
    IntEchelon e;
    e.cols = m.cols();
    e.row = scale_to_integers(m);
    const int rows = m.rows();
    BigInt prev = 1;
    int r = 0;
    for (int c = 0; c < e.cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (e.row[i][c] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r) std::swap(e.row[pivot], e.row[r]);
        const BigInt& p = e.row[r][c];
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < e.cols; ++j)
                e.row[i][j] = (p * e.row[i][j] - e.row[i][c] * e.row[r][j]) / prev;
            e.row[i][c] = 0;
        }
        prev = p;
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

// Back-substitution with the free coordinates fixed by the caller.
std::vector<Rational> back_substitute(const IntEchelon& e, std::vector<Rational> x) {
    for (int k = e.rank() - 1; k >= 0; --k) {
        const int pc = e.pivot_cols[k];
        Rational sum = 0;
        for (int j = pc + 1; j < e.cols; ++j)
            if (e.row[k][j] != 0 && x[j] != 0) sum += Rational(e.row[k][j]) * x[j];
        x[pc] = -sum / Rational(e.row[k][pc]);
    }
    return x;
}

} // namespace

std::optional<std::vector<Rational>> solve_linear(const Mat& m, const std::vector<Rational>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows())
        throw Error(Error::Kind::SizeMismatch, "solve_linear: rhs size mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = -rhs[i];
    }
    IntEchelon e = echelon(aug);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols())
        return std::nullopt;
    // Solve [m | -rhs] (x, 1)^T = 0 with free coordinates at zero.
    std::vector<Rational> x(aug.cols());
    x[m.cols()] = 1;
    x = back_substitute(e, std::move(x));
    x.pop_back();
    for (int i = 0; i < m.rows(); ++i) {
        Rational acc = 0;
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && x[j] != 0) acc += m(i, j) * x[j];
        if (acc != rhs[i])
            throw std::logic_error("solve_linear: back-substitution check failed");
    }
    return x;
}

std::vector<std::vector<Rational>> kernel_basis(const Mat& m) {
    IntEchelon e = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(m.cols());
        x[f] = 1;
        basis.push_back(back_substitute(e, std::move(x)));
    }
    return basis;
}

std::optional<Mat> invert(const Mat& m) {
    if (!m.is_square())
        throw Error(Error::Kind::SizeMismatch, "invert: matrix not square");
    const int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = -1;
    }
    IntEchelon e = echelon(aug);
    int left_rank = 0;
    for (int c : e.pivot_cols)
        if (c < n) ++left_rank;
    if (left_rank < n) return std::nullopt;
    Mat inv(n, n);
    for (int col = 0; col < n; ++col) {
        // Column col of the inverse solves [m | -I] (x, e_col)^T = 0.
        std::vector<Rational> x(2 * n);
        x[n + col] = 1;
        x = back_substitute(e, std::move(x));
        for (int i = 0; i < n; ++i) inv(i, col) = x[i];
    }
    return inv;
}

int rank(const Mat& m) {
    return echelon(m).rank();
}

} // namespace aybe
