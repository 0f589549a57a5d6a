#include "aybe/checks.hpp"

#include "aybe/error.hpp"
#include "aybe/linalg.hpp"

namespace aybe {

Tensor3 aybe_residual(const SolutionHandle& r, const Rational& u, const Rational& v,
                      const Rational& y1, const Rational& y2, const Rational& y3) {
    const Tensor3 lhs = t3_mul(embed(r.eval(u, y1, y2), Slot::s12),
                               embed(r.eval(u + v, y2, y3), Slot::s23));
    Tensor3 rhs = t3_mul(embed(r.eval(u + v, y1, y3), Slot::s13),
                         embed(r.eval(-v, y1, y2), Slot::s12));
    rhs += t3_mul(embed(r.eval(v, y2, y3), Slot::s23),
                  embed(r.eval(u, y1, y3), Slot::s13));
    return lhs - rhs;
}

Tensor3 dual_aybe_residual(const SolutionHandle& r, const Rational& u, const Rational& v,
                           const Rational& y1, const Rational& y2, const Rational& y3) {
    const Tensor3 lhs = t3_mul(embed(r.eval(u + v, y2, y3), Slot::s23),
                               embed(r.eval(u, y1, y2), Slot::s12));
    Tensor3 rhs = t3_mul(embed(r.eval(-v, y1, y2), Slot::s12),
                         embed(r.eval(u + v, y1, y3), Slot::s13));
    rhs += t3_mul(embed(r.eval(u, y1, y3), Slot::s13),
                  embed(r.eval(v, y2, y3), Slot::s23));
    return lhs - rhs;
}

Tensor3 aybe4_residual(const SolutionHandle4& r, const Rational& v1, const Rational& v2,
                       const Rational& v3, const Rational& y1, const Rational& y2,
                       const Rational& y3) {
    const Tensor3 lhs = t3_mul(embed(r.eval(v1, v2, y1, y2), Slot::s12),
                               embed(r.eval(v1, v3, y2, y3), Slot::s23));
    Tensor3 rhs = t3_mul(embed(r.eval(v1, v3, y1, y3), Slot::s13),
                         embed(r.eval(v3, v2, y1, y2), Slot::s12));
    rhs += t3_mul(embed(r.eval(v2, v3, y2, y3), Slot::s23),
                  embed(r.eval(v1, v2, y1, y3), Slot::s13));
    return lhs - rhs;
}

Tensor2 unitarity_residual(const SolutionHandle& r, const Rational& v, const Rational& y1,
                           const Rational& y2) {
    return r.eval(v, y1, y2) + swap_factors(r.eval(-v, y2, y1));
}

Tensor3 qybe_residual(const PairFunction& rt, const Rational& y1, const Rational& y2,
                      const Rational& y3) {
    const Tensor3 a = embed(rt(y1, y2), Slot::s12);
    const Tensor3 b = embed(rt(y1, y3), Slot::s13);
    const Tensor3 c = embed(rt(y2, y3), Slot::s23);
    return t3_mul(t3_mul(a, b), c) - t3_mul(t3_mul(c, b), a);
}

namespace {

Tensor3 comm(const Tensor3& a, const Tensor3& b) {
    return t3_mul(a, b) - t3_mul(b, a);
}

} // namespace

Tensor3 cybe_residual(const PairFunction& c, const Rational& y1, const Rational& y2,
                      const Rational& y3) {
    const Tensor3 c12 = embed(c(y1, y2), Slot::s12);
    const Tensor3 c13 = embed(c(y1, y3), Slot::s13);
    const Tensor3 c23 = embed(c(y2, y3), Slot::s23);
    return comm(c12, c23) + comm(c12, c13) + comm(c13, c23);
}

Tensor3 r0_r1_identity_residual(const PairFunction& r0, const PairFunction& r1,
                                const Rational& y1, const Rational& y2, const Rational& y3) {
    Tensor3 lhs = embed(r1(y1, y2), Slot::s12);
    lhs += embed(r1(y1, y3), Slot::s13);
    lhs += embed(r1(y2, y3), Slot::s23);

    const Tensor3 a12 = embed(r0(y1, y2), Slot::s12);
    const Tensor3 a13 = embed(r0(y1, y3), Slot::s13);
    const Tensor3 a23 = embed(r0(y2, y3), Slot::s23);
    Tensor3 rhs = t3_mul(a12, a13);
    rhs -= t3_mul(a23, a12);
    rhs += t3_mul(a13, a23);
    return lhs - rhs;
}

Tensor2 s_product(const SolutionHandle& r, const Rational& u, const Rational& y1,
                  const Rational& y2) {
    return t2_mul(r.eval(u, y1, y2), r.eval(-u, y1, y2));
}

bool is_scalar_multiple_of_identity(const Tensor2& t, Rational* scalar) {
    const Rational c = t.coeff(0, 0, 0, 0);
    if (scalar) *scalar = c;
    return t == Tensor2::unit_unit(t.n()) * c;
}

bool in_span_of_p(const Tensor2& t, Rational* scale) {
    const Rational c = t.coeff(0, 1, 1, 0); // reference coordinate of P
    if (scale) *scale = c;
    return t == tensor_p(t.n()) * c;
}

std::vector<Mat> infinitesimal_symmetries(const std::vector<Tensor2>& samples, int n) {
    // Unknown a has n^2 coordinates; rows are the bracket constraints for
    // every sample plus one trace-zero row.
    const int nn = n * n;
    std::vector<std::vector<Tensor2>> bracket_cols(samples.size());
    for (std::size_t s = 0; s < samples.size(); ++s)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                const Mat unit = Mat::unit(n, p, q);
                Tensor2 action = Tensor2::outer(unit, Mat::identity(n));
                action += Tensor2::outer(Mat::identity(n), unit);
                bracket_cols[s].push_back(t2_mul(samples[s], action) -
                                          t2_mul(action, samples[s]));
            }

    // Row count: one per (sample, tensor coordinate) with any support, plus
    // the trace row. To keep it simple, use the dense n^4 coordinate block.
    const int n4 = nn * nn;
    Mat system(static_cast<int>(samples.size()) * n4 + 1, nn);
    for (std::size_t s = 0; s < samples.size(); ++s)
        for (int col = 0; col < nn; ++col)
            for (const auto& [k, v] : bracket_cols[s][col].coeffs()) {
                const int row = static_cast<int>(s) * n4 +
                                ((k[0] * n + k[1]) * nn + (k[2] * n + k[3]));
                system(row, col) = v;
            }
    const int trace_row = static_cast<int>(samples.size()) * n4;
    for (int i = 0; i < n; ++i) system(trace_row, i * n + i) = 1;

    std::vector<Mat> basis;
    for (const auto& vec : kernel_basis(system)) {
        Mat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = vec[static_cast<std::size_t>(i) * n + j];
        basis.push_back(std::move(a));
    }
    return basis;
}

} // namespace aybe
