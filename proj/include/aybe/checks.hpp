#pragma once

#include <functional>
#include <vector>

#include "aybe/handles.hpp"
#include "aybe/tensor.hpp"

namespace aybe {

// A (y_a, y_b) -> Tensor2 function, e.g. a classical solution or a fixed
// Laurent coefficient of an associative one.
using PairFunction = std::function<Tensor2(const Rational&, const Rational&)>;

/*
 * Residual checkers. Each returns LHS - RHS of the corresponding identity;
 * the zero tensor means the identity holds exactly at the given point.
 */

// r^12(u; y1,y2) r^23(u+v; y2,y3)
//   - r^13(u+v; y1,y3) r^12(-v; y1,y2) - r^23(v; y2,y3) r^13(u; y1,y3)
Tensor3 aybe_residual(const SolutionHandle& r, const Rational& u, const Rational& v,
                      const Rational& y1, const Rational& y2, const Rational& y3);

// Dual form: r^23(u+v; y2,y3) r^12(u; y1,y2)
//   - r^12(-v; y1,y2) r^13(u+v; y1,y3) - r^13(u; y1,y3) r^23(v; y2,y3)
Tensor3 dual_aybe_residual(const SolutionHandle& r, const Rational& u, const Rational& v,
                           const Rational& y1, const Rational& y2, const Rational& y3);

// Four-variable form: r^12(v1,v2; y1,y2) r^23(v1,v3; y2,y3)
//   - r^13(v1,v3; y1,y3) r^12(v3,v2; y1,y2) - r^23(v2,v3; y2,y3) r^13(v1,v2; y1,y3)
Tensor3 aybe4_residual(const SolutionHandle4& r, const Rational& v1, const Rational& v2,
                       const Rational& v3, const Rational& y1, const Rational& y2,
                       const Rational& y3);

// r(v; y1,y2) + swap(r(-v; y2,y1)); zero means unitary.
Tensor2 unitarity_residual(const SolutionHandle& r, const Rational& v, const Rational& y1,
                           const Rational& y2);

// rt^12(y1,y2) rt^13(y1,y3) rt^23(y2,y3) - rt^23(y2,y3) rt^13(y1,y3) rt^12(y1,y2)
Tensor3 qybe_residual(const PairFunction& rt, const Rational& y1, const Rational& y2,
                      const Rational& y3);

// [c^12, c^23] + [c^12, c^13] + [c^13, c^23]
Tensor3 cybe_residual(const PairFunction& c, const Rational& y1, const Rational& y2,
                      const Rational& y3);

// r1^12 + r1^13 + r1^23 - (r0^12 r0^13 - r0^23 r0^12 + r0^13 r0^23)
Tensor3 r0_r1_identity_residual(const PairFunction& r0, const PairFunction& r1,
                                const Rational& y1, const Rational& y2, const Rational& y3);

// s(u; y1,y2) = r(u; y1,y2) r(-u; y1,y2)
Tensor2 s_product(const SolutionHandle& r, const Rational& u, const Rational& y1,
                  const Rational& y2);

// t == scalar * (1 (x) 1); reports the scalar on request.
bool is_scalar_multiple_of_identity(const Tensor2& t, Rational* scalar = nullptr);

// t == scale * P; exact membership test for the one-dimensional span of P.
bool in_span_of_p(const Tensor2& t, Rational* scale = nullptr);

// Basis of { a in sl_n : [T, a (x) 1 + 1 (x) a] = 0 for every sample T },
// the intersection of the exact kernels of the linearized bracket maps.
std::vector<Mat> infinitesimal_symmetries(const std::vector<Tensor2>& samples, int n);

} // namespace aybe
