#pragma once

#include "aybe/tensor.hpp"

namespace aybe {

/*
 * Hand-transcribed closed forms used to cross-validate the algorithmic
 * pipeline. These are kept as printed in their source and are never adjusted
 * to make a downstream check pass; a mismatch is reported, not absorbed.
 */

// Cartan generators of sl_n and their duals under the trace form:
// h_l = e_ll - e_{l+1,l+1},  hdual_l with tr(h_l hdual_m) = delta_lm.
// (1-based l in 1 .. n-1.)
Mat cartan_h(int n, int l);
Mat cartan_h_dual(int n, int l);

// The 2x2 solution; poles at v = 0 and y1 = y2 throw PoleHit.
Tensor2 r21_closed(const Rational& v, const Rational& y1, const Rational& y2);

// The 3x3 solution, same pole conditions.
Tensor2 r31_closed(const Rational& v, const Rational& y1, const Rational& y2);

// Induced classical solutions in sl_n (x) sl_n; pole at y1 = y2.
Tensor2 c21_closed(const Rational& y1, const Rational& y2);
Tensor2 c31_closed(const Rational& y1, const Rational& y2);

// Yang's 2x2 solution, two-variable convention y = y1 - y2.
Tensor2 yang2_aybe(const Rational& v, const Rational& y);
Tensor2 yang2_cybe(const Rational& y);

} // namespace aybe
