#pragma once

#include <functional>
#include <map>

#include "aybe/handles.hpp"
#include "aybe/polynomial.hpp"
#include "aybe/tensor.hpp"

namespace aybe {

// A tensor whose coefficients are univariate polynomials; the exact
// entrywise-interpolation workhorse behind every derivative- and
// limit-flavored statement in the checkers.
struct Tensor2Poly {
    int n = 0;
    std::map<Key4, Polynomial> entries;

    Tensor2 eval(const Rational& x) const;
    Tensor2 coefficient(int k) const;
    Tensor2Poly derivative() const;
    int max_degree() const;
};

// Interpolates x -> f(x) entrywise from the node stream node(0), node(1), ...
// Nodes where f throws are skipped. The node count grows until the
// interpolant matches f at one further verification node; if that would
// need a degree above `degree_cap`, throws DegreeCapExceeded.
Tensor2Poly adaptive_tensor_interpolation(
    const std::function<Tensor2(const Rational&)>& f,
    const std::function<Rational(int)>& node, int degree_cap);

// Finite Laurent data of a solution in the first spectral variable:
// coefficient k of r is stored for k = -1 .. K. Structurally zero
// coefficients are simply absent.
struct LaurentTensor {
    int n = 0;
    std::map<int, Tensor2> coeffs;

    Tensor2 coefficient(int k) const;
};

// Exact Laurent coefficients r_{-1} .. r_K at fixed (y1, y2), obtained by
// interpolating v * r(v; y1, y2) at nonzero integer nodes. Degree cap in v
// is 4n + 4; exceeding it signals non-polynomial structure.
LaurentTensor laurent_in_v(const SolutionHandle& r, const Rational& y1, const Rational& y2,
                           int max_order);

// The scalar c with r_{-1} = c * (1 (x) 1); the constructed solutions carry
// c = 1/n rather than the normalized 1, and scale-sensitive identities are
// checked on the data of r / c. Throws SizeMismatch when the pole
// coefficient is not a scalar multiple of the identity tensor.
Rational ansatz_scalar(const SolutionHandle& r, const Rational& y1, const Rational& y2);

// lim_{y2 -> y1} (y1 - y2) r(v; y1, y2), via interpolation of
// (y2 - y1) r in y2 (degree cap 2n + 2) and evaluation at y2 = y1.
Tensor2 diagonal_residue(const SolutionHandle& r, const Rational& v, const Rational& y1);

} // namespace aybe
