#pragma once

#include <vector>

#include "aybe/jmatrix.hpp"
#include "aybe/matrix.hpp"
#include "aybe/tensor.hpp"

namespace aybe {

/*
 * The space W_{n,d} of matrix polynomials F(z) = C0 + C1 z + C2 z^2 whose
 * coefficients satisfy the block constraints induced by the split of J:
 * C1 has zero top-right block and C2 is supported on the bottom-left block.
 * W_{n,d} has dimension 2 n^2.
 */
struct WPoly {
    int n = 0;
    int split = 0;
    Mat c0, c1, c2;

    WPoly() = default;
    // Validates the block shape; throws SizeMismatch on violation.
    WPoly(int n, int split, Mat c0, Mat c1, Mat c2);

    Mat eval(const Rational& z) const;

    WPoly& operator+=(const WPoly& o);
    friend WPoly operator*(WPoly f, const Rational& s);
};

// The two block reassemblies attached to F: F_0 takes the top-left of C1,
// the top-right of C0, the bottom-left of C2 and the bottom-right of C1;
// F_eps takes the diagonal blocks of C0 and the bottom-left of C1.
Mat f_zero_part(const WPoly& f);
Mat f_eps_part(const WPoly& f);

// Basis of { F in W_{n,d} : [F_0, J] + (y1 - v) F_0 + F_eps = 0 }.
// Generic parameters give exactly n^2 elements; degenerate ones change the
// count, which callers are expected to check.
std::vector<WPoly> sol_basis(const BlockedJ& j, const Rational& v, const Rational& y1);

// res_{y1}(F) = F(y1)
Mat res_map(const WPoly& f, const Rational& y1);

// ev_{y2}(F) = F(y2) / (y2 - y1); throws CoincidingPoints when y1 == y2.
Mat ev_map(const WPoly& f, const Rational& y1, const Rational& y2);

// The endomorphism ev_{y2} o res_{y1}^{-1} of A in the matrix-unit basis,
// as an n^2 x n^2 matrix. Throws SingularResidue (including v == 0) and
// DimensionDrop when the solution space does not have dimension n^2.
Mat rtilde_endomorphism(int n, int d, const Rational& v, const Rational& y1, const Rational& y2);

// r_{(n,d)}(v; y1, y2) = can^{-1}(rtilde).
Tensor2 compute_r(int n, int d, const Rational& v, const Rational& y1, const Rational& y2);

} // namespace aybe
