#pragma once

#include <optional>
#include <vector>

#include "aybe/matrix.hpp"

namespace aybe {

/*
 * Exact dense linear algebra over the rationals.
 *
 * Rows are scaled to integers once, then reduced with one-step fraction-free
 * (Bareiss) elimination, so every intermediate value is a minor of the scaled
 * matrix. That keeps bit growth polynomial where naive rational elimination
 * explodes for the n ~ 5..6 systems this library produces.
 */

// Exact solution of m x = rhs (m may be rectangular); nullopt when the
// system is inconsistent. Every returned solution is re-substituted and
// checked against rhs before it leaves this function.
std::optional<std::vector<Rational>> solve_linear(const Mat& m, const std::vector<Rational>& rhs);

// Basis of the right null space; size is cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const Mat& m);

// Exact inverse; nullopt when singular.
std::optional<Mat> invert(const Mat& m);

int rank(const Mat& m);

} // namespace aybe
