#pragma once

#include <array>
#include <map>

#include "aybe/handles.hpp"
#include "aybe/polynomial.hpp"
#include "aybe/tensor.hpp"

namespace aybe {

// Matrix-valued polynomial in two variables (v, y); the gauge factor.
class MatPoly2 {
public:
    MatPoly2() = default;
    explicit MatPoly2(int n) : n_(n) {}

    static MatPoly2 constant(const Mat& m);

    int n() const { return n_; }
    void set(int deg_v, int deg_y, Mat coeff);
    Mat eval(const Rational& v, const Rational& y) const;

private:
    int n_ = 0;
    std::map<std::pair<int, int>, Mat> c_;
};

// (phi(v1;y1) (x) phi(v2;y2)) r (phi^-1(v2;y1) (x) phi^-1(v1;y2)) with the
// crossed arguments in the inverse factors. Evaluation points where phi is
// singular throw SingularGauge.
SolutionHandle4 gauge_apply(const SolutionHandle4& r, const MatPoly2& phi);

/*
 * Formal exponent bookkeeping for exponential gauge factors. An exponent is
 * a polynomial with rational coefficients in the spectral symbols below;
 * exp of it is never evaluated numerically. Twisted tensors multiply by
 * multiplying bodies and adding exponent forms, and an equation holds for a
 * twisted solution iff the exponent forms of all its terms agree and the
 * untwisted bodies satisfy the equation.
 */

enum class Sym : int { U = 0, V, V1, V2, V3, Y1, Y2, Y3 };
inline constexpr int kSymCount = 8;
using Mono = std::array<int, kSymCount>;

class ExponentForm {
public:
    ExponentForm() = default;
    static ExponentForm constant(const Rational& c);
    static ExponentForm symbol(Sym s);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Rational>& terms() const { return terms_; }

    ExponentForm& operator+=(const ExponentForm& o);
    ExponentForm& operator-=(const ExponentForm& o);
    friend ExponentForm operator+(ExponentForm a, const ExponentForm& b) { return a += b; }
    friend ExponentForm operator-(ExponentForm a, const ExponentForm& b) { return a -= b; }
    friend ExponentForm operator*(const ExponentForm& a, const ExponentForm& b);
    friend ExponentForm operator*(ExponentForm a, const Rational& s);

    // Replaces each mapped symbol by a form; unmapped symbols stay themselves.
    ExponentForm substitute(const std::map<Sym, ExponentForm>& assignment) const;

    bool operator==(const ExponentForm& o) const { return terms_ == o.terms_; }

private:
    void add_term(const Mono& m, const Rational& c);
    std::map<Mono, Rational> terms_;
};

// exp(exponent) * body; equality requires both parts equal.
struct ExpTwistedTensor {
    ExponentForm exponent;
    Tensor2 body;

    bool operator==(const ExpTwistedTensor& o) const = default;
    friend ExpTwistedTensor operator*(const ExpTwistedTensor& a, const ExpTwistedTensor& b) {
        return {a.exponent + b.exponent, t2_mul(a.body, b.body)};
    }
};

// Three-variable solution twisted by exp(E(v; y1, y2)); E is written in the
// slot symbols V, Y1, Y2.
struct TwistedHandle {
    SolutionHandle base;
    ExponentForm exponent;
};

// Four-variable analogue; slot symbols V1, V2, Y1, Y2.
struct TwistedHandle4 {
    SolutionHandle4 base;
    ExponentForm exponent;
};

TwistedHandle exp_twist(SolutionHandle r, ExponentForm exponent);
TwistedHandle4 exp_twist4(SolutionHandle4 r, ExponentForm exponent);

// Checks the three-variable equation for the twisted handle at a point:
// (i) the exponent forms of the left side and of both right-side terms must
// be identical as formal polynomials in (u, v, y1, y2, y3), else throws
// ExponentMismatch; (ii) returns the residual of the untwisted bodies.
Tensor3 exp_aybe_residual(const TwistedHandle& r, const Rational& u, const Rational& v,
                          const Rational& y1, const Rational& y2, const Rational& y3);

// Same for the four-variable equation in (v1, v2, v3, y1, y2, y3).
Tensor3 exp_aybe4_residual(const TwistedHandle4& r, const Rational& v1, const Rational& v2,
                           const Rational& v3, const Rational& y1, const Rational& y2,
                           const Rational& y3);

// V * (g(Y2) - g(Y1)) for polynomial g.
ExponentForm v_times_g_difference(const Polynomial& g);

// c * (V2 - V1) * (Y2 - Y1).
ExponentForm bilinear_exponent(const Rational& c);

} // namespace aybe
