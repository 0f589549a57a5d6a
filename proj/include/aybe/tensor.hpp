#pragma once

#include <array>
#include <map>

#include "aybe/matrix.hpp"

namespace aybe {

/*
 * Elements of A (x) A and A (x) A (x) A for A = Mat_n, stored as sparse
 * coefficient maps over the matrix-unit basis. Keys are 0-based index
 * tuples; (i,j,k,l) is the coefficient of e_ij (x) e_kl. Zero coefficients
 * are never stored, so equality is plain map equality.
 */

using Key4 = std::array<int, 4>;
using Key6 = std::array<int, 6>;

class Tensor2 {
public:
    Tensor2() = default;
    explicit Tensor2(int n) : n_(n) {}

    int n() const { return n_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Key4, Rational>& coeffs() const { return c_; }

    Rational coeff(int i, int j, int k, int l) const;
    void add(int i, int j, int k, int l, const Rational& value);

    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    Tensor2& operator*=(const Rational& s);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator*(Tensor2 a, const Rational& s) { return a *= s; }
    friend Tensor2 operator*(const Rational& s, Tensor2 a) { return a *= s; }
    friend Tensor2 operator-(Tensor2 a) { return a *= Rational(-1); }

    bool operator==(const Tensor2& o) const { return n_ == o.n_ && c_ == o.c_; }

    static Tensor2 unit_unit(int n); // 1 (x) 1
    static Tensor2 outer(const Mat& x, const Mat& y);

private:
    int n_ = 0;
    std::map<Key4, Rational> c_;
};

class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int n) : n_(n) {}

    int n() const { return n_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Key6, Rational>& coeffs() const { return c_; }

    Rational coeff(const Key6& k) const;
    void add(const Key6& k, const Rational& value);

    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator-=(const Tensor3& o);
    Tensor3& operator*=(const Rational& s);
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(Tensor3 a, const Rational& s) { return a *= s; }
    friend Tensor3 operator-(Tensor3 a) { return a *= Rational(-1); }

    bool operator==(const Tensor3& o) const { return n_ == o.n_ && c_ == o.c_; }

    static Tensor3 unit_unit_unit(int n);

private:
    int n_ = 0;
    std::map<Key6, Rational> c_;
};

// Factorwise algebra products, bilinear over the matrix-unit expansion.
Tensor2 t2_mul(const Tensor2& a, const Tensor2& b);
Tensor3 t3_mul(const Tensor3& a, const Tensor3& b);

// a (x) b  ->  b (x) a
Tensor2 swap_factors(const Tensor2& t);

enum class Slot { s12, s13, s23 };

// rho_12, rho_13, rho_23: insert the identity in the omitted slot.
Tensor3 embed(const Tensor2& t, Slot slot);

// X - (tr X / n) 1 and its factorwise extensions.
Mat pr(const Mat& x);
Tensor2 pr2(const Tensor2& t);
Tensor3 pr3(const Tensor3& t);

// P = sum e_ij (x) e_ji and Omega = (pr (x) pr)(P).
Tensor2 tensor_p(int n);
Tensor2 tensor_omega(int n);

// The isomorphism A (x) A -> End(A), X (x) Y -> (Z -> tr(XZ) Y), in the
// row-major matrix-unit basis, and its inverse.
Mat can(const Tensor2& t);
Tensor2 can_inv(const Mat& m);

// True iff can(t) is invertible.
bool nondegenerate(const Tensor2& t);

} // namespace aybe
