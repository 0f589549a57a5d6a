#pragma once

#include <span>
#include <utility>
#include <vector>

#include "aybe/rational.hpp"

namespace aybe {

// Univariate polynomial over the rationals, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial& o) const = default;

private:
    void trim();
    std::vector<Rational> c_;
};

// Unique polynomial of degree < points.size() through all points (Newton
// divided differences). Throws DuplicateNode on repeated abscissae.
Polynomial interpolate_poly(std::span<const std::pair<Rational, Rational>> points);

} // namespace aybe
