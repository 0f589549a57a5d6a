#include "aybe/polynomial.hpp"

#include "aybe/error.hpp"

namespace aybe {

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial interpolate_poly(std::span<const std::pair<Rational, Rational>> points) {
    const std::size_t m = points.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first)
                throw Error(Error::Kind::DuplicateNode,
                            "interpolate_poly: repeated abscissa " + to_string(points[i].first));
    if (m == 0) return Polynomial();

    // Newton divided differences, then expansion of the nested form.
    std::vector<Rational> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    Polynomial p = Polynomial::constant(dd[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;) {
        // p <- p * (x - x_i) + dd[i]
        Polynomial shifted({-points[i].first, Rational(1)});
        p = p * shifted + Polynomial::constant(dd[i]);
    }
    return p;
}

} // namespace aybe
