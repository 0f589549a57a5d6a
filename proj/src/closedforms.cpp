#include "aybe/closedforms.hpp"

#include "aybe/error.hpp"

namespace aybe {

Mat cartan_h(int n, int l) {
    Mat h(n, n);
    h(l - 1, l - 1) = 1;
    h(l, l) = -1;
    return h;
}

Mat cartan_h_dual(int n, int l) {
    // (1/n) [ (n-l)(e_11 + .. + e_ll) - l(e_{l+1,l+1} + .. + e_nn) ]
    Mat h(n, n);
    for (int i = 0; i < l; ++i) h(i, i) = Rational(n - l) / Rational(n);
    for (int i = l; i < n; ++i) h(i, i) = Rational(-l) / Rational(n);
    return h;
}

namespace {

void require_off_poles(const Rational& v, const Rational& y1, const Rational& y2) {
    if (v == 0) throw Error(Error::Kind::PoleHit, "closed form evaluated at v = 0");
    if (y1 == y2) throw Error(Error::Kind::PoleHit, "closed form evaluated at y1 = y2");
}

} // namespace

Tensor2 r21_closed(const Rational& v, const Rational& y1, const Rational& y2) {
    require_off_poles(v, y1, y2);
    const int n = 2;
    auto e = [n](int i, int j) { return Mat::unit(n, i - 1, j - 1); };
    const Mat h = cartan_h_dual(n, 1); // diag(1/2, -1/2)

    Tensor2 r = Tensor2::unit_unit(n) * (Rational(1) / (2 * v));
    r += tensor_p(n) * (Rational(1) / (y2 - y1));
    r += Tensor2::outer(e(2, 1), h) * (v - y1);
    r += Tensor2::outer(h, e(2, 1)) * (v + y2);
    r -= Tensor2::outer(e(2, 1), e(2, 1)) * (v * (v - y1) * (v + y2) / 2);
    return r;
}

Tensor2 r31_closed(const Rational& v, const Rational& y1, const Rational& y2) {
    require_off_poles(v, y1, y2);
    const int n = 3;
    auto e = [n](int i, int j) { return Mat::unit(n, i - 1, j - 1); };
    const Mat h1 = cartan_h_dual(n, 1); // diag(2/3, -1/3, -1/3)
    const Mat h2 = cartan_h_dual(n, 2); // diag(1/3, 1/3, -2/3)
    const Mat e11_33 = e(1, 1) - e(3, 3);
    const Rational third = Rational(1) / 3;

    Tensor2 r = Tensor2::unit_unit(n) * (Rational(1) / (3 * v));
    r += tensor_p(n) * (Rational(1) / (y2 - y1));
    r -= Tensor2::outer(e(2, 1), h1);
    r += Tensor2::outer(h1, e(2, 1));
    r += Tensor2::outer(e(3, 2), e(1, 2));
    r -= Tensor2::outer(e(1, 2), e(3, 2));
    r -= Tensor2::outer(e(3, 2), h2) * y1;
    r += Tensor2::outer(h2, e(3, 2)) * y2;
    r += Tensor2::outer(e(3, 1), e(1, 2)) * (v - y1);
    r += Tensor2::outer(e(1, 2), e(3, 1)) * (v + y2);
    r += Tensor2::outer(e(3, 2), e11_33) * v;
    r += Tensor2::outer(e11_33, e(3, 2)) * v;
    r += Tensor2::outer(e(3, 2), e(2, 1)) * (third * v * (y1 - 3 * v));
    r += Tensor2::outer(e(2, 1), e(3, 2)) * (third * v * (y2 + 3 * v));
    r += Tensor2::outer(e(3, 1), h1) * (v * (v - y1));
    r -= Tensor2::outer(h1, e(3, 1)) * (v * (v + y2));
    r += Tensor2::outer(e(3, 1), e(2, 1)) * (2 * third * v * v * (y1 - v));
    r -= Tensor2::outer(e(2, 1), e(3, 1)) * (2 * third * v * v * (y2 + v));
    r += Tensor2::outer(e(3, 2), e(3, 1)) * (third * v * v * (y2 + v) * (3 * v - y1));
    r += Tensor2::outer(e(3, 1), e(3, 2)) * (third * v * v * (y1 + v) * (3 * v + y2));
    r += Tensor2::outer(e(2, 1), e(2, 1)) * (2 * third * v);
    r += Tensor2::outer(e(3, 1), e(3, 1)) * (2 * third * v * v * v * (v - y1) * (v + y2));
    r += Tensor2::outer(e(3, 2), e(3, 2)) *
         (third * v * (-6 * v * v + 3 * v * (y1 - y2) + 2 * y1 * y2));
    return r;
}

Tensor2 c21_closed(const Rational& y1, const Rational& y2) {
    if (y1 == y2) throw Error(Error::Kind::PoleHit, "c21 evaluated at y1 = y2");
    const int n = 2;
    auto e = [n](int i, int j) { return Mat::unit(n, i - 1, j - 1); };
    const Mat h = cartan_h_dual(n, 1);

    Tensor2 c = tensor_omega(n) * (Rational(1) / (y2 - y1));
    c += Tensor2::outer(h, e(2, 1)) * y2;
    c -= Tensor2::outer(e(2, 1), h) * y1;
    return c;
}

Tensor2 c31_closed(const Rational& y1, const Rational& y2) {
    if (y1 == y2) throw Error(Error::Kind::PoleHit, "c31 evaluated at y1 = y2");
    const int n = 3;
    auto e = [n](int i, int j) { return Mat::unit(n, i - 1, j - 1); };
    const Mat h1 = cartan_h_dual(n, 1);
    const Mat h2 = cartan_h_dual(n, 2);

    Tensor2 c = tensor_omega(n) * (Rational(1) / (y2 - y1));
    c += Tensor2::outer(h2, e(3, 2)) * y2;
    c -= Tensor2::outer(e(3, 2), h2) * y1;
    c += Tensor2::outer(e(1, 2), e(3, 1)) * y2;
    c -= Tensor2::outer(e(3, 1), e(1, 2)) * y1;
    c -= Tensor2::outer(e(2, 1), h1);
    c += Tensor2::outer(h1, e(2, 1));
    c += Tensor2::outer(e(3, 2), e(1, 2));
    c -= Tensor2::outer(e(1, 2), e(3, 2));
    return c;
}

Tensor2 yang2_aybe(const Rational& v, const Rational& y) {
    if (v == 0) throw Error(Error::Kind::PoleHit, "yang2 evaluated at v = 0");
    if (y == 0) throw Error(Error::Kind::PoleHit, "yang2 evaluated at y = 0");
    const int n = 2;
    auto e = [n](int i, int j) { return Mat::unit(n, i - 1, j - 1); };

    Tensor2 r = Tensor2::unit_unit(n) * (Rational(1) / (2 * v));
    Tensor2 block(n);
    block += Tensor2::outer(e(1, 1), e(1, 1));
    block += Tensor2::outer(e(2, 2), e(2, 2));
    block += Tensor2::outer(e(1, 2), e(2, 1));
    block += Tensor2::outer(e(2, 1), e(1, 2));
    r += block * (Rational(1) / y);
    return r;
}

Tensor2 yang2_cybe(const Rational& y) {
    if (y == 0) throw Error(Error::Kind::PoleHit, "yang2_cybe evaluated at y = 0");
    const int n = 2;
    auto e = [n](int i, int j) { return Mat::unit(n, i - 1, j - 1); };
    const Mat h = cartan_h(n, 1);

    Tensor2 c = Tensor2::outer(h, h) * (Rational(1) / 2);
    c += Tensor2::outer(e(1, 2), e(2, 1));
    c += Tensor2::outer(e(2, 1), e(1, 2));
    return c * (Rational(1) / y);
}

} // namespace aybe
