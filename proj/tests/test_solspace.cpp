#include <doctest.h>

#include <numeric>

#include "aybe/closedforms.hpp"
#include "aybe/error.hpp"
#include "aybe/linalg.hpp"
#include "aybe/sampling.hpp"
#include "aybe/solspace.hpp"

using namespace aybe;

namespace {

Mat mat2(std::initializer_list<Rational> entries) {
    Mat m(2, 2);
    auto it = entries.begin();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = *it++;
    return m;
}

} // namespace

TEST_CASE("WPoly validates its block shape") {
    // n=2, split=1: c1 must vanish at (0,1); c2 is supported on (1,0) only
    CHECK_NOTHROW(WPoly(2, 1, mat2({1, 2, 3, 4}), mat2({5, 0, 6, 7}), mat2({0, 0, 8, 0})));
    CHECK_THROWS_AS(WPoly(2, 1, mat2({1, 2, 3, 4}), mat2({5, 9, 6, 7}), mat2({0, 0, 8, 0})),
                    Error);
    CHECK_THROWS_AS(WPoly(2, 1, mat2({1, 2, 3, 4}), mat2({5, 0, 6, 7}), mat2({0, 9, 8, 0})),
                    Error);
}

TEST_CASE("f_zero_part and f_eps_part reassemble the displayed blocks") {
    // generic n=2 element: c0 = [[w,x],[y,z0]], c1 = [[w',0],[y',z']], c2 = [[0,0],[y'',0]]
    const WPoly f(2, 1, mat2({1, 2, 3, 4}), mat2({5, 0, 6, 7}), mat2({0, 0, 8, 0}));
    CHECK(f_zero_part(f) == mat2({5, 2, 8, 7})); // [[w', x], [y'', z']]
    CHECK(f_eps_part(f) == mat2({1, 0, 6, 4}));  // [[w, 0], [y', z0]]

    const WPoly zero(2, 1, Mat(2, 2), Mat(2, 2), Mat(2, 2));
    CHECK(f_zero_part(zero).is_zero());
    CHECK(f_eps_part(zero).is_zero());

    const WPoly id0(2, 1, Mat::identity(2), Mat(2, 2), Mat(2, 2));
    CHECK(f_zero_part(id0).is_zero());
    CHECK(f_eps_part(id0) == Mat::identity(2));
}

TEST_CASE("sol_basis has dimension n^2 and satisfies the constraint") {
    const BlockedJ j21 = build_j(2, 1);
    const auto basis21 = sol_basis(j21, 1, 0);
    CHECK(basis21.size() == 4);

    const BlockedJ j31 = build_j(3, 1);
    CHECK(sol_basis(j31, 1, 0).size() == 9);

    for (const WPoly& f : basis21) {
        const Mat f0 = f_zero_part(f);
        const Mat constraint =
            f0 * j21.matrix - j21.matrix * f0 + f0 * Rational(0 - 1) + f_eps_part(f);
        CHECK(constraint.is_zero());
    }
}

TEST_CASE("sol_basis dimension law across coprime pairs") {
    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d < n; ++d) {
            if (std::gcd(n, d) != 1) continue;
            const BlockedJ j = build_j(n, d);
            auto forbidden = [](const std::vector<Rational>& t) { return t[0] == 0; };
            for (const auto& t : sample_rationals(77, 3, 2, forbidden))
                CHECK(sol_basis(j, t[0], t[1]).size() == static_cast<std::size_t>(n * n));
        }
}

TEST_CASE("res_map and ev_map") {
    const Mat m = mat2({1, 2, 3, 4});
    const WPoly constant(2, 1, m, Mat(2, 2), Mat(2, 2));
    CHECK(res_map(constant, 5) == m);
    CHECK(ev_map(constant, 0, 1) == m);
    CHECK(ev_map(constant, 0, 2) == m * (Rational(1) / 2));
    CHECK_THROWS_AS(ev_map(constant, 1, 1), Error);

    Mat c2(2, 2);
    c2(1, 0) = 1;
    const WPoly quad(2, 1, Mat(2, 2), Mat(2, 2), c2); // F(z) = e21 z^2
    Mat expected(2, 2);
    expected(1, 0) = 4;
    CHECK(res_map(quad, 2) == expected);
    CHECK(res_map(quad, 0).is_zero());

    // linearity of both maps
    const WPoly g(2, 1, mat2({0, 1, 1, 0}), mat2({2, 0, 0, 3}), c2);
    const Rational a = Rational(3) / 2, b = Rational(-2);
    WPoly combo = constant * a;
    combo += g * b;
    CHECK(res_map(combo, 7) == res_map(constant, 7) * a + res_map(g, 7) * b);
    CHECK(ev_map(combo, 0, 7) == ev_map(constant, 0, 7) * a + ev_map(g, 0, 7) * b);
}

TEST_CASE("rtilde is an isomorphism at generic parameters") {
    const Mat rt = rtilde_endomorphism(2, 1, 1, 0, 1);
    CHECK(rt.rows() == 4);
    CHECK(rank(rt) == 4);

    CHECK_THROWS_AS(rtilde_endomorphism(2, 1, 0, 0, 1), Error);
    CHECK_THROWS_AS(rtilde_endomorphism(2, 1, 1, 1, 1), Error);

    // res composed with its inverse fixes every matrix unit
    const BlockedJ j = build_j(2, 1);
    const auto basis = sol_basis(j, 1, 0);
    Mat res_cols(4, 4);
    for (int k = 0; k < 4; ++k) {
        const Mat r = res_map(basis[k], 0);
        for (int i = 0; i < 2; ++i)
            for (int jj = 0; jj < 2; ++jj) res_cols(i * 2 + jj, k) = r(i, jj);
    }
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            std::vector<Rational> rhs(4, Rational(0));
            rhs[static_cast<std::size_t>(a) * 2 + b] = 1;
            const auto coeffs = solve_linear(res_cols, rhs);
            REQUIRE(coeffs.has_value());
            WPoly f = basis[0] * (*coeffs)[0];
            for (int k = 1; k < 4; ++k) f += basis[k] * (*coeffs)[k];
            CHECK(res_map(f, 0) == Mat::unit(2, a, b));
        }
}

TEST_CASE("compute_r frozen values at (1,0,1)") {
    const Tensor2 r = compute_r(2, 1, 1, 0, 1);
    CHECK(r.coeff(0, 0, 0, 0) == Rational(3) / 2); // e11 x e11
    CHECK(r.coeff(1, 0, 1, 0) == -1);              // e21 x e21
}

TEST_CASE("compute_r equals the 2x2 closed form at seeded points") {
    auto forbidden = [](const std::vector<Rational>& t) { return t[0] == 0 || t[1] == t[2]; };
    for (const auto& t : sample_rationals(101, 10, 3, forbidden))
        CHECK(compute_r(2, 1, t[0], t[1], t[2]) == r21_closed(t[0], t[1], t[2]));
}

TEST_CASE("compute_r output is non-degenerate at generic points") {
    auto forbidden = [](const std::vector<Rational>& t) { return t[0] == 0 || t[1] == t[2]; };
    for (const auto& t : sample_rationals(55, 3, 3, forbidden)) {
        CHECK(nondegenerate(compute_r(2, 1, t[0], t[1], t[2])));
        CHECK(nondegenerate(compute_r(3, 2, t[0], t[1], t[2])));
    }
}
