#include <doctest.h>

#include "aybe/checks.hpp"
#include "aybe/error.hpp"
#include "aybe/gauge.hpp"
#include "aybe/sampling.hpp"

using namespace aybe;

namespace {

bool aybe4_zero_at_seeded_points(const SolutionHandle4& r, std::uint64_t seed, int count) {
    auto forbidden = [&r](const std::vector<Rational>& t) {
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) return true;
        if (t[3] == t[4] || t[3] == t[5] || t[4] == t[5]) return true;
        // every (v-pair, y-pair) combination the four-variable equation uses
        const std::array<std::array<int, 4>, 6> combos{{{0, 1, 3, 4},
                                                        {0, 2, 4, 5},
                                                        {0, 2, 3, 5},
                                                        {2, 1, 3, 4},
                                                        {1, 2, 4, 5},
                                                        {0, 1, 3, 5}}};
        for (const auto& c : combos) {
            try {
                r.eval(t[c[0]], t[c[1]], t[c[2]], t[c[3]]);
            } catch (const Error&) {
                return true;
            }
        }
        return false;
    };
    for (const auto& t : sample_rationals(seed, count, 6, forbidden))
        if (!aybe4_residual(r, t[0], t[1], t[2], t[3], t[4], t[5]).is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("a three-variable solution solves the four-variable equation") {
    const SolutionHandle4 r = to_four_variable(algorithmic_solution(2, 1));
    CHECK(aybe4_residual(r, 3, 1, 2, 0, 1, 4).is_zero());

    SolutionHandle4 zero{2, "zero",
                         [](const Rational&, const Rational&, const Rational&, const Rational&) {
                             return Tensor2(2);
                         }};
    CHECK(aybe4_residual(zero, 3, 1, 2, 0, 1, 4).is_zero());
}

TEST_CASE("gauge_apply with the identity gauge returns the same values") {
    const SolutionHandle4 r = to_four_variable(algorithmic_solution(2, 1));
    const SolutionHandle4 g = gauge_apply(r, MatPoly2::constant(Mat::identity(2)));
    CHECK(g.eval(3, 1, 0, 2) == r.eval(3, 1, 0, 2));
}

TEST_CASE("constant and polynomial gauges preserve the four-variable equation") {
    const SolutionHandle4 r = to_four_variable(algorithmic_solution(2, 1));

    Mat diag(2, 2);
    diag(0, 0) = 2;
    diag(1, 1) = 1;
    const SolutionHandle4 g1 = gauge_apply(r, MatPoly2::constant(diag));
    CHECK(aybe4_zero_at_seeded_points(g1, 5, 4));

    // phi(v, y) = (1 + v y) * identity
    MatPoly2 phi(2);
    phi.set(0, 0, Mat::identity(2));
    phi.set(1, 1, Mat::identity(2));
    const SolutionHandle4 g2 = gauge_apply(r, phi);
    CHECK(aybe4_zero_at_seeded_points(g2, 6, 4));

    // singular gauge point: phi(v, y) = v * identity at v = 0
    MatPoly2 vphi(2);
    vphi.set(1, 0, Mat::identity(2));
    const SolutionHandle4 g3 = gauge_apply(r, vphi);
    CHECK_THROWS_AS(g3.eval(0, 1, 0, 2), Error);
}

TEST_CASE("exponent forms behave like polynomials") {
    const ExponentForm u = ExponentForm::symbol(Sym::U);
    const ExponentForm v = ExponentForm::symbol(Sym::V);
    CHECK((u + v) * (u - v) == u * u - v * v);
    CHECK((u - u).is_zero());
    CHECK(u * ExponentForm::constant(0) == ExponentForm());

    // substitution: (V)^2 with V -> U + V
    const ExponentForm sq = v * v;
    const ExponentForm subst = sq.substitute({{Sym::V, u + v}});
    CHECK(subst == u * u + u * v * Rational(2) + v * v);
}

TEST_CASE("exp twist with exponent v(g(y2) - g(y1)) passes the equation check") {
    // the three equation terms share the exponent -u g(y1) - v g(y2) + (u+v) g(y3)
    const Polynomial g({0, 1}); // g(y) = y
    const ExponentForm tpl = v_times_g_difference(g);

    const ExponentForm u = ExponentForm::symbol(Sym::U);
    const ExponentForm v = ExponentForm::symbol(Sym::V);
    const ExponentForm y1 = ExponentForm::symbol(Sym::Y1);
    const ExponentForm y2 = ExponentForm::symbol(Sym::Y2);
    const ExponentForm y3 = ExponentForm::symbol(Sym::Y3);
    const ExponentForm expected = (u + v) * y3 - u * y1 - v * y2;
    const ExponentForm lhs_form = tpl.substitute({{Sym::V, u}}) // r^12(u; y1, y2)
                                  + tpl.substitute({{Sym::V, u + v},
                                                    {Sym::Y1, y2},
                                                    {Sym::Y2, y3}}); // r^23(u+v; y2, y3)
    CHECK(lhs_form == expected);

    const TwistedHandle tw = exp_twist(algorithmic_solution(2, 1), tpl);
    CHECK(exp_aybe_residual(tw, 1, 2, 0, 1, 3).is_zero());

    // a quadratic g works the same way
    const TwistedHandle tw2 =
        exp_twist(algorithmic_solution(2, 1), v_times_g_difference(Polynomial({1, 0, 2})));
    CHECK(exp_aybe_residual(tw2, 1, 2, 0, 1, 3).is_zero());

    // zero exponent reduces to the plain check
    const TwistedHandle plain = exp_twist(algorithmic_solution(2, 1), ExponentForm());
    CHECK(exp_aybe_residual(plain, 1, 2, 0, 1, 3).is_zero());
}

TEST_CASE("exponents that are not of difference form are rejected") {
    // exponent V * Y1 alone: the three terms expand to different forms
    const ExponentForm bad = ExponentForm::symbol(Sym::V) * ExponentForm::symbol(Sym::Y1);
    const TwistedHandle tw = exp_twist(algorithmic_solution(2, 1), bad);
    CHECK_THROWS_AS(exp_aybe_residual(tw, 1, 2, 0, 1, 3), Error);
    try {
        exp_aybe_residual(tw, 1, 2, 0, 1, 3);
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::ExponentMismatch);
    }
}

TEST_CASE("the bilinear twist passes the four-variable check") {
    const TwistedHandle4 tw =
        exp_twist4(to_four_variable(algorithmic_solution(2, 1)), bilinear_exponent(Rational(5) / 3));
    CHECK(exp_aybe4_residual(tw, 3, 1, 2, 0, 1, 4).is_zero());
}

TEST_CASE("twisted tensors multiply by adding exponents") {
    const ExponentForm e1 = ExponentForm::symbol(Sym::U);
    const ExponentForm e2 = ExponentForm::symbol(Sym::V) * Rational(2);
    const ExpTwistedTensor a{e1, tensor_p(2)};
    const ExpTwistedTensor b{e2, Tensor2::unit_unit(2)};
    const ExpTwistedTensor ab = a * b;
    CHECK(ab.exponent == e1 + e2);
    CHECK(ab.body == tensor_p(2));
    CHECK(a == a);
    CHECK_FALSE(a == b);
}
