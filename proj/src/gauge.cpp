#include "aybe/gauge.hpp"

#include "aybe/error.hpp"
#include "aybe/linalg.hpp"

namespace aybe {

MatPoly2 MatPoly2::constant(const Mat& m) {
    MatPoly2 p(m.rows());
    p.set(0, 0, m);
    return p;
}

void MatPoly2::set(int deg_v, int deg_y, Mat coeff) {
    if (coeff.rows() != n_ || coeff.cols() != n_)
        throw Error(Error::Kind::SizeMismatch, "MatPoly2: coefficient size mismatch");
    if (coeff.is_zero())
        c_.erase({deg_v, deg_y});
    else
        c_.insert_or_assign({deg_v, deg_y}, std::move(coeff));
}

Mat MatPoly2::eval(const Rational& v, const Rational& y) const {
    Mat out(n_, n_);
    for (const auto& [deg, coeff] : c_) {
        Rational scale = 1;
        for (int k = 0; k < deg.first; ++k) scale *= v;
        for (int k = 0; k < deg.second; ++k) scale *= y;
        out += coeff * scale;
    }
    return out;
}

SolutionHandle4 gauge_apply(const SolutionHandle4& r, const MatPoly2& phi) {
    if (phi.n() != r.n)
        throw Error(Error::Kind::SizeMismatch, "gauge_apply: size mismatch");
    SolutionHandle4 out;
    out.n = r.n;
    out.name = r.name + "'";
    out.eval = [r, phi](const Rational& v1, const Rational& v2, const Rational& y1,
                        const Rational& y2) {
        auto inverse_at = [&phi](const Rational& v, const Rational& y) {
            auto inv = invert(phi.eval(v, y));
            if (!inv)
                throw Error(Error::Kind::SingularGauge,
                            "gauge matrix singular at a requested point");
            return *inv;
        };
        const Tensor2 left = Tensor2::outer(phi.eval(v1, y1), phi.eval(v2, y2));
        const Tensor2 right = Tensor2::outer(inverse_at(v2, y1), inverse_at(v1, y2));
        return t2_mul(t2_mul(left, r.eval(v1, v2, y1, y2)), right);
    };
    return out;
}

ExponentForm ExponentForm::constant(const Rational& c) {
    ExponentForm f;
    f.add_term(Mono{}, c);
    return f;
}

ExponentForm ExponentForm::symbol(Sym s) {
    ExponentForm f;
    Mono m{};
    m[static_cast<int>(s)] = 1;
    f.add_term(m, 1);
    return f;
}

void ExponentForm::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExponentForm& ExponentForm::operator+=(const ExponentForm& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ExponentForm& ExponentForm::operator-=(const ExponentForm& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ExponentForm operator*(const ExponentForm& a, const ExponentForm& b) {
    ExponentForm out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Mono m;
            for (int i = 0; i < kSymCount; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

ExponentForm operator*(ExponentForm a, const Rational& s) {
    if (s == 0) return ExponentForm();
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
}

ExponentForm ExponentForm::substitute(const std::map<Sym, ExponentForm>& assignment) const {
    ExponentForm out;
    for (const auto& [m, c] : terms_) {
        ExponentForm term = ExponentForm::constant(c);
        for (int i = 0; i < kSymCount; ++i) {
            if (m[i] == 0) continue;
            auto it = assignment.find(static_cast<Sym>(i));
            const ExponentForm base =
                it != assignment.end() ? it->second : ExponentForm::symbol(static_cast<Sym>(i));
            for (int k = 0; k < m[i]; ++k) term = term * base;
        }
        out += term;
    }
    return out;
}

TwistedHandle exp_twist(SolutionHandle r, ExponentForm exponent) {
    return {std::move(r), std::move(exponent)};
}

TwistedHandle4 exp_twist4(SolutionHandle4 r, ExponentForm exponent) {
    return {std::move(r), std::move(exponent)};
}

namespace {

ExponentForm slot3(const ExponentForm& e, const ExponentForm& v, Sym ya, Sym yb) {
    return e.substitute({{Sym::V, v},
                         {Sym::Y1, ExponentForm::symbol(ya)},
                         {Sym::Y2, ExponentForm::symbol(yb)}});
}

ExponentForm slot4(const ExponentForm& e, Sym va, Sym vb, Sym ya, Sym yb) {
    return e.substitute({{Sym::V1, ExponentForm::symbol(va)},
                         {Sym::V2, ExponentForm::symbol(vb)},
                         {Sym::Y1, ExponentForm::symbol(ya)},
                         {Sym::Y2, ExponentForm::symbol(yb)}});
}

} // namespace

Tensor3 exp_aybe_residual(const TwistedHandle& r, const Rational& u, const Rational& v,
                          const Rational& y1, const Rational& y2, const Rational& y3) {
    const ExponentForm fu = ExponentForm::symbol(Sym::U);
    const ExponentForm fv = ExponentForm::symbol(Sym::V);

    const ExponentForm lhs = slot3(r.exponent, fu, Sym::Y1, Sym::Y2) +
                             slot3(r.exponent, fu + fv, Sym::Y2, Sym::Y3);
    const ExponentForm rhs1 = slot3(r.exponent, fu + fv, Sym::Y1, Sym::Y3) +
                              slot3(r.exponent, ExponentForm() - fv, Sym::Y1, Sym::Y2);
    const ExponentForm rhs2 = slot3(r.exponent, fv, Sym::Y2, Sym::Y3) +
                              slot3(r.exponent, fu, Sym::Y1, Sym::Y3);
    if (!(lhs == rhs1) || !(lhs == rhs2))
        throw Error(Error::Kind::ExponentMismatch,
                    "exp twist: exponent forms of the equation terms differ");

    const Tensor3 body_lhs = t3_mul(embed(r.base.eval(u, y1, y2), Slot::s12),
                                    embed(r.base.eval(u + v, y2, y3), Slot::s23));
    Tensor3 body_rhs = t3_mul(embed(r.base.eval(u + v, y1, y3), Slot::s13),
                              embed(r.base.eval(-v, y1, y2), Slot::s12));
    body_rhs += t3_mul(embed(r.base.eval(v, y2, y3), Slot::s23),
                       embed(r.base.eval(u, y1, y3), Slot::s13));
    return body_lhs - body_rhs;
}

Tensor3 exp_aybe4_residual(const TwistedHandle4& r, const Rational& v1, const Rational& v2,
                           const Rational& v3, const Rational& y1, const Rational& y2,
                           const Rational& y3) {
    const ExponentForm lhs = slot4(r.exponent, Sym::V1, Sym::V2, Sym::Y1, Sym::Y2) +
                             slot4(r.exponent, Sym::V1, Sym::V3, Sym::Y2, Sym::Y3);
    const ExponentForm rhs1 = slot4(r.exponent, Sym::V1, Sym::V3, Sym::Y1, Sym::Y3) +
                              slot4(r.exponent, Sym::V3, Sym::V2, Sym::Y1, Sym::Y2);
    const ExponentForm rhs2 = slot4(r.exponent, Sym::V2, Sym::V3, Sym::Y2, Sym::Y3) +
                              slot4(r.exponent, Sym::V1, Sym::V2, Sym::Y1, Sym::Y3);
    if (!(lhs == rhs1) || !(lhs == rhs2))
        throw Error(Error::Kind::ExponentMismatch,
                    "exp twist: exponent forms of the equation terms differ");

    const Tensor3 body_lhs = t3_mul(embed(r.base.eval(v1, v2, y1, y2), Slot::s12),
                                    embed(r.base.eval(v1, v3, y2, y3), Slot::s23));
    Tensor3 body_rhs = t3_mul(embed(r.base.eval(v1, v3, y1, y3), Slot::s13),
                              embed(r.base.eval(v3, v2, y1, y2), Slot::s12));
    body_rhs += t3_mul(embed(r.base.eval(v2, v3, y2, y3), Slot::s23),
                       embed(r.base.eval(v1, v2, y1, y3), Slot::s13));
    return body_lhs - body_rhs;
}

ExponentForm v_times_g_difference(const Polynomial& g) {
    ExponentForm g_at_y1, g_at_y2;
    const ExponentForm y1 = ExponentForm::symbol(Sym::Y1);
    const ExponentForm y2 = ExponentForm::symbol(Sym::Y2);
    ExponentForm y1_pow = ExponentForm::constant(1);
    ExponentForm y2_pow = ExponentForm::constant(1);
    for (int k = 0; k <= g.degree(); ++k) {
        g_at_y1 += y1_pow * g.coeff(k);
        g_at_y2 += y2_pow * g.coeff(k);
        y1_pow = y1_pow * y1;
        y2_pow = y2_pow * y2;
    }
    return ExponentForm::symbol(Sym::V) * (g_at_y2 - g_at_y1);
}

ExponentForm bilinear_exponent(const Rational& c) {
    const ExponentForm dv = ExponentForm::symbol(Sym::V2) - ExponentForm::symbol(Sym::V1);
    const ExponentForm dy = ExponentForm::symbol(Sym::Y2) - ExponentForm::symbol(Sym::Y1);
    return dv * dy * c;
}

} // namespace aybe
