#include "aybe/laurent.hpp"

#include <set>
#include <utility>
#include <vector>

#include "aybe/error.hpp"

namespace aybe {

Tensor2 Tensor2Poly::eval(const Rational& x) const {
    Tensor2 out(n);
    for (const auto& [k, p] : entries) out.add(k[0], k[1], k[2], k[3], p.eval(x));
    return out;
}

Tensor2 Tensor2Poly::coefficient(int k) const {
    Tensor2 out(n);
    for (const auto& [key, p] : entries) out.add(key[0], key[1], key[2], key[3], p.coeff(k));
    return out;
}

Tensor2Poly Tensor2Poly::derivative() const {
    Tensor2Poly out{n, {}};
    for (const auto& [key, p] : entries) {
        Polynomial d = p.derivative();
        if (!d.is_zero()) out.entries.emplace(key, std::move(d));
    }
    return out;
}

int Tensor2Poly::max_degree() const {
    int deg = -1;
    for (const auto& [key, p] : entries) deg = std::max(deg, p.degree());
    return deg;
}

namespace {

Tensor2Poly interpolate_samples(const std::vector<std::pair<Rational, Tensor2>>& samples, int n) {
    std::set<Key4> keys;
    for (const auto& [x, t] : samples)
        for (const auto& [k, v] : t.coeffs()) keys.insert(k);
    Tensor2Poly out{n, {}};
    std::vector<std::pair<Rational, Rational>> pts(samples.size());
    for (const Key4& k : keys) {
        for (std::size_t s = 0; s < samples.size(); ++s)
            pts[s] = {samples[s].first,
                      samples[s].second.coeff(k[0], k[1], k[2], k[3])};
        Polynomial p = interpolate_poly(pts);
        if (!p.is_zero()) out.entries.emplace(k, std::move(p));
    }
    return out;
}

} // namespace

Tensor2Poly adaptive_tensor_interpolation(const std::function<Tensor2(const Rational&)>& f,
                                          const std::function<Rational(int)>& node,
                                          int degree_cap) {
    std::vector<std::pair<Rational, Tensor2>> samples;
    int next = 0, skipped = 0, n = 0;
    auto draw = [&]() {
        for (;;) {
            if (skipped > degree_cap + 64)
                throw Error(Error::Kind::ExhaustedSampling,
                            "tensor interpolation: node stream exhausted by singular points");
            const Rational x = node(next++);
            try {
                Tensor2 value = f(x);
                n = value.n();
                samples.emplace_back(x, std::move(value));
                return;
            } catch (const Error&) {
                ++skipped;
            }
        }
    };

    draw();
    draw();
    for (;;) {
        Tensor2Poly poly = interpolate_samples(samples, n);
        draw(); // verification node
        const auto& [x, expected] = samples.back();
        if (poly.eval(x) == expected) return poly;
        if (static_cast<int>(samples.size()) - 1 > degree_cap)
            throw Error(Error::Kind::DegreeCapExceeded,
                        "tensor interpolation: degree cap " + std::to_string(degree_cap) +
                            " exceeded");
    }
}

Tensor2 LaurentTensor::coefficient(int k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? Tensor2(n) : it->second;
}

LaurentTensor laurent_in_v(const SolutionHandle& r, const Rational& y1, const Rational& y2,
                           int max_order) {
    auto f = [&r, &y1, &y2](const Rational& v) { return r.eval(v, y1, y2) * v; };
    auto node = [](int i) { return Rational(i + 1); };
    const Tensor2Poly g = adaptive_tensor_interpolation(f, node, 4 * r.n + 4);

    LaurentTensor out{r.n, {}};
    for (int k = -1; k <= max_order; ++k) {
        Tensor2 coeff = g.coefficient(k + 1);
        if (!coeff.is_zero()) out.coeffs.emplace(k, std::move(coeff));
    }
    return out;
}

Rational ansatz_scalar(const SolutionHandle& r, const Rational& y1, const Rational& y2) {
    const Tensor2 pole = laurent_in_v(r, y1, y2, -1).coefficient(-1);
    const Rational c = pole.coeff(0, 0, 0, 0);
    if (!(pole == Tensor2::unit_unit(r.n) * c))
        throw Error(Error::Kind::SizeMismatch,
                    "pole coefficient is not a scalar multiple of the identity tensor");
    return c;
}

Tensor2 diagonal_residue(const SolutionHandle& r, const Rational& v, const Rational& y1) {
    auto f = [&r, &v, &y1](const Rational& y2) { return r.eval(v, y1, y2) * (y2 - y1); };
    auto node = [&y1](int i) { return y1 + Rational(i + 1); };
    const Tensor2Poly h = adaptive_tensor_interpolation(f, node, 2 * r.n + 2);
    return -h.eval(y1);
}

} // namespace aybe
