#include "aybe/tensor.hpp"

#include <tuple>

#include "aybe/error.hpp"
#include "aybe/linalg.hpp"

namespace aybe {

Rational Tensor2::coeff(int i, int j, int k, int l) const {
    auto it = c_.find(Key4{i, j, k, l});
    return it == c_.end() ? Rational(0) : it->second;
}

void Tensor2::add(int i, int j, int k, int l, const Rational& value) {
    if (value == 0) return;
    Key4 key{i, j, k, l};
    auto [it, inserted] = c_.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) c_.erase(it);
    }
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    if (n_ != o.n_) throw Error(Error::Kind::SizeMismatch, "tensor addition size mismatch");
    for (const auto& [k, v] : o.c_) add(k[0], k[1], k[2], k[3], v);
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    if (n_ != o.n_) throw Error(Error::Kind::SizeMismatch, "tensor subtraction size mismatch");
    for (const auto& [k, v] : o.c_) add(k[0], k[1], k[2], k[3], -v);
    return *this;
}

Tensor2& Tensor2::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [k, v] : c_) v *= s;
    return *this;
}

Tensor2 Tensor2::unit_unit(int n) {
    Tensor2 t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.add(i, i, j, j, 1);
    return t;
}

Tensor2 Tensor2::outer(const Mat& x, const Mat& y) {
    Tensor2 t(x.rows());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            if (x(i, j) == 0) continue;
            for (int k = 0; k < y.rows(); ++k)
                for (int l = 0; l < y.cols(); ++l)
                    if (y(k, l) != 0) t.add(i, j, k, l, x(i, j) * y(k, l));
        }
    return t;
}

Rational Tensor3::coeff(const Key6& k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Rational(0) : it->second;
}

void Tensor3::add(const Key6& k, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = c_.try_emplace(k, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) c_.erase(it);
    }
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
    if (n_ != o.n_) throw Error(Error::Kind::SizeMismatch, "tensor addition size mismatch");
    for (const auto& [k, v] : o.c_) add(k, v);
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    if (n_ != o.n_) throw Error(Error::Kind::SizeMismatch, "tensor subtraction size mismatch");
    for (const auto& [k, v] : o.c_) add(k, -v);
    return *this;
}

Tensor3& Tensor3::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [k, v] : c_) v *= s;
    return *this;
}

Tensor3 Tensor3::unit_unit_unit(int n) {
    Tensor3 t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) t.add(Key6{i, i, j, j, k, k}, 1);
    return t;
}

Tensor2 t2_mul(const Tensor2& a, const Tensor2& b) {
    if (a.n() != b.n()) throw Error(Error::Kind::SizeMismatch, "t2_mul size mismatch");
    // (e_ij (x) e_kl)(e_pq (x) e_rs) = delta_jp delta_lr e_iq (x) e_ks,
    // so bucket the right factor by its row indices (p, r).
    std::map<std::pair<int, int>, std::vector<std::pair<Key4, Rational>>> buckets;
    for (const auto& [k, v] : b.coeffs())
        buckets[{k[0], k[2]}].emplace_back(k, v);
    Tensor2 out(a.n());
    for (const auto& [ka, va] : a.coeffs()) {
        auto it = buckets.find({ka[1], ka[3]});
        if (it == buckets.end()) continue;
        for (const auto& [kb, vb] : it->second)
            out.add(ka[0], kb[1], ka[2], kb[3], va * vb);
    }
    return out;
}

Tensor3 t3_mul(const Tensor3& a, const Tensor3& b) {
    if (a.n() != b.n()) throw Error(Error::Kind::SizeMismatch, "t3_mul size mismatch");
    std::map<std::tuple<int, int, int>, std::vector<std::pair<Key6, Rational>>> buckets;
    for (const auto& [k, v] : b.coeffs())
        buckets[{k[0], k[2], k[4]}].emplace_back(k, v);
    Tensor3 out(a.n());
    for (const auto& [ka, va] : a.coeffs()) {
        auto it = buckets.find({ka[1], ka[3], ka[5]});
        if (it == buckets.end()) continue;
        for (const auto& [kb, vb] : it->second)
            out.add(Key6{ka[0], kb[1], ka[2], kb[3], ka[4], kb[5]}, va * vb);
    }
    return out;
}

Tensor2 swap_factors(const Tensor2& t) {
    Tensor2 out(t.n());
    for (const auto& [k, v] : t.coeffs()) out.add(k[2], k[3], k[0], k[1], v);
    return out;
}

Tensor3 embed(const Tensor2& t, Slot slot) {
    Tensor3 out(t.n());
    for (const auto& [k, v] : t.coeffs())
        for (int m = 0; m < t.n(); ++m) {
            switch (slot) {
            case Slot::s12: out.add(Key6{k[0], k[1], k[2], k[3], m, m}, v); break;
            case Slot::s13: out.add(Key6{k[0], k[1], m, m, k[2], k[3]}, v); break;
            case Slot::s23: out.add(Key6{m, m, k[0], k[1], k[2], k[3]}, v); break;
            }
        }
    return out;
}

Mat pr(const Mat& x) {
    Mat out = x;
    const Rational shift = x.trace() / Rational(x.rows());
    for (int i = 0; i < x.rows(); ++i) out(i, i) -= shift;
    return out;
}

Tensor2 pr2(const Tensor2& t) {
    const int n = t.n();
    const Rational inv_n = Rational(1) / Rational(n);
    Tensor2 out(n);
    for (const auto& [k, v] : t.coeffs()) {
        out.add(k[0], k[1], k[2], k[3], v);
        if (k[2] == k[3])
            for (int m = 0; m < n; ++m) out.add(k[0], k[1], m, m, -v * inv_n);
        if (k[0] == k[1])
            for (int m = 0; m < n; ++m) out.add(m, m, k[2], k[3], -v * inv_n);
        if (k[0] == k[1] && k[2] == k[3])
            for (int m1 = 0; m1 < n; ++m1)
                for (int m2 = 0; m2 < n; ++m2) out.add(m1, m1, m2, m2, v * inv_n * inv_n);
    }
    return out;
}

Tensor3 pr3(const Tensor3& t) {
    const int n = t.n();
    const Rational inv_n = Rational(1) / Rational(n);
    // Apply pr one factor at a time.
    auto project_slot = [n, &inv_n](const Tensor3& in, int slot) {
        Tensor3 out(n);
        for (const auto& [k, v] : in.coeffs()) {
            out.add(k, v);
            if (k[2 * slot] == k[2 * slot + 1])
                for (int m = 0; m < n; ++m) {
                    Key6 key = k;
                    key[2 * slot] = m;
                    key[2 * slot + 1] = m;
                    out.add(key, -v * inv_n);
                }
        }
        return out;
    };
    return project_slot(project_slot(project_slot(t, 0), 1), 2);
}

Tensor2 tensor_p(int n) {
    Tensor2 t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.add(i, j, j, i, 1);
    return t;
}

Tensor2 tensor_omega(int n) {
    return pr2(tensor_p(n));
}

Mat can(const Tensor2& t) {
    const int n = t.n();
    Mat m(n * n, n * n);
    for (const auto& [k, v] : t.coeffs())
        m(k[2] * n + k[3], k[1] * n + k[0]) += v;
    return m;
}

Tensor2 can_inv(const Mat& m) {
    int n = 0;
    while (n * n < m.rows()) ++n;
    if (n * n != m.rows() || !m.is_square())
        throw Error(Error::Kind::SizeMismatch, "can_inv: matrix is not n^2 x n^2");
    Tensor2 t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Rational& v = m(k * n + l, j * n + i);
                    if (v != 0) t.add(i, j, k, l, v);
                }
    return t;
}

bool nondegenerate(const Tensor2& t) {
    return rank(can(t)) == t.n() * t.n();
}

} // namespace aybe
