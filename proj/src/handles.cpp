#include "aybe/handles.hpp"

#include <array>
#include <map>
#include <memory>

#include "aybe/closedforms.hpp"
#include "aybe/solspace.hpp"

namespace aybe {

SolutionHandle cached(SolutionHandle h) {
    auto cache = std::make_shared<std::map<std::array<Rational, 3>, Tensor2>>();
    auto inner = h.eval;
    h.eval = [cache, inner](const Rational& v, const Rational& y1, const Rational& y2) {
        const std::array<Rational, 3> key{v, y1, y2};
        if (auto it = cache->find(key); it != cache->end()) return it->second;
        Tensor2 value = inner(v, y1, y2);
        cache->emplace(key, value);
        return value;
    };
    return h;
}

SolutionHandle algorithmic_solution(int n, int d) {
    SolutionHandle h;
    h.n = n;
    h.name = "r(" + std::to_string(n) + "," + std::to_string(d) + ")";
    h.eval = [n, d](const Rational& v, const Rational& y1, const Rational& y2) {
        return compute_r(n, d, v, y1, y2);
    };
    return cached(std::move(h));
}

SolutionHandle closed_form_solution_21() {
    return {2, "r21_closed", [](const Rational& v, const Rational& y1, const Rational& y2) {
                return r21_closed(v, y1, y2);
            }};
}

SolutionHandle closed_form_solution_31() {
    return {3, "r31_closed", [](const Rational& v, const Rational& y1, const Rational& y2) {
                return r31_closed(v, y1, y2);
            }};
}

SolutionHandle yang2_solution() {
    return {2, "yang2", [](const Rational& v, const Rational& y1, const Rational& y2) {
                return yang2_aybe(v, y1 - y2);
            }};
}

SolutionHandle4 to_four_variable(const SolutionHandle& r) {
    SolutionHandle4 h;
    h.n = r.n;
    h.name = r.name;
    h.eval = [eval = r.eval](const Rational& v1, const Rational& v2, const Rational& y1,
                             const Rational& y2) { return eval(v1 - v2, y1, y2); };
    return h;
}

} // namespace aybe
