#pragma once

#include <functional>
#include <string>

#include "aybe/tensor.hpp"

namespace aybe {

// A three-variable solution r(v; y1, y2). The evaluator throws (PoleHit,
// SingularResidue, ...) at its singular points; everything downstream
// treats such points as unusable samples.
struct SolutionHandle {
    int n = 0;
    std::string name;
    std::function<Tensor2(const Rational& v, const Rational& y1, const Rational& y2)> eval;
};

// Four-variable form r(v1, v2; y1, y2).
struct SolutionHandle4 {
    int n = 0;
    std::string name;
    std::function<Tensor2(const Rational& v1, const Rational& v2, const Rational& y1,
                          const Rational& y2)>
        eval;
};

// Memoizing wrapper; evaluators are pure so this is transparent.
SolutionHandle cached(SolutionHandle h);

// The algorithmic solution r_{(n,d)} (cached).
SolutionHandle algorithmic_solution(int n, int d);

SolutionHandle closed_form_solution_21();
SolutionHandle closed_form_solution_31();
SolutionHandle yang2_solution(); // adapter: y = y1 - y2

// A three-variable solution seen as a four-variable one through
// r(v1, v2; y1, y2) = r(v1 - v2; y1, y2).
SolutionHandle4 to_four_variable(const SolutionHandle& r);

} // namespace aybe
