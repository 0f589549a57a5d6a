#include "aybe/verify.hpp"

#include <array>
#include <map>
#include <memory>

#include "aybe/error.hpp"

namespace aybe {

Law parse_law(const std::string& name) {
    if (name == "aybe") return Law::Aybe;
    if (name == "dual") return Law::Dual;
    if (name == "unitarity") return Law::Unitarity;
    if (name == "nondeg") return Law::Nondeg;
    if (name == "cybe") return Law::Cybe;
    if (name == "qybe") return Law::Qybe;
    if (name == "r0r1") return Law::R0R1;
    if (name == "residue") return Law::Residue;
    if (name == "conds") return Law::Conds;
    throw Error(Error::Kind::ParseError, "unknown law '" + name + "'");
}

std::string law_name(Law law) {
    switch (law) {
    case Law::Aybe: return "aybe";
    case Law::Dual: return "dual";
    case Law::Unitarity: return "unitarity";
    case Law::Nondeg: return "nondeg";
    case Law::Cybe: return "cybe";
    case Law::Qybe: return "qybe";
    case Law::R0R1: return "r0r1";
    case Law::Residue: return "residue";
    case Law::Conds: return "conds";
    }
    return "?";
}

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.residual_zero) return false;
    return true;
}

const CheckRecord* VerifyReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.residual_zero) return &c;
    return nullptr;
}

namespace {

bool any_equal(const std::vector<Rational>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j]) return true;
    return false;
}

// Forbidden predicate: structural coincidences plus any point where the
// handle fails to evaluate (singular residue, dimension drop, ...). The
// handle caches, so probe evaluations are reused by the actual check.
bool handle_throws(const SolutionHandle& r,
                   const std::vector<std::array<Rational, 3>>& args) {
    for (const auto& [v, y1, y2] : args) {
        try {
            r.eval(v, y1, y2);
        } catch (const Error&) {
            return true;
        }
    }
    return false;
}

std::vector<std::pair<std::string, Rational>> named(std::initializer_list<const char*> names,
                                                    const std::vector<Rational>& tuple) {
    std::vector<std::pair<std::string, Rational>> out;
    std::size_t i = 0;
    for (const char* name : names) out.emplace_back(name, tuple[i++]);
    return out;
}

using AybeArgs = std::vector<std::array<Rational, 3>>;

AybeArgs aybe_eval_points(const std::vector<Rational>& t) {
    const Rational &u = t[0], &v = t[1], &y1 = t[2], &y2 = t[3], &y3 = t[4];
    return {{u, y1, y2}, {u + v, y2, y3}, {u + v, y1, y3},
            {-v, y1, y2}, {v, y2, y3},    {u, y1, y3}};
}

// Memoized pair function; keeps repeated Laurent expansions cheap.
PairFunction cached_pair(PairFunction f) {
    auto cache = std::make_shared<std::map<std::pair<Rational, Rational>, Tensor2>>();
    return [cache, f](const Rational& a, const Rational& b) {
        const std::pair<Rational, Rational> key{a, b};
        if (auto it = cache->find(key); it != cache->end()) return it->second;
        Tensor2 value = f(a, b);
        cache->emplace(key, value);
        return value;
    };
}

PairFunction laurent_coefficient_fn(const SolutionHandle& r, int order, bool project) {
    return cached_pair([r, order, project](const Rational& a, const Rational& b) {
        Tensor2 t = laurent_in_v(r, a, b, order).coefficient(order);
        return project ? pr2(t) : t;
    });
}

void run_samples(VerifyReport& report, const std::string& law, std::uint64_t seed, int samples,
                 int arity, const TuplePredicate& forbidden,
                 const std::function<bool(const std::vector<Rational>&)>& holds,
                 std::initializer_list<const char*> names) {
    for (const auto& tuple : sample_rationals(seed, samples, arity, forbidden)) {
        report.checks.push_back(CheckRecord{law, named(names, tuple), holds(tuple)});
    }
}

} // namespace

VerifyReport verify_law(const SolutionHandle& r, std::optional<int> d, Law law,
                        const Rational& v0, std::uint64_t seed, int samples) {
    if (law == Law::Conds) return condition_battery(r, d, v0, seed, samples);

    VerifyReport report;
    report.solution = r.name;
    report.n = r.n;
    report.d = d;
    report.seed = seed;
    const std::string name = law_name(law);

    switch (law) {
    case Law::Aybe:
    case Law::Dual: {
        auto forbidden = [&r](const std::vector<Rational>& t) {
            if (t[0] == 0 || t[1] == 0 || t[0] + t[1] == 0) return true;
            if (any_equal({t[2], t[3], t[4]})) return true;
            return handle_throws(r, aybe_eval_points(t));
        };
        auto holds = [&r, law](const std::vector<Rational>& t) {
            return (law == Law::Aybe ? aybe_residual(r, t[0], t[1], t[2], t[3], t[4])
                                     : dual_aybe_residual(r, t[0], t[1], t[2], t[3], t[4]))
                .is_zero();
        };
        run_samples(report, name, seed, samples, 5, forbidden, holds,
                    {"u", "v", "y1", "y2", "y3"});
        break;
    }
    case Law::Unitarity: {
        auto forbidden = [&r](const std::vector<Rational>& t) {
            if (t[0] == 0 || t[1] == t[2]) return true;
            return handle_throws(r, {{t[0], t[1], t[2]}, {-t[0], t[2], t[1]}});
        };
        auto holds = [&r](const std::vector<Rational>& t) {
            return unitarity_residual(r, t[0], t[1], t[2]).is_zero();
        };
        run_samples(report, name, seed, samples, 3, forbidden, holds, {"v", "y1", "y2"});
        break;
    }
    case Law::Nondeg: {
        auto forbidden = [&r](const std::vector<Rational>& t) {
            if (t[0] == 0 || t[1] == t[2]) return true;
            return handle_throws(r, {{t[0], t[1], t[2]}});
        };
        auto holds = [&r](const std::vector<Rational>& t) {
            return nondegenerate(r.eval(t[0], t[1], t[2]));
        };
        run_samples(report, name, seed, samples, 3, forbidden, holds, {"v", "y1", "y2"});
        break;
    }
    case Law::Cybe: {
        PairFunction c = laurent_coefficient_fn(r, 0, /*project=*/true);
        auto forbidden = [&c](const std::vector<Rational>& t) {
            if (any_equal(t)) return true;
            try {
                c(t[0], t[1]);
                c(t[0], t[2]);
                c(t[1], t[2]);
            } catch (const Error&) {
                return true;
            }
            return false;
        };
        auto holds = [&c](const std::vector<Rational>& t) {
            return cybe_residual(c, t[0], t[1], t[2]).is_zero();
        };
        run_samples(report, name, seed, samples, 3, forbidden, holds, {"y1", "y2", "y3"});
        break;
    }
    case Law::Qybe: {
        PairFunction rt = [&r, v0](const Rational& a, const Rational& b) {
            return r.eval(v0, a, b);
        };
        auto forbidden = [&r, &v0](const std::vector<Rational>& t) {
            if (any_equal(t)) return true;
            return handle_throws(r, {{v0, t[0], t[1]}, {v0, t[0], t[2]}, {v0, t[1], t[2]}});
        };
        auto holds = [&rt](const std::vector<Rational>& t) {
            return qybe_residual(rt, t[0], t[1], t[2]).is_zero();
        };
        run_samples(report, name, seed, samples, 3, forbidden, holds, {"y1", "y2", "y3"});
        break;
    }
    case Law::R0R1: {
        // The displayed identity assumes the normalized pole 1 (x) 1 / v; it
        // mixes degrees in r, so feed it the data of r / c with c the
        // recorded ansatz scalar.
        PairFunction r0_raw = laurent_coefficient_fn(r, 0, /*project=*/false);
        PairFunction r1_raw = laurent_coefficient_fn(r, 1, /*project=*/false);
        auto scale = std::make_shared<std::optional<Rational>>();
        auto normalized = [&r, scale](const PairFunction& f) {
            return PairFunction([&r, scale, f](const Rational& a, const Rational& b) {
                if (!scale->has_value()) *scale = ansatz_scalar(r, a, b);
                return f(a, b) * (Rational(1) / **scale);
            });
        };
        PairFunction r0 = normalized(r0_raw);
        PairFunction r1 = normalized(r1_raw);
        auto forbidden = [&r0](const std::vector<Rational>& t) {
            if (any_equal(t)) return true;
            try {
                r0(t[0], t[1]);
                r0(t[0], t[2]);
                r0(t[1], t[2]);
            } catch (const Error&) {
                return true;
            }
            return false;
        };
        auto holds = [&r0, &r1](const std::vector<Rational>& t) {
            return r0_r1_identity_residual(r0, r1, t[0], t[1], t[2]).is_zero();
        };
        run_samples(report, name, seed, samples, 3, forbidden, holds, {"y1", "y2", "y3"});
        break;
    }
    case Law::Residue: {
        auto forbidden = [&r](const std::vector<Rational>& t) {
            if (t[0] == 0) return true;
            try {
                diagonal_residue(r, t[0], t[1]);
            } catch (const Error&) {
                return true;
            }
            return false;
        };
        auto holds = [&r](const std::vector<Rational>& t) {
            return in_span_of_p(diagonal_residue(r, t[0], t[1]));
        };
        run_samples(report, name, seed, samples, 2, forbidden, holds, {"v", "y1"});
        break;
    }
    case Law::Conds:
        break; // handled above
    }
    return report;
}

VerifyReport condition_battery(const SolutionHandle& r, std::optional<int> d,
                               const Rational& v0, std::uint64_t seed, int samples) {
    VerifyReport report;
    report.solution = r.name;
    report.n = r.n;
    report.d = d;
    report.seed = seed;

    // Prechecks first, unitarity ahead of the associative identity.
    for (Law pre : {Law::Unitarity, Law::Aybe}) {
        VerifyReport sub = verify_law(r, d, pre, v0, seed, samples);
        report.checks.insert(report.checks.end(), sub.checks.begin(), sub.checks.end());
    }

    PairFunction r0 = laurent_coefficient_fn(r, 0, /*project=*/false);
    PairFunction r0bar = laurent_coefficient_fn(r, 0, /*project=*/true);

    std::array<bool, 4> conditions{true, true, true, true};
    auto add = [&report](const std::string& law,
                         std::vector<std::pair<std::string, Rational>> point, bool ok) {
        report.checks.push_back(CheckRecord{law, std::move(point), ok});
        return ok;
    };

    // (a) the quantum identity at fixed v0
    {
        VerifyReport sub = verify_law(r, d, Law::Qybe, v0, seed + 1, samples);
        for (auto& c : sub.checks) {
            c.law = "qybe";
            conditions[0] = conditions[0] && c.residual_zero;
            report.checks.push_back(std::move(c));
        }
    }

    // (b) r(u) r(-u) is a scalar multiple of 1 (x) 1
    {
        auto forbidden = [&r](const std::vector<Rational>& t) {
            if (t[0] == 0 || t[1] == t[2]) return true;
            return handle_throws(r, {{t[0], t[1], t[2]}, {-t[0], t[1], t[2]}});
        };
        for (const auto& t : sample_rationals(seed + 2, samples, 3, forbidden)) {
            const bool ok = is_scalar_multiple_of_identity(s_product(r, t[0], t[1], t[2]));
            conditions[1] =
                add("s_product", named({"u", "y1", "y2"}, t), ok) && conditions[1];
        }
    }

    // (c) d/dy_i of the trace part of r_0 is a scalar multiple of 1 (x) 1,
    // tested through exact interpolation of (y2 - y1) (r_0 - pr2(r_0)).
    {
        auto delta = [&r0, &r0bar](const Rational& a, const Rational& b) {
            return r0(a, b) - r0bar(a, b);
        };
        auto forbidden = [&delta](const std::vector<Rational>& t) {
            if (t[0] == t[1]) return true;
            try {
                delta(t[0], t[1]);
            } catch (const Error&) {
                return true;
            }
            return false;
        };
        for (const auto& t : sample_rationals(seed + 3, samples, 2, forbidden)) {
            const Rational &y1 = t[0], &y2 = t[1];
            bool ok = true;
            try {
                // vary y1 at fixed y2
                const Tensor2Poly q = adaptive_tensor_interpolation(
                    [&](const Rational& x) { return delta(x, y2) * (y2 - x); },
                    [&](int i) { return y1 + Rational(i + 1); }, 2 * r.n + 2);
                const Tensor2 d1 = (q.derivative().eval(y1) * (y2 - y1) + q.eval(y1)) *
                                   (Rational(1) / ((y2 - y1) * (y2 - y1)));
                ok = ok && is_scalar_multiple_of_identity(d1);
                // vary y2 at fixed y1
                const Tensor2Poly p = adaptive_tensor_interpolation(
                    [&](const Rational& x) { return delta(y1, x) * (x - y1); },
                    [&](int i) { return y2 + Rational(i + 1); }, 2 * r.n + 2);
                const Tensor2 d2 = (p.derivative().eval(y2) * (y2 - y1) - p.eval(y2)) *
                                   (Rational(1) / ((y2 - y1) * (y2 - y1)));
                ok = ok && is_scalar_multiple_of_identity(d2);
            } catch (const Error&) {
                ok = false;
            }
            conditions[2] = add("r0_derivative", named({"y1", "y2"}, t), ok) && conditions[2];
        }
    }

    // (d) the projected triple-product combination of pr2(r_0) vanishes
    {
        auto forbidden = [&r0bar](const std::vector<Rational>& t) {
            if (any_equal(t)) return true;
            try {
                r0bar(t[0], t[1]);
                r0bar(t[0], t[2]);
                r0bar(t[1], t[2]);
            } catch (const Error&) {
                return true;
            }
            return false;
        };
        for (const auto& t : sample_rationals(seed + 4, samples, 3, forbidden)) {
            Tensor3 combo = t3_mul(embed(r0bar(t[0], t[1]), Slot::s12),
                                   embed(r0bar(t[0], t[2]), Slot::s13));
            combo -= t3_mul(embed(r0bar(t[1], t[2]), Slot::s23),
                            embed(r0bar(t[0], t[1]), Slot::s12));
            combo += t3_mul(embed(r0bar(t[0], t[2]), Slot::s13),
                            embed(r0bar(t[1], t[2]), Slot::s23));
            const bool ok = pr3(combo).is_zero();
            conditions[3] =
                add("projected_product", named({"y1", "y2", "y3"}, t), ok) && conditions[3];
        }
    }

    // Symmetry dimension of pr2(r_0) over sampled parameter pairs.
    {
        auto forbidden = [&r0bar](const std::vector<Rational>& t) {
            if (t[0] == t[1]) return true;
            try {
                r0bar(t[0], t[1]);
            } catch (const Error&) {
                return true;
            }
            return false;
        };
        std::vector<Tensor2> samples_r0bar;
        for (const auto& t : sample_rationals(seed + 5, std::max(samples, 4), 2, forbidden))
            samples_r0bar.push_back(r0bar(t[0], t[1]));
        report.symmetry_dim =
            static_cast<int>(infinitesimal_symmetries(samples_r0bar, r.n).size());
    }

    report.conditions = conditions;
    return report;
}

} // namespace aybe
