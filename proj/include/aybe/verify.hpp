#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aybe/checks.hpp"
#include "aybe/handles.hpp"
#include "aybe/laurent.hpp"
#include "aybe/sampling.hpp"

namespace aybe {

enum class Law { Aybe, Dual, Unitarity, Nondeg, Cybe, Qybe, R0R1, Residue, Conds };

Law parse_law(const std::string& name); // throws ParseError on unknown names
std::string law_name(Law law);

// One verdict at one sampled point.
struct CheckRecord {
    std::string law;
    std::vector<std::pair<std::string, Rational>> point;
    bool residual_zero = false;
};

struct VerifyReport {
    std::string solution;
    int n = 0;
    std::optional<int> d;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    std::optional<int> symmetry_dim;
    std::optional<std::array<bool, 4>> conditions; // a, b, c, d

    bool all_pass() const;
    const CheckRecord* first_failure() const;
};

// Samples `samples` admissible points (deterministically from `seed`,
// resampling away from poles and detected degeneracies) and records the
// verdict of `law` at each. `v0` is used by the QYBE law and the battery.
VerifyReport verify_law(const SolutionHandle& r, std::optional<int> d, Law law,
                        const Rational& v0, std::uint64_t seed, int samples);

// The equivalence battery: prechecks (unitarity, then the associative
// identity), conditions (a), (b), (c), (d), and the infinitesimal-symmetry
// dimension of the projected zeroth Laurent coefficient.
VerifyReport condition_battery(const SolutionHandle& r, std::optional<int> d,
                               const Rational& v0, std::uint64_t seed, int samples);

} // namespace aybe
