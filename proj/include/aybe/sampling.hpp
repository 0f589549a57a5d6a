#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "aybe/rational.hpp"

namespace aybe {

// Returns true when a candidate tuple must be rejected.
using TuplePredicate = std::function<bool(const std::vector<Rational>&)>;

// Deterministic tuples of small rationals: numerators in [-9, 9],
// denominators in {1, 2, 3}. Draws are resampled while `forbidden` rejects
// them; 1000 consecutive rejections throw ExhaustedSampling. The stream is a
// pure function of the seed (mt19937_64 with fixed reduction, no
// distribution objects), so results are identical across platforms and runs.
std::vector<std::vector<Rational>> sample_rationals(std::uint64_t seed, int count, int arity,
                                                    const TuplePredicate& forbidden = {});

} // namespace aybe
