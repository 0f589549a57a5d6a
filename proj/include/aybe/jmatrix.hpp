#pragma once

#include <vector>

#include "aybe/matrix.hpp"

namespace aybe {

struct CoprimePair {
    int a = 0;
    int b = 0;
    bool operator==(const CoprimePair&) const = default;
};

// 0/1 matrix with a distinguished row/column split; the block below the
// split is identically zero. `split` is the row count of the top-left block
// and equals n - d for the matrix attached to (n, d).
struct BlockedJ {
    int n = 0;
    int split = 0;
    Mat matrix;
};

// One reduction step (a, b) -> (a - b, b) or (a, b - a).
// Throws UndefinedStep on (1, 1) and InvalidPair on non-coprime input.
CoprimePair epsilon_step(CoprimePair p);

// The full reduction chain [(n-d, d), ..., (1, 1)] for coprime 0 < d < n.
std::vector<CoprimePair> epsilon_sequence(int n, int d);

// Unwinds the chain from the 2x2 seed, applying the two block-insertion
// rules, and records the final block division.
BlockedJ build_j(int n, int d);

} // namespace aybe
