#include "aybe/jmatrix.hpp"

#include <numeric>
#include <string>

#include "aybe/error.hpp"

namespace aybe {

CoprimePair epsilon_step(CoprimePair p) {
    if (p.a < 1 || p.b < 1 || std::gcd(p.a, p.b) != 1)
        throw Error(Error::Kind::InvalidPair,
                    "epsilon_step: (" + std::to_string(p.a) + "," + std::to_string(p.b) +
                        ") is not a coprime pair of positive integers");
    if (p.a == 1 && p.b == 1)
        throw Error(Error::Kind::UndefinedStep, "epsilon_step: undefined on (1,1)");
    return p.a > p.b ? CoprimePair{p.a - p.b, p.b} : CoprimePair{p.a, p.b - p.a};
}

std::vector<CoprimePair> epsilon_sequence(int n, int d) {
    if (d <= 0 || d >= n || std::gcd(n, d) != 1)
        throw Error(Error::Kind::InvalidPair,
                    "epsilon_sequence: need coprime (n,d) with 0 < d < n, got (" +
                        std::to_string(n) + "," + std::to_string(d) + ")");
    std::vector<CoprimePair> seq{CoprimePair{n - d, d}};
    while (!(seq.back() == CoprimePair{1, 1}))
        seq.push_back(epsilon_step(seq.back()));
    return seq;
}

namespace {

// J(p, q) from J(a, b) where (a, b) = epsilon(p, q). The split of J(a, b)
// is a; both insertion rules produce a matrix with split p.
Mat grow(const Mat& j, int a, int b, int p, int q) {
    const int old_n = a + b;
    const int new_n = p + q;
    Mat out(new_n, new_n);
    if (p == a) {
        // prepend an a x a block row [0 | 1 | 0] above J
        for (int i = 0; i < a; ++i) out(i, a + i) = 1;
        for (int i = 0; i < old_n; ++i)
            for (int jj = 0; jj < old_n; ++jj) out(a + i, a + jj) = j(i, jj);
    } else {
        // append a b x b zero block row below, with a unit block feeding it
        for (int i = 0; i < old_n; ++i)
            for (int jj = 0; jj < old_n; ++jj) out(i, jj) = j(i, jj);
        for (int i = 0; i < b; ++i) out(a + i, old_n + i) = 1;
    }
    return out;
}

} // namespace

BlockedJ build_j(int n, int d) {
    const auto seq = epsilon_sequence(n, d);
    Mat j(2, 2);
    j(0, 1) = 1;
    CoprimePair cur{1, 1};
    for (auto it = seq.rbegin() + 1; it != seq.rend(); ++it) {
        const CoprimePair next = *it; // epsilon(next) == cur
        j = grow(j, cur.a, cur.b, next.a, next.b);
        cur = next;
    }
    return BlockedJ{n, n - d, std::move(j)};
}

} // namespace aybe
