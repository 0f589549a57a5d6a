#include "aybe/sampling.hpp"

#include <random>

#include "aybe/error.hpp"

namespace aybe {

std::vector<std::vector<Rational>> sample_rationals(std::uint64_t seed, int count, int arity,
                                                    const TuplePredicate& forbidden) {
    if (count < 1)
        throw Error(Error::Kind::ExhaustedSampling, "sample_rationals: count must be >= 1");
    std::mt19937_64 rng(seed);
    auto draw_one = [&rng]() {
        auto num = static_cast<long>(rng() % 19) - 9;
        auto den = static_cast<long>(rng() % 3) + 1;
        return Rational(num) / Rational(den);
    };
    std::vector<std::vector<Rational>> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        int rejected = 0;
        for (;;) {
            std::vector<Rational> tuple(static_cast<std::size_t>(arity));
            for (auto& x : tuple) x = draw_one();
            if (!forbidden || !forbidden(tuple)) {
                out.push_back(std::move(tuple));
                break;
            }
            if (++rejected >= 1000)
                throw Error(Error::Kind::ExhaustedSampling,
                            "sample_rationals: 1000 consecutive draws forbidden");
        }
    }
    return out;
}

} // namespace aybe
