#include "fibband/fuzz.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "fibband/rng.hpp"

namespace fibband {

FuzzResult fuzz_theorem(long trials, long n_max, std::uint64_t rng_seed,
                        long period) {
    if (trials < 1) {
        throw std::invalid_argument("trials must be positive");
    }
    if (n_max < 4) {
        throw std::invalid_argument(
            "n_max must be at least 4 to check the recurrence on every trial");
    }
    if (period != kTheoremPeriod) {
        throw theorem_scope_error(
            "the recurrence being fuzzed is specific to period 5");
    }
    SplitMix64 rng(rng_seed);
    FuzzResult result;
    result.trials = trials;
    for (long t = 0; t < trials; ++t) {
        long width = rng.range(1, 9);
        long offset = rng.range(-4, 4);
        std::vector<Rat> entries;
        entries.reserve(static_cast<std::size_t>(width));
        for (long i = 0; i < width; ++i) {
            entries.push_back(make_rat(rng.range(-9, 9), rng.range(1, 9)));
        }
        Rat alpha = make_rat(rng.range(-9, 9), rng.range(1, 9));
        Rat beta = make_rat(rng.range(-9, 9), rng.range(1, 9));
        long seed_index = rng.range(0, 2);
        long k0 = rng.range(-10, 10);
        long k1 = rng.range(1, 9);
        ArraySpec spec(std::move(alpha), std::move(beta),
                       TwoTailedRow(offset, std::move(entries)), seed_index);
        SumSpec sum(k0, k1, period);
        VerifyReport report = check_theorem(spec, sum, n_max);
        if (!report.passed()) {
            ++result.failures;
            if (!result.first_failure) {
                const Counterexample& ce = *report.counterexample;
                std::ostringstream msg;
                msg << "trial " << t << ": alpha=" << to_string(spec.alpha)
                    << " beta=" << to_string(spec.beta)
                    << " seed=" << spec.seed.to_string()
                    << " seed_index=" << seed_index << " k0=" << k0
                    << " k1=" << k1 << " n=" << ce.n
                    << " d[n]=" << to_string(ce.lhs) << " expected "
                    << to_string(ce.rhs);
                result.first_failure = msg.str();
            }
        }
    }
    return result;
}

}  // namespace fibband
