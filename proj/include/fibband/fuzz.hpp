#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fibband/seq_core.hpp"

namespace fibband {

struct FuzzResult {
    long trials = 0;
    long failures = 0;
    std::optional<std::string> first_failure;

    bool passed() const noexcept { return failures == 0; }
};

/// Draws random small arrays (rational entries, band coefficients, seed
/// position) and random sums (k0, k1), and checks each against the
/// second-order recurrence up to n_max. Deterministic: the same seed and
/// trial count replay the same cases on any platform.
///
/// Throws std::invalid_argument for trials < 1 or n_max < 4 (every drawn
/// seed_index needs recurrence room), and theorem_scope_error for
/// period != 5.
FuzzResult fuzz_theorem(long trials, long n_max, std::uint64_t rng_seed,
                        long period = kTheoremPeriod);

}  // namespace fibband
