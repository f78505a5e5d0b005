#pragma once

#include <optional>
#include <string>

#include "fibband/rational.hpp"

namespace fibband {

/// A single index where two sequences disagreed, with both values.
struct Counterexample {
    long n = 0;
    Rat lhs;
    Rat rhs;
};

/// Outcome of checking one identity over a contiguous index range.
struct VerifyReport {
    std::string id;
    long n_lo = 0;
    long n_hi = 0;
    std::optional<Counterexample> counterexample;

    bool passed() const noexcept { return !counterexample.has_value(); }
};

}  // namespace fibband
