#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibband/rational.hpp"
#include "fibband/row.hpp"

namespace fibband {

/// Counts of unordered pairs of length-n monotone east/north lattice paths
/// from the origin that share no lattice point besides the origin, bucketed
/// by the distance between their endpoints along the anti-diagonal.
struct PathPairCensus {
    long n = 0;
    std::vector<long> counts;

    /// Pairs at distance k; 0 outside [0, n].
    long count(long k) const noexcept {
        if (k < 0 || k >= static_cast<long>(counts.size())) {
            return 0;
        }
        return counts[static_cast<std::size_t>(k)];
    }
};

/// Exhaustive census over all 2^n * (2^n - 1) / 2 unordered path pairs.
/// Two paths meet at step t exactly when their east counts after t steps
/// coincide. Throws std::out_of_range unless 1 <= n <= 12.
PathPairCensus enumerate_path_pairs(long n);

/// Coefficients of (1 + x + x^2)^n by n sequential multiplications,
/// centered so offset k holds the coefficient of x^(n+k). Independent of
/// the trinomial_row methods.
TwoTailedRow expand_trinomial_row(long n);

/// d[n] = coeffs[0] d[n-1] + ... + coeffs[order-1] d[n-order].
struct LinearRecurrence {
    long order = 0;
    std::vector<Rat> coeffs;

    /// "order 2: d[n] = 3 d[n-1] - 1 d[n-2]"; order 0 renders as
    /// "order 0: d[n] = 0".
    std::string to_string() const;
};

/// The least order r <= max_order whose recurrence fits every window of
/// the given values, found by exact Gaussian elimination. Order 0 means
/// the values are identically zero. Returns nullopt when no order fits.
/// Requires values.size() >= 2 * max_order + 2 so each candidate order is
/// confirmed on at least order + 2 windows; throws std::invalid_argument
/// otherwise or when max_order < 0.
///
/// Coefficients are normalized by zeroing every free variable, except a
/// free trailing coefficient, which is set to 1 to witness the order.
std::optional<LinearRecurrence> min_recurrence(const std::vector<Rat>& values,
                                               long max_order);

}  // namespace fibband
