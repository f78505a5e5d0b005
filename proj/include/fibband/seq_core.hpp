#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "fibband/rational.hpp"
#include "fibband/report.hpp"
#include "fibband/row.hpp"

namespace fibband {

/// Banded triangular array: row seed_index is the given seed row, and each
/// later row applies the three-term band step
///
///   s(n, k) = alpha * s(n-1, k-1) + beta * s(n-1, k) + alpha * s(n-1, k+1).
struct ArraySpec {
    Rat alpha;
    Rat beta;
    TwoTailedRow seed;
    long seed_index = 0;

    /// Throws std::invalid_argument if seed_index is negative.
    ArraySpec(Rat alpha, Rat beta, TwoTailedRow seed, long seed_index = 0);
};

/// Signed periodic diagonal sum over one row:
///
///   d = sum_j [ s(n, k0 - period*j) - s(n, k0 - period*j - k1) ],
///
/// where j ranges over all integers (finitely many terms are nonzero).
struct SumSpec {
    long k0 = 0;
    long k1 = 1;
    long period = 5;

    /// Throws std::invalid_argument if k1 < 1 or period < 1.
    SumSpec(long k0, long k1, long period = 5);

    /// True when k1 >= period, so the subtracted index wraps into (or past)
    /// the next residue class. The sum is still well defined; only the
    /// one-term-per-class reading breaks down.
    bool gap_wraps_period() const noexcept { return k1 >= period; }
};

/// Coefficients of d[n] = c1 * d[n-1] + c2 * d[n-2].
struct RecurrenceCoeffs {
    Rat c1;
    Rat c2;
};

/// Raised when an operation needs the period-5 structure but was handed a
/// different period.
class theorem_scope_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr long kTheoremPeriod = 5;

/// One application of the band step to a row.
TwoTailedRow step_row(const ArraySpec& spec, const TwoTailedRow& row);

/// Rows seed_index..n_max of the array, index i holding row seed_index + i.
/// Throws std::out_of_range if n_max < seed_index.
std::vector<TwoTailedRow> build_array(const ArraySpec& spec, long n_max);

/// The signed periodic diagonal sum of one row. Exact: every term the
/// support touches is included, so omitted terms are all zero.
Rat signed_diag_sum(const TwoTailedRow& row, const SumSpec& sum);

/// d[seed_index..n_max] for the array, index i holding d at row
/// seed_index + i. Throws std::out_of_range if n_max < seed_index.
std::vector<Rat> d_series(const ArraySpec& spec, const SumSpec& sum,
                          long n_max);

/// The second-order recurrence the period-5 sums satisfy:
/// c1 = 2*beta - alpha, c2 = alpha*beta + alpha^2 - beta^2.
RecurrenceCoeffs recurrence_coeffs(const ArraySpec& spec);

/// Checks d[n] = c1*d[n-1] + c2*d[n-2] for every n in
/// [seed_index + 2, n_max]. Throws theorem_scope_error if sum.period != 5.
VerifyReport check_theorem(const ArraySpec& spec, const SumSpec& sum,
                           long n_max);

}  // namespace fibband
