#include "fibband/seq_core.hpp"

#include <utility>

namespace fibband {

ArraySpec::ArraySpec(Rat alpha_in, Rat beta_in, TwoTailedRow seed_in,
                     long seed_index_in)
    : alpha(std::move(alpha_in)),
      beta(std::move(beta_in)),
      seed(std::move(seed_in)),
      seed_index(seed_index_in) {
    if (seed_index < 0) {
        throw std::invalid_argument("seed_index must be nonnegative");
    }
}

SumSpec::SumSpec(long k0_in, long k1_in, long period_in)
    : k0(k0_in), k1(k1_in), period(period_in) {
    if (k1 < 1) {
        throw std::invalid_argument("k1 must be positive");
    }
    if (period < 1) {
        throw std::invalid_argument("period must be positive");
    }
}

TwoTailedRow step_row(const ArraySpec& spec, const TwoTailedRow& row) {
    if (row.is_zero()) {
        return row;
    }
    long lo = row.min_offset() - 1;
    long hi = row.max_offset() + 1;
    std::vector<Rat> next(static_cast<std::size_t>(hi - lo + 1));
    for (long k = lo; k <= hi; ++k) {
        Rat v = spec.alpha * row.at(k - 1);
        v += spec.beta * row.at(k);
        v += spec.alpha * row.at(k + 1);
        next[static_cast<std::size_t>(k - lo)] = std::move(v);
    }
    return TwoTailedRow(lo, std::move(next));
}

std::vector<TwoTailedRow> build_array(const ArraySpec& spec, long n_max) {
    if (n_max < spec.seed_index) {
        throw std::out_of_range("n_max precedes the seed row");
    }
    std::vector<TwoTailedRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max - spec.seed_index + 1));
    rows.push_back(spec.seed);
    for (long n = spec.seed_index + 1; n <= n_max; ++n) {
        rows.push_back(step_row(spec, rows.back()));
    }
    return rows;
}

Rat signed_diag_sum(const TwoTailedRow& row, const SumSpec& sum) {
    if (row.is_zero()) {
        return Rat(0);
    }
    long lo = row.min_offset();
    long hi = row.max_offset();
    // Keep exactly the j with k0 - period*j in [lo, hi + k1]: that index or
    // the subtracted one (k1 smaller) can land in the support, and every j
    // outside has both indices off the same end of it.
    long j_lo = ceil_div(sum.k0 - hi - sum.k1, sum.period);
    long j_hi = floor_div(sum.k0 - lo, sum.period);
    Rat total = 0;
    for (long j = j_lo; j <= j_hi; ++j) {
        total += row.at(sum.k0 - sum.period * j);
        total -= row.at(sum.k0 - sum.period * j - sum.k1);
    }
    return total;
}

std::vector<Rat> d_series(const ArraySpec& spec, const SumSpec& sum,
                          long n_max) {
    std::vector<TwoTailedRow> rows = build_array(spec, n_max);
    std::vector<Rat> out;
    out.reserve(rows.size());
    for (const TwoTailedRow& row : rows) {
        out.push_back(signed_diag_sum(row, sum));
    }
    return out;
}

RecurrenceCoeffs recurrence_coeffs(const ArraySpec& spec) {
    RecurrenceCoeffs coeffs;
    coeffs.c1 = 2 * spec.beta - spec.alpha;
    coeffs.c2 =
        spec.alpha * spec.beta + spec.alpha * spec.alpha - spec.beta * spec.beta;
    return coeffs;
}

VerifyReport check_theorem(const ArraySpec& spec, const SumSpec& sum,
                           long n_max) {
    if (sum.period != kTheoremPeriod) {
        throw theorem_scope_error(
            "the diagonal-sum recurrence holds for period 5 only");
    }
    VerifyReport report;
    report.id = "theorem";
    report.n_lo = spec.seed_index + 2;
    report.n_hi = n_max;
    RecurrenceCoeffs coeffs = recurrence_coeffs(spec);
    std::vector<Rat> d = d_series(spec, sum, n_max);
    for (long n = report.n_lo; n <= n_max; ++n) {
        std::size_t i = static_cast<std::size_t>(n - spec.seed_index);
        Rat expected = coeffs.c1 * d[i - 1] + coeffs.c2 * d[i - 2];
        if (d[i] != expected) {
            report.counterexample = Counterexample{n, d[i], expected};
            break;
        }
    }
    return report;
}

}  // namespace fibband
