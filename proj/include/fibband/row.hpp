#pragma once

#include <string>
#include <vector>

#include "fibband/rational.hpp"

namespace fibband {

/// A two-tailed sequence: a map k -> value over all integers k with finite
/// support, stored as a contiguous block of exact rationals.
///
/// Canonical form: the first and last stored values are nonzero, and the
/// zero sequence is the empty block (with min_offset normalized to 0).
/// Interior zeros are kept, so values().size() spans the support interval.
class TwoTailedRow {
  public:
    /// The zero row.
    TwoTailedRow() = default;

    /// Row with values[i] at offset min_offset + i. Trims leading/trailing
    /// zeros to canonical form.
    TwoTailedRow(long min_offset, std::vector<Rat> values);

    /// The row that is 1 at offset k and 0 elsewhere.
    static TwoTailedRow delta(long k);

    bool is_zero() const noexcept { return values_.empty(); }

    /// Smallest offset with a stored value (0 for the zero row).
    long min_offset() const noexcept { return min_offset_; }

    /// Largest offset with a stored value (-1 for the zero row, making the
    /// support interval [min_offset, max_offset] empty).
    long max_offset() const noexcept {
        return min_offset_ + static_cast<long>(values_.size()) - 1;
    }

    std::size_t support_size() const noexcept { return values_.size(); }

    /// Value at offset k; exact zero outside the stored block.
    const Rat& at(long k) const noexcept;

    /// Stored values, index i holding the value at min_offset + i.
    const std::vector<Rat>& values() const noexcept { return values_; }

    TwoTailedRow& operator+=(const TwoTailedRow& other);
    friend TwoTailedRow operator+(TwoTailedRow lhs, const TwoTailedRow& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend TwoTailedRow operator*(const Rat& scalar, const TwoTailedRow& row);

    friend bool operator==(const TwoTailedRow& a, const TwoTailedRow& b);
    friend bool operator!=(const TwoTailedRow& a, const TwoTailedRow& b) {
        return !(a == b);
    }

    /// "{-1:1, 0:3, 1:3, 2:1}" -- debugging aid.
    std::string to_string() const;

  private:
    void trim();

    long min_offset_ = 0;
    std::vector<Rat> values_;
};

}  // namespace fibband
