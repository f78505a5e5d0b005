#include "fibband/row.hpp"

#include <sstream>
#include <utility>

namespace fibband {

namespace {
const Rat kZero = 0;
}

TwoTailedRow::TwoTailedRow(long min_offset, std::vector<Rat> values)
    : min_offset_(min_offset), values_(std::move(values)) {
    for (Rat& v : values_) {
        v.canonicalize();
    }
    trim();
}

TwoTailedRow TwoTailedRow::delta(long k) {
    return TwoTailedRow(k, {Rat(1)});
}

const Rat& TwoTailedRow::at(long k) const noexcept {
    if (k < min_offset_ || k > max_offset()) {
        return kZero;
    }
    return values_[static_cast<std::size_t>(k - min_offset_)];
}

TwoTailedRow& TwoTailedRow::operator+=(const TwoTailedRow& other) {
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = other;
        return *this;
    }
    long lo = std::min(min_offset_, other.min_offset_);
    long hi = std::max(max_offset(), other.max_offset());
    std::vector<Rat> merged(static_cast<std::size_t>(hi - lo + 1));
    for (long k = lo; k <= hi; ++k) {
        merged[static_cast<std::size_t>(k - lo)] = at(k) + other.at(k);
    }
    min_offset_ = lo;
    values_ = std::move(merged);
    trim();
    return *this;
}

TwoTailedRow operator*(const Rat& scalar, const TwoTailedRow& row) {
    if (scalar == 0 || row.is_zero()) {
        return TwoTailedRow();
    }
    TwoTailedRow scaled = row;
    for (Rat& v : scaled.values_) {
        v *= scalar;
    }
    return scaled;
}

bool operator==(const TwoTailedRow& a, const TwoTailedRow& b) {
    return a.min_offset_ == b.min_offset_ && a.values_ == b.values_;
}

std::string TwoTailedRow::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) {
            out << ", ";
        }
        out << (min_offset_ + static_cast<long>(i)) << ':'
            << fibband::to_string(values_[i]);
    }
    out << '}';
    return out.str();
}

void TwoTailedRow::trim() {
    std::size_t begin = 0;
    std::size_t end = values_.size();
    while (begin < end && values_[begin] == 0) {
        ++begin;
    }
    while (end > begin && values_[end - 1] == 0) {
        --end;
    }
    if (begin == end) {
        min_offset_ = 0;
        values_.clear();
        return;
    }
    min_offset_ += static_cast<long>(begin);
    values_.erase(values_.begin() + static_cast<long>(end), values_.end());
    values_.erase(values_.begin(), values_.begin() + static_cast<long>(begin));
}

}  // namespace fibband
