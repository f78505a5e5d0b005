#include "fibband/oracles.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fibband {

PathPairCensus enumerate_path_pairs(long n) {
    if (n < 1 || n > 12) {
        throw std::out_of_range("enumerate_path_pairs supports 1 <= n <= 12");
    }
    std::size_t total = std::size_t{1} << n;
    // prefix[mask][t] = east steps among the first t of path `mask`
    // (bit t-1 set = east); equal prefixes at equal t mean a shared point.
    std::vector<std::array<std::uint8_t, 13>> prefix(total);
    for (std::size_t mask = 0; mask < total; ++mask) {
        prefix[mask][0] = 0;
        for (long t = 1; t <= n; ++t) {
            prefix[mask][static_cast<std::size_t>(t)] =
                prefix[mask][static_cast<std::size_t>(t - 1)] +
                static_cast<std::uint8_t>((mask >> (t - 1)) & 1U);
        }
    }
    PathPairCensus census;
    census.n = n;
    census.counts.assign(static_cast<std::size_t>(n + 1), 0);
    for (std::size_t p = 0; p < total; ++p) {
        for (std::size_t q = p + 1; q < total; ++q) {
            bool disjoint = true;
            for (long t = 1; t <= n; ++t) {
                if (prefix[p][static_cast<std::size_t>(t)] ==
                    prefix[q][static_cast<std::size_t>(t)]) {
                    disjoint = false;
                    break;
                }
            }
            if (disjoint) {
                long k = std::labs(
                    static_cast<long>(prefix[p][static_cast<std::size_t>(n)]) -
                    static_cast<long>(prefix[q][static_cast<std::size_t>(n)]));
                ++census.counts[static_cast<std::size_t>(k)];
            }
        }
    }
    return census;
}

TwoTailedRow expand_trinomial_row(long n) {
    if (n < 0) {
        throw std::invalid_argument(
            "expand_trinomial_row expects a nonnegative power");
    }
    std::vector<Int> coeffs{Int(1)};
    for (long i = 0; i < n; ++i) {
        std::vector<Int> next(coeffs.size() + 2);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j] += coeffs[j];
            next[j + 1] += coeffs[j];
            next[j + 2] += coeffs[j];
        }
        coeffs = std::move(next);
    }
    std::vector<Rat> values;
    values.reserve(coeffs.size());
    for (const Int& c : coeffs) {
        values.emplace_back(c);
    }
    return TwoTailedRow(-n, std::move(values));
}

std::string LinearRecurrence::to_string() const {
    if (order == 0) {
        return "order 0: d[n] = 0";
    }
    std::ostringstream out;
    out << "order " << order << ": d[n] = ";
    for (long i = 0; i < order; ++i) {
        const Rat& c = coeffs[static_cast<std::size_t>(i)];
        if (i == 0) {
            out << fibband::to_string(c);
        } else if (c >= 0) {
            out << " + " << fibband::to_string(c);
        } else {
            out << " - " << fibband::to_string(Rat(-c));
        }
        out << " d[n-" << (i + 1) << "]";
    }
    return out.str();
}

namespace {

/// Reduced row echelon form of an augmented system with `cols` unknowns.
/// Returns the particular solution with free variables zeroed, except a
/// free last unknown set to 1; nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> aug,
                                            std::size_t cols) {
    std::size_t rows = aug.size();
    std::vector<long> pivot_row(cols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && aug[p][col] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(aug[rank], aug[p]);
        Rat pivot = aug[rank][col];
        for (std::size_t c = col; c <= cols; ++c) {
            aug[rank][c] /= pivot;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || aug[r][col] == 0) {
                continue;
            }
            Rat factor = aug[r][col];
            for (std::size_t c = col; c <= cols; ++c) {
                aug[r][c] -= factor * aug[rank][c];
            }
        }
        pivot_row[col] = static_cast<long>(rank);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r) {
        if (aug[r][cols] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rat> solution(cols, Rat(0));
    if (cols > 0 && pivot_row[cols - 1] < 0) {
        solution[cols - 1] = 1;
    }
    for (std::size_t col = 0; col < cols; ++col) {
        if (pivot_row[col] < 0) {
            continue;
        }
        const std::vector<Rat>& row =
            aug[static_cast<std::size_t>(pivot_row[col])];
        Rat value = row[cols];
        for (std::size_t f = col + 1; f < cols; ++f) {
            if (pivot_row[f] < 0 && solution[f] != 0) {
                value -= row[f] * solution[f];
            }
        }
        solution[col] = std::move(value);
    }
    return solution;
}

}  // namespace

std::optional<LinearRecurrence> min_recurrence(const std::vector<Rat>& values,
                                               long max_order) {
    if (max_order < 0) {
        throw std::invalid_argument("max_order must be nonnegative");
    }
    long len = static_cast<long>(values.size());
    if (len < 2 * max_order + 2) {
        throw std::invalid_argument(
            "need at least 2 * max_order + 2 values to pin the order down");
    }
    bool all_zero = true;
    for (const Rat& v : values) {
        if (v != 0) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        return LinearRecurrence{0, {}};
    }
    for (long r = 1; r <= max_order; ++r) {
        std::vector<std::vector<Rat>> aug;
        aug.reserve(static_cast<std::size_t>(len - r));
        for (long n = r; n < len; ++n) {
            std::vector<Rat> row;
            row.reserve(static_cast<std::size_t>(r + 1));
            for (long i = 1; i <= r; ++i) {
                row.push_back(values[static_cast<std::size_t>(n - i)]);
            }
            row.push_back(values[static_cast<std::size_t>(n)]);
            aug.push_back(std::move(row));
        }
        std::optional<std::vector<Rat>> coeffs =
            solve_exact(std::move(aug), static_cast<std::size_t>(r));
        if (coeffs) {
            return LinearRecurrence{r, std::move(*coeffs)};
        }
    }
    return std::nullopt;
}

}  // namespace fibband
