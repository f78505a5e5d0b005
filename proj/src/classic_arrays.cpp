#include "fibband/classic_arrays.hpp"

#include <stdexcept>
#include <utility>

namespace fibband {

namespace {

void require_nonnegative(long n, const char* what) {
    if (n < 0) {
        throw std::invalid_argument(std::string(what) +
                                    " expects a nonnegative index");
    }
}

std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

TwoTailedRow centered_row(long n, const std::vector<Int>& coeffs) {
    std::vector<Rat> values;
    values.reserve(coeffs.size());
    for (const Int& c : coeffs) {
        values.emplace_back(c);
    }
    return TwoTailedRow(-n, std::move(values));
}

}  // namespace

Int fibonacci(long n) {
    require_nonnegative(n, "fibonacci");
    Int f;
    mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Int binomial(long n, long k) {
    require_nonnegative(n, "binomial");
    if (k < 0 || k > n) {
        return Int(0);
    }
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return c;
}

TwoTailedRow pascal_alt_row(PascalVariant variant, long n) {
    require_nonnegative(n, "pascal_alt_row");
    long top = variant == PascalVariant::odd ? 2 * n + 1 : 2 * n;
    long k_hi = variant == PascalVariant::odd ? n + 1 : n;
    std::vector<Rat> values;
    values.reserve(static_cast<std::size_t>(k_hi + n + 1));
    for (long k = -n; k <= k_hi; ++k) {
        values.emplace_back(binomial(top, n + k));
    }
    return TwoTailedRow(-n, std::move(values));
}

TwoTailedRow trinomial_row(long n, TrinomialMethod method) {
    require_nonnegative(n, "trinomial_row");
    switch (method) {
        case TrinomialMethod::recurrence: {
            ArraySpec spec(Rat(1), Rat(1), TwoTailedRow::delta(0));
            TwoTailedRow row = spec.seed;
            for (long i = 0; i < n; ++i) {
                row = step_row(spec, row);
            }
            return row;
        }
        case TrinomialMethod::poly: {
            std::vector<Int> result{Int(1)};
            std::vector<Int> base{Int(1), Int(1), Int(1)};
            unsigned long e = static_cast<unsigned long>(n);
            while (e > 0) {
                if (e & 1UL) {
                    result = convolve(result, base);
                }
                e >>= 1;
                if (e > 0) {
                    base = convolve(base, base);
                }
            }
            return centered_row(n, result);
        }
        case TrinomialMethod::altsum: {
            std::vector<Rat> values;
            values.reserve(static_cast<std::size_t>(2 * n + 1));
            for (long k = -n; k <= n; ++k) {
                values.emplace_back(trinomial(n, k));
            }
            return TwoTailedRow(-n, std::move(values));
        }
    }
    throw std::invalid_argument("unknown trinomial method");
}

Int trinomial(long n, long k) {
    require_nonnegative(n, "trinomial");
    if (k < -n || k > n) {
        return Int(0);
    }
    Int total = 0;
    for (long j = 0; j <= n; ++j) {
        Int term = binomial(n, j) * binomial(2 * n - 2 * j, n - j - k);
        if (j % 2 != 0) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

Int catalan_B(long n, long k) {
    if (n < 1) {
        throw std::invalid_argument("catalan_B expects n >= 1");
    }
    if (k <= 0 || k > n) {
        return Int(0);
    }
    Int numerator = binomial(2 * n, n - k) * Int(k);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(),
                Int(n).get_mpz_t());
    if (r != 0) {
        throw std::logic_error("catalan_B division left a remainder");
    }
    return q;
}

Int catalan_number(long n) {
    require_nonnegative(n, "catalan_number");
    Int numerator = binomial(2 * n, n);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(),
                Int(n + 1).get_mpz_t());
    if (r != 0) {
        throw std::logic_error("catalan_number division left a remainder");
    }
    return q;
}

ArraySpec catalan_embedding_spec() {
    return ArraySpec(Rat(1), Rat(2), TwoTailedRow(-1, {Rat(-1), Rat(0), Rat(1)}),
                     1);
}

}  // namespace fibband
