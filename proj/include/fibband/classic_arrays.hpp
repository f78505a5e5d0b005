#pragma once

#include "fibband/rational.hpp"
#include "fibband/row.hpp"
#include "fibband/seq_core.hpp"

namespace fibband {

/// F(0) = 0, F(1) = 1, F(n) = F(n-1) + F(n-2). Throws std::invalid_argument
/// for negative n.
Int fibonacci(long n);

/// C(n, k) for n >= 0, with C(n, k) = 0 when k < 0 or k > n. Throws
/// std::invalid_argument for negative n.
Int binomial(long n, long k);

/// Which alternate rows of Pascal's triangle an array interleaves.
enum class PascalVariant { odd, even };

/// Row n of the banded array (alpha = 1, beta = 2) holding alternate rows
/// of Pascal's triangle:
///
///   odd  (seed {0:1, 1:1}): row n is C(2n+1, n+k) for k in [-n, n+1],
///   even (seed {0:1}):      row n is C(2n, n+k)   for k in [-n, n].
TwoTailedRow pascal_alt_row(PascalVariant variant, long n);

enum class TrinomialMethod { recurrence, poly, altsum };

/// Row n of the trinomial triangle: T(n, k) is the coefficient of x^(n+k)
/// in (1 + x + x^2)^n, k in [-n, n]. The three methods are independent
/// computations that must agree: the band step with alpha = beta = 1, a
/// binary-exponentiation polynomial power, and the alternating binomial
/// sum T(n, k) = sum_j (-1)^j C(n, j) C(2n - 2j, n - j - k).
TwoTailedRow trinomial_row(long n, TrinomialMethod method);

/// Single trinomial coefficient via the alternating binomial sum; zero for
/// |k| > n. Throws std::invalid_argument for negative n.
Int trinomial(long n, long k);

/// Ballot-style count B(n, k) = (k/n) C(2n, n-k) for 1 <= k <= n, and 0
/// for k <= 0 or k > n. B(n, 1) is the Catalan number. Throws
/// std::invalid_argument for n < 1.
Int catalan_B(long n, long k);

/// C(2n, n) / (n + 1).
Int catalan_number(long n);

/// Banded array whose row n reads B(n, k) at positive offsets k, the
/// negated mirror at negative offsets, and 0 at k = 0: alpha = 1, beta = 2,
/// seed {-1:-1, 1:1} at row 1.
ArraySpec catalan_embedding_spec();

}  // namespace fibband
