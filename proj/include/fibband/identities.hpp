#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibband/rational.hpp"
#include "fibband/report.hpp"
#include "fibband/seq_core.hpp"

namespace fibband {

/// Which binomial top the alternating floor sum uses: n-1 or n. Both sums
/// equal F(n).
enum class FloorSumVariant { one, two };

/// sum_k (-1)^k C(top, floor((n-1-5k)/2)) with top = n-1 (one) or n (two),
/// over the finitely many k that keep the lower index in [0, top].
/// Throws std::out_of_range for n < 1.
Int floor_binomial_sum(long n, FloorSumVariant variant);

/// How an identity's combinatorial side appears inside a banded array: the
/// signed periodic diagonal sum over row n + row_offset equals scale times
/// the identity's sum at n.
struct ArrayReading {
    ArraySpec array;
    SumSpec sum;
    long row_offset = 0;
    Int scale;
};

/// One Fibonacci identity: F(fib_index(n)) = rhs(n) for all n >= n_min.
struct IdentityDef {
    std::string id;
    std::string formula;
    long n_min = 0;
    std::function<long(long)> fib_index;
    std::function<Int(long)> rhs;
    std::optional<ArrayReading> reading;
};

struct IdentityValues {
    Int lhs;
    Int rhs;

    bool matches() const { return lhs == rhs; }
};

/// All twelve identities, in definition order.
const std::vector<IdentityDef>& identity_registry();

/// Throws std::invalid_argument for an id not in the registry.
const IdentityDef& find_identity(std::string_view id);

/// Both sides of the identity at n. Throws std::out_of_range for
/// n < n_min.
IdentityValues eval_identity(std::string_view id, long n);

/// Checks the identity for every n in [n_min, n_max], stopping at the
/// first mismatch. An empty range passes.
VerifyReport verify_identity(std::string_view id, long n_max);

/// The signed diagonal sum the reading prescribes at n, before dividing
/// out the scale.
Rat reading_value(const ArrayReading& reading, long n);

/// The floor sums split by parity of their argument into the four gap
/// sums: variant one gives the gap-1 pair, variant two the gap-2 pair.
enum class EquivalencePair { one_vs_gap1, two_vs_gap2 };

/// Checks floor_binomial_sum(2n+1, v) and (2n+2, v) against the matching
/// gap sums for every n in [0, n_max].
VerifyReport check_equivalence(EquivalencePair pair, long n_max);

/// For every n in [1, n_max]: the signed diagonal sums (k0=1, k1=2) and
/// (k0=2, k1=4) over row n of the ballot embedding equal twice the catA
/// and catB sums, the mirror halves contributing equally.
VerifyReport embedding_doubling_check(long n_max);

}  // namespace fibband
