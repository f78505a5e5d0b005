#include "fibband/identities.hpp"

#include <stdexcept>

#include "fibband/classic_arrays.hpp"

namespace fibband {

namespace {

/// sum_j [C(top, anchor - 5j) - C(top, anchor - 5j - gap)] over the j that
/// put either lower index in [0, top].
Int sum_binom_diff(long top, long anchor, long gap) {
    long j_lo = ceil_div(anchor - top - gap, 5);
    long j_hi = floor_div(anchor, 5);
    Int total = 0;
    for (long j = j_lo; j <= j_hi; ++j) {
        total += binomial(top, anchor - 5 * j);
        total -= binomial(top, anchor - 5 * j - gap);
    }
    return total;
}

/// sum_j [T(row_n, 5j) - T(row_n, 5j - gap)] over the j that put either
/// index in [-row_n, row_n].
Int sum_trinom_diff(long row_n, long gap) {
    long j_lo = ceil_div(-row_n, 5);
    long j_hi = floor_div(row_n + gap, 5);
    Int total = 0;
    for (long j = j_lo; j <= j_hi; ++j) {
        total += trinomial(row_n, 5 * j);
        total -= trinomial(row_n, 5 * j - gap);
    }
    return total;
}

/// sum_{j>=0} [B(n, 5j + a) - B(n, 5j + b)], a < b; B vanishes past n.
Int sum_ballot_diff(long n, long a, long b) {
    Int total = 0;
    for (long j = 0; 5 * j + a <= n; ++j) {
        total += catalan_B(n, 5 * j + a);
        total -= catalan_B(n, 5 * j + b);
    }
    return total;
}

/// The same ballot sums with B expanded to (k/n) C(2n, n-k), accumulated
/// as exact rationals and checked to be an integer.
Int sum_ballot_binom_diff(long n, long a, long b) {
    Rat total = 0;
    for (long j = 0; 5 * j + a <= n; ++j) {
        long ka = 5 * j + a;
        long kb = 5 * j + b;
        total += make_rat(ka, n) * Rat(binomial(2 * n, n - ka));
        total -= make_rat(kb, n) * Rat(binomial(2 * n, n - kb));
    }
    if (total.get_den() != 1) {
        throw std::logic_error("ballot binomial sum is not an integer");
    }
    return total.get_num();
}

std::vector<IdentityDef> make_registry() {
    ArraySpec odd_pascal(Rat(1), Rat(2), TwoTailedRow(0, {Rat(1), Rat(1)}), 0);
    ArraySpec even_pascal(Rat(1), Rat(2), TwoTailedRow::delta(0), 0);
    ArraySpec trinomial_array(Rat(1), Rat(1), TwoTailedRow::delta(0), 0);
    ArraySpec embedding = catalan_embedding_spec();

    std::vector<IdentityDef> defs;
    defs.push_back(
        {"eq1", "F(n) = sum_k (-1)^k C(n-1, floor((n-1-5k)/2))", 1,
         [](long n) { return n; },
         [](long n) { return floor_binomial_sum(n, FloorSumVariant::one); },
         std::nullopt});
    defs.push_back(
        {"eq2", "F(n) = sum_k (-1)^k C(n, floor((n-1-5k)/2))", 1,
         [](long n) { return n; },
         [](long n) { return floor_binomial_sum(n, FloorSumVariant::two); },
         std::nullopt});
    defs.push_back(
        {"eq3", "F(2n+1) = sum_j [C(2n+1, n-5j) - C(2n+1, n-5j-1)]", 0,
         [](long n) { return 2 * n + 1; },
         [](long n) { return sum_binom_diff(2 * n + 1, n, 1); },
         ArrayReading{odd_pascal, SumSpec(0, 1), 0, Int(1)}});
    defs.push_back(
        {"eq4", "F(2n+2) = sum_j [C(2n+2, n-5j) - C(2n+2, n-5j-1)]", 0,
         [](long n) { return 2 * n + 2; },
         [](long n) { return sum_binom_diff(2 * n + 2, n, 1); },
         ArrayReading{even_pascal, SumSpec(-1, 1), 1, Int(1)}});
    defs.push_back(
        {"eq5", "F(2n+2) = sum_j [C(2n+1, n-5j) - C(2n+1, n-5j-2)]", 0,
         [](long n) { return 2 * n + 2; },
         [](long n) { return sum_binom_diff(2 * n + 1, n, 2); },
         ArrayReading{odd_pascal, SumSpec(0, 2), 0, Int(1)}});
    defs.push_back(
        {"eq6", "F(2n+1) = sum_j [C(2n, n-5j) - C(2n, n-5j-2)]", 0,
         [](long n) { return 2 * n + 1; },
         [](long n) { return sum_binom_diff(2 * n, n, 2); },
         ArrayReading{even_pascal, SumSpec(0, 2), 0, Int(1)}});
    defs.push_back(
        {"eq9", "F(n) = sum_j [T(n+1, 5j) - T(n+1, 5j-1)]", 1,
         [](long n) { return n; },
         [](long n) { return sum_trinom_diff(n + 1, 1); },
         ArrayReading{trinomial_array, SumSpec(0, 1), 1, Int(1)}});
    defs.push_back(
        {"eq10", "F(n+1) = sum_j [T(n, 5j) - T(n, 5j-2)]", 0,
         [](long n) { return n + 1; },
         [](long n) { return sum_trinom_diff(n, 2); },
         ArrayReading{trinomial_array, SumSpec(0, 2), 0, Int(1)}});
    defs.push_back(
        {"catA", "F(2n-1) = sum_{j>=0} [B(n, 5j+1) - B(n, 5j+4)]", 1,
         [](long n) { return 2 * n - 1; },
         [](long n) { return sum_ballot_diff(n, 1, 4); },
         ArrayReading{embedding, SumSpec(1, 2), 0, Int(2)}});
    defs.push_back(
        {"catB", "F(2n-2) = sum_{j>=0} [B(n, 5j+2) - B(n, 5j+3)]", 1,
         [](long n) { return 2 * n - 2; },
         [](long n) { return sum_ballot_diff(n, 2, 3); },
         ArrayReading{embedding, SumSpec(2, 4), 0, Int(2)}});
    defs.push_back(
        {"catA_binom",
         "F(2n-1) = sum_{j>=0} [((5j+1)/n) C(2n, n-5j-1) - ((5j+4)/n) C(2n, "
         "n-5j-4)]",
         1, [](long n) { return 2 * n - 1; },
         [](long n) { return sum_ballot_binom_diff(n, 1, 4); }, std::nullopt});
    defs.push_back(
        {"catB_binom",
         "F(2n-2) = sum_{j>=0} [((5j+2)/n) C(2n, n-5j-2) - ((5j+3)/n) C(2n, "
         "n-5j-3)]",
         1, [](long n) { return 2 * n - 2; },
         [](long n) { return sum_ballot_binom_diff(n, 2, 3); }, std::nullopt});
    return defs;
}

}  // namespace

Int floor_binomial_sum(long n, FloorSumVariant variant) {
    if (n < 1) {
        throw std::out_of_range("floor_binomial_sum expects n >= 1");
    }
    long top = variant == FloorSumVariant::one ? n - 1 : n;
    long k_lo = ceil_div(n - 2 - 2 * top, 5);
    long k_hi = floor_div(n - 1, 5);
    Int total = 0;
    for (long k = k_lo; k <= k_hi; ++k) {
        long r = n - 1 - 5 * k;
        Int term = binomial(top, r / 2);
        if (k % 2 != 0) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

const std::vector<IdentityDef>& identity_registry() {
    static const std::vector<IdentityDef> registry = make_registry();
    return registry;
}

const IdentityDef& find_identity(std::string_view id) {
    for (const IdentityDef& def : identity_registry()) {
        if (def.id == id) {
            return def;
        }
    }
    throw std::invalid_argument("unknown identity id: " + std::string(id));
}

IdentityValues eval_identity(std::string_view id, long n) {
    const IdentityDef& def = find_identity(id);
    if (n < def.n_min) {
        throw std::out_of_range(def.id + " is defined for n >= " +
                                std::to_string(def.n_min));
    }
    return {fibonacci(def.fib_index(n)), def.rhs(n)};
}

VerifyReport verify_identity(std::string_view id, long n_max) {
    const IdentityDef& def = find_identity(id);
    VerifyReport report;
    report.id = def.id;
    report.n_lo = def.n_min;
    report.n_hi = n_max;
    for (long n = def.n_min; n <= n_max; ++n) {
        Int lhs = fibonacci(def.fib_index(n));
        Int rhs = def.rhs(n);
        if (lhs != rhs) {
            report.counterexample = Counterexample{n, Rat(lhs), Rat(rhs)};
            break;
        }
    }
    return report;
}

Rat reading_value(const ArrayReading& reading, long n) {
    long row = n + reading.row_offset;
    std::vector<TwoTailedRow> rows = build_array(reading.array, row);
    return signed_diag_sum(rows.back(), reading.sum);
}

VerifyReport check_equivalence(EquivalencePair pair, long n_max) {
    bool gap1 = pair == EquivalencePair::one_vs_gap1;
    FloorSumVariant variant = gap1 ? FloorSumVariant::one : FloorSumVariant::two;
    VerifyReport report;
    report.id = gap1 ? "eq1 split into eq3/eq4" : "eq2 split into eq5/eq6";
    report.n_lo = 0;
    report.n_hi = n_max;
    for (long n = 0; n <= n_max; ++n) {
        Int floor_odd = floor_binomial_sum(2 * n + 1, variant);
        Int gap_odd = gap1 ? sum_binom_diff(2 * n + 1, n, 1)
                           : sum_binom_diff(2 * n, n, 2);
        if (floor_odd != gap_odd) {
            report.counterexample =
                Counterexample{2 * n + 1, Rat(floor_odd), Rat(gap_odd)};
            break;
        }
        Int floor_even = floor_binomial_sum(2 * n + 2, variant);
        Int gap_even = gap1 ? sum_binom_diff(2 * n + 2, n, 1)
                            : sum_binom_diff(2 * n + 1, n, 2);
        if (floor_even != gap_even) {
            report.counterexample =
                Counterexample{2 * n + 2, Rat(floor_even), Rat(gap_even)};
            break;
        }
    }
    return report;
}

VerifyReport embedding_doubling_check(long n_max) {
    VerifyReport report;
    report.id = "embedding doubling";
    report.n_lo = 1;
    report.n_hi = n_max;
    ArraySpec spec = catalan_embedding_spec();
    if (n_max < 1) {
        return report;
    }
    std::vector<TwoTailedRow> rows = build_array(spec, n_max);
    for (long n = 1; n <= n_max; ++n) {
        const TwoTailedRow& row = rows[static_cast<std::size_t>(n - spec.seed_index)];
        Rat diag_a = signed_diag_sum(row, SumSpec(1, 2));
        Rat twice_a = Rat(2) * Rat(sum_ballot_diff(n, 1, 4));
        if (diag_a != twice_a) {
            report.counterexample = Counterexample{n, diag_a, twice_a};
            break;
        }
        Rat diag_b = signed_diag_sum(row, SumSpec(2, 4));
        Rat twice_b = Rat(2) * Rat(sum_ballot_diff(n, 2, 3));
        if (diag_b != twice_b) {
            report.counterexample = Counterexample{n, diag_b, twice_b};
            break;
        }
    }
    return report;
}

}  // namespace fibband
