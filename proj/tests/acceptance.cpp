// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "fibband/classic_arrays.hpp"
#include "fibband/fuzz.hpp"
#include "fibband/identities.hpp"
#include "fibband/oracles.hpp"
#include "fibband/rng.hpp"

using namespace fibband;

namespace {

int failures = 0;

template <typename Fn>
void criterion(int idx, const std::string& what, Fn fn) {
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " " << idx << ": " << what;
    if (!ok && !detail.empty()) {
        std::cout << " [" << detail << "]";
    }
    std::cout << std::endl;
    if (!ok) {
        ++failures;
    }
}

bool run_cli(const std::string& args, std::string& out) {
    std::string cmd = std::string(FIBBAND_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return false;
    }
    out.clear();
    std::array<char, 4096> buf;
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

bool all_identities_to_200(std::string& detail) {
    for (const IdentityDef& def : identity_registry()) {
        VerifyReport report = verify_identity(def.id, 200);
        if (!report.passed()) {
            std::ostringstream msg;
            msg << def.id << " fails at n=" << report.counterexample->n
                << ": " << to_string(report.counterexample->lhs) << " vs "
                << to_string(report.counterexample->rhs);
            detail = msg.str();
            return false;
        }
    }
    return true;
}

bool fuzz_500(std::string& detail) {
    FuzzResult result = fuzz_theorem(500, 25, 20260816);
    if (!result.passed()) {
        detail = result.first_failure.value_or("failures without detail");
        return false;
    }
    return result.trials == 500;
}

bool proof_table_20(std::string& detail) {
    SplitMix64 rng(424242);
    for (int trial = 0; trial < 20; ++trial) {
        Rat a = make_rat(rng.range(-9, 9), rng.range(1, 9));
        Rat b = make_rat(rng.range(-9, 9), rng.range(1, 9));
        ArraySpec spec(a, b, TwoTailedRow::delta(0));
        TwoTailedRow r1 = step_row(spec, spec.seed);
        TwoTailedRow r2 = step_row(spec, r1);
        TwoTailedRow want1(-1, {a, b, a});
        TwoTailedRow want2(-2, {a * a, 2 * a * b, 2 * a * a + b * b,
                                2 * a * b, a * a});
        if (r1 != want1 || r2 != want2) {
            detail = "step rows differ from the closed forms at alpha=" +
                     to_string(a) + " beta=" + to_string(b);
            return false;
        }
        Rat c1 = 2 * b - a;
        Rat c2 = a * b + a * a - b * b;
        const std::array<SumSpec, 2> sums{SumSpec(-1, 1), SumSpec(0, 1)};
        const std::array<std::array<Rat, 3>, 2> closed{
            std::array<Rat, 3>{Rat(0), a, 2 * a * b - a * a},
            std::array<Rat, 3>{Rat(1), b - a, 2 * a * a + b * b - 2 * a * b}};
        for (std::size_t s = 0; s < sums.size(); ++s) {
            Rat d0 = signed_diag_sum(spec.seed, sums[s]);
            Rat d1 = signed_diag_sum(r1, sums[s]);
            Rat d2 = signed_diag_sum(r2, sums[s]);
            if (d0 != closed[s][0] || d1 != closed[s][1] ||
                d2 != closed[s][2]) {
                detail = "diagonal sums differ from the closed forms at "
                         "alpha=" + to_string(a) + " beta=" + to_string(b);
                return false;
            }
            if (d2 != c1 * d1 + c2 * d0) {
                detail = "recurrence fails on the first rows at alpha=" +
                         to_string(a) + " beta=" + to_string(b);
                return false;
            }
        }
    }
    return true;
}

bool trinomial_triple_agreement(std::string& detail) {
    for (long n = 0; n <= 80; ++n) {
        TwoTailedRow by_step = trinomial_row(n, TrinomialMethod::recurrence);
        if (by_step != trinomial_row(n, TrinomialMethod::poly) ||
            by_step != trinomial_row(n, TrinomialMethod::altsum)) {
            detail = "methods disagree at n=" + std::to_string(n);
            return false;
        }
        Rat total = 0;
        for (const Rat& v : by_step.values()) {
            total += v;
        }
        Int power;
        mpz_ui_pow_ui(power.get_mpz_t(), 3, static_cast<unsigned long>(n));
        if (total != Rat(power)) {
            detail = "row sum differs from 3^n at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool census_matches_ballot_and_embedding(std::string& detail) {
    ArraySpec spec = catalan_embedding_spec();
    auto rows = build_array(spec, 10);
    for (long n = 1; n <= 10; ++n) {
        PathPairCensus census = enumerate_path_pairs(n);
        const TwoTailedRow& row =
            rows[static_cast<std::size_t>(n - spec.seed_index)];
        for (long k = 1; k <= n; ++k) {
            Int ballot = catalan_B(n, k);
            if (Int(census.count(k)) != ballot ||
                row.at(k) != Rat(ballot)) {
                detail = "mismatch at n=" + std::to_string(n) +
                         " k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool minimal_recurrences_exact(std::string& detail) {
    ArraySpec odd(Rat(1), Rat(2), TwoTailedRow(0, {Rat(1), Rat(1)}), 0);
    auto rec = min_recurrence(d_series(odd, SumSpec(0, 1), 30), 14);
    if (!rec || rec->order != 2 || rec->coeffs != std::vector<Rat>{3, -1}) {
        detail = "interleaved Pascal array did not fit order 2 (3, -1)";
        return false;
    }
    ArraySpec tri(Rat(1), Rat(1), TwoTailedRow::delta(0), 0);
    auto rec2 = min_recurrence(d_series(tri, SumSpec(0, 1), 30), 14);
    if (!rec2 || rec2->order != 2 || rec2->coeffs != std::vector<Rat>{1, 1}) {
        detail = "trinomial array did not fit order 2 (1, 1)";
        return false;
    }
    return true;
}

bool equivalences_to_100(std::string& detail) {
    for (EquivalencePair pair :
         {EquivalencePair::one_vs_gap1, EquivalencePair::two_vs_gap2}) {
        VerifyReport report = check_equivalence(pair, 100);
        if (!report.passed()) {
            detail = report.id + " breaks at floor-sum argument " +
                     std::to_string(report.counterexample->n);
            return false;
        }
    }
    return true;
}

bool deterministic_output(std::string& detail) {
    std::string a, b;
    if (!run_cli("verify all --format json", a) ||
        !run_cli("verify all --format json", b)) {
        detail = "verify all did not exit cleanly";
        return false;
    }
    if (a != b || a.empty()) {
        detail = "verify all --format json differed between runs";
        return false;
    }
    std::string c, d;
    if (!run_cli("fuzz --trials 200 --rng-seed 31415 --format json", c) ||
        !run_cli("fuzz --trials 200 --rng-seed 31415 --format json", d)) {
        detail = "fuzz did not exit cleanly";
        return false;
    }
    if (c != d || c.empty()) {
        detail = "fuzz output differed between identically seeded runs";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "all twelve identities hold exactly from n_min through n=200",
              all_identities_to_200);
    criterion(2, "500 random period-5 arrays satisfy the order-2 recurrence "
                 "to n=25",
              fuzz_500);
    criterion(3, "band steps and first diagonal sums match their closed "
                 "forms at 20 random rational coefficient pairs",
              proof_table_20);
    criterion(4, "trinomial rows agree across three methods to n=80 and sum "
                 "to 3^n",
              trinomial_triple_agreement);
    criterion(5, "disjoint path-pair census matches the ballot formula and "
                 "the embedding rows to n=10",
              census_matches_ballot_and_embedding);
    criterion(6, "minimal recurrence fits are exactly order 2 with the "
                 "predicted coefficients",
              minimal_recurrences_exact);
    criterion(7, "the floor-sum identities split into the four gap-sum "
                 "identities to n=100",
              equivalences_to_100);
    criterion(8, "verify and seeded fuzz runs are byte-for-byte reproducible",
              deterministic_output);
    return failures == 0 ? 0 : 1;
}
