#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibband/classic_arrays.hpp"
#include "fibband/fuzz.hpp"
#include "fibband/identities.hpp"
#include "fibband/oracles.hpp"

namespace {

using fibband::ArraySpec;
using fibband::Int;
using fibband::Rat;
using fibband::SumSpec;
using fibband::TwoTailedRow;
using nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return "";
    }
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string& text) {
    std::size_t idx = 0;
    long v = std::stol(text, &idx);
    if (idx != text.size()) {
        throw std::invalid_argument("'" + text + "' is not an integer");
    }
    return v;
}

Rat parse_rat(const std::string& text, const char* flag) {
    std::optional<Rat> v = fibband::parse_rational(trim(text));
    if (!v) {
        throw std::invalid_argument(std::string(flag) + " wants an integer or p/q, got '" +
                                    text + "'");
    }
    return *v;
}

/// "k:value,k:value" with rational values; the empty string is the zero row.
TwoTailedRow parse_seed_row(const std::string& text) {
    std::string body = trim(text);
    if (body.empty()) {
        return TwoTailedRow();
    }
    std::map<long, Rat> entries;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = body.find(',', pos);
        std::string part = trim(
            comma == std::string::npos ? body.substr(pos)
                                       : body.substr(pos, comma - pos));
        std::size_t colon = part.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("seed entry '" + part +
                                        "' is not of the form k:value");
        }
        long k = parse_long(trim(part.substr(0, colon)));
        std::optional<Rat> v = fibband::parse_rational(trim(part.substr(colon + 1)));
        if (!v) {
            throw std::invalid_argument("seed entry '" + part +
                                        "' has a malformed value");
        }
        if (entries.count(k) != 0) {
            throw std::invalid_argument("seed offset " + std::to_string(k) +
                                        " appears twice");
        }
        entries[k] = *v;
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    long lo = entries.begin()->first;
    long hi = entries.rbegin()->first;
    std::vector<Rat> values(static_cast<std::size_t>(hi - lo + 1), Rat(0));
    for (const auto& [k, v] : entries) {
        values[static_cast<std::size_t>(k - lo)] = v;
    }
    return TwoTailedRow(lo, std::move(values));
}

struct ArrayOpts {
    std::string alpha = "1";
    std::string beta = "2";
    std::string seed = "0:1";
    long seed_index = 0;
};

void add_array_options(CLI::App* cmd, ArrayOpts& o) {
    cmd->add_option("--alpha", o.alpha, "band edge coefficient, integer or p/q")
        ->capture_default_str();
    cmd->add_option("--beta", o.beta, "band center coefficient, integer or p/q")
        ->capture_default_str();
    cmd->add_option("--seed", o.seed,
                    "seed row as k:value pairs, e.g. \"0:1,1:1\"; empty for the zero row")
        ->capture_default_str();
    cmd->add_option("--seed-index", o.seed_index, "row index of the seed row")
        ->capture_default_str();
}

ArraySpec make_spec(const ArrayOpts& o) {
    return ArraySpec(parse_rat(o.alpha, "--alpha"), parse_rat(o.beta, "--beta"),
                     parse_seed_row(o.seed), o.seed_index);
}

struct SumOpts {
    long k0 = 0;
    long k1 = 1;
    long period = 5;
};

void add_sum_options(CLI::App* cmd, SumOpts& o) {
    cmd->add_option("--k0", o.k0, "anchor offset of the positive terms")
        ->capture_default_str();
    cmd->add_option("--k1", o.k1, "gap between positive and negative terms")
        ->capture_default_str();
    cmd->add_option("--period", o.period, "spacing between consecutive terms")
        ->capture_default_str();
}

json array_json(const ArraySpec& spec,
                const std::vector<TwoTailedRow>& rows) {
    json jrows = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const TwoTailedRow& row = rows[i];
        json entries = json::array();
        for (long k = row.min_offset(); k <= row.max_offset(); ++k) {
            entries.push_back({{"k", k}, {"value", fibband::to_string(row.at(k))}});
        }
        jrows.push_back(
            {{"entries", std::move(entries)},
             {"n", spec.seed_index + static_cast<long>(i)}});
    }
    return {{"alpha", fibband::to_string(spec.alpha)},
            {"beta", fibband::to_string(spec.beta)},
            {"seed_index", spec.seed_index},
            {"rows", std::move(jrows)}};
}

int run_array(const ArrayOpts& opts, long n_max, const std::string& format) {
    ArraySpec spec = make_spec(opts);
    std::vector<TwoTailedRow> rows = fibband::build_array(spec, n_max);
    if (format == "json") {
        std::cout << array_json(spec, rows).dump(2) << "\n";
        return 0;
    }
    for (const TwoTailedRow& row : rows) {
        const std::vector<Rat>& values = row.values();
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i > 0) {
                std::cout << '\t';
            }
            std::cout << fibband::to_string(values[i]);
        }
        std::cout << '\n';
    }
    return 0;
}

int run_dseries(const ArrayOpts& opts, const SumOpts& sum_opts, long n_max,
                const std::string& format) {
    ArraySpec spec = make_spec(opts);
    SumSpec sum(sum_opts.k0, sum_opts.k1, sum_opts.period);
    std::vector<Rat> d = fibband::d_series(spec, sum, n_max);
    if (format == "json") {
        json series = json::array();
        for (std::size_t i = 0; i < d.size(); ++i) {
            series.push_back({{"n", spec.seed_index + static_cast<long>(i)},
                              {"value", fibband::to_string(d[i])}});
        }
        json out{{"alpha", fibband::to_string(spec.alpha)},
                 {"beta", fibband::to_string(spec.beta)},
                 {"seed_index", spec.seed_index},
                 {"k0", sum.k0},
                 {"k1", sum.k1},
                 {"period", sum.period},
                 {"series", std::move(series)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        std::cout << spec.seed_index + static_cast<long>(i) << '\t'
                  << fibband::to_string(d[i]) << '\n';
    }
    return 0;
}

int run_verify(const std::string& ids_arg, long n_max,
               const std::string& format) {
    std::vector<std::string> ids;
    if (ids_arg == "all") {
        for (const fibband::IdentityDef& def : fibband::identity_registry()) {
            ids.push_back(def.id);
        }
    } else {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = ids_arg.find(',', pos);
            ids.push_back(trim(comma == std::string::npos
                                   ? ids_arg.substr(pos)
                                   : ids_arg.substr(pos, comma - pos)));
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    bool all_passed = true;
    std::vector<fibband::VerifyReport> reports;
    reports.reserve(ids.size());
    for (const std::string& id : ids) {
        reports.push_back(fibband::verify_identity(id, n_max));
        all_passed = all_passed && reports.back().passed();
    }

    if (format == "json") {
        json results = json::array();
        for (const fibband::VerifyReport& report : reports) {
            json entry{{"id", report.id},
                       {"n_lo", report.n_lo},
                       {"n_hi", report.n_hi},
                       {"passed", report.passed()}};
            if (report.counterexample) {
                entry["counterexample"] = {
                    {"n", report.counterexample->n},
                    {"lhs", fibband::to_string(report.counterexample->lhs)},
                    {"rhs", fibband::to_string(report.counterexample->rhs)}};
            }
            results.push_back(std::move(entry));
        }
        json out{{"n_max", n_max}, {"results", std::move(results)}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const fibband::VerifyReport& report : reports) {
            std::cout << report.id << '\t'
                      << (report.passed() ? "pass" : "fail") << '\t'
                      << report.n_lo << '\t' << report.n_hi;
            if (report.counterexample) {
                std::cout << '\t' << report.counterexample->n << '\t'
                          << fibband::to_string(report.counterexample->lhs)
                          << '\t'
                          << fibband::to_string(report.counterexample->rhs);
            }
            std::cout << '\n';
        }
    }
    return all_passed ? 0 : 1;
}

int run_fuzz(long trials, long n_max, std::uint64_t rng_seed, long period,
             const std::string& format) {
    fibband::FuzzResult result =
        fibband::fuzz_theorem(trials, n_max, rng_seed, period);
    if (format == "json") {
        json out{{"trials", result.trials},
                 {"failures", result.failures},
                 {"n_max", n_max},
                 {"rng_seed", rng_seed}};
        if (result.first_failure) {
            out["first_failure"] = *result.first_failure;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "trials\t" << result.trials << '\n';
        std::cout << "failures\t" << result.failures << '\n';
        if (result.first_failure) {
            std::cout << "first_failure\t" << *result.first_failure << '\n';
        }
    }
    return result.passed() ? 0 : 1;
}

int run_minrec(const ArrayOpts& opts, const SumOpts& sum_opts, long n_max,
               const std::string& format) {
    ArraySpec spec = make_spec(opts);
    SumSpec sum(sum_opts.k0, sum_opts.k1, sum_opts.period);
    std::vector<Rat> d = fibband::d_series(spec, sum, n_max);
    long max_order = (static_cast<long>(d.size()) - 2) / 2;
    std::optional<fibband::LinearRecurrence> rec =
        fibband::min_recurrence(d, max_order);
    std::string label;
    if (sum.period != fibband::kTheoremPeriod) {
        label = "empirical (period " + std::to_string(sum.period) + "): ";
    }
    if (format == "json") {
        json out{{"found", rec.has_value()},
                 {"max_order", max_order},
                 {"period", sum.period}};
        if (rec) {
            out["order"] = rec->order;
            json coeffs = json::array();
            for (const Rat& c : rec->coeffs) {
                coeffs.push_back(fibband::to_string(c));
            }
            out["coeffs"] = std::move(coeffs);
            out["rendered"] = label + rec->to_string();
        }
        std::cout << out.dump(2) << "\n";
    } else if (rec) {
        std::cout << label << rec->to_string() << '\n';
    } else {
        std::cout << label << "no recurrence up to order " << max_order
                  << '\n';
    }
    return rec.has_value() ? 0 : 1;
}

int run_oracle_catalan(long n_max, const std::string& format) {
    bool all_match = true;
    json jrows = json::array();
    for (long n = 1; n <= n_max; ++n) {
        fibband::PathPairCensus census = fibband::enumerate_path_pairs(n);
        for (long k = 1; k <= n; ++k) {
            Int ballot = fibband::catalan_B(n, k);
            bool match = Int(census.count(k)) == ballot;
            all_match = all_match && match;
            if (format == "json") {
                jrows.push_back({{"n", n},
                                 {"k", k},
                                 {"pairs", std::to_string(census.count(k))},
                                 {"ballot", fibband::to_string(ballot)}});
            } else {
                std::cout << n << '\t' << k << '\t' << census.count(k) << '\t'
                          << fibband::to_string(ballot) << '\n';
            }
        }
    }
    if (format == "json") {
        json out{{"n_max", n_max}, {"passed", all_match}, {"rows", std::move(jrows)}};
        std::cout << out.dump(2) << "\n";
    }
    return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "banded triangular arrays, signed periodic diagonal sums, and the "
        "Fibonacci identities behind them"};
    app.require_subcommand(1);

    std::string format = "tsv";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();

    ArrayOpts array_opts;
    long array_n_max = 10;
    CLI::App* array_cmd =
        app.add_subcommand("array", "print rows of a banded array");
    array_cmd->fallthrough();
    add_array_options(array_cmd, array_opts);
    array_cmd->add_option("--n-max", array_n_max, "last row to print")
        ->capture_default_str();

    ArrayOpts dseries_opts;
    SumOpts dseries_sum;
    long dseries_n_max = 20;
    CLI::App* dseries_cmd = app.add_subcommand(
        "dseries", "print the signed diagonal sums d[n] of a banded array");
    dseries_cmd->fallthrough();
    add_array_options(dseries_cmd, dseries_opts);
    add_sum_options(dseries_cmd, dseries_sum);
    dseries_cmd->add_option("--n-max", dseries_n_max, "last row to sum")
        ->capture_default_str();

    std::string verify_ids = "all";
    long verify_n_max = 50;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check Fibonacci identities against their combinatorial sums");
    verify_cmd->fallthrough();
    verify_cmd
        ->add_option("ids,--ids", verify_ids,
                     "comma-separated identity ids, or \"all\"")
        ->capture_default_str();
    verify_cmd->add_option("--n-max", verify_n_max, "check n up to this bound")
        ->capture_default_str();

    long fuzz_trials = 500;
    long fuzz_n_max = 25;
    long fuzz_period = 5;
    std::uint64_t fuzz_seed = 42;
    CLI::App* fuzz_cmd = app.add_subcommand(
        "fuzz", "stress the diagonal-sum recurrence on random arrays");
    fuzz_cmd->fallthrough();
    fuzz_cmd->add_option("--trials", fuzz_trials, "number of random arrays")
        ->capture_default_str();
    fuzz_cmd->add_option("--n-max", fuzz_n_max, "rows checked per trial")
        ->capture_default_str();
    fuzz_cmd->add_option("--rng-seed", fuzz_seed, "seed for the random draws")
        ->capture_default_str();
    fuzz_cmd->add_option("--period", fuzz_period, "diagonal-sum period")
        ->capture_default_str();

    ArrayOpts minrec_opts;
    SumOpts minrec_sum;
    long minrec_n_max = 30;
    CLI::App* minrec_cmd = app.add_subcommand(
        "minrec",
        "fit the lowest-order linear recurrence to a diagonal-sum series");
    minrec_cmd->fallthrough();
    add_array_options(minrec_cmd, minrec_opts);
    add_sum_options(minrec_cmd, minrec_sum);
    minrec_cmd->add_option("--n-max", minrec_n_max, "last row to sum")
        ->capture_default_str();

    long oracle_n_max = 10;
    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle-catalan",
        "compare the exhaustive disjoint-path-pair census with the ballot "
        "formula");
    oracle_cmd->fallthrough();
    oracle_cmd->add_option("--n-max", oracle_n_max, "path length bound (max 12)")
        ->capture_default_str();

    int rc = 0;
    array_cmd->callback(
        [&]() { rc = run_array(array_opts, array_n_max, format); });
    dseries_cmd->callback([&]() {
        rc = run_dseries(dseries_opts, dseries_sum, dseries_n_max, format);
    });
    verify_cmd->callback(
        [&]() { rc = run_verify(verify_ids, verify_n_max, format); });
    fuzz_cmd->callback([&]() {
        rc = run_fuzz(fuzz_trials, fuzz_n_max, fuzz_seed, fuzz_period, format);
    });
    minrec_cmd->callback([&]() {
        rc = run_minrec(minrec_opts, minrec_sum, minrec_n_max, format);
    });
    oracle_cmd->callback(
        [&]() { rc = run_oracle_catalan(oracle_n_max, format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
