#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(FIBBAND_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') {
            ++lines;
        }
    }
    return lines;
}

}  // namespace

TEST_CASE("array prints tab-separated rows") {
    CliResult r = run_cli("array --seed \"0:1,1:1\" --n-max 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\t1\n1\t3\t3\t1\n1\t5\t10\t10\t5\t1\n");

    CliResult rational = run_cli(
        "array --alpha 3/7 --beta -2/5 --seed 0:1 --n-max 1");
    CHECK(rational.exit_code == 0);
    CHECK(rational.out == "1\n3/7\t-2/5\t3/7\n");

    CliResult zero = run_cli("array --seed \"\" --n-max 2");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == "\n\n\n");
}

TEST_CASE("array rejects bad input") {
    CHECK(run_cli("array --seed 0:1 --seed-index 2 --n-max 1").exit_code == 2);
    CHECK(run_cli("array --seed 0:1,0:2").exit_code == 2);
    CHECK(run_cli("array --seed nonsense").exit_code == 2);
    CHECK(run_cli("array --alpha 1/0").exit_code == 2);
    CHECK(run_cli("array --seed-index -1").exit_code == 2);
    CHECK(run_cli("array --format yaml").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("dseries lists n and value") {
    CliResult r = run_cli("dseries --seed \"0:1,1:1\" --n-max 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\t1\n1\t2\n2\t5\n3\t13\n4\t34\n");

    CliResult json = run_cli("dseries --seed \"0:1,1:1\" --n-max 4 --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"value\": \"13\"") != std::string::npos);
    CHECK(json.out.find("\"period\": 5") != std::string::npos);
    // values travel as strings, never as JSON numbers
    CHECK(json.out.find("\"value\": 13") == std::string::npos);
}

TEST_CASE("verify covers the registry and sorts ids") {
    CliResult r = run_cli("verify all --n-max 25");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 12);
    CHECK(r.out.rfind("catA\tpass", 0) == 0);
    CHECK(r.out.find("eq1\tpass") != std::string::npos);
    CHECK(r.out.find("eq10\tpass") != std::string::npos);
    CHECK(r.out.find("fail") == std::string::npos);
    // lexicographic: eq1 before eq10 before eq2
    CHECK(r.out.find("eq1\t") < r.out.find("eq10\t"));
    CHECK(r.out.find("eq10\t") < r.out.find("eq2\t"));

    CliResult pair = run_cli("verify eq3,eq4 --n-max 40");
    CHECK(pair.exit_code == 0);
    CHECK(count_lines(pair.out) == 2);

    CliResult flag = run_cli("verify --ids catB --n-max 40");
    CHECK(flag.exit_code == 0);
    CHECK(count_lines(flag.out) == 1);
    CHECK(flag.out.rfind("catB\tpass\t1\t40", 0) == 0);

    CHECK(run_cli("verify eq7").exit_code == 2);
}

TEST_CASE("fuzz reports trials and failures") {
    CliResult r = run_cli("fuzz --trials 60 --n-max 12 --rng-seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "trials\t60\nfailures\t0\n");

    CHECK(run_cli("fuzz --trials 5 --period 7").exit_code == 2);
    CHECK(run_cli("fuzz --trials 0").exit_code == 2);
    CHECK(run_cli("fuzz --trials 5 --n-max 2").exit_code == 2);
}

TEST_CASE("fuzz replays are byte-identical") {
    std::string args = "fuzz --trials 80 --n-max 15 --rng-seed 99 --format json";
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("minrec names the fitted recurrence") {
    CliResult odd = run_cli("minrec --seed \"0:1,1:1\" --n-max 30");
    CHECK(odd.exit_code == 0);
    CHECK(odd.out == "order 2: d[n] = 3 d[n-1] - 1 d[n-2]\n");

    CliResult tri = run_cli("minrec --alpha 1 --beta 1 --seed 0:1 --n-max 30");
    CHECK(tri.exit_code == 0);
    CHECK(tri.out == "order 2: d[n] = 1 d[n-1] + 1 d[n-2]\n");

    CliResult off = run_cli(
        "minrec --seed \"0:1,1:1\" --period 7 --n-max 30");
    CHECK(off.out.rfind("empirical (period 7): ", 0) == 0);

    // period 7 over a short window fits nothing of low order
    CliResult none = run_cli("minrec --seed \"0:1,1:1\" --period 7 --n-max 6");
    CHECK(none.exit_code == 1);
    CHECK(none.out == "empirical (period 7): no recurrence up to order 2\n");
}

TEST_CASE("oracle-catalan tabulates census against ballot counts") {
    CliResult r = run_cli("oracle-catalan --n-max 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3\t1\t5\t5\n") != std::string::npos);
    CHECK(r.out.find("5\t3\t27\t27\n") != std::string::npos);
    CHECK(count_lines(r.out) == 1 + 2 + 3 + 4 + 5);

    CHECK(run_cli("oracle-catalan --n-max 13").exit_code == 2);
    CHECK(run_cli("oracle-catalan --n-max 0").exit_code == 0);
}

TEST_CASE("tsv and json agree on the numbers") {
    CliResult tsv = run_cli("dseries --alpha 2/3 --beta -1 --seed "
                            "\"-2:7,0:-3,1:1\" --k0 4 --k1 2 --n-max 6");
    CHECK(tsv.exit_code == 0);
    CliResult json = run_cli("dseries --alpha 2/3 --beta -1 --seed "
                             "\"-2:7,0:-3,1:1\" --k0 4 --k1 2 --n-max 6 "
                             "--format json");
    CHECK(json.exit_code == 0);
    // every tsv value reappears in the json output
    std::size_t pos = 0;
    while (pos < tsv.out.size()) {
        std::size_t tab = tsv.out.find('\t', pos);
        std::size_t eol = tsv.out.find('\n', pos);
        REQUIRE(tab != std::string::npos);
        REQUIRE(eol != std::string::npos);
        std::string value = tsv.out.substr(tab + 1, eol - tab - 1);
        CHECK(json.out.find("\"value\": \"" + value + "\"") !=
              std::string::npos);
        pos = eol + 1;
    }
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);
}
