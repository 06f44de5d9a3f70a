// Drives the floorset binary end to end: exit codes, output shape, and the
// byte-determinism guarantee of the sweep.  The binary path arrives as
// argv[1] from CMake.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

int count_lines(const std::string& s) {
    int lines = 0;
    for (char c : s)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("card: known row values") {
    auto r = run_cli("card 100");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("card_closed") != std::string::npos);
    CHECK(r.out.find("19,19") != std::string::npos);

    auto j = run_cli("--format json card 100");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"card_closed\":19") != std::string::npos);
    CHECK(j.out.find("\"card_enumerated\":19") != std::string::npos);
}

TEST_CASE("card 0 exits 2 with a diagnostic") {
    auto r = run_cli("card 0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("malformed and out-of-range arguments exit 2") {
    CHECK(run_cli("card abc").exit_code == 2);
    CHECK(run_cli("card").exit_code == 2);
    CHECK(run_cli("nosuchcommand 3").exit_code == 2);
    CHECK(run_cli("divisible 10 0").exit_code == 2);
    CHECK(run_cli("psi 10 11").exit_code == 2);  // d > X
    CHECK(run_cli("card 9223372036854775807").exit_code == 2);  // > 2^62
    CHECK(run_cli("sweep --from 0 --to 5").exit_code == 2);
    CHECK(run_cli("sweep --from 9 --to 5").exit_code == 2);
    CHECK(run_cli("sweep --from 1 --to 5 --checks bogus").exit_code == 2);
    CHECK(run_cli("sweep --from 1 --to 5 --log").exit_code == 2);
}

TEST_CASE("blocks: streams the block rows for X=10") {
    auto r = run_cli("blocks 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "v,n_lo,n_hi\n"
          "10,1,1\n"
          "5,2,2\n"
          "3,3,3\n"
          "2,4,5\n"
          "1,6,10\n");
}

TEST_CASE("decompose / divisible / psi / classify / divsum emit their reports") {
    auto dec = run_cli("decompose 12");
    CHECK(dec.exit_code == 0);
    CHECK(dec.out.find("3 4 6 12") != std::string::npos);

    auto div = run_cli("divisible 100 3");
    CHECK(div.exit_code == 0);
    CHECK(div.out.find("100,3,5,3,19") != std::string::npos);

    auto psi = run_cli("--format json psi 100 3");
    CHECK(psi.exit_code == 0);
    CHECK(psi.out.find("\"exact_card\":5") != std::string::npos);
    CHECK(psi.out.find("\"j_range\":") != std::string::npos);

    auto cls = run_cli("classify 100");
    CHECK(cls.exit_code == 0);
    CHECK(cls.out.find("100,1,5,7,6,19") != std::string::npos);

    auto ds = run_cli("divsum 100");
    CHECK(ds.exit_code == 0);
    CHECK(ds.out.find("100,482,") != std::string::npos);
}

TEST_CASE("sweep: full oracle agreement on 1..20000 exits 0") {
    auto r = run_cli("sweep --from 1 --to 20000 --checks thm1,decomp");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 2 * 20000 + 1);  // header + two rows per X
}

TEST_CASE("sweep rows carry per-d entries where applicable") {
    auto r = run_cli("sweep --from 100 --to 102 --checks bounds,lemma --d 2,3");
    CHECK(r.exit_code == 0);
    // 3 X values * (2 bounds rows + 2 lemma rows) + header
    CHECK(count_lines(r.out) == 3 * 4 + 1);
    CHECK(r.out.find("100,2,bounds,1") != std::string::npos);
    CHECK(r.out.find("100,3,lemma,1") != std::string::npos);
}

TEST_CASE("sweep JSON: one object per line, exact integers") {
    auto r = run_cli("--format json sweep --from 999999999999 --to 999999999999 "
                     "--checks thm1,divisor_sum");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 2);
    // Integers appear in exact decimal form, never scientific notation.
    CHECK(r.out.find("\"x\":999999999999") != std::string::npos);
    CHECK(r.out.find("\"exact_sum\":27785452448917") != std::string::npos);
}

TEST_CASE("sweep --points/--log sampling") {
    auto lin = run_cli("sweep --from 1 --to 100 --points 5 --checks thm2");
    CHECK(lin.exit_code == 0);
    CHECK(count_lines(lin.out) == 6);

    auto lg = run_cli("sweep --from 1 --to 1000000 --points 7 --log --checks thm2");
    CHECK(lg.exit_code == 0);
    CHECK(count_lines(lg.out) == 8);
    CHECK(lg.out.find("1000000,,thm2,1") != std::string::npos);
}

TEST_CASE("sweep output is byte-identical across runs and worker counts") {
    const std::string args =
        "sweep --from 1 --to 3000 --checks thm1,thm2,decomp,bounds,lemma,divisor_sum "
        "--d 2,3,5";
    auto one = run_cli(args + " --workers 1");
    auto two = run_cli(args + " --workers 2");
    auto five = run_cli(args + " --workers 5");
    CHECK(one.exit_code == 0);
    REQUIRE(one.out.size() > 0);
    CHECK(one.out == two.out);
    CHECK(one.out == five.out);

    auto json_one = run_cli("--format json " + args + " --workers 1");
    auto json_three = run_cli("--format json " + args + " --workers 3");
    CHECK(json_one.out == json_three.out);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-floorset-binary>\n");
        return 1;
    }
    g_cli_path = argv[argc - 1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}
