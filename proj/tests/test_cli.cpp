// Drives the built command-line binary end to end.  The binary path arrives
// as a positional argument (wired up through ctest).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "padiclab/int_matrix.hpp"
#include "padiclab/matrix_io.hpp"

using namespace padiclab;

static std::string g_cli;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult res;
    std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int st = pclose(pipe);
    res.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return res;
}

std::string strip_last_column(const std::string& text) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        auto pos = line.rfind(',');
        out += (pos == std::string::npos ? line : line.substr(0, pos)) + "\n";
        start = end + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("rank subcommand") {
    save_matrix_file(IntMatrix::identity(5), "cli_id5.txt");
    RunResult res = run_cli("rank cli_id5.txt");
    CHECK(res.code == 0);
    CHECK(res.out == "rank 5\n");

    CHECK(run_cli("rank cli_id5.txt --mod 4").code == 2);
    CHECK(run_cli("rank cli_id5.txt --mod 5").out == "rank 5\n");
    CHECK(run_cli("rank no_such_file.txt").code == 2);
    std::remove("cli_id5.txt");
}

TEST_CASE("generators feed the rank pipeline") {
    CHECK(run_cli("gen cayley --p 5 --out cli_cay5.txt").code == 0);
    RunResult res = run_cli("rank cli_cay5.txt");
    CHECK(res.code == 0);
    CHECK(res.out == "rank 3\n");
    CHECK(run_cli("gen bogus --out x.txt").code == 2);
    std::remove("cli_cay5.txt");
}

TEST_CASE("snf subcommand") {
    save_matrix_file(IntMatrix::from_rows({{2, 4}, {4, 4}}), "cli_snf_in.txt");
    RunResult res = run_cli("snf cli_snf_in.txt");
    CHECK(res.code == 0);
    CHECK(res.out == "2 4\n");

    save_matrix_file(IntMatrix::identity(2), "cli_snf_id.txt");
    CHECK(run_cli("snf cli_snf_id.txt").out == "1 1\n");

    save_matrix_file(IntMatrix(2, 3), "cli_snf_rect.txt");
    CHECK(run_cli("snf cli_snf_rect.txt").code == 2);

    RunResult tr = run_cli("snf cli_snf_in.txt --transforms");
    CHECK(tr.code == 0);
    auto upos = tr.out.find("U\n");
    auto vpos = tr.out.find("V\n");
    REQUIRE(upos != std::string::npos);
    REQUIRE(vpos != std::string::npos);
    IntMatrix u = parse_matrix_text(tr.out.substr(upos + 2, vpos - upos - 2));
    IntMatrix v = parse_matrix_text(tr.out.substr(vpos + 2));
    IntMatrix s(2, 2);
    s.at(0, 0) = 2;
    s.at(1, 1) = 4;
    CHECK(matmul(matmul(u, s), v) == IntMatrix::from_rows({{2, 4}, {4, 4}}));

    std::remove("cli_snf_in.txt");
    std::remove("cli_snf_id.txt");
    std::remove("cli_snf_rect.txt");
}

TEST_CASE("digits subcommand") {
    CHECK(run_cli("gen gram --r 4 --out cli_gram4.txt").code == 0);
    RunResult res = run_cli("digits cli_gram4.txt --p 2");
    CHECK(res.code == 0);
    CHECK(res.out == "digits 3\nprofile 4 6 1\n");
    CHECK(run_cli("digits cli_gram4.txt --p 6").code == 2);
    std::remove("cli_gram4.txt");
}

TEST_CASE("verify subcommands") {
    CHECK(run_cli("verify latin --p 5 --quiet").code == 0);
    CHECK(run_cli("verify bcols --p 5,7 --quiet").code == 0);
    RunResult padic = run_cli("verify padic --r 4 --canonical --quiet");
    CHECK(padic.code == 0);
    CHECK(padic.out.find("4,6,1") != std::string::npos);
    CHECK(run_cli("verify kummer --max 25 --primes 2,3 --quiet").code == 0);
    CHECK(run_cli("verify parity --max-i 4 --max-k 64 --quiet").code == 0);
    CHECK(run_cli("verify rank1rem --u 1,2,3,4 --p 3 --quiet").code == 0);
    CHECK(run_cli("verify blocks --r 2..4 --quiet").code == 0);
    CHECK(run_cli("verify dependence --r 2..4 --quiet").code == 0);
    CHECK(run_cli("verify bogus").code == 2);
}

TEST_CASE("conjecture subcommand") {
    CHECK(run_cli("conjecture --p 4 --r 1 --n 4 --trials 1").code == 2);

    std::string args = "conjecture --p 3 --r 1 --n 6 --trials 3 --seed 9 --quiet";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.code == 0);
    REQUIRE(!a.out.empty());
    CHECK(a.out.compare(0, 6, "trial,") == 0);
    CHECK(strip_last_column(a.out) == strip_last_column(b.out));

    // structured output carries one record per line
    RunResult j = run_cli(
        "conjecture --p 3 --r 1 --n 6 --trials 2 --seed 9 --quiet --format structured");
    CHECK(j.code == 0);
    CHECK(j.out.find("\"bound_conj\"") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("definitely-not-a-command").code == 2);
}

int main(int argc, char** argv) {
    std::vector<char*> pass;
    pass.push_back(argv[0]);
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (!a.empty() && a[0] != '-' && g_cli.empty())
            g_cli = a;  // the binary under test
        else
            pass.push_back(argv[i]);
    }
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-cli-binary>\n");
        return 1;
    }
    doctest::Context ctx;
    ctx.applyCommandLine(static_cast<int>(pass.size()), pass.data());
    return ctx.run();
}
