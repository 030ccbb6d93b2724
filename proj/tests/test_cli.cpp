// End-to-end tests that drive the installed CLI binary (path in RWMEET_CLI).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("RWMEET_CLI");
    REQUIRE_MESSAGE(p != nullptr, "RWMEET_CLI must point at the CLI binary");
    return p;
}

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

int line_count(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

std::string tmp_file(const std::string& stem) {
    return std::string("/tmp/rwmeet_clitest_") + stem;
}

}  // namespace

TEST_CASE("generate writes an edge list and stats") {
    auto path = tmp_file("gen.edges");
    auto r = run("--seed 5 generate --model ba --n 50 --davg 6 --out " + path);
    CHECK(r.status == 0);
    CHECK(r.out.find("n,s1,s2,d_avg") != std::string::npos);
    CHECK(r.out.find("50,") != std::string::npos);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string first;
    std::getline(in, first);
    CHECK(!first.empty());
}

TEST_CASE("generate is deterministic per seed") {
    auto a = run("--seed 9 generate --model er --n 40 --davg 5");
    auto b = run("--seed 9 generate --model er --n 40 --davg 5");
    auto c = run("--seed 10 generate --model er --n 40 --davg 5");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("analyze on a known graph") {
    // K4 via a literal edge list; 1-based ids on the CLI
    auto path = tmp_file("k4.edges");
    {
        std::ofstream out(path);
        out << "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    }
    auto r = run("analyze --graph " + path + " --a 1 --b 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("a,b,mu_spectral") != std::string::npos);
    CHECK(r.out.find("1,2,4.5,4.5,4,") != std::string::npos);
}

TEST_CASE("analyze rejects bipartite without the force flag") {
    auto path = tmp_file("p3.edges");
    {
        std::ofstream out(path);
        out << "0 1\n1 2\n";
    }
    auto r = run("analyze --graph " + path + " --a 1 --b 3");
    CHECK(r.status != 0);
    CHECK(r.out.find("bipartite") != std::string::npos);
    auto forced = run("analyze --graph " + path + " --a 1 --b 3 --allow-bipartite");
    CHECK(forced.status == 0);
}

TEST_CASE("analyze sweep emits the requested number of rows") {
    auto r = run("--seed 3 analyze --model ba --n 60 --davg 6 --a 1 --sweep 5 --skip-decomposed");
    CHECK(r.status == 0);
    CHECK(line_count(r.out) == 2 + 5);  // header comment + columns + 5 rows
    CHECK(r.out.find("nan") != std::string::npos);  // skipped decomposition column
}

TEST_CASE("simulate agrees with analyze on K4") {
    auto path = tmp_file("k4b.edges");
    {
        std::ofstream out(path);
        out << "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    }
    auto r = run("--seed 11 simulate --graph " + path + " --a 1 --b 2 --runs 40000");
    CHECK(r.status == 0);
    // mean must be close to 4.5
    std::istringstream in(r.out);
    std::string line, data;
    while (std::getline(in, line))
        if (!line.empty() && line.rfind("1,2,", 0) == 0) data = line;
    REQUIRE(!data.empty());
    double mean = std::stod(data.substr(data.find(",40000,") + 7));
    CHECK(mean > 4.3);
    CHECK(mean < 4.7);
}

TEST_CASE("simulate byte-identical across reruns") {
    auto a = run("--seed 21 simulate --model ba --n 200 --davg 6 --a 1 --b 2 --runs 2000");
    auto b = run("--seed 21 simulate --model ba --n 200 --davg 6 --a 1 --b 2 --runs 2000");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("simulate warns on opposite-parity bipartite starts") {
    auto path = tmp_file("p3b.edges");
    {
        std::ofstream out(path);
        out << "0 1\n1 2\n";
    }
    auto r = run("simulate --graph " + path + " --a 1 --b 2 --runs 10 --tmax 500");
    CHECK(r.status == 0);
    CHECK(r.out.find("never meet") != std::string::npos);
    CHECK(r.out.find("nan") != std::string::npos);  // mean undefined
}

TEST_CASE("sweep produces one row per cell, deterministic") {
    std::string args =
        "--seed 2 sweep --n-list 60 80 --davg-list 6 --models ba er --runs 300 --pairs 2 "
        "--tmax 100000";
    auto a = run(args);
    CHECK(a.status == 0);
    CHECK(line_count(a.out) == 2 + 4);  // 2 n values x 1 davg x 2 models
    CHECK(a.out == run(args).out);
}

TEST_CASE("oracle subcommand") {
    auto path = tmp_file("k3.edges");
    {
        std::ofstream out(path);
        out << "0 1\n1 2\n0 2\n";
    }
    auto hit = run("oracle --graph " + path + " --op hitting --a 1 --b 2");
    CHECK(hit.status == 0);
    CHECK(hit.out.find("1,2,2\n") != std::string::npos);

    auto meet = run("oracle --graph " + path + " --op meeting --a 1 --b 2");
    CHECK(meet.status == 0);
    CHECK(meet.out.find("1,2,4\n") != std::string::npos);

    auto dist = run("oracle --graph " + path + " --op distribution --a 1 --b 2");
    CHECK(dist.status == 0);
    CHECK(dist.out.find("node,probability") != std::string::npos);

    // parity deadlock reports "never"
    auto p3 = tmp_file("p3c.edges");
    {
        std::ofstream out(p3);
        out << "0 1\n1 2\n";
    }
    auto never = run("oracle --graph " + p3 + " --op meeting --a 1 --b 2");
    CHECK(never.status == 0);
    CHECK(never.out.find("never") != std::string::npos);
}

TEST_CASE("zero-based flag shifts ids") {
    auto path = tmp_file("k3z.edges");
    {
        std::ofstream out(path);
        out << "0 1\n1 2\n0 2\n";
    }
    auto r = run("--zero-based oracle --graph " + path + " --op meeting --a 0 --b 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("0,1,4\n") != std::string::npos);
}

TEST_CASE("bad input fails cleanly") {
    CHECK(run("analyze --graph /nonexistent.edges --a 1 --b 2").status != 0);
    CHECK(run("oracle --op nonsense").status != 0);
    CHECK(run("").status != 0);  // subcommand required
}
