#include <doctest.h>

#include <map>
#include <set>

#include "rwmeet/generators.hpp"
#include "rwmeet/graph.hpp"
#include "test_graphs.hpp"

using namespace rwmeet;

TEST_CASE("BA edge count and connectivity") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        for (int m : {1, 2, 3, 5}) {
            int n = 60;
            auto g = generate_ba(n, m, seed);
            CHECK(g.node_count() == n);
            // m(m-1)/2 seed edges plus m per added node
            CHECK(static_cast<int>(g.edges().size()) == m * (m - 1) / 2 + m * (n - m));
            auto rep = g.check_assumptions();
            CHECK(rep.connected);
            for (auto e : g.edges()) CHECK(e.w == 1.0);
        }
    }
}

TEST_CASE("BA average degree matches the closed form") {
    int n = 200;
    for (int m : {2, 3, 4}) {
        auto g = generate_ba(n, m, 7);
        double expect = (m * (m - 1.0) + 2.0 * m * (n - m)) / n;
        CHECK(g.compute_stats().d_avg == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("BA determinism and seed sensitivity") {
    auto a = generate_ba(80, 3, 42);
    auto b = generate_ba(80, 3, 42);
    CHECK(save_edge_list(a) == save_edge_list(b));
    auto c = generate_ba(80, 3, 43);
    CHECK(save_edge_list(a) != save_edge_list(c));
}

TEST_CASE("BA degree heterogeneity grows with n") {
    // heavy tail: max degree well above average, and d_std/d_avg larger than ER's
    auto ba = generate_ba(500, 3, 11);
    auto st = ba.compute_stats();
    double dmax = 0;
    for (int i = 0; i < ba.node_count(); ++i) dmax = std::max(dmax, ba.weighted_degree(i));
    CHECK(dmax > 4 * st.d_avg);

    auto er = generate_er(500, st.d_avg / 499.0, 11);
    auto st_er = er.compute_stats();
    CHECK(st.d_std / st.d_avg > 2 * st_er.d_std / st_er.d_avg);
}

TEST_CASE("BA m=1 is a tree (bipartite)") {
    auto g = generate_ba(50, 1, 9);
    CHECK(static_cast<int>(g.edges().size()) == 49);
    auto rep = g.check_assumptions();
    CHECK(rep.connected);
    CHECK(rep.bipartite);
}

TEST_CASE("BA argument validation") {
    CHECK_THROWS_AS(generate_ba(10, 0, 1), std::domain_error);
    CHECK_THROWS_AS(generate_ba(10, 10, 1), std::domain_error);
    CHECK_THROWS_AS(generate_ba(1, 1, 1), std::domain_error);
}

TEST_CASE("ER connectivity, determinism, edge probability") {
    auto g = generate_er(100, 0.08, 5);
    CHECK(g.check_assumptions().connected);
    CHECK(save_edge_list(g) == save_edge_list(generate_er(100, 0.08, 5)));

    // empirical edge density close to p over many draws
    long total = 0;
    int trials = 20, n = 60;
    double p = 0.15;
    for (int t = 0; t < trials; ++t) total += generate_er(n, p, 100 + t).edges().size();
    double density = static_cast<double>(total) / (trials * n * (n - 1) / 2.0);
    CHECK(density == doctest::Approx(p).epsilon(0.1));
}

TEST_CASE("ER retries until connected, then gives up") {
    // p far below the connectivity threshold: must throw with attempt count
    try {
        generate_er(200, 0.002, 1, 5);
        FAIL("expected GenerationError");
    } catch (const GenerationError& e) {
        CHECK(e.attempts() == 6);
    }
    CHECK_THROWS_AS(generate_er(10, 1.5, 1), std::domain_error);
    CHECK_THROWS_AS(generate_er(10, -0.1, 1), std::domain_error);
}

TEST_CASE("params_for_target_degree coupling") {
    auto pb = params_for_target_degree(Model::BA, 100, 6.0, 3);
    CHECK(pb.m == 3);
    auto pe = params_for_target_degree(Model::ER, 100, 6.0, 3);
    CHECK(pe.p == doctest::Approx(6.0 / 99));
    CHECK_THROWS_AS(params_for_target_degree(Model::BA, 100, 1.0, 3), std::domain_error);

    // realized average degrees land near the target for both families
    // (ER needs d_avg above the ~ln(n) connectivity threshold to exist)
    for (double davg : {4.0, 8.0}) {
        auto gb = generate(params_for_target_degree(Model::BA, 300, davg, 17));
        CHECK(gb.compute_stats().d_avg == doctest::Approx(davg).epsilon(0.05));
    }
    for (double davg : {8.0, 12.0}) {
        auto ge = generate(params_for_target_degree(Model::ER, 300, davg, 17));
        CHECK(ge.compute_stats().d_avg == doctest::Approx(davg).epsilon(0.25));
    }
}

TEST_CASE("generated graphs are simple") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto g = generate_ba(120, 4, seed);
        std::set<std::pair<int, int>> seen;
        for (auto e : g.edges()) {
            CHECK(e.u < e.v);
            CHECK(seen.insert({e.u, e.v}).second);
        }
    }
}
