#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chibound/errors.hpp"
#include "chibound/generators.hpp"
#include "chibound/invariants.hpp"
#include "chibound/json.hpp"
#include "oracles.hpp"

#include <cstdlib>

using namespace chibound;

namespace {

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_matching_of(const Graph& g, const Matching& m) {
    std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
    for (auto [u, v] : m.edges) {
        if (u >= v || !g.adjacent(u, v)) return false;
        if (++hits[u] > 1 || ++hits[v] > 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("clique_number") {
    CHECK(clique_number(complete_graph(5)).size == 5);
    CHECK(clique_number(cycle_graph(5)).size == 2);
    const Graph two_c5 = join_power(cycle_graph(5), 2);
    const auto c = clique_number(two_c5);
    CHECK(c.size == 4);
    CHECK(oracle::clique_number(two_c5) == 4);
    CHECK(is_clique(two_c5, c.vertices));
    CHECK(clique_number(Graph()).size == 0);
    CHECK(clique_number(empty_graph(3)).size == 1);
}

TEST_CASE("independence_number") {
    CHECK(independence_number(cycle_graph(5)).size == 2);
    CHECK(independence_number(empty_graph(6)).size == 6);
    CHECK(independence_number(petersen_graph()).size == 4);
    CHECK(oracle::independence_number(petersen_graph()) == 4);
}

TEST_CASE("maximum_matching") {
    CHECK(maximum_matching(cycle_graph(5)).size() == 2);
    CHECK(maximum_matching(complete_graph(4)).size() == 2);
    const auto pm = maximum_matching(petersen_graph());
    CHECK(pm.size() == 5);
    CHECK(oracle::matching_number(petersen_graph()) == 5);
    CHECK(is_matching_of(petersen_graph(), pm));
    CHECK(maximum_matching(Graph()).size() == 0);

    // two triangles joined by a path force blossom contraction
    const Graph blossoms = GraphBuilder(8)
                               .add_edge(0, 1).add_edge(1, 2).add_edge(2, 0)
                               .add_edge(2, 3).add_edge(3, 4).add_edge(4, 5)
                               .add_edge(5, 6).add_edge(6, 7).add_edge(7, 5)
                               .build();
    CHECK(maximum_matching(blossoms).size() == 4);
    CHECK(oracle::matching_number(blossoms) == 4);
}

TEST_CASE("matching agrees with brute force on random graphs") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9);
        const Graph g = random_graph(n, 0.15 + 0.1 * static_cast<double>(seed % 6), seed);
        const auto m = maximum_matching(g);
        REQUIRE(is_matching_of(g, m));
        REQUIRE(static_cast<int>(m.size()) == oracle::matching_number(g));
    }
}

TEST_CASE("chromatic_number_bb") {
    CHECK(chromatic_number_bb(cycle_graph(5)).chi == 3);
    for (int n = 1; n <= 9; ++n) CHECK(chromatic_number_bb(complete_graph(n)).chi == n);
    const auto p = chromatic_number_bb(petersen_graph());
    CHECK(p.chi == 3);
    CHECK(oracle::chromatic_number(petersen_graph()) == 3);
    CHECK(validate_coloring(petersen_graph(), p.coloring));
    CHECK(p.coloring.color_count() == 3);
    CHECK(chromatic_number_bb(Graph()).chi == 0);
    CHECK(chromatic_number_bb(empty_graph(4)).chi == 1);
}

TEST_CASE("chromatic_number_via_matching") {
    const auto c5 = chromatic_number_via_matching(cycle_graph(5));
    CHECK(c5.chi == 3);
    CHECK(validate_coloring(cycle_graph(5), c5.coloring));
    CHECK(chromatic_number_via_matching(complete_graph(6)).chi == 6);
    CHECK_THROWS_AS(chromatic_number_via_matching(cycle_graph(6)), ContainsThreeK1);
    CHECK(chromatic_number_via_matching(join_power(cycle_graph(5), 3)).chi == 9);
}

TEST_CASE("validate_coloring") {
    CHECK(validate_coloring(cycle_graph(5), Coloring{{0, 1, 0, 1, 2}}));
    CHECK_FALSE(validate_coloring(complete_graph(3), Coloring{{0, 0, 0}}));
    CHECK_FALSE(validate_coloring(cycle_graph(5), Coloring{{0, 1, 0, 1}}));
    CHECK_FALSE(validate_coloring(cycle_graph(5), Coloring{{0, 1, 0, 1, -1}}));
}

TEST_CASE("exact solvers agree with brute force on every graph up to 6 vertices") {
    for (int n = 0; n <= 6; ++n) {
        for (const Graph& g : enumerate_labeled(n)) {
            const auto w = clique_number(g);
            REQUIRE(w.size == oracle::clique_number(g));
            REQUIRE(static_cast<int>(w.vertices.size()) == w.size);
            REQUIRE(is_clique(g, w.vertices));

            const auto a = independence_number(g);
            REQUIRE(a.size == oracle::independence_number(g));
            REQUIRE(a.size == clique_number(complement(g)).size);

            const auto chi = chromatic_number_bb(g);
            REQUIRE(chi.chi == oracle::chromatic_number(g));
            REQUIRE(validate_coloring(g, chi.coloring));
            REQUIRE(chi.coloring.color_count() == chi.chi);

            REQUIRE(static_cast<int>(maximum_matching(g).size()) == oracle::matching_number(g));
            if (a.size <= 2) REQUIRE(chromatic_number_via_matching(g).chi == chi.chi);
        }
    }
}

TEST_CASE("join additivity cross-check") {
    const std::vector<Graph> corpus{empty_graph(1), complete_graph(2), cycle_graph(5), path_graph(4),
                                    petersen_graph(), wheel_graph(5), cycle_graph(7)};
    for (const auto& a : corpus) {
        for (const auto& b : corpus) {
            const Graph j = join(a, b);
            CHECK(chromatic_number_bb(j).chi == chromatic_number_bb(a).chi + chromatic_number_bb(b).chi);
            CHECK(clique_number(j).size == clique_number(a).size + clique_number(b).size);
        }
    }
}

TEST_CASE("invariant_report") {
    const auto c5 = invariant_report(cycle_graph(5));
    CHECK(c5.n == 5);
    CHECK(c5.m == 5);
    CHECK(c5.max_degree == 2);
    CHECK(c5.alpha == 2);
    CHECK(c5.omega == 2);
    CHECK(c5.chi == 3);
    CHECK(c5.chi_cross_checked);

    const auto k4 = invariant_report(complete_graph(4));
    CHECK(k4.n == 4);
    CHECK(k4.m == 6);
    CHECK(k4.max_degree == 3);
    CHECK(k4.alpha == 1);
    CHECK(k4.omega == 4);
    CHECK(k4.chi == 4);

    const auto w5 = invariant_report(join(cycle_graph(5), complete_graph(1)));
    CHECK(w5.n == 6);
    CHECK(w5.max_degree == 5);
    CHECK(w5.omega == 3);
    CHECK(w5.chi == 4);
    CHECK(oracle::chromatic_number(join(cycle_graph(5), complete_graph(1))) == 4);

    const auto c6 = invariant_report(cycle_graph(6));
    CHECK(c6.alpha == 3);
    CHECK_FALSE(c6.chi_cross_checked);

    const Json j = c5;
    CHECK(j.dump().rfind(R"({"n":5,"m":5,"max_degree":2,"alpha":2,"omega":2,"chi":3,"clique":)", 0) == 0);
}

TEST_CASE("solver size cap") {
    const Graph big = cycle_graph(65);
    CHECK_THROWS_AS(invariant_report(big), CapExceeded);
    CHECK_THROWS_AS(clique_number(big), CapExceeded);
    CHECK_THROWS_AS(chromatic_number_bb(big), CapExceeded);
    CHECK(maximum_matching(big).size() == 32);

    ::setenv("CHIBOUND_MAX_N", "10", 1);
    CHECK(solver_cap() == 10);
    CHECK_THROWS_AS(invariant_report(cycle_graph(11)), CapExceeded);
    CHECK(invariant_report(cycle_graph(10)).chi == 2);
    ::setenv("CHIBOUND_MAX_N", "1000", 1);
    CHECK(solver_cap() == 64);
    ::unsetenv("CHIBOUND_MAX_N");
    CHECK(solver_cap() == 64);
}
