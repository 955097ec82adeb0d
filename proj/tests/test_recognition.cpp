#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chibound/errors.hpp"
#include "chibound/generators.hpp"
#include "chibound/invariants.hpp"
#include "chibound/json.hpp"
#include "chibound/recognition.hpp"
#include "oracles.hpp"

using namespace chibound;

TEST_CASE("find_3K1") {
    CHECK_FALSE(find_3K1(cycle_graph(5)).has_value());
    const auto w = find_3K1(cycle_graph(6));
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::ThreeK1);
    CHECK(w->vertices == VertexSet{0, 2, 4});
    CHECK(find_3K1(empty_graph(3))->vertices == VertexSet{0, 1, 2});
    CHECK_FALSE(find_3K1(empty_graph(2)).has_value());
    CHECK_FALSE(find_3K1(Graph()).has_value());
}

TEST_CASE("find_K1_plus_C4") {
    const Graph wheel = join(complete_graph(1), cycle_graph(4));
    const auto w = find_K1_plus_C4(wheel);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::K1PlusC4);
    CHECK(w->vertices.front() == 0);
    CHECK(verify_witness(wheel, *w));

    CHECK_FALSE(find_K1_plus_C4(cycle_graph(5)).has_value());

    const Graph two_c5 = join_power(cycle_graph(5), 2);
    const auto w2 = find_K1_plus_C4(two_c5);
    REQUIRE(w2.has_value());
    CHECK(verify_witness(two_c5, *w2));
    CHECK(oracle::has_k1_plus_c4(two_c5));
    // the hand-built certificate: hub 1 over the rim 0-5-2-7
    CHECK(verify_witness(two_c5, Witness{WitnessKind::K1PlusC4, {1, 0, 5, 2, 7}}));
}

TEST_CASE("generic path agrees with the word path beyond 64 vertices") {
    // C4 joined with K65: 69 vertices, hub candidates span two adjacency words
    const Graph big = join(complete_graph(65), cycle_graph(4));
    CHECK(big.order() == 69);
    const auto w = find_K1_plus_C4(big);
    REQUIRE(w.has_value());
    CHECK(verify_witness(big, *w));
    CHECK(w->vertices == VertexSet{0, 65, 66, 67, 68});

    const Graph small = join(complete_graph(1), cycle_graph(4));
    CHECK(find_K1_plus_C4(small)->vertices == VertexSet{0, 1, 2, 3, 4});
    CHECK_FALSE(find_K1_plus_C4(cycle_graph(70)).has_value());
}

TEST_CASE("classify_membership") {
    CHECK(classify_membership(cycle_graph(5)).member);
    CHECK_FALSE(classify_membership(cycle_graph(5)).witness.has_value());

    const auto c6 = classify_membership(cycle_graph(6));
    CHECK_FALSE(c6.member);
    REQUIRE(c6.witness.has_value());
    CHECK(c6.witness->kind == WitnessKind::ThreeK1);
    CHECK(c6.witness->vertices == VertexSet{0, 2, 4});

    for (int n = 0; n <= 12; ++n) CHECK(classify_membership(complete_graph(n)).member);

    const auto wheel = classify_membership(wheel_graph(4));
    CHECK_FALSE(wheel.member);
    CHECK(wheel.witness->kind == WitnessKind::K1PlusC4);
}

TEST_CASE("verify_witness rejects malformed certificates") {
    const Graph c5 = cycle_graph(5);
    CHECK(verify_witness(cycle_graph(6), Witness{WitnessKind::ThreeK1, {0, 2, 4}}));
    CHECK_FALSE(verify_witness(c5, Witness{WitnessKind::ThreeK1, {0, 1, 2}}));
    CHECK_FALSE(verify_witness(empty_graph(3), Witness{WitnessKind::ThreeK1, {0, 1, 1}}));
    CHECK_FALSE(verify_witness(empty_graph(3), Witness{WitnessKind::ThreeK1, {0, 1, 3}}));
    CHECK_FALSE(verify_witness(empty_graph(3), Witness{WitnessKind::ThreeK1, {0, 1}}));
    CHECK_FALSE(verify_witness(empty_graph(3), Witness{WitnessKind::ThreeK1, {0, -1, 2}}));

    const Graph wheel = wheel_graph(4);
    CHECK(verify_witness(wheel, Witness{WitnessKind::K1PlusC4, {0, 1, 2, 3, 4}}));
    // rim out of cyclic order: 1 and 3 are opposite
    CHECK_FALSE(verify_witness(wheel, Witness{WitnessKind::K1PlusC4, {0, 1, 3, 2, 4}}));
    CHECK_FALSE(verify_witness(wheel, Witness{WitnessKind::K1PlusC4, {1, 0, 2, 3, 4}}));
    // a chord on the rim makes it no longer an induced C4
    const Graph chorded = GraphBuilder(5).add_edge(0, 1).add_edge(0, 2).add_edge(0, 3).add_edge(0, 4)
                              .add_edge(1, 2).add_edge(2, 3).add_edge(3, 4).add_edge(4, 1).add_edge(1, 3).build();
    CHECK_FALSE(verify_witness(chorded, Witness{WitnessKind::K1PlusC4, {0, 1, 2, 3, 4}}));
}

TEST_CASE("finders agree with brute force on every graph up to 6 vertices") {
    for (int n = 0; n <= 6; ++n) {
        for (const Graph& g : enumerate_labeled(n)) {
            const auto t = find_3K1(g);
            REQUIRE(t.has_value() == oracle::has_three_k1(g));
            REQUIRE(t.has_value() == (independence_number(g).size >= 3));
            if (t) REQUIRE(verify_witness(g, *t));

            const auto k = find_K1_plus_C4(g);
            REQUIRE(k.has_value() == oracle::has_k1_plus_c4(g));
            if (k) REQUIRE(verify_witness(g, *k));

            const auto v1 = classify_membership(g);
            const auto v2 = classify_membership(g);
            REQUIRE(v1.member == v2.member);
            REQUIRE(v1.witness == v2.witness);
            REQUIRE(v1.member == oracle::is_member(g));
        }
    }
}

TEST_CASE("witness JSON") {
    const Witness w{WitnessKind::K1PlusC4, {0, 1, 2, 3, 4}};
    const Json j = w;
    CHECK(j.dump() == R"({"kind":"K1+C4","vertices":[0,1,2,3,4]})");
    CHECK(witness_from_json(j) == w);
    CHECK(Json(Witness{WitnessKind::ThreeK1, {0, 2, 4}}).dump() == R"({"kind":"3K1","vertices":[0,2,4]})");
    CHECK_THROWS_AS(witness_from_json(Json{{"kind", "P4"}, {"vertices", {0}}}), InvalidInput);
}
