#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chibound/codec.hpp"
#include "chibound/errors.hpp"
#include "chibound/generators.hpp"
#include "chibound/json.hpp"
#include "chibound/verify.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace chibound;

namespace {

std::string campaign_jsonl(const CampaignConfig& cfg) {
    std::ostringstream out;
    run_campaign(cfg, &out);
    return out.str();
}

CampaignConfig exhaustive(int min_n, int max_n) {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Exhaustive;
    cfg.min_n = min_n;
    cfg.max_n = max_n;
    cfg.threads = 1;
    return cfg;
}

}  // namespace

TEST_CASE("bound_from_invariants") {
    const auto c5 = bound_from_invariants(2, 3, 2);
    CHECK(c5.bound_floor == 3);
    CHECK(c5.reed_value == 3);
    CHECK(c5.bound_ok);
    CHECK(c5.rational_ok);
    CHECK(c5.reed_ok);
    CHECK(c5.tight);

    // hypothetical values that break each inequality
    const auto over = bound_from_invariants(3, 5, 4);
    CHECK_FALSE(over.bound_ok);
    CHECK_FALSE(over.rational_ok);
    CHECK(over.reed_value == 4);
    CHECK_FALSE(over.reed_ok);
    CHECK_FALSE(over.tight);

    // odd omega: the floor is strictly below 3*omega/2 but 2*chi <= 3*omega still holds
    const auto odd = bound_from_invariants(3, 4, 5);
    CHECK(odd.bound_floor == 4);
    CHECK(odd.rational_ok);
    CHECK(odd.reed_value == 5);
}

TEST_CASE("check_bound") {
    const auto c5 = check_bound(cycle_graph(5));
    CHECK(c5.omega == 2);
    CHECK(c5.chi == 3);
    CHECK(c5.bound_floor == 3);
    CHECK(c5.bound_ok);
    CHECK(c5.tight);

    const auto k6 = check_bound(complete_graph(6));
    CHECK(k6.omega == 6);
    CHECK(k6.chi == 6);
    CHECK(k6.bound_floor == 9);
    CHECK(k6.reed_value == 6);
    CHECK_FALSE(k6.tight);

    const auto w5 = check_bound(join(cycle_graph(5), complete_graph(1)));
    CHECK(w5.omega == 3);
    CHECK(w5.chi == 4);
    CHECK(w5.bound_floor == 4);
    CHECK(w5.max_degree == 5);
    CHECK(w5.reed_value == 5);
    CHECK(w5.tight);

    CHECK_THROWS_AS(check_bound(cycle_graph(6)), NotAMember);
    CHECK_THROWS_AS(check_bound(wheel_graph(4)), NotAMember);

    const Json j = c5;
    CHECK(j.dump() ==
          R"({"omega":2,"chi":3,"max_degree":2,"bound_floor":3,"reed_value":3,"bound_ok":true,"rational_ok":true,"reed_ok":true,"tight":true})");
}

TEST_CASE("exhaustive campaign at n = 5") {
    const auto r = run_campaign(exhaustive(5, 5));
    CHECK(r.scanned == 1024);
    CHECK(r.three_k1_free == 388);
    CHECK(r.members == 373);
    CHECK(r.tight_members == 12);
    CHECK(r.violations.empty());
    CHECK(r.engine_checks == 388);
    CHECK(r.engine_disagreements == 0);
    CHECK(r.clean());
    REQUIRE(r.extremal.has_value());
    CHECK(r.extremal->ratio() == 1.0);
    CHECK(r.extremal->n == 5);

    CHECK(r.failures.size() == campaign_check_names().size());
    for (const auto& [name, count] : r.failures) {
        INFO(name);
        CHECK(count == 0);
    }
}

TEST_CASE("per-order counts agree with brute force") {
    const auto r = run_campaign(exhaustive(1, 6));
    REQUIRE(r.by_order.size() == 6);
    for (const auto& s : r.by_order) {
        std::uint64_t free = 0, members = 0;
        for (const Graph& g : enumerate_labeled(s.n)) {
            if (oracle::has_three_k1(g)) continue;
            ++free;
            if (!oracle::has_k1_plus_c4(g)) ++members;
        }
        CHECK(s.scanned == (std::uint64_t{1} << (s.n * (s.n - 1) / 2)));
        CHECK(s.three_k1_free == free);
        CHECK(s.members == members);
    }
    CHECK(r.by_order[5].members == 4649);
    CHECK(r.clean());
}

TEST_CASE("campaign output does not depend on threads or shard size") {
    auto base = exhaustive(1, 6);
    const std::string reference = campaign_jsonl(base);
    CHECK(reference.find(R"("type":"extremal")") != std::string::npos);
    CHECK(reference.find(R"("type":"summary")") != std::string::npos);

    auto sharded = base;
    sharded.threads = 3;
    sharded.shard_size = 777;
    CHECK(campaign_jsonl(sharded) == reference);

    auto tiny = base;
    tiny.threads = 2;
    tiny.shard_size = 1;
    tiny.max_n = 5;
    auto tiny_ref = base;
    tiny_ref.max_n = 5;
    CHECK(campaign_jsonl(tiny) == campaign_jsonl(tiny_ref));
}

TEST_CASE("extremal updates are strict improvements in scan order") {
    const auto r = run_campaign(exhaustive(1, 6));
    REQUIRE_FALSE(r.extremal_updates.empty());
    for (std::size_t i = 1; i < r.extremal_updates.size(); ++i) {
        CHECK(r.extremal_updates[i].beats(r.extremal_updates[i - 1]));
    }
    CHECK(r.extremal_updates.back().graph6 == r.extremal->graph6);
    // K1 already attains chi = floor(3*omega/2)
    CHECK(r.extremal->graph6 == "@");
    CHECK(r.extremal->ratio() == 1.0);
}

TEST_CASE("random campaign is reproducible") {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Random;
    cfg.n = 20;
    cfg.count = 1000;
    cfg.seed = 7;
    cfg.threads = 1;
    const std::string a = campaign_jsonl(cfg);
    const std::string b = campaign_jsonl(cfg);
    CHECK(a == b);

    const auto r = run_campaign(cfg);
    CHECK(r.scanned == 1000);
    CHECK(r.members == 37);
    CHECK(r.clean());

    auto threaded = cfg;
    threaded.threads = 4;
    threaded.shard_size = 64;
    CHECK(campaign_jsonl(threaded) == a);

    auto other = cfg;
    other.seed = 8;
    CHECK(campaign_jsonl(other) != a);
}

TEST_CASE("campaign preconditions") {
    CHECK_THROWS_AS(run_campaign(exhaustive(1, 8)), CapExceeded);
    CHECK_THROWS_AS(run_campaign(exhaustive(4, 3)), InvalidInput);
    auto bad_p = CampaignConfig{};
    bad_p.mode = CampaignMode::Random;
    bad_p.p = 1.5;
    CHECK_THROWS_AS(run_campaign(bad_p), InvalidInput);
}

TEST_CASE("violation records replay") {
    Violation v;
    v.check = "S3";
    v.graph6 = graph6_encode(wheel_graph(4));
    v.n = 5;
    v.anchor = Edge{1, 3};
    v.counterexample = {0, 4};
    v.bound = bound_from_invariants(3, 3, 4);
    const Json j = v;
    CHECK(j["type"] == "violation");
    CHECK(j["anchor"] == Json::array({1, 3}));
    CHECK(graph6_decode(j["graph6"].get<std::string>()) == wheel_graph(4));
}

TEST_CASE("remark experiment") {
    const auto rows = remark_experiment(3);
    REQUIRE(rows.size() == 9);
    for (const auto& row : rows) CHECK(row.witness_valid);

    CHECK(rows[0].family == "C5");
    CHECK(rows[0].copies == 1);
    CHECK(rows[0].graph6 == "Dhc");
    CHECK(rows[0].verdict.member);
    CHECK(rows[0].omega == 2);
    CHECK(rows[0].chi == 3);
    CHECK(rows[0].tight);

    // two joined copies of C5 already contain K1 + C4
    CHECK(rows[1].n == 10);
    CHECK_FALSE(rows[1].verdict.member);
    REQUIRE(rows[1].verdict.witness.has_value());
    CHECK(rows[1].verdict.witness->kind == WitnessKind::K1PlusC4);
    CHECK(rows[1].three_k1_free);
    CHECK(rows[1].omega == 4);
    CHECK(rows[1].chi == 6);

    CHECK(rows[2].omega == 6);
    CHECK(rows[2].chi == 9);

    CHECK(rows[3].family == "W5");
    CHECK(rows[3].verdict.member);
    CHECK(rows[3].chi == 4);
    CHECK(rows[6].family == "W6");
    CHECK(rows[6].verdict.witness->kind == WitnessKind::ThreeK1);

    CHECK_THROWS_AS(remark_experiment(0), InvalidInput);
    CHECK_THROWS_AS(remark_experiment(20), CapExceeded);
}

TEST_CASE("n = 7 counts match an independent enumeration") {
    // frozen from a separate brute-force count over all 2^21 labelled graphs
    auto cfg = exhaustive(7, 7);
    cfg.check_bound = cfg.check_structure = cfg.check_clique_cover = cfg.check_engines = false;
    cfg.all_anchor_pairs = false;
    const auto r = run_campaign(cfg);
    CHECK(r.scanned == 2097152);
    CHECK(r.three_k1_free == 133501);
    CHECK(r.members == 70249);
}
