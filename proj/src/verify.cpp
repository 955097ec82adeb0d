#include "chibound/verify.hpp"

#include "chibound/codec.hpp"
#include "chibound/errors.hpp"
#include "chibound/generators.hpp"
#include "chibound/json.hpp"
#include "chibound/structure.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

namespace chibound {
namespace {

struct Shard {
    int n = 0;
    std::uint64_t first = 0;
    std::uint64_t last = 0;
};

/// A violation or a shard-local extremal improvement, kept in scan order.
struct Event {
    bool is_extremal = false;
    Violation violation;
    ExtremalMember extremal;
};

struct ShardResult {
    CampaignReport counts;
    OrderStats order;
    std::vector<Event> events;
    std::optional<ExtremalMember> best;
    std::exception_ptr error;
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t draw_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index)); }

std::string any_pair(ClaimId id) { return std::string(to_string(id)) + "_any_pair"; }

class GraphChecker {
public:
    GraphChecker(const CampaignConfig& cfg, ShardResult& out) : cfg_(cfg), out_(out) {}

    void check(const Graph& g) {
        auto& c = out_.counts;
        ++c.scanned;
        ++out_.order.scanned;

        const bool three_k1_free = !find_3K1(g).has_value();
        if (!three_k1_free) return;
        ++c.three_k1_free;
        ++out_.order.three_k1_free;

        if (find_K1_plus_C4(g)) {
            if (cfg_.check_engines) compare_engines(g);
            return;
        }
        ++c.members;
        ++out_.order.members;

        InvariantReport rep;
        try {
            rep = invariant_report(g);
        } catch (const ConsistencyError&) {
            ++c.engine_checks;
            disagreement(g);
            return;
        }
        if (rep.chi_cross_checked) ++c.engine_checks;

        const BoundCheck bound = bound_from_invariants(rep.omega, rep.chi, rep.max_degree);
        if (bound.tight) {
            ++c.tight_members;
            ++out_.order.tight;
        }
        if (cfg_.check_bound) {
            if (!bound.bound_ok) fail(g, "bound", bound);
            if (!bound.rational_ok) fail(g, "rational_bound", bound);
            if (!bound.reed_ok) fail(g, "reed", bound);
        }
        track_extremal(g, rep);

        if (cfg_.check_structure && g.order() > 0) check_partitions(g, rep.omega, bound);
        if (cfg_.check_structure && !g.is_complete()) check_decompositions(g, rep.omega, bound);
        if (cfg_.check_clique_cover) {
            try {
                clique_cover_bound(g);
            } catch (const ConsistencyError&) {
                fail(g, "clique_cover", bound);
            }
        }
    }

private:
    void compare_engines(const Graph& g) {
        ++out_.counts.engine_checks;
        const auto bb = chromatic_number_bb(g);
        const auto via_matching = chromatic_number_via_matching(g);
        if (bb.chi != via_matching.chi || !validate_coloring(g, bb.coloring) ||
            !validate_coloring(g, via_matching.coloring)) {
            disagreement(g);
        }
    }

    void disagreement(const Graph& g) {
        ++out_.counts.engine_disagreements;
        fail(g, "chi_engines", BoundCheck{});
    }

    void track_extremal(const Graph& g, const InvariantReport& rep) {
        const BoundCheck b = bound_from_invariants(rep.omega, rep.chi, rep.max_degree);
        if (b.bound_floor == 0) return;
        ExtremalMember candidate{"", g.order(), rep.omega, rep.chi, b.bound_floor};
        if (out_.best && !candidate.beats(*out_.best)) return;
        candidate.graph6 = graph6_encode(g);
        out_.best = candidate;
        out_.events.push_back({true, {}, candidate});
    }

    void check_partitions(const Graph& g, int omega, const BoundCheck& bound) {
        ++out_.counts.partitions_checked;
        const CliquePartition p = lemma1_partition(g);
        if (!audit_partition(g, p, omega).ok()) fail(g, "lemma1_partition", bound, p.anchor);
        if (!cfg_.all_anchor_pairs) return;
        for_each_anchor(g, [&](Vertex v, Vertex w) {
            ++out_.counts.partitions_checked;
            const CliquePartition q = lemma1_partition(g, v, w);
            if (!audit_partition(g, q, omega).ok()) fail(g, "lemma1_partition_any_pair", bound, Edge{v, w});
        });
    }

    void check_decompositions(const Graph& g, int omega, const BoundCheck& bound) {
        ++out_.counts.decompositions_checked;
        const auto d = proof_decomposition(g);
        for (const auto& claim : check_structure(g, d, omega).claims) {
            if (!claim.holds) fail(g, std::string(to_string(claim.id)), bound, Edge{d.v, d.w}, claim.counterexample);
        }
        if (!cfg_.all_anchor_pairs) return;
        for_each_anchor(g, [&](Vertex v, Vertex w) {
            ++out_.counts.decompositions_checked;
            const auto dd = decompose_at(g, v, w);
            for (const auto& claim : check_structure(g, dd, omega).claims) {
                if (!claim.holds) fail(g, any_pair(claim.id), bound, Edge{v, w}, claim.counterexample);
            }
        });
    }

    template <class Fn>
    static void for_each_anchor(const Graph& g, Fn&& fn) {
        for (Vertex v = 0; v < g.order(); ++v) {
            for (Vertex w = 0; w < g.order(); ++w) {
                if (v != w && !g.adjacent(v, w)) fn(v, w);
            }
        }
    }

    void fail(const Graph& g, const std::string& check, const BoundCheck& bound, std::optional<Edge> anchor = {},
              VertexSet counterexample = {}) {
        ++out_.counts.failures[check];
        Event e;
        e.violation = Violation{check, graph6_encode(g), g.order(), anchor, std::move(counterexample), bound};
        out_.events.push_back(std::move(e));
    }

    const CampaignConfig& cfg_;
    ShardResult& out_;
};

void run_shard(const CampaignConfig& cfg, const Shard& shard, ShardResult& out) {
    out.order.n = shard.n;
    GraphChecker checker(cfg, out);
    if (cfg.mode == CampaignMode::Exhaustive) {
        for (const Graph& g : LabeledGraphs(shard.n, shard.first, shard.last)) checker.check(g);
    } else {
        for (std::uint64_t i = shard.first; i < shard.last; ++i) {
            checker.check(random_graph(shard.n, cfg.p, draw_seed(cfg.seed, i)));
        }
    }
}

std::vector<Shard> plan_shards(const CampaignConfig& cfg) {
    if (cfg.shard_size == 0) throw InvalidInput("campaign: shard size must be positive");
    std::vector<Shard> shards;
    auto split = [&](int n, std::uint64_t total) {
        for (std::uint64_t first = 0; first < total; first += std::min(cfg.shard_size, total - first)) {
            shards.push_back({n, first, first + std::min(cfg.shard_size, total - first)});
        }
    };
    if (cfg.mode == CampaignMode::Exhaustive) {
        if (cfg.min_n < 0 || cfg.min_n > cfg.max_n) throw InvalidInput("campaign: need 0 <= min_n <= max_n");
        for (int n = cfg.min_n; n <= cfg.max_n; ++n) split(n, enumerate_labeled(n, cfg.enumeration_cap).size());
    } else {
        if (cfg.n < 0) throw InvalidInput("campaign: negative vertex count");
        if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw InvalidInput("campaign: edge probability must lie in [0, 1]");
        if (cfg.n > solver_cap()) {
            throw CapExceeded("campaign: n=" + std::to_string(cfg.n) + " exceeds solver cap " +
                              std::to_string(solver_cap()));
        }
        split(cfg.n, cfg.count);
    }
    return shards;
}

void merge(CampaignReport& total, ShardResult& part, std::ostream* jsonl) {
    const auto& c = part.counts;
    total.scanned += c.scanned;
    total.three_k1_free += c.three_k1_free;
    total.members += c.members;
    total.tight_members += c.tight_members;
    total.engine_checks += c.engine_checks;
    total.engine_disagreements += c.engine_disagreements;
    total.decompositions_checked += c.decompositions_checked;
    total.partitions_checked += c.partitions_checked;
    for (const auto& [name, count] : c.failures) total.failures[name] += count;

    if (total.by_order.empty() || total.by_order.back().n != part.order.n) total.by_order.push_back({part.order.n});
    auto& order = total.by_order.back();
    order.scanned += part.order.scanned;
    order.three_k1_free += part.order.three_k1_free;
    order.members += part.order.members;
    order.tight += part.order.tight;

    for (auto& e : part.events) {
        if (e.is_extremal) {
            if (total.extremal && !e.extremal.beats(*total.extremal)) continue;
            total.extremal = e.extremal;
            total.extremal_updates.push_back(e.extremal);
            if (jsonl) {
                Json j{{"type", "extremal"}};
                j.update(Json(e.extremal));
                *jsonl << j.dump() << '\n';
            }
        } else {
            if (jsonl) *jsonl << Json(e.violation).dump() << '\n';
            total.violations.push_back(std::move(e.violation));
        }
    }
}

}  // namespace

BoundCheck bound_from_invariants(int omega, int chi, int max_degree) noexcept {
    BoundCheck b;
    b.omega = omega;
    b.chi = chi;
    b.max_degree = max_degree;
    b.bound_floor = 3 * omega / 2;
    b.reed_value = (max_degree + omega + 2) / 2;
    b.bound_ok = chi <= b.bound_floor;
    b.rational_ok = 2 * chi <= 3 * omega;
    b.reed_ok = chi <= b.reed_value;
    b.tight = chi == b.bound_floor;
    return b;
}

BoundCheck check_bound(const Graph& g) {
    const auto verdict = classify_membership(g);
    if (!verdict.member) {
        throw NotAMember("check_bound: graph contains an induced " + std::string(to_string(verdict.witness->kind)));
    }
    const auto rep = invariant_report(g);
    return bound_from_invariants(rep.omega, rep.chi, rep.max_degree);
}

const std::vector<std::string>& campaign_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out{"bound", "rational_bound", "reed"};
        for (ClaimId id : kAllClaims) out.emplace_back(to_string(id));
        for (ClaimId id : kAllClaims) out.push_back(any_pair(id));
        out.insert(out.end(), {"lemma1_partition", "lemma1_partition_any_pair", "clique_cover", "chi_engines"});
        return out;
    }();
    return names;
}

CampaignReport run_campaign(const CampaignConfig& cfg, std::ostream* jsonl) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Shard> shards = plan_shards(cfg);
    std::vector<ShardResult> results(shards.size());

    int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(shards.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < shards.size(); i = next++) {
            try {
                run_shard(cfg, shards[i], results[i]);
            } catch (...) {
                results[i].error = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    CampaignReport report;
    for (const auto& name : campaign_check_names()) report.failures[name] = 0;
    for (auto& r : results) {
        if (r.error) std::rethrow_exception(r.error);
        merge(report, r, jsonl);
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (jsonl) *jsonl << summary_json(report).dump() << '\n';
    return report;
}

std::vector<RemarkRow> remark_experiment(int k_max) {
    if (k_max < 1) throw InvalidInput("remark_experiment: k_max must be at least 1");
    const std::vector<std::pair<std::string, Graph>> families{
        {"C5", cycle_graph(5)}, {"W5", wheel_graph(5)}, {"W6", wheel_graph(6)}};
    for (const auto& [name, base] : families) {
        if (static_cast<long long>(base.order()) * k_max > solver_cap()) {
            throw CapExceeded("remark_experiment: " + std::to_string(k_max) + " copies of " + name + " exceed the cap " +
                              std::to_string(solver_cap()));
        }
    }

    std::vector<RemarkRow> rows;
    for (const auto& [name, base] : families) {
        for (int m = 1; m <= k_max; ++m) {
            const Graph g = join_power(base, m);
            RemarkRow row;
            row.family = name;
            row.copies = m;
            row.n = g.order();
            row.graph6 = graph6_encode(g);
            row.verdict = classify_membership(g);
            row.witness_valid = !row.verdict.witness || verify_witness(g, *row.verdict.witness);
            row.three_k1_free = !find_3K1(g).has_value();
            const auto rep = invariant_report(g);
            const auto b = bound_from_invariants(rep.omega, rep.chi, rep.max_degree);
            row.omega = rep.omega;
            row.chi = rep.chi;
            row.bound_floor = b.bound_floor;
            row.tight = b.tight;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace chibound
