#pragma once

#include "chibound/graph.hpp"
#include "chibound/invariants.hpp"
#include "chibound/recognition.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace chibound {

/// chi against floor(3*omega/2) and against ceil((Delta + omega + 1)/2).
struct BoundCheck {
    int omega = 0;
    int chi = 0;
    int max_degree = 0;
    int bound_floor = 0;  // floor(3*omega/2)
    int reed_value = 0;   // ceil((max_degree + omega + 1)/2)
    bool bound_ok = true;     // chi <= bound_floor
    bool rational_ok = true;  // 2*chi <= 3*omega
    bool reed_ok = true;      // chi <= reed_value
    bool tight = false;       // chi == bound_floor
};

BoundCheck bound_from_invariants(int omega, int chi, int max_degree) noexcept;

/// Exact invariants of a member graph compared against both bounds.
/// Throws NotAMember for non-members.
BoundCheck check_bound(const Graph& g);

enum class CampaignMode { Exhaustive, Random };

struct CampaignConfig {
    CampaignMode mode = CampaignMode::Exhaustive;

    // exhaustive: every labelled graph with min_n <= n <= max_n
    int min_n = 1;
    int max_n = 7;
    int enumeration_cap = 7;

    // random: `count` draws of random_graph(n, p, seed_i), seed_i derived from (seed, i)
    int n = 20;
    std::uint64_t count = 1000;
    double p = 0.97;  // members are rare in G(n, p) below ~0.95 at n = 20
    std::uint64_t seed = 0;

    bool check_bound = true;
    bool check_structure = true;
    bool check_clique_cover = true;
    /// Run both chromatic engines on every 3K1-free graph, members or not.
    bool check_engines = true;
    /// Also audit the partition and S1..S6 at every ordered non-adjacent pair.
    bool all_anchor_pairs = true;

    /// Worker threads; 0 means std::thread::hardware_concurrency().
    int threads = 0;
    /// Graphs per shard. Shard boundaries do not affect any reported value.
    std::uint64_t shard_size = 1 << 16;
};

/// A replayable failure: the graph6 certificate plus what went wrong.
struct Violation {
    std::string check;  // "bound", "rational_bound", "reed", "S1".."S7", "lemma1_partition", "clique_cover"
    std::string graph6;
    int n = 0;
    std::optional<Edge> anchor;  // for structure and partition failures
    VertexSet counterexample;
    BoundCheck bound;
};

struct ExtremalMember {
    std::string graph6;
    int n = 0;
    int omega = 0;
    int chi = 0;
    int bound_floor = 0;

    /// chi / bound_floor as an exact fraction.
    bool beats(const ExtremalMember& other) const noexcept {
        return static_cast<std::int64_t>(chi) * other.bound_floor >
               static_cast<std::int64_t>(other.chi) * bound_floor;
    }
    double ratio() const noexcept { return bound_floor == 0 ? 0.0 : static_cast<double>(chi) / bound_floor; }
};

struct OrderStats {
    int n = 0;
    std::uint64_t scanned = 0;
    std::uint64_t three_k1_free = 0;
    std::uint64_t members = 0;
    std::uint64_t tight = 0;
};

struct CampaignReport {
    std::uint64_t scanned = 0;
    std::uint64_t three_k1_free = 0;
    std::uint64_t members = 0;
    std::uint64_t tight_members = 0;
    std::uint64_t engine_checks = 0;
    std::uint64_t engine_disagreements = 0;
    std::uint64_t decompositions_checked = 0;
    std::uint64_t partitions_checked = 0;
    /// Failures per check name. Every check name is present, zero or not.
    std::map<std::string, std::uint64_t> failures;
    std::vector<Violation> violations;
    std::optional<ExtremalMember> extremal;
    /// Successive strict improvements of the extremal ratio, in scan order.
    std::vector<ExtremalMember> extremal_updates;
    std::vector<OrderStats> by_order;
    double elapsed_seconds = 0.0;

    bool clean() const noexcept { return violations.empty() && engine_disagreements == 0; }
};

/// Check names that may appear in CampaignReport::failures, in output order.
const std::vector<std::string>& campaign_check_names();

/// Runs the campaign. When jsonl is non-null, writes one record per
/// violation and per extremal update (scan order) and a final summary.
/// Output is identical for any thread count or shard size.
CampaignReport run_campaign(const CampaignConfig& cfg, std::ostream* jsonl = nullptr);

struct RemarkRow {
    std::string family;  // "C5", "W5" (hub + C5) or "W6" (hub + C6)
    int copies = 1;
    int n = 0;
    std::string graph6;
    MembershipVerdict verdict;
    bool witness_valid = true;  // vacuously true for members
    bool three_k1_free = true;
    int omega = 0;
    int chi = 0;
    int bound_floor = 0;
    bool tight = false;
};

/// join_power(F, m) for m = 1..k_max and F in {C5, W5, W6}, with membership
/// (and witness), omega, chi and the bound. Nothing here is asserted.
std::vector<RemarkRow> remark_experiment(int k_max);

}  // namespace chibound
