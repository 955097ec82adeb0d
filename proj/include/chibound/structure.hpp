#pragma once

#include "chibound/graph.hpp"
#include "chibound/invariants.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace chibound {

// ---------------------------------------------------------------------------
// Clique partition into at most four cliques
// ---------------------------------------------------------------------------

/// One clique of the partition. `label` is 1..4 and fixes which size bound
/// applies: M1 and M2 are bounded by omega, M3 and M4 by omega - 1.
struct PartitionPart {
    int label = 1;
    VertexSet vertices;
};

struct CliquePartition {
    std::vector<PartitionPart> parts;  // non-empty parts only, ordered by label
    std::optional<Edge> anchor;        // (v, w); absent for complete graphs

    int part_count() const noexcept { return static_cast<int>(parts.size()); }
};

/// Partition anchored at the lexicographically least non-adjacent pair.
/// Throws NotAMember for non-members and InvalidInput for the empty graph.
CliquePartition lemma1_partition(const Graph& g);

/// Partition anchored at a caller-chosen non-adjacent pair (v, w):
/// M1 = A1 + v, M2 = A2 + w, M3 = B, M4 = C, where A1 is the greedy
/// lexicographic maximal clique of the common neighbourhood A.
CliquePartition lemma1_partition(const Graph& g, Vertex v, Vertex w);

struct PartitionAudit {
    bool covers_disjointly = false;
    bool parts_are_cliques = false;
    bool part_count_ok = false;   // 1 <= j <= 4
    bool size_bounds_ok = false;  // |M1|,|M2| <= omega; |M3|,|M4| <= omega - 1
    bool complement_coloring_ok = false;

    bool ok() const noexcept {
        return covers_disjointly && parts_are_cliques && part_count_ok && size_bounds_ok && complement_coloring_ok;
    }
};

PartitionAudit audit_partition(const Graph& g, const CliquePartition& p, int omega);

/// Part index per vertex: a colouring of the complement of g.
Coloring partition_complement_coloring(const CliquePartition& p, int n);

/// Number of parts j of lemma1_partition(g), after asserting that the
/// partition properly colours complement(g) and that chi(complement(g)) <= j.
/// Throws NotAMember for non-members, ConsistencyError if an assertion fails.
int clique_cover_bound(const Graph& g);

// ---------------------------------------------------------------------------
// Neighbourhood decomposition around a maximum-degree vertex
// ---------------------------------------------------------------------------

struct NeighborhoodDecomposition {
    Vertex v = -1;
    Vertex w = -1;
    VertexSet a;    // adjacent to both v and w
    VertexSet b;    // adjacent to v only
    VertexSet c;    // adjacent to w only
    VertexSet a1;   // greedy lexicographic maximal clique of <A>
    VertexSet a2;   // A - A1
    VertexSet b11;  // b in B with a non-neighbour in A2
    VertexSet b12;  // b in B with a non-neighbour in A1
    VertexSet b2;   // B - (B11 + B12)
    VertexSet outside;  // adjacent to neither v nor w; empty whenever alpha <= 2
    bool v_has_max_degree = false;
};

/// Anchor pair used by proof_decomposition(g), without any membership check.
/// Empty for complete graphs.
std::optional<Edge> proof_anchor(const Graph& g);

/// v is the lowest-index vertex of maximum degree; if that vertex is
/// universal, v falls back to the lowest-index vertex with a non-neighbour.
/// w is the lowest-index non-neighbour of v.
/// Throws NotAMember for non-members and InvalidInput for complete graphs.
NeighborhoodDecomposition proof_decomposition(const Graph& g);

/// Same construction at a caller-chosen pair; g must be a member.
NeighborhoodDecomposition proof_decomposition(const Graph& g, Vertex v, Vertex w);

/// The construction without the membership precondition. Requires only that
/// v != w are in range and non-adjacent.
NeighborhoodDecomposition decompose_at(const Graph& g, Vertex v, Vertex w);

enum class ClaimId { S1, S2, S3, S4, S5, S6, S7 };

inline constexpr std::array<ClaimId, 7> kAllClaims{ClaimId::S1, ClaimId::S2, ClaimId::S3, ClaimId::S4,
                                                   ClaimId::S5, ClaimId::S6, ClaimId::S7};

std::string_view to_string(ClaimId id) noexcept;
std::string_view describe(ClaimId id) noexcept;
/// S4 is not stated outright; it follows from alpha <= 2 together with S3.
bool is_derived(ClaimId id) noexcept;

struct ClaimCheck {
    ClaimId id = ClaimId::S1;
    bool holds = true;
    VertexSet counterexample;  // non-empty iff !holds
};

struct StructureReport {
    std::vector<ClaimCheck> claims;  // one per ClaimId, in catalog order

    bool all_hold() const noexcept;
    const ClaimCheck& claim(ClaimId id) const;
};

/// Evaluates S1..S7 on d. Never throws on non-members: it reports.
/// Throws InvalidInput when d was not produced from g.
StructureReport check_structure(const Graph& g, const NeighborhoodDecomposition& d);
/// As above with the clique number supplied by the caller.
StructureReport check_structure(const Graph& g, const NeighborhoodDecomposition& d, int omega);

}  // namespace chibound
