#pragma once

#include "chibound/graph.hpp"

#include <optional>
#include <string_view>

namespace chibound {

enum class WitnessKind { ThreeK1, K1PlusC4 };

/// "3K1" or "K1+C4".
std::string_view to_string(WitnessKind kind) noexcept;

/// Vertex certificate for a forbidden induced subgraph.
///
/// ThreeK1: three pairwise non-adjacent vertices, ascending.
/// K1PlusC4: hub first, then the four rim vertices in cyclic order.
struct Witness {
    WitnessKind kind = WitnessKind::ThreeK1;
    VertexSet vertices;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct MembershipVerdict {
    bool member = true;
    std::optional<Witness> witness;  // present iff !member
};

/// Lexicographically least independent triple, if any.
std::optional<Witness> find_3K1(const Graph& g);

/// First induced K1+C4 found scanning hubs in ascending order and, inside
/// N(hub), non-adjacent rim pairs (a, c) then (b, d) in ascending order.
std::optional<Witness> find_K1_plus_C4(const Graph& g);

/// 3K1 is checked before K1+C4.
MembershipVerdict classify_membership(const Graph& g);

bool is_member(const Graph& g);

/// True iff the vertices are in range, distinct, and realise exactly the
/// adjacency pattern of the witness kind. Never throws.
bool verify_witness(const Graph& g, const Witness& w) noexcept;

}  // namespace chibound
