#pragma once

#include "chibound/graph.hpp"

#include <cstddef>
#include <vector>

namespace chibound {

struct CliqueResult {
    int size = 0;
    VertexSet vertices;
};

/// Pairwise vertex-disjoint edges, each stored as (u, v) with u < v, sorted.
struct Matching {
    std::vector<Edge> edges;

    std::size_t size() const noexcept { return edges.size(); }
};

/// color[v] is the colour of vertex v; a negative entry means "uncoloured".
struct Coloring {
    std::vector<int> color;

    /// Number of distinct non-negative colours.
    int color_count() const;
};

struct ChromaticResult {
    int chi = 0;
    Coloring coloring;
};

struct InvariantReport {
    int n = 0;
    std::size_t m = 0;
    int max_degree = 0;
    int alpha = 0;
    int omega = 0;
    int chi = 0;
    VertexSet clique;
    VertexSet independent_set;
    Coloring coloring;
    /// Both colouring engines ran and agreed (only possible when alpha <= 2).
    bool chi_cross_checked = false;
};

/// Exact maximum clique: branch and bound over vertex bitsets, pruned by
/// greedy colouring. Throws CapExceeded above solver_cap().
CliqueResult clique_number(const Graph& g);

/// Maximum independent set, computed as a maximum clique of the complement.
CliqueResult independence_number(const Graph& g);

/// Maximum-cardinality matching in a general graph (Edmonds' augmenting
/// paths with blossom contraction).
Matching maximum_matching(const Graph& g);

/// Exact chromatic number by DSATUR branch and bound between the clique
/// lower bound and the greedy DSATUR upper bound. Branching picks the
/// uncoloured vertex of highest saturation, then most uncoloured neighbours,
/// then lowest index.
ChromaticResult chromatic_number_bb(const Graph& g);

/// chi = n - |maximum matching of the complement|, valid because every colour
/// class of a 3K1-free graph has at most two vertices. Throws ContainsThreeK1
/// when alpha(g) >= 3.
ChromaticResult chromatic_number_via_matching(const Graph& g);

/// Total (every vertex has a colour >= 0) and proper.
bool validate_coloring(const Graph& g, const Coloring& c) noexcept;

/// Every invariant at once. When alpha <= 2 the two chromatic engines are
/// both run; disagreement throws ConsistencyError.
InvariantReport invariant_report(const Graph& g);

}  // namespace chibound
