#include "chibound/structure.hpp"

#include "chibound/errors.hpp"
#include "chibound/generators.hpp"
#include "chibound/recognition.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace chibound {
namespace {

VertexSet greedy_maximal_clique(const Graph& g, const VertexSet& pool) {
    VertexSet clique;
    for (Vertex x : pool) {
        if (std::all_of(clique.begin(), clique.end(), [&](Vertex y) { return g.adjacent(x, y); })) {
            clique.push_back(x);
        }
    }
    return clique;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// First non-adjacent pair inside s, as a two-element set.
std::optional<VertexSet> missing_edge(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!g.adjacent(s[i], s[j])) return VertexSet{s[i], s[j]};
        }
    }
    return std::nullopt;
}

bool is_clique(const Graph& g, const VertexSet& s) { return !missing_edge(g, s); }

bool has_non_neighbor_in(const Graph& g, Vertex x, const VertexSet& s) {
    return std::any_of(s.begin(), s.end(), [&](Vertex y) { return !g.adjacent(x, y); });
}

void require_pair(const Graph& g, Vertex v, Vertex w) {
    if (!g.contains(v) || !g.contains(w)) {
        throw InvalidInput("anchor pair (" + std::to_string(v) + "," + std::to_string(w) + ") out of range");
    }
    if (v == w || g.adjacent(v, w)) {
        throw InvalidInput("anchor pair (" + std::to_string(v) + "," + std::to_string(w) +
                           ") must be two distinct non-adjacent vertices");
    }
}

void require_member(const Graph& g, std::string_view operation) {
    const auto verdict = classify_membership(g);
    if (!verdict.member) {
        std::string vs;
        for (Vertex x : verdict.witness->vertices) vs += (vs.empty() ? "" : ",") + std::to_string(x);
        throw NotAMember(std::string(operation) + ": graph contains an induced " +
                         std::string(to_string(verdict.witness->kind)) + " on {" + vs + "}");
    }
}

/// Fills b11, b12, b2 from b against d.a1 and d.a2.
void split_b(const Graph& g, const VertexSet& b, NeighborhoodDecomposition& d) {
    d.b11.clear();
    d.b12.clear();
    d.b2.clear();
    for (Vertex x : b) {
        const bool misses_a2 = has_non_neighbor_in(g, x, d.a2);
        const bool misses_a1 = has_non_neighbor_in(g, x, d.a1);
        if (misses_a2) d.b11.push_back(x);
        if (misses_a1) d.b12.push_back(x);
        if (!misses_a1 && !misses_a2) d.b2.push_back(x);
    }
}

struct Neighbourhoods {
    VertexSet a, b, c, outside;
};

Neighbourhoods split_around(const Graph& g, Vertex v, Vertex w) {
    Neighbourhoods s;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (x == v || x == w) continue;
        const bool to_v = g.adjacent(x, v);
        const bool to_w = g.adjacent(x, w);
        if (to_v && to_w) s.a.push_back(x);
        else if (to_v) s.b.push_back(x);
        else if (to_w) s.c.push_back(x);
        else s.outside.push_back(x);
    }
    return s;
}

CliquePartition build_partition(const Graph& g, Vertex v, Vertex w) {
    const auto s = split_around(g, v, w);
    const VertexSet a1 = greedy_maximal_clique(g, s.a);
    const VertexSet a2 = set_minus(s.a, a1);

    CliquePartition p;
    p.anchor = Edge{v, w};
    auto add = [&](int label, VertexSet vs) {
        std::sort(vs.begin(), vs.end());
        if (!vs.empty()) p.parts.push_back({label, std::move(vs)});
    };
    add(1, set_union(a1, {v}));
    add(2, set_union(a2, {w}));
    add(3, s.b);
    add(4, s.c);
    return p;
}

}  // namespace

CliquePartition lemma1_partition(const Graph& g) {
    if (g.order() == 0) throw InvalidInput("lemma1_partition: empty graph");
    require_member(g, "lemma1_partition");
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex w = v + 1; w < g.order(); ++w) {
            if (!g.adjacent(v, w)) return build_partition(g, v, w);
        }
    }
    CliquePartition p;
    VertexSet all(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
    p.parts.push_back({1, std::move(all)});
    return p;
}

CliquePartition lemma1_partition(const Graph& g, Vertex v, Vertex w) {
    if (g.order() == 0) throw InvalidInput("lemma1_partition: empty graph");
    require_pair(g, v, w);
    require_member(g, "lemma1_partition");
    return build_partition(g, v, w);
}

Coloring partition_complement_coloring(const CliquePartition& p, int n) {
    Coloring c{std::vector<int>(static_cast<std::size_t>(n), -1)};
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        for (Vertex x : p.parts[i].vertices) {
            if (x >= 0 && x < n) c.color[x] = static_cast<int>(i);
        }
    }
    return c;
}

PartitionAudit audit_partition(const Graph& g, const CliquePartition& p, int omega) {
    PartitionAudit audit;
    std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
    bool in_range = true;
    for (const auto& part : p.parts) {
        for (Vertex x : part.vertices) {
            if (g.contains(x)) ++hits[x];
            else in_range = false;
        }
    }
    audit.covers_disjointly = in_range && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    audit.parts_are_cliques =
        std::all_of(p.parts.begin(), p.parts.end(), [&](const PartitionPart& part) { return is_clique(g, part.vertices); });
    audit.part_count_ok = p.part_count() >= 1 && p.part_count() <= 4;
    audit.size_bounds_ok = std::all_of(p.parts.begin(), p.parts.end(), [&](const PartitionPart& part) {
        const int bound = part.label <= 2 ? omega : omega - 1;
        return part.label >= 1 && part.label <= 4 && static_cast<int>(part.vertices.size()) <= bound;
    });
    const Coloring cover = partition_complement_coloring(p, g.order());
    audit.complement_coloring_ok = validate_coloring(complement(g), cover) && cover.color_count() <= 4;
    return audit;
}

int clique_cover_bound(const Graph& g) {
    const CliquePartition p = lemma1_partition(g);
    const Graph co = complement(g);
    if (!validate_coloring(co, partition_complement_coloring(p, g.order()))) {
        throw ConsistencyError("clique_cover_bound: partition does not properly colour the complement");
    }
    if (g.order() <= solver_cap() && chromatic_number_bb(co).chi > p.part_count()) {
        throw ConsistencyError("clique_cover_bound: chromatic number of the complement exceeds the part count");
    }
    return p.part_count();
}

NeighborhoodDecomposition decompose_at(const Graph& g, Vertex v, Vertex w) {
    require_pair(g, v, w);
    auto s = split_around(g, v, w);
    NeighborhoodDecomposition d;
    d.v = v;
    d.w = w;
    d.a1 = greedy_maximal_clique(g, s.a);
    d.a2 = set_minus(s.a, d.a1);
    split_b(g, s.b, d);
    d.a = std::move(s.a);
    d.b = std::move(s.b);
    d.c = std::move(s.c);
    d.outside = std::move(s.outside);
    d.v_has_max_degree = g.degree(v) == g.max_degree();
    return d;
}

NeighborhoodDecomposition proof_decomposition(const Graph& g, Vertex v, Vertex w) {
    require_pair(g, v, w);
    require_member(g, "proof_decomposition");
    return decompose_at(g, v, w);
}

std::optional<Edge> proof_anchor(const Graph& g) {
    const int n = g.order();
    if (g.is_complete()) return std::nullopt;
    const int delta = g.max_degree();
    Vertex v = 0;
    while (g.degree(v) != delta) ++v;
    if (delta == n - 1) {
        v = 0;
        while (g.degree(v) == n - 1) ++v;
    }
    Vertex w = 0;
    while (w == v || g.adjacent(v, w)) ++w;
    return Edge{v, w};
}

NeighborhoodDecomposition proof_decomposition(const Graph& g) {
    const auto anchor = proof_anchor(g);
    if (!anchor) throw InvalidInput("proof_decomposition: complete graph has no non-adjacent pair");
    require_member(g, "proof_decomposition");
    return decompose_at(g, anchor->first, anchor->second);
}

std::string_view to_string(ClaimId id) noexcept {
    switch (id) {
        case ClaimId::S1: return "S1";
        case ClaimId::S2: return "S2";
        case ClaimId::S3: return "S3";
        case ClaimId::S4: return "S4";
        case ClaimId::S5: return "S5";
        case ClaimId::S6: return "S6";
        case ClaimId::S7: return "S7";
    }
    return "?";
}

std::string_view describe(ClaimId id) noexcept {
    switch (id) {
        case ClaimId::S1: return "<B> and <C> are complete";
        case ClaimId::S2: return "<A2> is complete";
        case ClaimId::S3: return "no edges between A1 and A2";
        case ClaimId::S4: return "B11 and B12 are disjoint";
        case ClaimId::S5: return "<B11 + A1 + B2> and <B12 + A2 + B2> are complete";
        case ClaimId::S6: return "|A1|+|B11|+|B2|+1 <= omega and |A2|+|B12|+|B2|+1 <= omega";
        case ClaimId::S7: return "deg(v) = |A1|+|A2|+|B11|+|B12|+|B2| <= 2*omega - 2 - |B2|";
    }
    return "";
}

bool is_derived(ClaimId id) noexcept { return id == ClaimId::S4; }

bool StructureReport::all_hold() const noexcept {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimCheck& c) { return c.holds; });
}

const ClaimCheck& StructureReport::claim(ClaimId id) const {
    for (const auto& c : claims) {
        if (c.id == id) return c;
    }
    throw InvalidInput("structure report has no claim " + std::string(to_string(id)));
}

StructureReport check_structure(const Graph& g, const NeighborhoodDecomposition& d) {
    require_solver_size(g, "check_structure");
    return check_structure(g, d, clique_number(g).size);
}

StructureReport check_structure(const Graph& g, const NeighborhoodDecomposition& d, int omega) {
    require_pair(g, d.v, d.w);
    {
        const auto s = split_around(g, d.v, d.w);
        NeighborhoodDecomposition expected = d;
        split_b(g, s.b, expected);
        const bool a1_maximal_clique =
            std::includes(s.a.begin(), s.a.end(), d.a1.begin(), d.a1.end()) && is_clique(g, d.a1) &&
            std::none_of(s.a.begin(), s.a.end(), [&](Vertex x) {
                return !std::binary_search(d.a1.begin(), d.a1.end(), x) &&
                       std::all_of(d.a1.begin(), d.a1.end(), [&](Vertex y) { return g.adjacent(x, y); });
            });
        const bool consistent = d.a == s.a && d.b == s.b && d.c == s.c && d.outside == s.outside &&
                                a1_maximal_clique && d.a2 == set_minus(s.a, d.a1) && d.b11 == expected.b11 &&
                                d.b12 == expected.b12 && d.b2 == expected.b2;
        if (!consistent) throw InvalidInput("check_structure: decomposition does not match the graph");
    }

    StructureReport report;
    auto record = [&](ClaimId id, std::optional<VertexSet> counterexample) {
        report.claims.push_back({id, !counterexample.has_value(), counterexample.value_or(VertexSet{})});
    };

    // S1
    {
        auto bad = missing_edge(g, d.b);
        if (!bad) bad = missing_edge(g, d.c);
        record(ClaimId::S1, bad);
    }
    // S2
    record(ClaimId::S2, missing_edge(g, d.a2));
    // S3
    {
        std::optional<VertexSet> bad;
        for (Vertex x : d.a1) {
            for (Vertex y : d.a2) {
                if (!bad && g.adjacent(x, y)) bad = VertexSet{std::min(x, y), std::max(x, y)};
            }
        }
        record(ClaimId::S3, bad);
    }
    // S4
    {
        const VertexSet both = set_intersection(d.b11, d.b12);
        record(ClaimId::S4, both.empty() ? std::nullopt : std::optional<VertexSet>{VertexSet{both.front()}});
    }
    const VertexSet left = set_union(set_union(d.b11, d.a1), d.b2);
    const VertexSet right = set_union(set_union(d.b12, d.a2), d.b2);
    // S5
    {
        auto bad = missing_edge(g, left);
        if (!bad) bad = missing_edge(g, right);
        record(ClaimId::S5, bad);
    }
    // S6
    {
        const auto b2 = static_cast<int>(d.b2.size());
        const int left_size = static_cast<int>(d.a1.size() + d.b11.size()) + b2 + 1;
        const int right_size = static_cast<int>(d.a2.size() + d.b12.size()) + b2 + 1;
        std::optional<VertexSet> bad;
        if (left_size > omega) bad = set_union(left, {d.v});
        else if (right_size > omega) bad = set_union(right, {d.v});
        record(ClaimId::S6, bad);
    }
    // S7
    {
        const int degree = g.degree(d.v);
        const auto parts = static_cast<int>(d.a1.size() + d.a2.size() + d.b11.size() + d.b12.size() + d.b2.size());
        const bool holds = degree == parts && degree <= 2 * omega - 2 - static_cast<int>(d.b2.size());
        record(ClaimId::S7, holds ? std::nullopt : std::optional<VertexSet>{VertexSet{d.v}});
    }
    return report;
}

}  // namespace chibound
