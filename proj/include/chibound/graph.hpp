#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace chibound {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // always sorted ascending
using Mask = std::uint64_t;

/// Hard upper bound on the order of any Graph value (storage is n*n/8 bytes).
inline constexpr int kMaxOrder = 1 << 15;

/// Exact solvers work on single-word vertex masks, so they never go past 64.
inline constexpr int kMaskCapacity = 64;

/// Size cap for the exact solvers. Defaults to 64; the environment variable
/// CHIBOUND_MAX_N may lower it (values above 64 are clamped).
int solver_cap();

/// Throws CapExceeded when g.order() > solver_cap().
class Graph;
void require_solver_size(const Graph& g, std::string_view operation);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a packed symmetric bit matrix, one row of 64-bit words per
/// vertex. Self-loops and duplicate edges cannot be represented.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Self-loops and out-of-range endpoints throw InvalidInput; duplicates collapse.
    Graph(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept;

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(Vertex v) const noexcept;
    int max_degree() const noexcept;

    /// N(v) in ascending order.
    VertexSet neighbors(Vertex v) const;
    /// N(v) + v in ascending order.
    VertexSet closed_neighbors(Vertex v) const;

    std::span<const std::uint64_t> row(Vertex v) const noexcept {
        return {bits_.data() + row_offset(v), static_cast<std::size_t>(words_)};
    }
    /// Neighbourhood as a single word. Only valid when order() <= 64.
    Mask mask(Vertex v) const noexcept { return bits_[row_offset(v)]; }
    /// Bit i set for every vertex i. Only valid when order() <= 64.
    Mask all_mask() const noexcept;

    /// Edges (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool is_complete() const noexcept;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    friend class GraphBuilder;

    std::size_t row_offset(Vertex v) const noexcept {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
    }
    void set_edge(Vertex u, Vertex v) noexcept;
    void clear_edge(Vertex u, Vertex v) noexcept;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for constructing a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}

    int order() const noexcept { return g_.order(); }
    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const noexcept { return g_.adjacent(u, v); }

    Graph build() && { return std::move(g_); }
    Graph build() const& { return g_; }

private:
    void check(Vertex u, Vertex v) const;
    Graph g_;
};

/// Set bits of a mask as ascending vertices.
VertexSet to_vertices(Mask m);
Mask to_mask(std::span<const Vertex> vs);

template <class Fn>
void for_each_bit(Mask m, Fn&& fn) {
    while (m) {
        fn(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
}

}  // namespace chibound
