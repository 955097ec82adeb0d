#pragma once

#include "chibound/graph.hpp"

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <variant>

namespace chibound {

// ---------------------------------------------------------------------------
// Combinators
// ---------------------------------------------------------------------------

Graph complement(const Graph& g);

/// Disjoint copies of a (vertices 0..a.n-1) and b (shifted by a.n) plus every
/// cross edge.
Graph join(const Graph& a, const Graph& b);

/// Subgraph induced on s, relabelled 0..|s|-1 in ascending original order.
/// Duplicates in s are ignored; out-of-range vertices throw InvalidInput.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

Graph cycle_graph(int length);
Graph complete_graph(int size);
Graph empty_graph(int n);
Graph path_graph(int n);
/// Hub 0 joined to a cycle on vertices 1..rim.
Graph wheel_graph(int rim);
/// factor + factor + ... + factor (copies times); copy i occupies a contiguous block.
Graph join_power(const Graph& factor, int copies);
/// Each pair (in graph6 bit order) is an edge independently with probability p.
Graph random_graph(int n, double p, std::uint64_t seed);
Graph petersen_graph();

struct CycleSpec {
    int length = 3;
};
struct CompleteSpec {
    int size = 1;
};
struct WheelSpec {
    int rim = 3;
};
struct JoinPowerSpec {
    Graph factor;
    int copies = 1;
};
struct RandomSpec {
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
};

using GeneratorSpec = std::variant<CycleSpec, CompleteSpec, WheelSpec, JoinPowerSpec, RandomSpec>;

/// Deterministic construction; invalid sizes throw InvalidInput.
Graph generate(const GeneratorSpec& spec);

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

inline constexpr int kDefaultEnumerationCap = 7;
/// C(n,2) must fit in a 63-bit edge mask.
inline constexpr int kHardEnumerationCap = 11;

/// 2^C(n,2).
std::uint64_t labeled_count(int n);

/// Bit k of mask is the k-th vertex pair in graph6 order:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// All labelled graphs on n vertices whose edge mask lies in [first, last),
/// yielded in increasing mask order.
class LabeledGraphs {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}

        Graph operator*() const { return graph_from_edge_mask(n_, mask_); }
        std::uint64_t mask() const noexcept { return mask_; }
        iterator& operator++() noexcept {
            ++mask_;
            return *this;
        }
        iterator operator++(int) noexcept {
            auto old = *this;
            ++mask_;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.mask_ == b.mask_; }

    private:
        int n_ = 0;
        std::uint64_t mask_ = 0;
    };

    LabeledGraphs(int n, std::uint64_t first, std::uint64_t last) : n_(n), first_(first), last_(last) {}

    iterator begin() const { return {n_, first_}; }
    iterator end() const { return {n_, last_}; }
    std::uint64_t size() const noexcept { return last_ - first_; }
    int order() const noexcept { return n_; }

private:
    int n_;
    std::uint64_t first_;
    std::uint64_t last_;
};

/// Every labelled graph on n vertices exactly once. Throws CapExceeded when
/// n > cap (cap itself may not exceed kHardEnumerationCap).
LabeledGraphs enumerate_labeled(int n, int cap = kDefaultEnumerationCap);

/// Rejection-sample random_graph draws from one seeded stream until a
/// {3K1, K1+C4}-free graph appears. Empty when max_tries draws all fail.
std::optional<Graph> random_member(int n, double p, std::uint64_t seed, int max_tries);

}  // namespace chibound
