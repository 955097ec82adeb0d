#include "chibound/generators.hpp"

#include "chibound/errors.hpp"
#include "chibound/recognition.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace chibound {
namespace {

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph random_graph_from(int n, double p, std::mt19937_64& rng) {
    GraphBuilder b(n);
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (unit_draw(rng) < p) b.add_edge(i, j);
        }
    }
    return std::move(b).build();
}

void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
}

}  // namespace

Graph complement(const Graph& g) {
    GraphBuilder b(g.order());
    for (Vertex j = 1; j < g.order(); ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (!g.adjacent(i, j)) b.add_edge(i, j);
        }
    }
    return std::move(b).build();
}

Graph join(const Graph& a, const Graph& b) {
    const int na = a.order();
    GraphBuilder out(na + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(na + u, na + v);
    for (Vertex u = 0; u < na; ++u) {
        for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, na + v);
    }
    return std::move(out).build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    VertexSet keep(s.begin(), s.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Vertex v : keep) {
        if (!g.contains(v)) throw InvalidInput("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    }
    const int k = static_cast<int>(keep.size());
    GraphBuilder b(k);
    for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.adjacent(keep[i], keep[j])) b.add_edge(i, j);
        }
    }
    return std::move(b).build();
}

Graph cycle_graph(int length) {
    if (length < 3) throw InvalidInput("cycle length must be at least 3");
    GraphBuilder b(length);
    for (Vertex v = 0; v < length; ++v) b.add_edge(v, (v + 1) % length);
    return std::move(b).build();
}

Graph complete_graph(int size) {
    if (size < 0) throw InvalidInput("clique size must be non-negative");
    return complement(Graph(size));
}

Graph empty_graph(int n) {
    if (n < 0) throw InvalidInput("vertex count must be non-negative");
    return Graph(n);
}

Graph path_graph(int n) {
    if (n < 0) throw InvalidInput("vertex count must be non-negative");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph wheel_graph(int rim) {
    if (rim < 3) throw InvalidInput("wheel rim length must be at least 3");
    return join(complete_graph(1), cycle_graph(rim));
}

Graph join_power(const Graph& factor, int copies) {
    if (copies < 1) throw InvalidInput("join copy count must be at least 1");
    Graph out = factor;
    for (int i = 1; i < copies; ++i) out = join(out, factor);
    return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    require_probability(p);
    std::mt19937_64 rng(seed);
    return random_graph_from(n, p, rng);
}

Graph petersen_graph() {
    GraphBuilder b(10);
    for (Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return std::move(b).build();
}

Graph generate(const GeneratorSpec& spec) {
    struct Visitor {
        Graph operator()(const CycleSpec& s) const { return cycle_graph(s.length); }
        Graph operator()(const CompleteSpec& s) const { return complete_graph(s.size); }
        Graph operator()(const WheelSpec& s) const { return wheel_graph(s.rim); }
        Graph operator()(const JoinPowerSpec& s) const { return join_power(s.factor, s.copies); }
        Graph operator()(const RandomSpec& s) const { return random_graph(s.n, s.p, s.seed); }
    };
    return std::visit(Visitor{}, spec);
}

std::uint64_t labeled_count(int n) {
    if (n < 0 || n > kHardEnumerationCap) throw CapExceeded("labeled_count: n out of range");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    GraphBuilder b(n);
    int k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            if ((mask >> k) & 1u) b.add_edge(i, j);
        }
    }
    return std::move(b).build();
}

LabeledGraphs enumerate_labeled(int n, int cap) {
    cap = std::min(cap, kHardEnumerationCap);
    if (n < 0) throw InvalidInput("enumerate_labeled: negative vertex count");
    if (n > cap) {
        throw CapExceeded("enumerate_labeled: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
    return LabeledGraphs(n, 0, labeled_count(n));
}

std::optional<Graph> random_member(int n, double p, std::uint64_t seed, int max_tries) {
    require_probability(p);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < max_tries; ++t) {
        Graph g = random_graph_from(n, p, rng);
        if (classify_membership(g).member) return g;
    }
    return std::nullopt;
}

}  // namespace chibound
