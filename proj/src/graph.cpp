#include "chibound/graph.hpp"

#include "chibound/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace chibound {

int solver_cap() {
    const char* env = std::getenv("CHIBOUND_MAX_N");
    if (env == nullptr || *env == '\0') return kMaskCapacity;
    int value = 0;
    auto [end, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc{} || *end != '\0' || value < 0) return kMaskCapacity;
    return std::min(value, kMaskCapacity);
}

void require_solver_size(const Graph& g, std::string_view operation) {
    const int cap = solver_cap();
    if (g.order() > cap) {
        throw CapExceeded(std::string(operation) + ": graph has " + std::to_string(g.order()) +
                          " vertices, exact solvers accept at most " + std::to_string(cap));
    }
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0 || n > kMaxOrder) {
        throw InvalidInput("graph order " + std::to_string(n) + " outside [0, " +
                           std::to_string(kMaxOrder) + "]");
    }
    bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (!contains(u) || !contains(v)) {
            throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) +
                               "} references a vertex outside 0.." + std::to_string(n - 1));
        }
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        set_edge(u, v);
    }
}

void Graph::set_edge(Vertex u, Vertex v) noexcept {
    bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::clear_edge(Vertex u, Vertex v) noexcept {
    bits_[row_offset(u) + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[row_offset(v) + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
}

int Graph::degree(Vertex v) const noexcept {
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

VertexSet Graph::neighbors(Vertex v) const {
    VertexSet out;
    auto r = row(v);
    for (int wi = 0; wi < words_; ++wi) {
        for_each_bit(r[wi], [&](Vertex b) { out.push_back(wi * 64 + b); });
    }
    return out;
}

VertexSet Graph::closed_neighbors(Vertex v) const {
    VertexSet out = neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

Mask Graph::all_mask() const noexcept {
    return n_ >= 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_complete() const noexcept {
    for (Vertex v = 0; v < n_; ++v) {
        if (degree(v) != n_ - 1) return false;
    }
    return true;
}

void GraphBuilder::check(Vertex u, Vertex v) const {
    if (!g_.contains(u) || !g_.contains(v)) {
        throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) +
                           "} references a vertex outside 0.." + std::to_string(g_.order() - 1));
    }
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    check(u, v);
    g_.set_edge(u, v);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
    check(u, v);
    g_.clear_edge(u, v);
    return *this;
}

VertexSet to_vertices(Mask m) {
    VertexSet out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    for_each_bit(m, [&](Vertex v) { out.push_back(v); });
    return out;
}

Mask to_mask(std::span<const Vertex> vs) {
    Mask m = 0;
    for (Vertex v : vs) m |= Mask{1} << v;
    return m;
}

}  // namespace chibound
