#include "chibound/invariants.hpp"

#include "chibound/errors.hpp"
#include "chibound/generators.hpp"
#include "chibound/recognition.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

namespace chibound {
namespace {

// ---------------------------------------------------------------------------
// Maximum clique
// ---------------------------------------------------------------------------

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    CliqueResult run() {
        if (g_.order() > 0) expand(g_.all_mask(), 0, 0);
        return {best_size_, to_vertices(best_)};
    }

private:
    void expand(Mask candidates, Mask current, int size) {
        std::array<Vertex, kMaskCapacity> order{};
        std::array<int, kMaskCapacity> bound{};
        int count = 0;
        int colour = 0;
        Mask uncoloured = candidates;
        while (uncoloured) {
            ++colour;
            Mask available = uncoloured;
            while (available) {
                const Vertex v = std::countr_zero(available);
                const Mask bit = Mask{1} << v;
                available &= ~bit & ~g_.mask(v);
                uncoloured &= ~bit;
                order[count] = v;
                bound[count] = colour;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (size + bound[i] <= best_size_) return;
            const Vertex v = order[i];
            const Mask bit = Mask{1} << v;
            const Mask next = candidates & g_.mask(v);
            if (next == 0) {
                if (size + 1 > best_size_) {
                    best_size_ = size + 1;
                    best_ = current | bit;
                }
            } else {
                expand(next, current | bit, size + 1);
            }
            candidates &= ~bit;
        }
    }

    const Graph& g_;
    int best_size_ = 0;
    Mask best_ = 0;
};

// ---------------------------------------------------------------------------
// Blossom matching
// ---------------------------------------------------------------------------

class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : n_(g.order()),
          adj_(static_cast<std::size_t>(n_)),
          mate_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_)),
          base_(static_cast<std::size_t>(n_)),
          in_tree_(static_cast<std::size_t>(n_)),
          in_blossom_(static_cast<std::size_t>(n_)),
          on_path_(static_cast<std::size_t>(n_)) {
        for (Vertex v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
    }

    Matching run() {
        for (Vertex root = 0; root < n_; ++root) {
            if (mate_[root] != -1) continue;
            Vertex u = find_augmenting_path(root);
            while (u != -1) {
                const Vertex pu = parent_[u];
                const Vertex next = mate_[pu];
                mate_[u] = pu;
                mate_[pu] = u;
                u = next;
            }
        }
        Matching m;
        for (Vertex v = 0; v < n_; ++v) {
            if (mate_[v] > v) m.edges.emplace_back(v, mate_[v]);
        }
        return m;
    }

private:
    Vertex lowest_common_base(Vertex a, Vertex b) {
        std::fill(on_path_.begin(), on_path_.end(), false);
        for (;;) {
            a = base_[a];
            on_path_[a] = true;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (on_path_[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    Vertex find_augmenting_path(Vertex root) {
        std::fill(in_tree_.begin(), in_tree_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (Vertex i = 0; i < n_; ++i) base_[i] = i;
        in_tree_[root] = true;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex to : adj_[v]) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    const Vertex b = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (Vertex i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = b;
                        if (!in_tree_[i]) {
                            in_tree_[i] = true;
                            queue.push_back(i);
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    in_tree_[mate_[to]] = true;
                    queue.push_back(mate_[to]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<VertexSet> adj_;
    std::vector<Vertex> mate_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<char> in_tree_;
    std::vector<char> in_blossom_;
    std::vector<char> on_path_;
};

// ---------------------------------------------------------------------------
// DSATUR
// ---------------------------------------------------------------------------

using ForbiddenColours = std::array<Mask, kMaskCapacity>;

Vertex select_dsatur(const Graph& g, Mask uncoloured, const ForbiddenColours& forbidden) {
    Vertex best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for_each_bit(uncoloured, [&](Vertex v) {
        const int sat = std::popcount(forbidden[v]);
        const int deg = std::popcount(g.mask(v) & uncoloured);
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
            best = v;
            best_sat = sat;
            best_deg = deg;
        }
    });
    return best;
}

void assign(const Graph& g, Vertex v, int c, Mask uncoloured, ForbiddenColours& forbidden) {
    for_each_bit(g.mask(v) & uncoloured, [&](Vertex u) { forbidden[u] |= Mask{1} << c; });
}

Coloring normalized(std::vector<int> color) {
    std::vector<int> relabel(color.size(), -1);
    int next = 0;
    for (int& c : color) {
        if (c < 0) continue;
        if (relabel[c] < 0) relabel[c] = next++;
        c = relabel[c];
    }
    return {std::move(color)};
}

class ColoringSearch {
public:
    explicit ColoringSearch(const Graph& g) : g_(g), n_(g.order()) {}

    ChromaticResult run() {
        if (n_ == 0) return {0, {}};
        const CliqueResult clique = clique_number(g_);
        lower_ = clique.size;

        std::vector<int> colour(static_cast<std::size_t>(n_), -1);
        ForbiddenColours forbidden{};
        Mask uncoloured = g_.all_mask();
        int used = 0;
        for (Vertex v : clique.vertices) {
            uncoloured &= ~(Mask{1} << v);
            colour[v] = used;
            assign(g_, v, used, uncoloured, forbidden);
            ++used;
        }

        greedy(colour, uncoloured, forbidden, used);
        if (best_count_ > lower_) {
            current_ = colour;
            branch(uncoloured, used, forbidden);
        }
        return {best_count_, normalized(best_)};
    }

private:
    void greedy(std::vector<int> colour, Mask uncoloured, ForbiddenColours forbidden, int used) {
        while (uncoloured) {
            const Vertex v = select_dsatur(g_, uncoloured, forbidden);
            const int c = std::countr_one(forbidden[v]);
            uncoloured &= ~(Mask{1} << v);
            colour[v] = c;
            assign(g_, v, c, uncoloured, forbidden);
            used = std::max(used, c + 1);
        }
        best_count_ = used;
        best_ = std::move(colour);
    }

    void branch(Mask uncoloured, int used, const ForbiddenColours& forbidden) {
        if (uncoloured == 0) {
            if (used < best_count_) {
                best_count_ = used;
                best_ = current_;
            }
            return;
        }
        const Vertex v = select_dsatur(g_, uncoloured, forbidden);
        const Mask rest = uncoloured & ~(Mask{1} << v);
        const int limit = std::min(used + 1, best_count_ - 1);
        for (int c = 0; c < limit; ++c) {
            if ((forbidden[v] >> c) & 1u) continue;
            ForbiddenColours next = forbidden;
            assign(g_, v, c, rest, next);
            current_[v] = c;
            branch(rest, std::max(used, c + 1), next);
            if (best_count_ == lower_) break;
        }
        current_[v] = -1;
    }

    const Graph& g_;
    int n_;
    int lower_ = 0;
    int best_count_ = 0;
    std::vector<int> best_;
    std::vector<int> current_;
};

}  // namespace

int Coloring::color_count() const {
    std::vector<int> seen;
    for (int c : color) {
        if (c >= 0) seen.push_back(c);
    }
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

CliqueResult clique_number(const Graph& g) {
    require_solver_size(g, "clique_number");
    return CliqueSearch(g).run();
}

CliqueResult independence_number(const Graph& g) {
    require_solver_size(g, "independence_number");
    return CliqueSearch(complement(g)).run();
}

Matching maximum_matching(const Graph& g) { return BlossomMatcher(g).run(); }

ChromaticResult chromatic_number_bb(const Graph& g) {
    require_solver_size(g, "chromatic_number_bb");
    return ColoringSearch(g).run();
}

ChromaticResult chromatic_number_via_matching(const Graph& g) {
    if (auto w = find_3K1(g)) {
        throw ContainsThreeK1("chromatic_number_via_matching: independent triple {" + std::to_string(w->vertices[0]) +
                              "," + std::to_string(w->vertices[1]) + "," + std::to_string(w->vertices[2]) +
                              "} violates alpha <= 2");
    }
    const int n = g.order();
    const Matching m = maximum_matching(complement(g));
    std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
    for (auto [u, v] : m.edges) {
        mate[u] = v;
        mate[v] = u;
    }
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (colour[v] >= 0) continue;
        colour[v] = next;
        if (mate[v] >= 0) colour[mate[v]] = next;
        ++next;
    }
    return {n - static_cast<int>(m.size()), {std::move(colour)}};
}

bool validate_coloring(const Graph& g, const Coloring& c) noexcept {
    if (c.color.size() != static_cast<std::size_t>(g.order())) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (c.color[v] < 0) return false;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex u = v + 1; u < g.order(); ++u) {
            if (g.adjacent(u, v) && c.color[u] == c.color[v]) return false;
        }
    }
    return true;
}

InvariantReport invariant_report(const Graph& g) {
    require_solver_size(g, "invariant_report");
    InvariantReport r;
    r.n = g.order();
    r.m = g.edge_count();
    r.max_degree = g.max_degree();

    auto independent = independence_number(g);
    r.alpha = independent.size;
    r.independent_set = std::move(independent.vertices);

    auto clique = clique_number(g);
    r.omega = clique.size;
    r.clique = std::move(clique.vertices);

    auto bb = chromatic_number_bb(g);
    if (!validate_coloring(g, bb.coloring) || bb.coloring.color_count() != bb.chi) {
        throw ConsistencyError("chromatic_number_bb returned an invalid colouring");
    }
    if (r.alpha <= 2) {
        const auto via_matching = chromatic_number_via_matching(g);
        if (via_matching.chi != bb.chi || !validate_coloring(g, via_matching.coloring)) {
            throw ConsistencyError("chromatic engines disagree: branch-and-bound gives " + std::to_string(bb.chi) +
                                   ", matching gives " + std::to_string(via_matching.chi));
        }
        r.chi_cross_checked = true;
    }
    r.chi = bb.chi;
    r.coloring = std::move(bb.coloring);
    return r;
}

}  // namespace chibound
