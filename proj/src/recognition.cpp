#include "chibound/recognition.hpp"

#include <algorithm>

namespace chibound {
namespace {

std::optional<Witness> k1c4_masks(const Graph& g) {
    const int n = g.order();
    for (Vertex h = 0; h < n; ++h) {
        const Mask nh = g.mask(h);
        Mask as = nh;
        while (as) {
            const Vertex a = std::countr_zero(as);
            as &= as - 1;
            // c > a, in N(h), not adjacent to a
            Mask cs = as & ~g.mask(a);
            while (cs) {
                const Vertex c = std::countr_zero(cs);
                cs &= cs - 1;
                Mask common = nh & g.mask(a) & g.mask(c);
                while (common) {
                    const Vertex b = std::countr_zero(common);
                    common &= common - 1;
                    const Mask ds = common & ~g.mask(b);
                    if (ds) {
                        const Vertex d = std::countr_zero(ds);
                        return Witness{WitnessKind::K1PlusC4, {h, a, b, c, d}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Witness> k1c4_generic(const Graph& g) {
    const int n = g.order();
    VertexSet common;
    for (Vertex h = 0; h < n; ++h) {
        const VertexSet nh = g.neighbors(h);
        for (std::size_t ia = 0; ia < nh.size(); ++ia) {
            const Vertex a = nh[ia];
            for (std::size_t ic = ia + 1; ic < nh.size(); ++ic) {
                const Vertex c = nh[ic];
                if (g.adjacent(a, c)) continue;
                common.clear();
                for (Vertex x : nh) {
                    if (g.adjacent(x, a) && g.adjacent(x, c)) common.push_back(x);
                }
                for (std::size_t ib = 0; ib < common.size(); ++ib) {
                    for (std::size_t id = ib + 1; id < common.size(); ++id) {
                        if (!g.adjacent(common[ib], common[id])) {
                            return Witness{WitnessKind::K1PlusC4, {h, a, common[ib], c, common[id]}};
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(WitnessKind kind) noexcept {
    return kind == WitnessKind::ThreeK1 ? "3K1" : "K1+C4";
}

std::optional<Witness> find_3K1(const Graph& g) {
    const int n = g.order();
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) continue;
            for (Vertex k = j + 1; k < n; ++k) {
                if (!g.adjacent(i, k) && !g.adjacent(j, k)) return Witness{WitnessKind::ThreeK1, {i, j, k}};
            }
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_K1_plus_C4(const Graph& g) {
    return g.order() <= kMaskCapacity ? k1c4_masks(g) : k1c4_generic(g);
}

MembershipVerdict classify_membership(const Graph& g) {
    if (auto w = find_3K1(g)) return {false, std::move(w)};
    if (auto w = find_K1_plus_C4(g)) return {false, std::move(w)};
    return {true, std::nullopt};
}

bool is_member(const Graph& g) { return classify_membership(g).member; }

bool verify_witness(const Graph& g, const Witness& w) noexcept {
    const auto& vs = w.vertices;
    const std::size_t expected = w.kind == WitnessKind::ThreeK1 ? 3 : 5;
    if (vs.size() != expected) return false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!g.contains(vs[i])) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (vs[i] == vs[j]) return false;
        }
    }
    if (w.kind == WitnessKind::ThreeK1) {
        return !g.adjacent(vs[0], vs[1]) && !g.adjacent(vs[0], vs[2]) && !g.adjacent(vs[1], vs[2]);
    }
    const Vertex hub = vs[0];
    for (std::size_t i = 1; i < 5; ++i) {
        if (!g.adjacent(hub, vs[i])) return false;
    }
    for (std::size_t i = 0; i < 4; ++i) {
        if (!g.adjacent(vs[1 + i], vs[1 + (i + 1) % 4])) return false;
    }
    return !g.adjacent(vs[1], vs[3]) && !g.adjacent(vs[2], vs[4]);
}

}  // namespace chibound
