#include "chibound/codec.hpp"

#include "chibound/errors.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

namespace chibound {
namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr std::uint64_t kShortLimit = 62;
constexpr std::uint64_t kMediumLimit = 258047;

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw InvalidInput("graph6: unexpected end of input");
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > kMaxByte) {
        throw InvalidInput("graph6: byte " + std::to_string(c) + " at position " +
                           std::to_string(pos) + " outside 63..126");
    }
    return c - kBias;
}

std::uint64_t read_big_endian(std::string_view text, std::size_t pos, int count) {
    std::uint64_t value = 0;
    for (int i = 0; i < count; ++i) value = (value << 6) | static_cast<std::uint64_t>(sextet(text, pos + i));
    return value;
}

void append_big_endian(std::string& out, std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + kBias));
}

std::string_view trim_line_end(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
    text = trim_line_end(text);
    if (text.empty()) throw InvalidInput("graph6: empty string");

    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = static_cast<std::uint64_t>(sextet(text, 0));
        pos = 1;
    } else if (text.size() > 1 && text[1] == '~') {
        if (text.size() < 8) throw InvalidInput("graph6: truncated 8-byte size header");
        n = read_big_endian(text, 2, 6);
        pos = 8;
        if (n <= kMediumLimit) throw InvalidInput("graph6: non-canonical 8-byte size header");
    } else {
        if (text.size() < 4) throw InvalidInput("graph6: truncated 4-byte size header");
        n = read_big_endian(text, 1, 3);
        pos = 4;
        if (n <= kShortLimit) throw InvalidInput("graph6: non-canonical 4-byte size header");
    }
    if (n > static_cast<std::uint64_t>(kMaxOrder)) {
        throw CapExceeded("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
    }

    const auto order = static_cast<int>(n);
    const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t payload = static_cast<std::size_t>((bit_count + 5) / 6);
    if (text.size() - pos < payload) {
        throw InvalidInput("graph6: payload has " + std::to_string(text.size() - pos) +
                           " bytes, expected " + std::to_string(payload));
    }
    if (text.size() - pos > payload) {
        throw InvalidInput("graph6: trailing garbage after " + std::to_string(pos + payload) + " bytes");
    }

    GraphBuilder b(order);
    std::uint64_t k = 0;
    for (Vertex j = 1; j < order; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = sextet(text, pos + static_cast<std::size_t>(k / 6));
            if ((byte >> (5 - static_cast<int>(k % 6))) & 1) b.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        const int last = sextet(text, pos + payload - 1);
        const int pad = 6 - static_cast<int>(k % 6);
        if (last & ((1 << pad) - 1)) throw InvalidInput("graph6: non-zero padding bits");
    }
    return std::move(b).build();
}

std::string graph6_encode(const Graph& g) {
    const auto n = static_cast<std::uint64_t>(g.order());
    std::string out;
    if (n <= kShortLimit) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= kMediumLimit) {
        out.push_back('~');
        append_big_endian(out, n, 3);
    } else {
        out.append("~~");
        append_big_endian(out, n, 6);
    }

    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < g.order(); ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph dimacs_read(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    auto fail = [&](const std::string& why) -> InvalidInput {
        return InvalidInput("dimacs line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string format;
            long long nv = 0;
            long long ne = 0;
            if (n >= 0) throw fail("duplicate problem line");
            if (!(ls >> format >> nv >> ne)) throw fail("malformed problem line");
            if (format != "edge" && format != "col") throw fail("unsupported format '" + format + "'");
            if (nv < 0 || nv > kMaxOrder) throw fail("vertex count out of range");
            n = static_cast<int>(nv);
        } else if (tag == "e") {
            if (n < 0) throw fail("edge before problem line");
            long long u = 0;
            long long v = 0;
            if (!(ls >> u >> v)) throw fail("malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n) throw fail("vertex index out of range 1.." + std::to_string(n));
            if (u == v) throw fail("self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw fail("unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw InvalidInput("dimacs: missing problem line");
    return Graph(n, edges);
}

std::string dimacs_write(const Graph& g) {
    const auto edges = g.edges();
    std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

}  // namespace chibound
