#include "trung/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trung/errors.hpp"

namespace trung {

namespace {

bool parse_two_ints(const std::string& line, long& a, long& b) {
    std::istringstream in(line);
    if (!(in >> a >> b)) return false;
    std::string rest;
    if (in >> rest) return false;
    return true;
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

EdgeListParse parse_edge_list(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;

    long n = -1;
    long m = -1;
    while (std::getline(stream, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        if (!parse_two_ints(line, n, m)) throw ParseError("expected header \"n m\"", line_no);
        break;
    }
    if (n < 0 && m < 0) throw ParseError("missing header \"n m\"");
    if (n < 0 || n > kMaxVertices)
        throw ParseError("vertex count " + std::to_string(n) + " outside 0..64", line_no);
    if (m < 0) throw ParseError("negative edge count", line_no);

    std::set<std::pair<long, long>> seen;
    std::vector<std::pair<int, int>> edges;
    bool duplicates = false;
    long read = 0;
    while (read < m) {
        if (!std::getline(stream, line)) throw ParseError("expected " + std::to_string(m) +
                                                          " edges, got " + std::to_string(read));
        ++line_no;
        if (blank_or_comment(line)) continue;
        long u = 0;
        long v = 0;
        if (!parse_two_ints(line, u, v)) throw ParseError("expected edge \"u v\"", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("index out of range", line_no);
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            duplicates = true;
        else
            edges.emplace_back(static_cast<int>(key.first), static_cast<int>(key.second));
        ++read;
    }
    while (std::getline(stream, line)) {
        ++line_no;
        if (!blank_or_comment(line)) throw ParseError("unexpected content after edges", line_no);
    }
    return EdgeListParse{Graph::from_edges(static_cast<int>(n), edges), duplicates};
}

std::string write_edge_list(const Graph& g) {
    auto edges = g.edges();  // already sorted (u < v, lexicographic)
    std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6MaxShort = 62;

std::size_t payload_bytes(int n) {
    return (static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2 + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
    if (record.empty()) throw ParseError("empty graph6 record");
    unsigned char first = static_cast<unsigned char>(record[0]);
    if (first == 126) throw ParseError("long-form graph6 records are not supported");
    if (first < kGraph6Offset || first > 126)
        throw ParseError("graph6 byte outside 63..126");
    int n = first - kGraph6Offset;
    if (n > kGraph6MaxShort) throw ParseError("graph6 vertex count above 62");

    std::size_t expected = n >= 2 ? payload_bytes(n) : 0;
    if (record.size() != 1 + expected)
        throw ParseError("graph6 record has wrong length for n=" + std::to_string(n));

    std::vector<std::pair<int, int>> edges;
    std::size_t bit_index = 0;
    std::size_t total_bits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    for (std::size_t k = 0; k < expected; ++k) {
        unsigned char byte = static_cast<unsigned char>(record[1 + k]);
        if (byte < kGraph6Offset || byte > 126) throw ParseError("graph6 byte outside 63..126");
        unsigned group = byte - kGraph6Offset;
        for (int bit = 5; bit >= 0; --bit, ++bit_index) {
            bool set = (group >> bit) & 1;
            if (bit_index >= total_bits) {
                if (set) throw ParseError("nonzero padding bits in graph6 record");
                continue;
            }
            if (!set) continue;
            // upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
            std::size_t idx = bit_index;
            int col = 1;
            while (idx >= static_cast<std::size_t>(col)) {
                idx -= static_cast<std::size_t>(col);
                ++col;
            }
            edges.emplace_back(static_cast<int>(idx), col);
        }
    }
    return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    if (n > kGraph6MaxShort)
        throw CapacityError("graph6 short form supports at most 62 vertices, got " +
                            std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(kGraph6Offset + n));
    if (n < 2) return out;

    std::size_t total_bits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    std::vector<bool> bits(total_bits, false);
    std::size_t base = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row)
            if (g.adjacent(row, col)) bits[base + static_cast<std::size_t>(row)] = true;
        base += static_cast<std::size_t>(col);
    }
    for (std::size_t k = 0; k < payload_bytes(n); ++k) {
        unsigned group = 0;
        for (int bit = 5; bit >= 0; --bit) {
            std::size_t idx = k * 6 + static_cast<std::size_t>(5 - bit);
            if (idx < total_bits && bits[idx]) group |= 1u << bit;
        }
        out.push_back(static_cast<char>(kGraph6Offset + group));
    }
    return out;
}

}  // namespace trung
