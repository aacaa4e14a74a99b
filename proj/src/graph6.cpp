#include <fstream>
#include <stdexcept>
#include <string>

#include "chromaroot/graph.hpp"

namespace chromaroot {

namespace {

[[noreturn]] void parse_fail(std::size_t offset, const std::string& what) {
    throw std::invalid_argument("graph6 parse error at byte " + std::to_string(offset) + ": " + what);
}

int checked_sextet(const std::string& s, std::size_t offset) {
    if (offset >= s.size()) parse_fail(offset, "unexpected end of input");
    unsigned char c = static_cast<unsigned char>(s[offset]);
    if (c < 63 || c > 126) parse_fail(offset, "byte outside printable graph6 range");
    return c - 63;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for graph6");
    }
    int acc = 0, bits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& s) {
    if (s.empty()) parse_fail(0, "empty input");
    std::size_t pos = 0;
    long n;
    int first = checked_sextet(s, pos++);
    if (first < 63) {
        n = first;
    } else {
        // first byte is '~': 3-byte (18-bit) vertex count
        long a = checked_sextet(s, pos++);
        if (a == 63) parse_fail(pos - 1, "graph6 counts above 2^18 are not supported");
        long b = checked_sextet(s, pos++);
        long c = checked_sextet(s, pos++);
        n = (a << 12) | (b << 6) | c;
    }
    if (n > VSet::kCapacity) parse_fail(0, "vertex count exceeds library capacity");
    Graph g(static_cast<int>(n));
    int acc = 0, bits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (bits == 0) {
                acc = checked_sextet(s, pos++);
                bits = 6;
            }
            if ((acc >> (bits - 1)) & 1) g.add_edge(row, col);
            --bits;
        }
    if (pos != s.size()) parse_fail(pos, "trailing data after adjacency bits");
    return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        graphs.push_back(graph6_decode(line));
    }
    return graphs;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace chromaroot
