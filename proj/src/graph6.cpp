#include "tightcut/graph6.hpp"

#include <algorithm>
#include <fstream>

namespace tightcut {

namespace {
constexpr char kBias = 63;
const std::string kHeader = ">>graph6<<";
}  // namespace

Multigraph from_graph6(const std::string& raw) {
    std::string line = raw;
    std::size_t base = 0;
    if (line.rfind(kHeader, 0) == 0) {
        line = line.substr(kHeader.size());
        base = kHeader.size();
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw ParseError("empty graph6 line", base);
    unsigned char c0 = static_cast<unsigned char>(line[0]);
    if (c0 == 126) throw ParseError("graph6 long form (n > 62) is not supported", base);
    if (c0 < 63 || c0 > 125) throw ParseError("malformed graph6 header byte", base);
    int n = c0 - kBias;
    Multigraph g(n);
    long need = static_cast<long>(n) * (n - 1) / 2;
    long bit = 0;
    std::size_t pos = 1;
    int x = 0, y = 1;
    while (bit < need) {
        if (pos >= line.size())
            throw ParseError("truncated graph6 bit vector", base + line.size());
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", base + pos);
        int v = c - kBias;
        for (int k = 5; k >= 0 && bit < need; --k, ++bit) {
            if ((v >> k) & 1) g.add_edge(x, y);
            if (++x == y) {
                x = 0;
                ++y;
            }
        }
        // padding bits of the final byte must be zero
        if (bit == need) {
            int pad = static_cast<int>(6 - (need % 6)) % 6;
            if (v & ((1 << pad) - 1))
                throw ParseError("nonzero padding bits", base + pos);
        }
        ++pos;
    }
    if (pos != line.size()) throw ParseError("trailing bytes after bit vector", base + pos);
    return g;
}

std::string to_graph6(const Multigraph& g) {
    if (!g.is_simple())
        throw GraphError("graph6 encodes simple graphs only; use the JSON edge-list format");
    auto vs = g.vertices();
    int n = static_cast<int>(vs.size());
    if (n > 62) throw GraphError("graph6 short form supports at most 62 vertices");
    std::vector<int> index(g.vertex_bound(), -1);
    for (int i = 0; i < n; ++i) index[vs[i]] = i;
    std::vector<char> bits;
    bits.reserve(n * (n - 1) / 2);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.ends(e);
        adj[index[u]][index[v]] = adj[index[v]][index[u]] = 1;
    }
    for (int y = 1; y < n; ++y)
        for (int x = 0; x < y; ++x) bits.push_back(adj[x][y]);
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (std::size_t k = 0; k < 6; ++k)
            v = (v << 1) | (i + k < bits.size() ? bits[i + k] : 0);
        out.push_back(static_cast<char>(v + kBias));
    }
    return out;
}

std::vector<Multigraph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open graph6 file: " + path);
    std::vector<Multigraph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

void write_graph6_file(const std::string& path, const std::vector<Multigraph>& graphs) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot open output file: " + path);
    for (const auto& g : graphs) out << to_graph6(g) << "\n";
}

}  // namespace tightcut
