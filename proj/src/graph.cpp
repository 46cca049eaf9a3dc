#include "mcd/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mcd {

Graph::Graph(int n) : n_(n), words_(n == 0 ? 0 : (n + 63) / 64) {
    bits_.assign(std::size_t(n_) * words_, 0);
}

void Graph::check_vertex(VertexId v, const char* what) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range 0.." + std::to_string(n_ - 1));
}

void Graph::set_edge(VertexId u, VertexId v) {
    bits_[std::size_t(u) * words_ + (std::size_t(v) >> 6)] |= std::uint64_t(1) << (v & 63);
    bits_[std::size_t(v) * words_ + (std::size_t(u) >> 6)] |= std::uint64_t(1) << (u & 63);
}

void Graph::recount() {
    long long total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    e_ = total / 2;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("from_edge_list: vertex count out of range");
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u, "from_edge_list");
        g.check_vertex(v, "from_edge_list");
        if (u == v)
            throw std::invalid_argument("from_edge_list: loop edge at vertex " + std::to_string(u));
        g.set_edge(u, v);
    }
    g.recount();
    return g;
}

int Graph::degree(VertexId v) const {
    check_vertex(v, "degree");
    int d = 0;
    for (std::uint64_t w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    check_vertex(v, "neighbors");
    std::vector<VertexId> out;
    for_each_neighbor(v, [&](VertexId u) { out.push_back(u); });
    return out;
}

std::vector<VertexId> Graph::common_neighbors(VertexId u, VertexId v) const {
    check_vertex(u, "common_neighbors");
    check_vertex(v, "common_neighbors");
    if (u == v) throw std::invalid_argument("common_neighbors: u == v");
    std::vector<VertexId> out;
    auto ru = row(u), rv = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t x = ru[w] & rv[w];
        while (x) {
            out.push_back(VertexId(w * 64 + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

int Graph::common_degree(VertexId u, VertexId v) const {
    auto ru = row(u), rv = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(ru[w] & rv[w]);
    return c;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(std::size_t(e_));
    for (VertexId u = 0; u < n_; ++u)
        for_each_neighbor(u, [&](VertexId v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::induced_subgraph(std::vector<VertexId> vs) const {
    for (VertexId v : vs) check_vertex(v, "induced_subgraph");
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    Graph g(int(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (has_edge(vs[i], vs[j])) g.set_edge(int(i), int(j));
    g.recount();
    return g;
}

Graph Graph::permuted(const std::vector<VertexId>& new_label) const {
    if (int(new_label.size()) != n_)
        throw std::invalid_argument("permuted: label table size mismatch");
    std::vector<char> seen(n_, 0);
    for (VertexId l : new_label) {
        if (l < 0 || l >= n_ || seen[l])
            throw std::invalid_argument("permuted: not a permutation");
        seen[l] = 1;
    }
    Graph g(n_);
    for (VertexId u = 0; u < n_; ++u)
        for_each_neighbor(u, [&](VertexId v) {
            if (u < v) g.set_edge(new_label[u], new_label[v]);
        });
    g.recount();
    return g;
}

// ---- graph6 ----
//
// Published format: size header (n+63 for n<=62, '~' + 18 bits for larger),
// then the upper triangle in column-major order packed into 6-bit groups,
// each group emitted as group+63.

std::string Graph::to_graph6() const {
    std::string out;
    if (n_ <= 62) {
        out.push_back(char(n_ + 63));
    } else {
        out.push_back('~');
        out.push_back(char(63 + ((n_ >> 12) & 63)));
        out.push_back(char(63 + ((n_ >> 6) & 63)));
        out.push_back(char(63 + (n_ & 63)));
    }
    int bit = 5;
    int cur = 0;
    for (VertexId j = 1; j < n_; ++j)
        for (VertexId i = 0; i < j; ++i) {
            if (has_edge(i, j)) cur |= 1 << bit;
            if (--bit < 0) {
                out.push_back(char(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    if (bit != 5) out.push_back(char(cur + 63));
    return out;
}

Graph Graph::from_graph6(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    auto val = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: invalid character at position " + std::to_string(i));
        return c - 63;
    };

    long long n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = val(0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated size header");
        n = (static_cast<long long>(val(1)) << 12) | (static_cast<long long>(val(2)) << 6) | val(3);
        pos = 4;
    } else {
        if (text.size() < 8) throw std::invalid_argument("graph6: truncated size header");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
        pos = 8;
    }
    if (n > kMaxVertices)
        throw std::invalid_argument("graph6: vertex count " + std::to_string(n) + " exceeds supported maximum");

    long long need_bits = n * (n - 1) / 2;
    std::size_t need_bytes = std::size_t((need_bits + 5) / 6);
    if (text.size() - pos < need_bytes) throw std::invalid_argument("graph6: truncated bit payload");
    if (text.size() - pos > need_bytes) throw std::invalid_argument("graph6: trailing characters");

    Graph g{int(n)};
    long long k = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i, ++k) {
            int group = val(pos + std::size_t(k / 6));
            if ((group >> (5 - k % 6)) & 1) g.set_edge(i, j);
        }
    // padding bits must be zero
    if (need_bits % 6 != 0) {
        int last = val(pos + need_bytes - 1);
        int pad = int(6 - need_bits % 6);
        if (last & ((1 << pad) - 1)) throw std::invalid_argument("graph6: nonzero padding bits");
    }
    g.recount();
    return g;
}

// ---- edge-list text ----

Graph read_edge_list(std::istream& in) {
    auto next_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) throw std::invalid_argument("edge list: missing \"n m\" header");
    std::istringstream hdr(line);
    long long n = -1, m = -1;
    if (!(hdr >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list: malformed \"n m\" header");
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(std::size_t(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line)) throw std::invalid_argument("edge list: fewer edge lines than header claims");
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("edge list: malformed edge line: " + line);
        edges.emplace_back(VertexId(u), VertexId(v));
    }
    return Graph::from_edge_list(int(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace mcd
