#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcd {

using VertexId = int;

// graph6 size headers go up to 2^36, we stop at 2^16.
inline constexpr int kMaxVertices = 1 << 16;

// Undirected simple graph on vertices 0..n-1, immutable once built.
// Adjacency is one bit row per vertex, so N(u) & N(v) is a word-wise AND;
// the delta2 scan over all vertex pairs lives on this primitive.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);
    static Graph from_graph6(std::string_view text);

    int vertex_count() const { return n_; }
    long long edge_count() const { return e_; }
    int words_per_row() const { return words_; }

    bool has_edge(VertexId u, VertexId v) const {
        return (bits_[std::size_t(u) * words_ + (std::size_t(v) >> 6)] >> (v & 63)) & 1u;
    }

    int degree(VertexId v) const;

    std::span<const std::uint64_t> row(VertexId v) const {
        return {bits_.data() + std::size_t(v) * words_, std::size_t(words_)};
    }

    std::vector<VertexId> neighbors(VertexId v) const;
    std::vector<VertexId> common_neighbors(VertexId u, VertexId v) const;
    // |N(u) & N(v)| without materializing the set
    int common_degree(VertexId u, VertexId v) const;

    std::vector<std::pair<VertexId, VertexId>> edges() const;

    // Kept edges inside vs, vertices re-indexed in ascending original order.
    Graph induced_subgraph(std::vector<VertexId> vs) const;

    // new_label[v] = label of v in the permuted graph
    Graph permuted(const std::vector<VertexId>& new_label) const;

    std::string to_graph6() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    template <class F>
    void for_each_neighbor(VertexId v, F&& f) const {
        const std::uint64_t* r = bits_.data() + std::size_t(v) * words_;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t x = r[w];
            while (x) {
                f(VertexId(w * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    void check_vertex(VertexId v, const char* what) const;

private:
    int n_ = 0;
    int words_ = 0;
    long long e_ = 0;
    std::vector<std::uint64_t> bits_;

    explicit Graph(int n);
    void set_edge(VertexId u, VertexId v);
    void recount();
};

// Plain text interchange: "n m" header, then one "u v" line per edge.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace mcd
