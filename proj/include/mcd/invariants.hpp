#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcd/graph.hpp"

namespace mcd {

// min over non-edges xy of |N(x) & N(y)|; a graph without non-edges
// (complete) gets the Infinite value, which beats every finite threshold.
// That convention is decided here and nowhere else.
class CommonDegree {
public:
    static CommonDegree infinite() { CommonDegree c; c.inf_ = true; return c; }
    static CommonDegree of(long long v) { CommonDegree c; c.v_ = v; return c; }

    bool is_infinite() const { return inf_; }
    long long value() const;                       // throws when infinite

    bool greater_than(long long t) const { return inf_ || v_ > t; }
    bool at_least(long long t) const { return inf_ || v_ >= t; }
    bool equals(long long t) const { return !inf_ && v_ == t; }

    bool operator==(const CommonDegree&) const = default;

    std::string to_string() const { return inf_ ? "infinite" : std::to_string(v_); }

private:
    bool inf_ = false;
    long long v_ = 0;
};

int min_degree(const Graph& g);                    // throws on empty graph
CommonDegree min_common_degree(const Graph& g);    // throws on n < 2

struct TriangleCheck {
    bool triangle_free = true;
    std::array<VertexId, 3> witness{};             // ascending triple when present
};
TriangleCheck is_triangle_free(const Graph& g);

// None iff bipartite; otherwise a shortest odd cycle. Tie-break: witnesses
// are normalized (least vertex first, then the smaller of its two cycle
// neighbors); odd girth 3 and 5 return the overall lexicographically least
// witness, longer girths the least among the BFS-derived candidates.
std::optional<std::vector<VertexId>> shortest_odd_cycle(const Graph& g);

struct BipartiteCheck {
    bool bipartite = false;
    std::vector<signed char> coloring;             // 0/1 per vertex when bipartite
    std::vector<VertexId> odd_cycle;               // witness when not
};
BipartiteCheck is_bipartite(const Graph& g);

struct C5Check {
    bool c5_free = true;
    std::array<VertexId, 5> witness{};             // cycle order, not necessarily induced
};
C5Check is_c5_free(const Graph& g);

struct MaximalityCheck {
    bool maximal = false;
    std::pair<VertexId, VertexId> addable{-1, -1}; // non-edge closing no triangle
};
MaximalityCheck is_maximal_triangle_free(const Graph& g);   // throws if g has a triangle

struct SubgraphCheck {
    bool found = false;
    std::vector<VertexId> embedding;               // embedding[pattern vertex] = host vertex
};
// Injective map preserving pattern edges (subgraph, not induced).
SubgraphCheck contains_subgraph(const Graph& g, const Graph& pattern);

} // namespace mcd
