#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mcd/graph.hpp"

namespace mcd {

// assignment[source vertex] = target vertex
using HomMap = std::vector<VertexId>;

struct BlowupSpec {
    Graph pattern;
    std::vector<int> sizes;   // one per pattern vertex, all >= 1
};

// A graph together with its blow-up structure: part_of[v] = pattern vertex
// whose independent set contains v.
struct PartedGraph {
    Graph graph;
    BlowupSpec spec;
    std::vector<int> part_of;
};

// Exhaustive backtracking search for any edge-preserving map g -> h.
// Source vertices are tried in descending-degree order, target candidates in
// ascending index; a candidate dies as soon as an already-assigned source
// neighbor maps to a target non-neighbor.
std::optional<HomMap> find_homomorphism(const Graph& g, const Graph& h);

struct VerifyHom {
    bool valid = false;
    std::pair<VertexId, VertexId> bad_edge{-1, -1};   // first failing source edge
};
VerifyHom verify_homomorphism(const Graph& g, const Graph& h, const HomMap& map);

// Parts laid out consecutively in pattern-vertex order; parts joined
// completely when the pattern has the edge, not at all otherwise.
PartedGraph blow_up(const BlowupSpec& spec);

// Part sizes floor(n/k) or ceil(n/k), larger parts on lower pattern indices.
PartedGraph balanced_blow_up(const Graph& pattern, int n);

// Partition by identical open neighborhoods (non-adjacent twins) and return
// the quotient as the pattern. The quotient never has twins itself, so this
// inverts blow_up exactly when the input spec's pattern is twin-free.
// Cyclic quotients are rotated/reflected so the size sequence is
// lexicographically least.
PartedGraph recognize_blow_up(const Graph& g);

} // namespace mcd
