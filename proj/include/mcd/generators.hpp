#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcd/graph.hpp"
#include "mcd/homomorphism.hpp"

namespace mcd {

Graph cycle_graph(int k);                       // k >= 3
Graph path_graph(int k);                        // k vertices, k-1 edges
Graph complete_graph(int k);
Graph complete_bipartite(int a, int b);
Graph turan_graph(int n, int r);                // balanced complete r-partite

// 8-cycle plus the four chords joining antipodal vertices (Wagner graph):
// 3-regular, triangle-free, and not homomorphic to a 5-cycle.
Graph mobius_ladder();

PartedGraph g1_graph(int n);                    // C4 blow-up [n/8,3n/8,n/8,3n/8], needs 8 | n
PartedGraph g2_graph(int n);                    // C5 blow-up [n/7,2n/7,n/7,n/7,2n/7], needs 7 | n

// Dispatcher for the CLI expressions: cycle(k), complete(k),
// complete_bipartite(a,b), turan(n,r), mobius_ladder, G1(n), G2(n).
Graph named_graph(const std::string& expr);

// Scans the uniformly shuffled candidate edges once, inserting each with
// probability p unless that would close a triangle. Same seed, same graph.
Graph random_triangle_free(int n, double p, std::uint64_t seed);

// Adds uniformly chosen admissible non-edges until every remaining non-edge
// has a common neighbor.
Graph complete_to_maximal_triangle_free(const Graph& g, std::uint64_t seed);

struct CorpusItem {
    enum class Provenance { named, blowup, random, enumerated };
    Graph graph;
    Provenance provenance = Provenance::enumerated;
    std::uint64_t seed = 0;      // random provenance
    int index = 0;               // position in the emitting stream
    std::string canonical;       // graph6 of the canonical form (filled by enumeration)
};

// One representative per isomorphism class, emitted as its canonical
// labeling in a deterministic order. Grown one vertex at a time from the
// (n-1)-vertex classes, with children deduplicated by canonical form;
// triangle-freeness restricts the new vertex's neighborhood to independent
// sets, which keeps the tree small.
std::vector<CorpusItem> enumerate_triangle_free(int n);   // 1 <= n <= 10
std::vector<CorpusItem> enumerate_all_graphs(int n);      // 1 <= n <= 8

// Isomorphism-invariant graph6 string: iterated degree/neighborhood
// refinement plus backtracking over the surviving cells. Equal strings
// exactly for isomorphic graphs.
std::string canonical_form(const Graph& g);

} // namespace mcd
