#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcd/graph.hpp"

namespace mcd::ref {

// Naive serial baselines used as test oracles and benchmark reference.
// They share only the Graph data type with the main library; every
// algorithm here is the obvious loop over an explicit bool matrix, kept
// deliberately independent of the bit-row kernels it cross-checks.

std::vector<std::vector<bool>> adjacency_matrix(const Graph& g);

int min_degree(const Graph& g);

// nullopt when the graph has no non-edge
std::optional<long long> min_common_degree(const Graph& g);

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v);

bool triangle_free(const Graph& g);

bool has_c5(const Graph& g);

bool bipartite(const Graph& g);

// 0 when bipartite, otherwise the length of the shortest odd cycle,
// found by exhaustive path search over increasing odd lengths
int odd_girth(const Graph& g);

// Independent graph6 decoder (short size header, n <= 62).
Graph decode_graph6(const std::string& s);

// Isomorphism by degree-pruned backtracking over vertex bijections.
bool isomorphic(const Graph& a, const Graph& b);

// Number of isomorphism classes of triangle-free graphs on n vertices by
// enumerating all 2^(n(n-1)/2) labeled graphs and deduplicating with the
// backtracking isomorphism test. Practical for n <= 7.
long long count_triangle_free_classes(int n);

// Number of isomorphism classes of all simple graphs on n vertices via the
// orbit-counting (Burnside) sum over all n! permutations. Exact for n <= 8.
long long count_all_classes(int n);

} // namespace mcd::ref
