#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcd/graph.hpp"
#include "mcd/homomorphism.hpp"
#include "mcd/invariants.hpp"

namespace mcd {

// The vertex classes around an induced 5-cycle c0..c4:
//   d[i] = N(c[i-1]) & N(c[i+1])   (indices mod 5, c[i] lands in d[i])
// and w[i] = vertices outside the d's whose d-neighborhood pattern is
// exactly {d[i-1], d[i+1]}. Vertices with any other pattern are kept in
// `unclassified` with the structural rule they break, so the same
// decomposition doubles as a counterexample detector below the delta2
// threshold.
struct C5Decomposition {
    std::array<VertexId, 5> cycle{};
    std::array<std::vector<VertexId>, 5> d;
    std::array<std::vector<VertexId>, 5> w;
    struct Leftover {
        VertexId v;
        std::string reason;   // "no neighbors in two d-classes" | "neighbors in consecutive d-classes"
    };
    std::vector<Leftover> unclassified;
    bool clean() const { return unclassified.empty(); }
};

// Requires a triangle-free host and an induced 5-cycle of it.
C5Decomposition c5_decomposition(const Graph& g, const std::array<VertexId, 5>& cycle);

// All induced 5-cycles, each normalized (least vertex first, second < last).
std::vector<std::array<VertexId, 5>> induced_c5_list(const Graph& g);

struct C5HomResult {
    enum class Kind { bipartite_map, c5_blocks, failure };
    Kind kind = Kind::failure;
    bool hypothesis = false;   // n >= 8 and delta2 > floor(n/8); construction runs either way
    HomMap map;                // target C5 has vertices 0..4, edges i ~ i+1 mod 5
    std::optional<C5Decomposition> decomposition;
    std::string failure;
};

// Bipartite graphs map onto the edge (0,1); otherwise the shortest odd cycle
// (a 5-cycle whenever the construction can proceed) is decomposed and each
// block d[i] + w[i] is sent to i. Throws if the input has a triangle.
C5HomResult construct_c5_homomorphism(const Graph& g);

struct TheoremVerdict {
    std::string statement;
    bool hypothesis = false;
    bool conclusion = false;
    nlohmann::json detail;
    bool violation() const { return hypothesis && !conclusion; }
};

// triangle-free, n >= 5, delta2 > floor(n/5)  =>  bipartite
TheoremVerdict check_bipartite_theorem(const Graph& g);

// triangle-free, n >= 8, delta2 > floor(n/8)  =>  homomorphic to C5
// (constructive route first, exhaustive search as fallback before a verdict)
TheoremVerdict check_c5_hom_theorem(const Graph& g);

// C5-free, n >= 5, delta2 >= 3  =>  bipartite
TheoremVerdict check_c5free_theorem(const Graph& g);

// maximal triangle-free, delta > (1/3 + a)n  =>  delta2 > 3an, for rational
// a = alpha_num/alpha_den in (0, 2/3); comparisons are exact integer
// cross-multiplications
TheoremVerdict check_lemma_min_degree_implies_delta2(const Graph& g, long long alpha_num,
                                                     long long alpha_den);

// delta2 >= 1 and non-bipartite  =>  shortest odd cycle has length 3 or 5
TheoremVerdict check_odd_girth_lemma(const Graph& g);

// triangle-free, C5-free, delta2 >= 1  =>  bipartite
TheoremVerdict check_c3c5free_corollary(const Graph& g);

// triangle-free and containing the Mobius ladder as a subgraph
//   =>  delta2 <= floor(n/8)
TheoremVerdict check_mobius_bound_lemma(const Graph& g);

// For every induced 5-cycle of a triangle-free graph: the five d-classes are
// pairwise disjoint, each is independent, and edges inside their union run
// only between consecutive classes.
TheoremVerdict check_d_structure(const Graph& g);

struct DisjointnessVerdict {
    bool preconditions_ok = false;
    std::string precondition_failure;
    bool disjoint = false;
    std::vector<VertexId> overlap;   // common(x1,x2) & common(y1,y2), expected empty
};

// In a triangle-free graph with non-edges x1x2 and y1y2 joined by at least
// one xi-yj edge, N(x1) & N(x2) and N(y1) & N(y2) cannot meet.
DisjointnessVerdict check_disjointness_lemma(const Graph& g, VertexId x1, VertexId x2,
                                             VertexId y1, VertexId y2);

enum class EqualityCase { none, balanced_c5, balanced_mobius };

struct EqualityResult {
    EqualityCase kind = EqualityCase::none;
    bool structure_confirmed = false;   // recognition matched the expected blow-up
    std::string detail;
};

// delta2 == n/5 with 5 | n and non-bipartite should be a balanced C5
// blow-up; delta2 == n/8 with 8 | n and no homomorphism to C5 should be a
// balanced Mobius-ladder blow-up. Requires a triangle-free input.
EqualityResult check_equality_case(const Graph& g);

} // namespace mcd
