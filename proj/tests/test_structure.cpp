#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mcd/generators.hpp"
#include "mcd/reference.hpp"
#include "mcd/rng.hpp"
#include "mcd/structure.hpp"

using namespace mcd;

TEST_CASE("c5_decomposition of C5 itself") {
    Graph c5 = cycle_graph(5);
    auto dec = c5_decomposition(c5, {0, 1, 2, 3, 4});
    for (int i = 0; i < 5; ++i) {
        CHECK(dec.d[i] == std::vector<VertexId>{i});
        CHECK(dec.w[i].empty());
    }
    CHECK(dec.clean());
}

TEST_CASE("c5_decomposition of blow-ups: d-classes are the parts") {
    auto parted = balanced_blow_up(cycle_graph(5), 10);
    // one vertex per part forms an induced C5
    auto dec = c5_decomposition(parted.graph, {0, 2, 4, 6, 8});
    for (int i = 0; i < 5; ++i) {
        CHECK(dec.d[i].size() == 2);
        CHECK(dec.w[i].empty());
        for (VertexId v : dec.d[i]) CHECK(parted.part_of[v] == i);
    }
    CHECK(dec.clean());

    auto g2 = g2_graph(7);
    std::array<VertexId, 5> cyc{};
    for (int i = 0, seen = -1; i < 7; ++i)
        if (g2.part_of[i] != seen) {
            seen = g2.part_of[i];
            cyc[seen] = i;
        }
    auto dec2 = c5_decomposition(g2.graph, cyc);
    std::multiset<std::size_t> sizes;
    for (int i = 0; i < 5; ++i) {
        sizes.insert(dec2.d[i].size());
        CHECK(dec2.w[i].empty());
    }
    CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 2, 2});
    CHECK(dec2.clean());
}

TEST_CASE("c5_decomposition rejects bad input") {
    Graph c5 = cycle_graph(5);
    CHECK_THROWS_AS(c5_decomposition(c5, {0, 1, 2, 4, 3}), std::invalid_argument);   // not a cycle order
    CHECK_THROWS_AS(c5_decomposition(c5, {0, 1, 2, 3, 3}), std::invalid_argument);   // repeat
    Graph k5 = complete_graph(5);
    CHECK_THROWS_AS(c5_decomposition(k5, {0, 1, 2, 3, 4}), std::invalid_argument);   // triangles
}

TEST_CASE("induced_c5_list") {
    CHECK(induced_c5_list(cycle_graph(5)).size() == 1);
    CHECK(induced_c5_list(complete_bipartite(4, 4)).empty());
    // one choice per part: 2^5 induced five-cycles in the balanced blow-up
    CHECK(induced_c5_list(balanced_blow_up(cycle_graph(5), 10).graph).size() == 32);
    for (const auto& cyc : induced_c5_list(mobius_ladder())) {
        CHECK(cyc[0] < cyc[1]);
        CHECK(cyc[1] < cyc[4]);
    }
}

namespace {

// independent count: a 5-subset induces a C5 exactly when it has 5 edges
// and every vertex has degree 2 inside it
long long count_induced_c5_subsets(const Graph& g) {
    const int n = g.vertex_count();
    long long count = 0;
    std::vector<VertexId> pick(5);
    for (pick[0] = 0; pick[0] < n; ++pick[0])
        for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
            for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
                for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3])
                    for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4]) {
                        Graph sub = g.induced_subgraph(pick);
                        if (sub.edge_count() != 5) continue;
                        bool all_two = true;
                        for (int v = 0; v < 5; ++v)
                            if (sub.degree(v) != 2) { all_two = false; break; }
                        if (all_two) ++count;   // 5 edges, 2-regular on 5 vertices: one cycle
                    }
    return count;
}

} // namespace

TEST_CASE("induced_c5_list finds every induced five-cycle") {
    for (int n = 5; n <= 8; ++n)
        for (const auto& item : enumerate_all_graphs(n))
            CHECK(static_cast<long long>(induced_c5_list(item.graph).size()) ==
                  count_induced_c5_subsets(item.graph));
}

TEST_CASE("construct_c5_homomorphism on bipartite input") {
    auto res = construct_c5_homomorphism(complete_bipartite(4, 4));
    CHECK(res.kind == C5HomResult::Kind::bipartite_map);
    CHECK(res.hypothesis);   // delta2 = 4 > floor(8/8)
    CHECK(verify_homomorphism(complete_bipartite(4, 4), cycle_graph(5), res.map).valid);
    for (VertexId t : res.map) CHECK((t == 0 || t == 1));
}

TEST_CASE("construct_c5_homomorphism on the balanced C5 blow-up") {
    auto parted = balanced_blow_up(cycle_graph(5), 10);
    auto res = construct_c5_homomorphism(parted.graph);
    REQUIRE(res.kind == C5HomResult::Kind::c5_blocks);
    CHECK(res.hypothesis);   // delta2 = 2 > floor(10/8) = 1
    CHECK(verify_homomorphism(parted.graph, cycle_graph(5), res.map).valid);
    // the block map refines the part structure
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            if (parted.part_of[u] == parted.part_of[v]) CHECK(res.map[u] == res.map[v]);
}

TEST_CASE("construct_c5_homomorphism classifies w-vertices") {
    // a vertex hanging off non-rep vertices of parts 0 and 2 lands in w[1]
    auto parted = balanced_blow_up(cycle_graph(5), 10);
    auto edges = parted.graph.edges();
    edges.emplace_back(10, 1);
    edges.emplace_back(10, 5);
    Graph g = Graph::from_edge_list(11, edges);
    auto res = construct_c5_homomorphism(g);
    REQUIRE(res.kind == C5HomResult::Kind::c5_blocks);
    CHECK(verify_homomorphism(g, cycle_graph(5), res.map).valid);
    std::size_t w_total = 0;
    for (int i = 0; i < 5; ++i) w_total += res.decomposition->w[i].size();
    CHECK(w_total == 1);

    // anchored on two consecutive parts instead (dropping the edge between
    // the anchors to stay triangle-free): no map to C5 exists, and the
    // decomposition reports the broken rule instead of inventing a block
    std::vector<std::pair<VertexId, VertexId>> bad_edges;
    for (auto [u, v] : parted.graph.edges())
        if (!(u == 1 && v == 3)) bad_edges.emplace_back(u, v);
    bad_edges.emplace_back(10, 1);
    bad_edges.emplace_back(10, 3);
    Graph bad = Graph::from_edge_list(11, bad_edges);
    REQUIRE(is_triangle_free(bad).triangle_free);
    auto bad_res = construct_c5_homomorphism(bad);
    CHECK(bad_res.kind == C5HomResult::Kind::failure);
    CHECK(bad_res.failure.find("consecutive") != std::string::npos);
    CHECK_FALSE(find_homomorphism(bad, cycle_graph(5)).has_value());
}

TEST_CASE("construction succeeds on every hypothesis-satisfying blow-up tried") {
    std::vector<std::vector<int>> size_table{
        {2, 2, 2, 2, 2}, {3, 2, 3, 2, 3}, {4, 4, 4, 4, 4}, {2, 3, 4, 3, 2}, {5, 2, 2, 5, 2}};
    for (const auto& sizes : size_table) {
        Graph g = blow_up({cycle_graph(5), sizes}).graph;
        auto res = construct_c5_homomorphism(g);
        if (res.hypothesis) {
            REQUIRE(res.kind != C5HomResult::Kind::failure);
            CHECK(verify_homomorphism(g, cycle_graph(5), res.map).valid);
        }
    }
}

TEST_CASE("construct_c5_homomorphism failures are honest") {
    auto hm = construct_c5_homomorphism(mobius_ladder());
    CHECK(hm.kind == C5HomResult::Kind::failure);
    CHECK_FALSE(hm.hypothesis);   // delta2 = 1 = floor(8/8)
    CHECK_FALSE(hm.failure.empty());
    CHECK_FALSE(find_homomorphism(mobius_ladder(), cycle_graph(5)).has_value());

    // odd girth 7: no 5-cycle to decompose, yet a map exists (oracle finds it)
    auto c7 = construct_c5_homomorphism(cycle_graph(7));
    CHECK(c7.kind == C5HomResult::Kind::failure);
    CHECK(find_homomorphism(cycle_graph(7), cycle_graph(5)).has_value());

    CHECK_THROWS_AS(construct_c5_homomorphism(complete_graph(3)), std::invalid_argument);
}

TEST_CASE("check_bipartite_theorem") {
    auto k55 = check_bipartite_theorem(complete_bipartite(5, 5));
    CHECK(k55.hypothesis);   // delta2 = 5 > 2
    CHECK(k55.conclusion);
    CHECK_FALSE(k55.violation());

    // delta2 equals the floor: hypothesis must not fire
    auto b10 = check_bipartite_theorem(balanced_blow_up(cycle_graph(5), 10).graph);
    CHECK_FALSE(b10.hypothesis);

    auto c5 = check_bipartite_theorem(cycle_graph(5));
    CHECK_FALSE(c5.hypothesis);   // 1 is not > floor(5/5)
}

TEST_CASE("check_c5_hom_theorem") {
    auto b10 = check_c5_hom_theorem(balanced_blow_up(cycle_graph(5), 10).graph);
    CHECK(b10.hypothesis);
    CHECK(b10.conclusion);
    CHECK(b10.detail["route"] == "c5-blocks");

    auto hm = check_c5_hom_theorem(mobius_ladder());
    CHECK_FALSE(hm.hypothesis);
    CHECK_FALSE(hm.conclusion);

    auto k44 = check_c5_hom_theorem(complete_bipartite(4, 4));
    CHECK(k44.hypothesis);
    CHECK(k44.conclusion);
    CHECK(k44.detail["route"] == "bipartite");

    // falls back to the oracle when the construction cannot run
    auto c7 = check_c5_hom_theorem(cycle_graph(7));
    CHECK_FALSE(c7.hypothesis);   // delta2 = 0
    CHECK(c7.conclusion);
    CHECK(c7.detail["route"] == "oracle");
}

TEST_CASE("check_c5free_theorem") {
    auto k33 = check_c5free_theorem(complete_bipartite(3, 3));
    CHECK(k33.hypothesis);   // C5-free, delta2 = 3
    CHECK(k33.conclusion);

    auto k4 = check_c5free_theorem(complete_graph(4));
    CHECK_FALSE(k4.hypothesis);   // n < 5

    auto c5 = check_c5free_theorem(cycle_graph(5));
    CHECK_FALSE(c5.hypothesis);   // contains C5
}

TEST_CASE("check_lemma_min_degree_implies_delta2") {
    // boundary: delta(C5) = 2 is not > (1/3 + 1/15) * 5 = 2
    auto c5 = check_lemma_min_degree_implies_delta2(cycle_graph(5), 1, 15);
    CHECK_FALSE(c5.hypothesis);

    auto k55 = check_lemma_min_degree_implies_delta2(complete_bipartite(5, 5), 1, 15);
    CHECK(k55.hypothesis);   // maximal, delta = 5 > 4
    CHECK(k55.conclusion);   // delta2 = 5 > 2

    auto p4 = check_lemma_min_degree_implies_delta2(path_graph(4), 1, 15);
    CHECK_FALSE(p4.hypothesis);   // not maximal

    CHECK_THROWS_AS(check_lemma_min_degree_implies_delta2(cycle_graph(5), 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_lemma_min_degree_implies_delta2(cycle_graph(5), -1, 3), std::invalid_argument);
}

TEST_CASE("check_disjointness_lemma") {
    Graph c5 = cycle_graph(5);
    auto v = check_disjointness_lemma(c5, 0, 2, 1, 3);
    CHECK(v.preconditions_ok);
    CHECK(v.disjoint);

    Graph hm = mobius_ladder();
    auto w = check_disjointness_lemma(hm, 0, 2, 1, 3);
    CHECK(w.preconditions_ok);
    CHECK(w.disjoint);

    auto bad = check_disjointness_lemma(c5, 0, 1, 2, 4);
    CHECK_FALSE(bad.preconditions_ok);   // 01 is an edge
    auto far = check_disjointness_lemma(Graph::from_edge_list(6, {{0, 1}, {2, 3}}), 0, 2, 4, 5);
    CHECK_FALSE(far.preconditions_ok);   // no cross edge
}

TEST_CASE("disjointness on random triangle-free instances") {
    std::mt19937 pick(99);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_triangle_free(12, 0.35, 7000 + trial);
        // sample tuples until the preconditions hold
        for (int attempt = 0; attempt < 50; ++attempt) {
            int x1 = int(uniform_below(pick, 12)), x2 = int(uniform_below(pick, 12));
            int y1 = int(uniform_below(pick, 12)), y2 = int(uniform_below(pick, 12));
            auto v = check_disjointness_lemma(g, x1, x2, y1, y2);
            if (!v.preconditions_ok) continue;
            CHECK(v.disjoint);
            // oracle: recompute both common neighborhoods naively
            auto xs = ref::common_neighbors(g, x1, x2);
            auto ys = ref::common_neighbors(g, y1, y2);
            for (VertexId a : xs)
                CHECK(std::find(ys.begin(), ys.end(), a) == ys.end());
            ++checked;
            break;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("check_equality_case") {
    auto c5 = check_equality_case(balanced_blow_up(cycle_graph(5), 10).graph);
    CHECK(c5.kind == EqualityCase::balanced_c5);
    CHECK(c5.structure_confirmed);

    auto hm16 = check_equality_case(blow_up({mobius_ladder(), std::vector<int>(8, 2)}).graph);
    CHECK(hm16.kind == EqualityCase::balanced_mobius);
    CHECK(hm16.structure_confirmed);

    auto hm24 = check_equality_case(blow_up({mobius_ladder(), std::vector<int>(8, 3)}).graph);
    CHECK(hm24.kind == EqualityCase::balanced_mobius);
    CHECK(hm24.structure_confirmed);

    auto k44 = check_equality_case(complete_bipartite(4, 4));
    CHECK(k44.kind == EqualityCase::none);

    CHECK_THROWS_AS(check_equality_case(complete_graph(3)), std::invalid_argument);
}

TEST_CASE("d-structure and decomposition claims over the small corpus") {
    for (int n = 5; n <= 7; ++n)
        for (const auto& item : enumerate_triangle_free(n)) {
            auto verdict = check_d_structure(item.graph);
            CHECK_FALSE(verdict.violation());
            // every witness the decomposition classifies stays consistent
            for (const auto& cyc : induced_c5_list(item.graph)) {
                auto dec = c5_decomposition(item.graph, cyc);
                std::vector<char> seen(item.graph.vertex_count(), 0);
                for (int i = 0; i < 5; ++i) {
                    for (VertexId v : dec.d[i]) {
                        CHECK_FALSE(seen[v]);
                        seen[v] = 1;
                    }
                    for (VertexId v : dec.w[i]) {
                        CHECK_FALSE(seen[v]);
                        seen[v] = 1;
                    }
                }
                for (const auto& left : dec.unclassified) {
                    CHECK_FALSE(seen[left.v]);
                    seen[left.v] = 1;
                }
                CHECK(std::count(seen.begin(), seen.end(), 1) == item.graph.vertex_count());
            }
        }
}

TEST_CASE("lemma and corollary checkers over the small corpus") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& item : enumerate_all_graphs(n)) {
            CHECK_FALSE(check_odd_girth_lemma(item.graph).violation());
            CHECK_FALSE(check_c3c5free_corollary(item.graph).violation());
            CHECK_FALSE(check_bipartite_theorem(item.graph).violation());
            CHECK_FALSE(check_c5free_theorem(item.graph).violation());
        }
}

TEST_CASE("no theorem checker reports a violation over the triangle-free corpus") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& item : enumerate_triangle_free(n)) {
            CHECK_FALSE(check_c5_hom_theorem(item.graph).violation());
            CHECK_FALSE(check_lemma_min_degree_implies_delta2(item.graph, 1, 15).violation());
            CHECK_FALSE(check_mobius_bound_lemma(item.graph).violation());
        }
}

TEST_CASE("mobius bound lemma fires on the ladder itself") {
    auto hm = check_mobius_bound_lemma(mobius_ladder());
    CHECK(hm.hypothesis);
    CHECK(hm.conclusion);   // delta2 = 1 <= floor(8/8)
    auto hm16 = check_mobius_bound_lemma(blow_up({mobius_ladder(), std::vector<int>(8, 2)}).graph);
    CHECK(hm16.hypothesis);
    CHECK(hm16.conclusion);
    CHECK_FALSE(check_mobius_bound_lemma(cycle_graph(5)).hypothesis);
}
