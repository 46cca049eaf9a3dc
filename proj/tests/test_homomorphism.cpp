#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mcd/generators.hpp"
#include "mcd/homomorphism.hpp"
#include "mcd/invariants.hpp"

using namespace mcd;

namespace {

// every map the search returns must pass verification
bool hom_exists(const Graph& g, const Graph& h) {
    auto map = find_homomorphism(g, h);
    if (map) CHECK(verify_homomorphism(g, h, *map).valid);
    return map.has_value();
}

} // namespace

TEST_CASE("find_homomorphism basics") {
    Graph c5 = cycle_graph(5);
    auto self = find_homomorphism(c5, c5);
    REQUIRE(self.has_value());
    CHECK(verify_homomorphism(c5, c5, *self).valid);

    // exhaustive: the Mobius ladder has no map to C5
    CHECK_FALSE(hom_exists(mobius_ladder(), c5));

    Graph k2 = complete_graph(2);
    CHECK(hom_exists(complete_bipartite(3, 4), k2));
    CHECK(hom_exists(path_graph(6), k2));
    CHECK_FALSE(hom_exists(c5, k2));

    // degenerate shapes
    CHECK(find_homomorphism(Graph::from_edge_list(0, {}), c5).has_value());
    CHECK_FALSE(find_homomorphism(complete_graph(1), Graph::from_edge_list(0, {})).has_value());
    CHECK(hom_exists(Graph::from_edge_list(3, {}), complete_graph(1)));
    CHECK_FALSE(hom_exists(k2, Graph::from_edge_list(2, {})));
}

TEST_CASE("verify_homomorphism") {
    Graph c5 = cycle_graph(5);
    HomMap identity{0, 1, 2, 3, 4};
    CHECK(verify_homomorphism(c5, c5, identity).valid);

    HomMap constant(5, 0);
    auto bad = verify_homomorphism(c5, c5, constant);
    CHECK_FALSE(bad.valid);
    CHECK(bad.bad_edge == std::pair<VertexId, VertexId>{0, 1});

    auto parted = balanced_blow_up(c5, 10);
    HomMap part_index(parted.part_of.begin(), parted.part_of.end());
    CHECK(verify_homomorphism(parted.graph, c5, part_index).valid);

    CHECK_THROWS_AS(verify_homomorphism(c5, c5, HomMap{0, 1, 2, 3, 9}), std::invalid_argument);
    CHECK_THROWS_AS(verify_homomorphism(c5, c5, HomMap{0, 1}), std::invalid_argument);
}

TEST_CASE("blow_up") {
    auto g1 = g1_graph(8);
    CHECK(g1.graph.vertex_count() == 8);
    CHECK(g1.graph.edge_count() == 12);

    auto identity = blow_up({cycle_graph(5), {1, 1, 1, 1, 1}});
    CHECK(identity.graph == cycle_graph(5));

    auto g2 = g2_graph(7);
    CHECK(g2.graph.vertex_count() == 7);
    CHECK(g2.spec.sizes == std::vector<int>{1, 2, 1, 1, 2});
    // parts are independent, consecutive parts completely joined
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) {
            int pu = g2.part_of[u], pv = g2.part_of[v];
            bool pattern_edge = g2.spec.pattern.has_edge(pu, pv);
            CHECK(g2.graph.has_edge(u, v) == pattern_edge);
        }

    CHECK_THROWS_AS(blow_up({cycle_graph(4), {1, 0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(blow_up({Graph::from_edge_list(0, {}), {}}), std::invalid_argument);
    CHECK_THROWS_AS(blow_up({cycle_graph(4), {1, 1}}), std::invalid_argument);
}

TEST_CASE("balanced_blow_up") {
    auto b10 = balanced_blow_up(cycle_graph(5), 10);
    CHECK(b10.spec.sizes == std::vector<int>{2, 2, 2, 2, 2});

    auto hm8 = balanced_blow_up(mobius_ladder(), 8);
    CHECK(hm8.graph == mobius_ladder());

    auto b7 = balanced_blow_up(cycle_graph(5), 7);
    CHECK(b7.spec.sizes == std::vector<int>{2, 2, 1, 1, 1});

    CHECK_THROWS_AS(balanced_blow_up(cycle_graph(5), 4), std::invalid_argument);
}

TEST_CASE("recognize_blow_up") {
    // no twins: C5 is its own quotient
    auto c5 = recognize_blow_up(cycle_graph(5));
    CHECK(canonical_form(c5.spec.pattern) == canonical_form(cycle_graph(5)));
    CHECK(c5.spec.sizes == std::vector<int>{1, 1, 1, 1, 1});

    // C4 has non-adjacent twins, so its blow-ups quotient all the way to K2:
    // G1(8) is the complete bipartite K_{2,6}
    auto g1 = recognize_blow_up(g1_graph(8).graph);
    CHECK(canonical_form(g1.spec.pattern) == canonical_form(complete_graph(2)));
    CHECK(g1.spec.sizes == std::vector<int>{2, 6});

    auto hm16 = recognize_blow_up(blow_up({mobius_ladder(), std::vector<int>(8, 2)}).graph);
    CHECK(canonical_form(hm16.spec.pattern) == canonical_form(mobius_ladder()));
    CHECK(hm16.spec.sizes == std::vector<int>(8, 2));

    // cyclic quotients rotate to the lexicographically least size sequence
    auto g2 = recognize_blow_up(g2_graph(7).graph);
    CHECK(canonical_form(g2.spec.pattern) == canonical_form(cycle_graph(5)));
    CHECK(g2.spec.sizes == std::vector<int>{1, 1, 2, 1, 2});

    // isolated vertices form one class on an isolated pattern vertex
    auto iso = recognize_blow_up(Graph::from_edge_list(5, {{0, 1}}));
    CHECK(iso.spec.pattern.vertex_count() == 3);
    std::vector<int> sorted_sizes = iso.spec.sizes;
    std::sort(sorted_sizes.begin(), sorted_sizes.end());
    CHECK(sorted_sizes == std::vector<int>{1, 1, 3});
}

TEST_CASE("recognize_blow_up round trip for twin-free patterns") {
    struct Case {
        Graph pattern;
        std::vector<int> sizes;
    };
    std::vector<Case> cases{
        {cycle_graph(5), {1, 2, 1, 1, 2}},
        {cycle_graph(5), {3, 3, 3, 3, 3}},
        {cycle_graph(7), {2, 1, 2, 1, 1, 2, 1}},
        {mobius_ladder(), {2, 1, 1, 2, 1, 2, 1, 1}},
        {path_graph(4), {2, 3, 1, 2}},
    };
    for (const auto& c : cases) {
        auto built = blow_up({c.pattern, c.sizes});
        auto rec = recognize_blow_up(built.graph);
        CHECK(canonical_form(rec.spec.pattern) == canonical_form(c.pattern));
        std::vector<int> got = rec.spec.sizes, want = c.sizes;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        // every class really is the common part of its members
        for (int v = 0; v < built.graph.vertex_count(); ++v)
            CHECK(rec.part_of[v] >= 0);
    }
}

TEST_CASE("blow-up invariance of homomorphism existence") {
    std::vector<Graph> patterns{cycle_graph(4), cycle_graph(5), mobius_ladder()};
    std::vector<Graph> targets{complete_graph(2), cycle_graph(5)};
    std::vector<std::vector<int>> size_choices{{2, 1, 2, 1, 1, 1, 1, 1}, {3, 2, 2, 2, 2, 2, 2, 2}};
    for (const auto& pattern : patterns)
        for (const auto& target : targets) {
            bool base = hom_exists(pattern, target);
            for (const auto& raw : size_choices) {
                std::vector<int> sizes(raw.begin(), raw.begin() + pattern.vertex_count());
                bool blown = hom_exists(blow_up({pattern, sizes}).graph, target);
                CHECK(blown == base);
            }
        }
}

TEST_CASE("homomorphic to K2 exactly when bipartite with an edge") {
    Graph k2 = complete_graph(2);
    for (int n = 1; n <= 6; ++n)
        for (const auto& item : enumerate_all_graphs(n)) {
            bool found = hom_exists(item.graph, k2);
            if (item.graph.edge_count() == 0)
                CHECK(found);   // constant maps work without edges
            else
                CHECK(found == is_bipartite(item.graph).bipartite);
        }
}

TEST_CASE("blow-ups of triangle-free patterns stay triangle-free") {
    std::vector<Graph> patterns{cycle_graph(4), cycle_graph(5), mobius_ladder(), path_graph(5)};
    for (const auto& pattern : patterns) {
        std::vector<int> sizes;
        for (int i = 0; i < pattern.vertex_count(); ++i) sizes.push_back(1 + (i * 7 + 3) % 4);
        CHECK(is_triangle_free(blow_up({pattern, sizes}).graph).triangle_free);
    }
}
