#include "mcd/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcd/generators.hpp"

namespace mcd {

using nlohmann::json;

C5Decomposition c5_decomposition(const Graph& g, const std::array<VertexId, 5>& cycle) {
    auto t = is_triangle_free(g);
    if (!t.triangle_free)
        throw std::invalid_argument("c5_decomposition: host graph has a triangle");
    for (VertexId v : cycle) g.check_vertex(v, "c5_decomposition");
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            bool consecutive = (j - i == 1) || (i == 0 && j == 4);
            if (cycle[i] == cycle[j])
                throw std::invalid_argument("c5_decomposition: repeated cycle vertex");
            if (g.has_edge(cycle[i], cycle[j]) != consecutive)
                throw std::invalid_argument("c5_decomposition: vertices do not form an induced 5-cycle");
        }

    const int n = g.vertex_count();
    const int words = g.words_per_row();
    C5Decomposition out;
    out.cycle = cycle;

    std::vector<int> d_class(n, -1);
    std::array<std::vector<std::uint64_t>, 5> d_mask;
    for (int i = 0; i < 5; ++i) {
        out.d[i] = g.common_neighbors(cycle[(i + 4) % 5], cycle[(i + 1) % 5]);
        d_mask[i].assign(words, 0);
        for (VertexId v : out.d[i]) {
            if (d_class[v] != -1)
                throw std::logic_error("c5_decomposition: d-classes overlap in a triangle-free graph");
            d_class[v] = i;
            d_mask[i][v >> 6] |= std::uint64_t(1) << (v & 63);
        }
    }

    for (VertexId x = 0; x < n; ++x) {
        if (d_class[x] != -1) continue;
        auto rx = g.row(x);
        bool touches[5];
        int touched = 0;
        for (int i = 0; i < 5; ++i) {
            touches[i] = false;
            for (int w = 0; w < words; ++w)
                if (rx[w] & d_mask[i][w]) { touches[i] = true; break; }
            touched += touches[i];
        }
        if (touched < 2) {
            out.unclassified.push_back({x, "no neighbors in two d-classes"});
            continue;
        }
        bool consecutive = false;
        for (int i = 0; i < 5; ++i)
            if (touches[i] && touches[(i + 1) % 5]) consecutive = true;
        if (consecutive) {
            out.unclassified.push_back({x, "neighbors in consecutive d-classes"});
            continue;
        }
        // two non-consecutive classes left: the pattern {i-1, i+1} of a unique i
        for (int i = 0; i < 5; ++i)
            if (touches[(i + 4) % 5] && touches[(i + 1) % 5]) {
                out.w[i].push_back(x);
                break;
            }
    }
    return out;
}

std::vector<std::array<VertexId, 5>> induced_c5_list(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::array<VertexId, 5>> out;
    for (VertexId v0 = 0; v0 < n; ++v0)
        for (VertexId v1 : g.neighbors(v0)) {
            if (v1 <= v0) continue;
            for (VertexId v2 : g.neighbors(v1)) {
                if (v2 <= v0 || v2 == v1 || g.has_edge(v0, v2)) continue;
                for (VertexId v3 : g.neighbors(v2)) {
                    if (v3 <= v0 || v3 == v1 || g.has_edge(v3, v1) || g.has_edge(v3, v0)) continue;
                    g.for_each_neighbor(v3, [&](VertexId v4) {
                        if (v4 <= v1 || v4 == v2) return;      // v4 > v1 picks one direction
                        if (!g.has_edge(v4, v0)) return;
                        if (g.has_edge(v4, v1) || g.has_edge(v4, v2)) return;
                        out.push_back({v0, v1, v2, v3, v4});
                    });
                }
            }
        }
    return out;
}

C5HomResult construct_c5_homomorphism(const Graph& g) {
    auto t = is_triangle_free(g);
    if (!t.triangle_free)
        throw std::invalid_argument("construct_c5_homomorphism: graph has a triangle");

    const int n = g.vertex_count();
    C5HomResult res;
    res.hypothesis = n >= 8 && min_common_degree(g).greater_than(n / 8);

    auto bip = is_bipartite(g);
    if (bip.bipartite) {
        res.kind = C5HomResult::Kind::bipartite_map;
        res.map.resize(n);
        for (int v = 0; v < n; ++v) res.map[v] = bip.coloring[v];
        return res;
    }

    auto cyc = *shortest_odd_cycle(g);
    if (cyc.size() != 5) {
        res.failure = "no 5-cycle to decompose: odd girth is " + std::to_string(cyc.size());
        return res;
    }
    std::array<VertexId, 5> c5;
    std::copy(cyc.begin(), cyc.end(), c5.begin());
    res.decomposition = c5_decomposition(g, c5);
    if (!res.decomposition->clean()) {
        const auto& first = res.decomposition->unclassified.front();
        res.failure = "vertex " + std::to_string(first.v) + " unclassified: " + first.reason;
        return res;
    }

    res.map.assign(n, -1);
    for (int i = 0; i < 5; ++i) {
        for (VertexId v : res.decomposition->d[i]) res.map[v] = i;
        for (VertexId v : res.decomposition->w[i]) res.map[v] = i;
    }
    auto ver = verify_homomorphism(g, cycle_graph(5), res.map);
    if (!ver.valid) {
        res.failure = "block map rejected at edge (" + std::to_string(ver.bad_edge.first) + "," +
                      std::to_string(ver.bad_edge.second) + ")";
        return res;
    }
    res.kind = C5HomResult::Kind::c5_blocks;
    return res;
}

namespace {

json cycle_json(const std::vector<VertexId>& c) { return json(c); }

json coloring_json(const std::vector<signed char>& c) {
    json a = json::array();
    for (signed char x : c) a.push_back(int(x));
    return a;
}

} // namespace

TheoremVerdict check_bipartite_theorem(const Graph& g) {
    TheoremVerdict v;
    v.statement = "delta2-bipartite";
    const int n = g.vertex_count();
    auto tf = is_triangle_free(g);
    v.detail["n"] = n;
    v.detail["triangle_free"] = tf.triangle_free;
    bool delta2_ok = false;
    if (tf.triangle_free && n >= 5) {
        auto d2 = min_common_degree(g);
        v.detail["delta2"] = d2.to_string();
        delta2_ok = d2.greater_than(n / 5);
    }
    v.hypothesis = tf.triangle_free && n >= 5 && delta2_ok;
    auto bip = is_bipartite(g);
    v.conclusion = bip.bipartite;
    if (bip.bipartite)
        v.detail["coloring"] = coloring_json(bip.coloring);
    else
        v.detail["odd_cycle"] = cycle_json(bip.odd_cycle);
    return v;
}

TheoremVerdict check_c5_hom_theorem(const Graph& g) {
    TheoremVerdict v;
    v.statement = "delta2-c5hom";
    const int n = g.vertex_count();
    auto tf = is_triangle_free(g);
    v.detail["n"] = n;
    v.detail["triangle_free"] = tf.triangle_free;
    if (!tf.triangle_free) {
        v.hypothesis = false;
        v.conclusion = false;
        v.detail["skipped"] = "input has a triangle";
        return v;
    }
    if (n >= 2) {
        auto d2 = min_common_degree(g);
        v.detail["delta2"] = d2.to_string();
        v.hypothesis = n >= 8 && d2.greater_than(n / 8);
    }
    auto res = construct_c5_homomorphism(g);
    if (res.kind != C5HomResult::Kind::failure) {
        v.conclusion = true;
        v.detail["route"] = res.kind == C5HomResult::Kind::bipartite_map ? "bipartite" : "c5-blocks";
        v.detail["map"] = json(res.map);
    } else {
        v.detail["construction_failure"] = res.failure;
        auto oracle = find_homomorphism(g, cycle_graph(5));
        v.conclusion = oracle.has_value();
        v.detail["route"] = oracle ? "oracle" : "none";
        if (oracle) v.detail["map"] = json(*oracle);
    }
    return v;
}

TheoremVerdict check_c5free_theorem(const Graph& g) {
    TheoremVerdict v;
    v.statement = "c5free-bipartite";
    const int n = g.vertex_count();
    auto c5 = is_c5_free(g);
    v.detail["n"] = n;
    v.detail["c5_free"] = c5.c5_free;
    if (!c5.c5_free) v.detail["c5_witness"] = json(std::vector<VertexId>(c5.witness.begin(), c5.witness.end()));
    bool delta2_ok = false;
    if (c5.c5_free && n >= 5) {
        auto d2 = min_common_degree(g);
        v.detail["delta2"] = d2.to_string();
        delta2_ok = d2.at_least(3);
    }
    v.hypothesis = c5.c5_free && n >= 5 && delta2_ok;
    auto bip = is_bipartite(g);
    v.conclusion = bip.bipartite;
    if (bip.bipartite)
        v.detail["coloring"] = coloring_json(bip.coloring);
    else
        v.detail["odd_cycle"] = cycle_json(bip.odd_cycle);
    return v;
}

TheoremVerdict check_lemma_min_degree_implies_delta2(const Graph& g, long long alpha_num,
                                                     long long alpha_den) {
    if (alpha_den <= 0 || alpha_num <= 0 || 3 * alpha_num >= 2 * alpha_den)
        throw std::invalid_argument("check_lemma_min_degree_implies_delta2: alpha outside (0, 2/3)");
    TheoremVerdict v;
    v.statement = "maximal-delta2";
    const long long n = g.vertex_count();
    v.detail["n"] = n;
    v.detail["alpha"] = std::to_string(alpha_num) + "/" + std::to_string(alpha_den);

    auto tf = is_triangle_free(g);
    bool maximal = false;
    if (tf.triangle_free && n >= 1) maximal = is_maximal_triangle_free(g).maximal;
    v.detail["maximal_triangle_free"] = maximal;

    bool degree_ok = false;
    if (n >= 1) {
        long long delta = min_degree(g);
        v.detail["delta"] = delta;
        // delta > (1/3 + a)n  <=>  3*den*delta > (den + 3*num)*n
        degree_ok = 3 * alpha_den * delta > (alpha_den + 3 * alpha_num) * n;
    }
    v.hypothesis = maximal && degree_ok;

    if (n >= 2) {
        auto d2 = min_common_degree(g);
        v.detail["delta2"] = d2.to_string();
        // delta2 > 3an  <=>  den*delta2 > 3*num*n
        v.conclusion = d2.is_infinite() || alpha_den * d2.value() > 3 * alpha_num * n;
    } else {
        v.conclusion = true;   // no non-edge, nothing to bound
    }
    return v;
}

TheoremVerdict check_odd_girth_lemma(const Graph& g) {
    TheoremVerdict v;
    v.statement = "odd-girth";
    const int n = g.vertex_count();
    v.detail["n"] = n;
    bool delta2_ok = false;
    if (n >= 2) {
        auto d2 = min_common_degree(g);
        v.detail["delta2"] = d2.to_string();
        delta2_ok = d2.at_least(1);
    }
    auto cyc = shortest_odd_cycle(g);
    v.hypothesis = delta2_ok && cyc.has_value();
    if (!cyc) {
        v.conclusion = true;   // bipartite branch of the statement
        v.detail["bipartite"] = true;
        return v;
    }
    v.detail["odd_girth"] = int(cyc->size());
    v.detail["odd_cycle"] = json(*cyc);
    v.conclusion = cyc->size() == 3 || cyc->size() == 5;
    return v;
}

TheoremVerdict check_c3c5free_corollary(const Graph& g) {
    TheoremVerdict v;
    v.statement = "c3c5free-bipartite";
    const int n = g.vertex_count();
    auto tf = is_triangle_free(g);
    auto c5 = is_c5_free(g);
    v.detail["n"] = n;
    v.detail["triangle_free"] = tf.triangle_free;
    v.detail["c5_free"] = c5.c5_free;
    bool delta2_ok = false;
    if (n >= 2 && tf.triangle_free && c5.c5_free) {
        auto d2 = min_common_degree(g);
        v.detail["delta2"] = d2.to_string();
        delta2_ok = d2.at_least(1);
    }
    v.hypothesis = tf.triangle_free && c5.c5_free && delta2_ok;
    auto bip = is_bipartite(g);
    v.conclusion = bip.bipartite;
    if (!bip.bipartite) v.detail["odd_cycle"] = cycle_json(bip.odd_cycle);
    return v;
}

TheoremVerdict check_mobius_bound_lemma(const Graph& g) {
    TheoremVerdict v;
    v.statement = "mobius-bound";
    const int n = g.vertex_count();
    auto tf = is_triangle_free(g);
    v.detail["n"] = n;
    v.detail["triangle_free"] = tf.triangle_free;
    bool has_hm = false;
    if (tf.triangle_free && n >= 8) {
        auto sub = contains_subgraph(g, mobius_ladder());
        has_hm = sub.found;
        if (sub.found) v.detail["embedding"] = json(sub.embedding);
    }
    v.detail["contains_mobius"] = has_hm;
    v.hypothesis = tf.triangle_free && has_hm;
    if (!v.hypothesis) {
        v.conclusion = false;
        return v;
    }
    auto d2 = min_common_degree(g);
    v.detail["delta2"] = d2.to_string();
    v.conclusion = !d2.greater_than(n / 8);
    return v;
}

TheoremVerdict check_d_structure(const Graph& g) {
    TheoremVerdict v;
    v.statement = "disjoint-d";
    auto tf = is_triangle_free(g);
    v.detail["triangle_free"] = tf.triangle_free;
    if (!tf.triangle_free) {
        v.hypothesis = false;
        return v;
    }
    auto cycles = induced_c5_list(g);
    v.detail["induced_c5_count"] = cycles.size();
    v.hypothesis = !cycles.empty();
    v.conclusion = true;

    // computed straight from common neighborhoods, independent of
    // c5_decomposition, so the two routes cross-check each other
    auto fail = [&](const char* why, const std::array<VertexId, 5>& cyc) {
        v.conclusion = false;
        v.detail["failure"] = why;
        v.detail["cycle"] = json(std::vector<VertexId>(cyc.begin(), cyc.end()));
    };
    for (const auto& cyc : cycles) {
        std::array<std::vector<VertexId>, 5> d;
        for (int i = 0; i < 5; ++i)
            d[i] = g.common_neighbors(cyc[(i + 4) % 5], cyc[(i + 1) % 5]);
        std::vector<int> owner(g.vertex_count(), -1);
        for (int i = 0; i < 5 && v.conclusion; ++i)
            for (VertexId u : d[i]) {
                if (owner[u] != -1) { fail("d-classes overlap", cyc); break; }
                owner[u] = i;
            }
        for (int i = 0; i < 5 && v.conclusion; ++i)
            for (int j = i; j < 5 && v.conclusion; ++j) {
                bool consecutive = (j - i == 1) || (i == 0 && j == 4);
                if (i == j || consecutive) continue;         // within-class handled below
                for (VertexId u : d[i]) {
                    for (VertexId w : d[j])
                        if (g.has_edge(u, w)) { fail("edge between non-consecutive d-classes", cyc); break; }
                    if (!v.conclusion) break;
                }
            }
        for (int i = 0; i < 5 && v.conclusion; ++i)
            for (std::size_t a = 0; a < d[i].size() && v.conclusion; ++a)
                for (std::size_t b = a + 1; b < d[i].size(); ++b)
                    if (g.has_edge(d[i][a], d[i][b])) { fail("edge inside a d-class", cyc); break; }
        if (!v.conclusion) break;
    }
    return v;
}

DisjointnessVerdict check_disjointness_lemma(const Graph& g, VertexId x1, VertexId x2,
                                             VertexId y1, VertexId y2) {
    DisjointnessVerdict out;
    for (VertexId v : {x1, x2, y1, y2}) {
        if (v < 0 || v >= g.vertex_count()) {
            out.precondition_failure = "vertex out of range";
            return out;
        }
    }
    auto tf = is_triangle_free(g);
    if (!tf.triangle_free) {
        out.precondition_failure = "graph has a triangle";
        return out;
    }
    if (x1 == x2 || y1 == y2 || g.has_edge(x1, x2) || g.has_edge(y1, y2)) {
        out.precondition_failure = "x1x2 and y1y2 must be non-edges";
        return out;
    }
    bool cross = g.has_edge(x1, y1) || g.has_edge(x1, y2) || g.has_edge(x2, y1) || g.has_edge(x2, y2);
    if (!cross) {
        out.precondition_failure = "no edge between {x1,x2} and {y1,y2}";
        return out;
    }
    out.preconditions_ok = true;
    auto xs = g.common_neighbors(x1, x2);
    auto ys = g.common_neighbors(y1, y2);
    std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(out.overlap));
    out.disjoint = out.overlap.empty();
    return out;
}

EqualityResult check_equality_case(const Graph& g) {
    auto tf = is_triangle_free(g);
    if (!tf.triangle_free)
        throw std::invalid_argument("check_equality_case: graph has a triangle");
    EqualityResult out;
    const int n = g.vertex_count();
    if (n < 2) {
        out.detail = "not an equality case";
        return out;
    }
    auto d2 = min_common_degree(g);

    if (n >= 5 && n % 5 == 0 && d2.equals(n / 5) && !is_bipartite(g).bipartite) {
        out.kind = EqualityCase::balanced_c5;
        auto rec = recognize_blow_up(g);
        bool pattern_ok = canonical_form(rec.spec.pattern) == canonical_form(cycle_graph(5));
        bool sizes_ok = std::all_of(rec.spec.sizes.begin(), rec.spec.sizes.end(),
                                    [&](int s) { return s == n / 5; });
        out.structure_confirmed = pattern_ok && sizes_ok;
        out.detail = out.structure_confirmed ? "balanced C5 blow-up"
                                             : "delta2 == n/5 but recognition did not match a balanced C5 blow-up";
        return out;
    }
    if (n >= 8 && n % 8 == 0 && d2.equals(n / 8) && !find_homomorphism(g, cycle_graph(5))) {
        out.kind = EqualityCase::balanced_mobius;
        auto rec = recognize_blow_up(g);
        bool pattern_ok = canonical_form(rec.spec.pattern) == canonical_form(mobius_ladder());
        bool sizes_ok = std::all_of(rec.spec.sizes.begin(), rec.spec.sizes.end(),
                                    [&](int s) { return s == n / 8; });
        out.structure_confirmed = pattern_ok && sizes_ok;
        out.detail = out.structure_confirmed
                         ? "balanced Mobius-ladder blow-up"
                         : "delta2 == n/8 without C5 homomorphism, but recognition did not match";
        return out;
    }
    out.detail = "not an equality case";
    return out;
}

} // namespace mcd
