#include "mcd/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mcd/invariants.hpp"
#include "mcd/parallel.hpp"
#include "mcd/rng.hpp"

namespace mcd {

namespace {

std::mt19937 seeded_rng(std::uint64_t seed) {
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32)};
    return std::mt19937(seq);
}

} // namespace

Graph cycle_graph(int k) {
    if (k < 3) throw std::invalid_argument("cycle_graph: need k >= 3");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph::from_edge_list(k, e);
}

Graph path_graph(int k) {
    if (k < 1) throw std::invalid_argument("path_graph: need k >= 1");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(k, e);
}

Graph complete_graph(int k) {
    if (k < 0) throw std::invalid_argument("complete_graph: need k >= 0");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(k, e);
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: negative side");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edge_list(a + b, e);
}

Graph turan_graph(int n, int r) {
    if (r < 1 || n < r) throw std::invalid_argument("turan_graph: need 1 <= r <= n");
    std::vector<int> part_of(n);
    int pos = 0;
    for (int i = 0; i < r; ++i) {
        int size = n / r + (i < n % r ? 1 : 0);
        for (int j = 0; j < size; ++j) part_of[pos++] = i;
    }
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) e.emplace_back(u, v);
    return Graph::from_edge_list(n, e);
}

Graph mobius_ladder() {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i < 8; ++i) e.emplace_back(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) e.emplace_back(i, i + 4);
    return Graph::from_edge_list(8, e);
}

PartedGraph g1_graph(int n) {
    if (n <= 0 || n % 8 != 0) throw std::invalid_argument("g1_graph: n must be a positive multiple of 8");
    return blow_up({cycle_graph(4), {n / 8, 3 * n / 8, n / 8, 3 * n / 8}});
}

PartedGraph g2_graph(int n) {
    if (n <= 0 || n % 7 != 0) throw std::invalid_argument("g2_graph: n must be a positive multiple of 7");
    return blow_up({cycle_graph(5), {n / 7, 2 * n / 7, n / 7, n / 7, 2 * n / 7}});
}

Graph named_graph(const std::string& expr) {
    std::string name = expr;
    std::vector<long long> args;
    auto open = expr.find('(');
    if (open != std::string::npos) {
        if (expr.back() != ')') throw std::invalid_argument("named_graph: missing ')' in " + expr);
        name = expr.substr(0, open);
        std::string inner = expr.substr(open + 1, expr.size() - open - 2);
        std::size_t start = 0;
        while (start <= inner.size() && !inner.empty()) {
            auto comma = inner.find(',', start);
            std::string tok = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                args.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("named_graph: bad argument '" + tok + "' in " + expr);
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw std::invalid_argument("named_graph: " + name + " takes " + std::to_string(k) + " argument(s)");
    };
    if (name == "cycle") { want(1); return cycle_graph(int(args[0])); }
    if (name == "complete") { want(1); return complete_graph(int(args[0])); }
    if (name == "complete_bipartite") { want(2); return complete_bipartite(int(args[0]), int(args[1])); }
    if (name == "turan") { want(2); return turan_graph(int(args[0]), int(args[1])); }
    if (name == "mobius_ladder") { want(0); return mobius_ladder(); }
    if (name == "G1") { want(1); return g1_graph(int(args[0])).graph; }
    if (name == "G2") { want(1); return g2_graph(int(args[0])).graph; }
    throw std::invalid_argument("named_graph: unknown name '" + name + "'");
}

Graph random_triangle_free(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_triangle_free: negative n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_triangle_free: p outside [0,1]");
    auto rng = seeded_rng(seed);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(std::size_t(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    shuffle_deterministic(pairs, rng);

    int words = n == 0 ? 0 : (n + 63) / 64;
    std::vector<std::uint64_t> rows(std::size_t(n) * words, 0);
    auto intersects = [&](int u, int v) {
        for (int w = 0; w < words; ++w)
            if (rows[std::size_t(u) * words + w] & rows[std::size_t(v) * words + w]) return true;
        return false;
    };
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [u, v] : pairs) {
        if (!bernoulli(rng, p)) continue;
        if (intersects(u, v)) continue;
        rows[std::size_t(u) * words + (v >> 6)] |= std::uint64_t(1) << (v & 63);
        rows[std::size_t(v) * words + (u >> 6)] |= std::uint64_t(1) << (u & 63);
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

Graph complete_to_maximal_triangle_free(const Graph& g, std::uint64_t seed) {
    auto t = is_triangle_free(g);
    if (!t.triangle_free)
        throw std::invalid_argument("complete_to_maximal_triangle_free: input has a triangle");
    auto rng = seeded_rng(seed);
    const int n = g.vertex_count();
    int words = n == 0 ? 0 : (n + 63) / 64;
    std::vector<std::uint64_t> rows(std::size_t(n) * words, 0);
    for (int v = 0; v < n; ++v) {
        auto rv = g.row(v);
        std::copy(rv.begin(), rv.end(), rows.begin() + std::size_t(v) * words);
    }
    auto has = [&](int u, int v) {
        return (rows[std::size_t(u) * words + (v >> 6)] >> (v & 63)) & 1u;
    };
    auto common = [&](int u, int v) {
        for (int w = 0; w < words; ++w)
            if (rows[std::size_t(u) * words + w] & rows[std::size_t(v) * words + w]) return true;
        return false;
    };
    auto edges = g.edges();
    for (;;) {
        std::vector<std::pair<VertexId, VertexId>> admissible;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!has(u, v) && !common(u, v)) admissible.emplace_back(u, v);
        if (admissible.empty()) break;
        auto [u, v] = admissible[uniform_below(rng, std::uint32_t(admissible.size()))];
        rows[std::size_t(u) * words + (v >> 6)] |= std::uint64_t(1) << (v & 63);
        rows[std::size_t(v) * words + (u >> 6)] |= std::uint64_t(1) << (u & 63);
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

// ---- canonical form ----

namespace {

class Canonicalizer {
public:
    explicit Canonicalizer(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    std::string payload() {
        std::vector<int> color(n_, 0);
        dfs(color);
        return best_;
    }

private:
    const Graph& g_;
    int n_;
    std::string best_;
    bool have_ = false;

    // Split cells by (old color, sorted neighbor colors) until no cell splits.
    // Old color is the primary sort key, so cells only ever subdivide in
    // place and the cell order is isomorphism-invariant.
    void refine(std::vector<int>& color) const {
        int count = 1 + *std::max_element(color.begin(), color.end());
        for (;;) {
            std::vector<std::vector<int>> sig(n_);
            for (int v = 0; v < n_; ++v) {
                sig[v].push_back(color[v]);
                g_.for_each_neighbor(v, [&](VertexId u) { sig[v].push_back(color[u]); });
                std::sort(sig[v].begin() + 1, sig[v].end());
            }
            std::vector<int> order(n_);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
            int next = 0;
            std::vector<int> fresh(n_);
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
                fresh[order[i]] = next;
            }
            color = std::move(fresh);
            if (next + 1 == count) return;
            count = next + 1;
        }
    }

    // True when every cell is a module with a complete-or-empty relation to
    // every cell (itself included); any within-cell order then produces the
    // same adjacency string, so no branching below this node is needed.
    bool homogeneous(const std::vector<std::vector<int>>& cells) const {
        const int words = g_.words_per_row();
        std::vector<std::vector<std::uint64_t>> masks(cells.size(),
                                                      std::vector<std::uint64_t>(words, 0));
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) masks[c][v >> 6] |= std::uint64_t(1) << (v & 63);
        for (std::size_t a = 0; a < cells.size(); ++a) {
            for (std::size_t b = a; b < cells.size(); ++b) {
                long long cnt = 0;
                for (int v : cells[a]) {
                    auto rv = g_.row(v);
                    for (int w = 0; w < words; ++w) cnt += std::popcount(rv[w] & masks[b][w]);
                }
                long long full;
                if (a == b) {
                    cnt /= 2;
                    full = (long long)cells[a].size() * (long long)(cells[a].size() - 1) / 2;
                } else {
                    full = (long long)cells[a].size() * (long long)cells[b].size();
                }
                if (cnt != 0 && cnt != full) return false;
            }
        }
        return true;
    }

    void emit(const std::vector<std::vector<int>>& cells) {
        std::vector<int> order;
        order.reserve(n_);
        for (const auto& c : cells) order.insert(order.end(), c.begin(), c.end());
        std::string payload;
        int bit = 5, cur = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i) {
                if (g_.has_edge(order[i], order[j])) cur |= 1 << bit;
                if (--bit < 0) {
                    payload.push_back(char(cur + 63));
                    cur = 0;
                    bit = 5;
                }
            }
        if (bit != 5) payload.push_back(char(cur + 63));
        if (!have_ || payload < best_) {
            best_ = std::move(payload);
            have_ = true;
        }
    }

    void dfs(std::vector<int> color) {
        refine(color);
        int k = 1 + *std::max_element(color.begin(), color.end());
        std::vector<std::vector<int>> cells(k);
        for (int v = 0; v < n_; ++v) cells[color[v]].push_back(v);
        int target = -1;
        for (int c = 0; c < k; ++c)
            if (cells[c].size() > 1) { target = c; break; }
        if (target < 0 || homogeneous(cells)) {
            emit(cells);
            return;
        }
        for (int v : cells[target]) {
            std::vector<int> child(n_);
            for (int u = 0; u < n_; ++u)
                child[u] = 2 * color[u] + (color[u] == target && u != v ? 1 : 0);
            dfs(std::move(child));
        }
    }
};

std::string graph6_header(int n) {
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back('~');
        out.push_back(char(63 + ((n >> 12) & 63)));
        out.push_back(char(63 + ((n >> 6) & 63)));
        out.push_back(char(63 + (n & 63)));
    }
    return out;
}

} // namespace

std::string canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 128) throw std::invalid_argument("canonical_form: n above practical bound 128");
    if (n == 0) return g.to_graph6();
    Canonicalizer canon(g);
    return graph6_header(n) + canon.payload();
}

// ---- enumeration ----

namespace {

// subsets of the parent's vertices admissible as the new vertex's
// neighborhood, in ascending mask order
std::vector<std::uint32_t> neighborhood_masks(const Graph& parent, bool independent_only) {
    const int k = parent.vertex_count();
    std::vector<std::uint32_t> adj(k, 0);
    for (auto [u, v] : parent.edges()) {
        adj[u] |= std::uint32_t(1) << v;
        adj[v] |= std::uint32_t(1) << u;
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << k); ++mask) {
        if (independent_only) {
            bool ok = true;
            for (std::uint32_t m = mask; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (adj[v] & mask) { ok = false; break; }
            }
            if (!ok) continue;
        }
        out.push_back(mask);
    }
    return out;
}

std::vector<CorpusItem> enumerate_impl(int n, bool triangle_free_only) {
    std::vector<Graph> level{Graph::from_edge_list(1, {})};
    std::vector<std::string> level_canon{canonical_form(level[0])};

    for (int k = 2; k <= n; ++k) {
        std::vector<std::vector<std::pair<std::string, Graph>>> children(level.size());
        parallel_for_index(level.size(), [&](std::size_t i) {
            const Graph& parent = level[i];
            auto base_edges = parent.edges();
            for (std::uint32_t mask : neighborhood_masks(parent, triangle_free_only)) {
                auto edges = base_edges;
                for (std::uint32_t m = mask; m; m &= m - 1)
                    edges.emplace_back(std::countr_zero(m), k - 1);
                Graph child = Graph::from_edge_list(k, edges);
                children[i].emplace_back(canonical_form(child), std::move(child));
            }
        });
        std::vector<Graph> next;
        std::vector<std::string> next_canon;
        std::vector<std::string> sorted_seen;
        for (auto& group : children)
            for (auto& [canon, child] : group) {
                auto it = std::lower_bound(sorted_seen.begin(), sorted_seen.end(), canon);
                if (it != sorted_seen.end() && *it == canon) continue;
                sorted_seen.insert(it, canon);
                next.push_back(Graph::from_graph6(canon));
                next_canon.push_back(canon);
            }
        level = std::move(next);
        level_canon = std::move(next_canon);
    }

    std::vector<CorpusItem> out;
    out.reserve(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
        CorpusItem item;
        item.graph = std::move(level[i]);
        item.provenance = CorpusItem::Provenance::enumerated;
        item.index = int(i);
        item.canonical = std::move(level_canon[i]);
        out.push_back(std::move(item));
    }
    return out;
}

} // namespace

std::vector<CorpusItem> enumerate_triangle_free(int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("enumerate_triangle_free: supported range is 1..10");
    return enumerate_impl(n, true);
}

std::vector<CorpusItem> enumerate_all_graphs(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("enumerate_all_graphs: supported range is 1..8");
    return enumerate_impl(n, false);
}

} // namespace mcd
