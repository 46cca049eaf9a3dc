#include "mcd/reference.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mcd::ref {

std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) {
        m[u][v] = true;
        m[v][u] = true;
    }
    return m;
}

int min_degree(const Graph& g) {
    auto m = adjacency_matrix(g);
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("ref::min_degree: empty graph");
    int best = n;
    for (int v = 0; v < n; ++v) {
        int d = 0;
        for (int u = 0; u < n; ++u) d += m[v][u];
        best = std::min(best, d);
    }
    return best;
}

std::optional<long long> min_common_degree(const Graph& g) {
    auto m = adjacency_matrix(g);
    const int n = g.vertex_count();
    std::optional<long long> best;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (m[u][v]) continue;
            long long c = 0;
            for (int w = 0; w < n; ++w)
                if (m[u][w] && m[v][w]) ++c;
            if (!best || c < *best) best = c;
        }
    return best;
}

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v) {
    auto m = adjacency_matrix(g);
    std::vector<VertexId> out;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (m[u][w] && m[v][w]) out.push_back(w);
    return out;
}

bool triangle_free(const Graph& g) {
    auto m = adjacency_matrix(g);
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (m[a][b] && m[a][c] && m[b][c]) return false;
    return true;
}

namespace {

// path search for a cycle of length exactly len through start = min vertex
bool cycle_dfs(const std::vector<std::vector<bool>>& m, int start, int cur, int depth, int len,
               std::vector<char>& used) {
    if (depth == len) return m[cur][start];
    for (int next = start + 1; next < int(m.size()); ++next) {
        if (used[next] || !m[cur][next]) continue;
        used[next] = 1;
        if (cycle_dfs(m, start, next, depth + 1, len, used)) return true;
        used[next] = 0;
    }
    return false;
}

bool has_cycle_of_length(const std::vector<std::vector<bool>>& m, int len) {
    const int n = int(m.size());
    std::vector<char> used(n, 0);
    for (int s = 0; s + len <= n + 0; ++s) {
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        if (cycle_dfs(m, s, s, 1, len, used)) return true;
    }
    return false;
}

} // namespace

bool has_c5(const Graph& g) {
    auto m = adjacency_matrix(g);
    if (g.vertex_count() < 5) return false;
    return has_cycle_of_length(m, 5);
}

bool bipartite(const Graph& g) {
    auto m = adjacency_matrix(g);
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int r = 0; r < n; ++r) {
        if (color[r] >= 0) continue;
        color[r] = 0;
        std::vector<int> stack{r};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (!m[u][v]) continue;
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int odd_girth(const Graph& g) {
    if (bipartite(g)) return 0;
    auto m = adjacency_matrix(g);
    for (int len = 3; len <= g.vertex_count(); len += 2)
        if (has_cycle_of_length(m, len)) return len;
    throw std::logic_error("ref::odd_girth: non-bipartite graph without an odd cycle");
}

Graph decode_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("ref::decode_graph6: empty");
    int n = int(static_cast<unsigned char>(s[0])) - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("ref::decode_graph6: short header only");
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        int v = int(static_cast<unsigned char>(s[i])) - 63;
        if (v < 0 || v > 63) throw std::invalid_argument("ref::decode_graph6: bad char");
        for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
    if (int(bits.size()) < n * (n - 1) / 2)
        throw std::invalid_argument("ref::decode_graph6: not enough bits");
    std::vector<std::pair<VertexId, VertexId>> edges;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bits[k]) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

namespace {

bool iso_dfs(const std::vector<std::vector<bool>>& a, const std::vector<std::vector<bool>>& b,
             const std::vector<int>& deg_a, const std::vector<int>& deg_b, std::vector<int>& map,
             std::vector<char>& used, int i) {
    const int n = int(a.size());
    if (i == n) return true;
    for (int t = 0; t < n; ++t) {
        if (used[t] || deg_a[i] != deg_b[t]) continue;
        bool ok = true;
        for (int j = 0; j < i; ++j)
            if (a[i][j] != b[t][map[j]]) { ok = false; break; }
        if (!ok) continue;
        map[i] = t;
        used[t] = 1;
        if (iso_dfs(a, b, deg_a, deg_b, map, used, i + 1)) return true;
        used[t] = 0;
    }
    return false;
}

std::vector<int> degrees(const std::vector<std::vector<bool>>& m) {
    std::vector<int> d(m.size(), 0);
    for (std::size_t v = 0; v < m.size(); ++v)
        for (std::size_t u = 0; u < m.size(); ++u) d[v] += m[v][u];
    return d;
}

} // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto ma = adjacency_matrix(a), mb = adjacency_matrix(b);
    auto da = degrees(ma), db = degrees(mb);
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> map(a.vertex_count(), -1);
    std::vector<char> used(a.vertex_count(), 0);
    return iso_dfs(ma, mb, da, db, map, used, 0);
}

long long count_triangle_free_classes(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("ref::count_triangle_free_classes: practical bound is n <= 7");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_at(pairs);
    {
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) pair_at[k++] = {i, j};
    }
    // triangle masks over the pair bits
    std::vector<std::uint32_t> triangles;
    {
        std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
        for (int k = 0; k < pairs; ++k) {
            idx[pair_at[k].first][pair_at[k].second] = k;
            idx[pair_at[k].second][pair_at[k].first] = k;
        }
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    triangles.push_back((1u << idx[a][b]) | (1u << idx[a][c]) | (1u << idx[b][c]));
    }

    // bucket by sorted degree sequence, then isomorphism test against reps
    std::map<std::vector<int>, std::vector<Graph>> buckets;
    long long classes = 0;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        bool bad = false;
        for (std::uint32_t t : triangles)
            if ((mask & t) == t) { bad = true; break; }
        if (bad) continue;
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int k = 0; k < pairs; ++k)
            if (mask & (1u << k)) edges.push_back(pair_at[k]);
        Graph g = Graph::from_edge_list(n, edges);
        std::vector<int> key(n, 0);
        for (int v = 0; v < n; ++v) key[v] = g.degree(v);
        std::sort(key.begin(), key.end());
        key.push_back(int(g.edge_count()));
        auto& reps = buckets[key];
        bool fresh = true;
        for (const Graph& r : reps)
            if (isomorphic(g, r)) { fresh = false; break; }
        if (fresh) {
            reps.push_back(std::move(g));
            ++classes;
        }
    }
    return classes;
}

long long count_all_classes(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("ref::count_all_classes: practical bound is n <= 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;

    // orbit counting: sum over permutations of 2^(cycles on unordered pairs)
    long long total = 0;
    do {
        std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
        int cycles = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (seen[i][j]) continue;
                ++cycles;
                int a = i, b = j;
                while (!seen[std::min(a, b)][std::max(a, b)]) {
                    seen[std::min(a, b)][std::max(a, b)] = 1;
                    int na = perm[a], nb = perm[b];
                    a = na;
                    b = nb;
                }
            }
        total += 1ll << cycles;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / factorial;
}

} // namespace mcd::ref
