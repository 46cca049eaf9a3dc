#include "mcd/homomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mcd {

std::optional<HomMap> find_homomorphism(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    const int hn = h.vertex_count();
    if (n == 0) return HomMap{};
    if (hn == 0) return std::nullopt;
    if (g.edge_count() > 0 && h.edge_count() == 0) return std::nullopt;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<std::vector<int>> prev_nbrs(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (g.has_edge(order[i], order[j])) prev_nbrs[i].push_back(j);

    const int hwords = h.words_per_row();
    std::vector<std::uint64_t> all(hwords, ~std::uint64_t(0));
    if (hn % 64) all.back() = (std::uint64_t(1) << (hn % 64)) - 1;

    std::vector<int> image(n, -1);
    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        std::vector<std::uint64_t> cand = all;
        for (int j : prev_nbrs[i]) {
            auto rw = h.row(image[j]);
            for (int w = 0; w < hwords; ++w) cand[w] &= rw[w];
        }
        for (int w = 0; w < hwords; ++w) {
            std::uint64_t x = cand[w];
            while (x) {
                int t = int(w * 64 + std::countr_zero(x));
                x &= x - 1;
                image[i] = t;
                if (self(self, i + 1)) return true;
                image[i] = -1;
            }
        }
        return false;
    };

    if (!dfs(dfs, 0)) return std::nullopt;
    HomMap map(n, -1);
    for (int i = 0; i < n; ++i) map[order[i]] = image[i];
    return map;
}

VerifyHom verify_homomorphism(const Graph& g, const Graph& h, const HomMap& map) {
    if (int(map.size()) != g.vertex_count())
        throw std::invalid_argument("verify_homomorphism: map not total over source vertices");
    for (VertexId t : map)
        if (t < 0 || t >= h.vertex_count())
            throw std::invalid_argument("verify_homomorphism: assignment out of target range");
    for (auto [u, v] : g.edges())
        if (!h.has_edge(map[u], map[v])) return {false, {u, v}};
    return {true, {-1, -1}};
}

PartedGraph blow_up(const BlowupSpec& spec) {
    const int k = spec.pattern.vertex_count();
    if (k == 0) throw std::invalid_argument("blow_up: empty pattern");
    if (int(spec.sizes.size()) != k)
        throw std::invalid_argument("blow_up: size table does not match pattern");
    for (int s : spec.sizes)
        if (s < 1) throw std::invalid_argument("blow_up: part sizes must be >= 1");

    std::vector<int> offset(k + 1, 0);
    for (int i = 0; i < k; ++i) offset[i + 1] = offset[i] + spec.sizes[i];
    const int n = offset[k];

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [i, j] : spec.pattern.edges())
        for (int a = offset[i]; a < offset[i + 1]; ++a)
            for (int b = offset[j]; b < offset[j + 1]; ++b) edges.emplace_back(a, b);

    PartedGraph out;
    out.graph = Graph::from_edge_list(n, edges);
    out.spec = spec;
    out.part_of.resize(n);
    for (int i = 0; i < k; ++i)
        for (int a = offset[i]; a < offset[i + 1]; ++a) out.part_of[a] = i;
    return out;
}

PartedGraph balanced_blow_up(const Graph& pattern, int n) {
    const int k = pattern.vertex_count();
    if (k == 0) throw std::invalid_argument("balanced_blow_up: empty pattern");
    if (n < k) throw std::invalid_argument("balanced_blow_up: n smaller than pattern");
    BlowupSpec spec{pattern, std::vector<int>(k, n / k)};
    for (int i = 0; i < n % k; ++i) spec.sizes[i] += 1;
    return blow_up(spec);
}

namespace {

// If the quotient is a single cycle, re-index its parts along the cycle so
// the size sequence is the lexicographically least over all rotations and
// both directions.
void normalize_cyclic_quotient(std::vector<std::vector<int>>& classes, const Graph& g) {
    const int k = int(classes.size());
    if (k < 3) return;
    std::vector<std::vector<int>> qadj(k);
    auto adjacent = [&](int a, int b) { return g.has_edge(classes[a][0], classes[b][0]); };
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b && adjacent(a, b)) qadj[a].push_back(b);
    for (int a = 0; a < k; ++a)
        if (qadj[a].size() != 2) return;
    // walk the cycle once; bail if it is not a single one
    std::vector<int> walk{0, qadj[0][0]};
    while (int(walk.size()) < k) {
        int prev = walk[walk.size() - 2], cur = walk.back();
        int next = qadj[cur][0] == prev ? qadj[cur][1] : qadj[cur][0];
        if (next == 0) return;   // closed early: more than one cycle
        walk.push_back(next);
    }
    if (qadj[walk.back()][0] != 0 && qadj[walk.back()][1] != 0) return;

    auto size_seq = [&](const std::vector<int>& order) {
        std::vector<int> s;
        s.reserve(order.size());
        for (int c : order) s.push_back(int(classes[c].size()));
        return s;
    };
    std::vector<int> best_order = walk;
    std::vector<int> best_sizes = size_seq(walk);
    for (int dir = 0; dir < 2; ++dir) {
        for (int rot = 0; rot < k; ++rot) {
            std::vector<int> cand(k);
            for (int i = 0; i < k; ++i) cand[i] = walk[(rot + (dir ? k - i : i)) % k];
            auto s = size_seq(cand);
            if (s < best_sizes) {
                best_sizes = std::move(s);
                best_order = std::move(cand);
            }
        }
    }
    std::vector<std::vector<int>> reordered;
    reordered.reserve(k);
    for (int c : best_order) reordered.push_back(std::move(classes[c]));
    classes = std::move(reordered);
}

} // namespace

PartedGraph recognize_blow_up(const Graph& g) {
    const int n = g.vertex_count();

    // classes of identical bit rows, ordered by least member
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of(n, -1);
    for (int v = 0; v < n; ++v) {
        auto rv = g.row(v);
        for (std::size_t c = 0; c < classes.size(); ++c) {
            auto rc = g.row(classes[c][0]);
            if (std::equal(rv.begin(), rv.end(), rc.begin())) {
                class_of[v] = int(c);
                break;
            }
        }
        if (class_of[v] < 0) {
            class_of[v] = int(classes.size());
            classes.push_back({});
        }
        classes[class_of[v]].push_back(v);
    }

    normalize_cyclic_quotient(classes, g);

    const int k = int(classes.size());
    std::vector<std::pair<VertexId, VertexId>> qedges;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.has_edge(classes[a][0], classes[b][0])) qedges.emplace_back(a, b);

    PartedGraph out;
    out.spec.pattern = Graph::from_edge_list(k, qedges);
    out.spec.sizes.reserve(k);
    out.part_of.assign(n, -1);
    for (int c = 0; c < k; ++c) {
        out.spec.sizes.push_back(int(classes[c].size()));
        for (int v : classes[c]) out.part_of[v] = c;
    }
    out.graph = g;
    return out;
}

} // namespace mcd
