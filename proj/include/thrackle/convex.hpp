#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "enclosure.hpp"
#include "graph.hpp"
#include "linear_layout.hpp"
#include "track_layout.hpp"

namespace thrackle {

// Vertices in convex position, listed clockwise, with an optional edge partition.
struct ConvexDrawing {
    Graph graph;
    std::vector<int> circular;
    EdgePartition classes;
};

// Two edges without a common endpoint cross iff their endpoints interleave.
inline PairRelation convex_relation(const std::vector<int>& pos, const Edge& e, const Edge& f) {
    if (e.touches(f)) return PairRelation::adjacent;
    int a = pos[e.u], b = pos[e.v];
    if (a > b) std::swap(a, b);
    bool c_in = a < pos[f.u] && pos[f.u] < b;
    bool d_in = a < pos[f.v] && pos[f.v] < b;
    return c_in != d_in ? PairRelation::cross : PairRelation::disjoint;
}

// The first disjoint pair in s, if any.
inline std::optional<std::pair<Edge, Edge>> convex_disjoint_pair(const std::vector<int>& pos, const std::vector<Edge>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (convex_relation(pos, s[i], s[j]) == PairRelation::disjoint) return std::pair(s[i], s[j]);
    return std::nullopt;
}

inline bool is_convex_thrackle(const std::vector<int>& circular, const std::vector<Edge>& s) {
    return !convex_disjoint_pair(positions(circular), s).has_value();
}

inline bool is_matching(const std::vector<Edge>& s) {
    std::vector<int> v;
    for (const Edge& e : s) v.push_back(e.u), v.push_back(e.v);
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// Throws VerificationFailure naming the first class that is not a convex thrackle.
inline void validate_convex_partition(const ConvexDrawing& d) {
    if (!is_permutation_of(d.circular, d.graph.n())) throw VerificationFailure("circular order is not a permutation");
    validate_partition(d.graph, d.classes);
    auto pos = positions(d.circular);
    for (std::size_t c = 0; c < d.classes.size(); ++c)
        if (auto bad = convex_disjoint_pair(pos, d.classes[c]))
            throw VerificationFailure("class " + std::to_string(c) + " has disjoint pair " + to_string(bad->first) + ", " +
                                      to_string(bad->second));
}

inline bool is_valid_convex_partition(const ConvexDrawing& d) {
    try {
        validate_convex_partition(d);
        return true;
    } catch (const VerificationFailure&) {
        return false;
    }
}

// Classes E_{l,j} = { v_i v_{i+l} : jl <= i <= (j+1)l - 1 }. When n is even the
// diameters (l = n/2) would appear in both windows, so they are split into halves.
inline ConvexDrawing complete_matching_partition(int n) {
    require(n >= 3, "complete_matching_partition needs n >= 3");
    ConvexDrawing d{complete_graph(n), identity_ordering(n), {}};
    for (int l = 1; l <= n / 2; ++l) {
        int windows = (n + l - 1) / l;
        if (2 * l == n) {
            EdgeClass first, second;
            for (int i = 0; i < l; ++i) (i < (l + 1) / 2 ? first : second).emplace_back(i, i + l);
            d.classes.push_back(first);
            d.classes.push_back(second);
            continue;
        }
        for (int j = 0; j < windows; ++j) {
            EdgeClass c;
            for (int i = j * l; i <= std::min((j + 1) * l - 1, n - 1); ++i) c.emplace_back(i, (i + l) % n);
            d.classes.push_back(c);
        }
    }
    return d;
}

inline long complete_matching_class_count(int n) {
    long p = 0;
    for (int l = 1; l <= n / 2; ++l) p += (n + l - 1) / l;
    return p;
}

// p < n ln(2n), certified.
inline bool complete_matching_count_below_bound(int n, long p) {
    return certainly_less(mpq_class(p), ln(mpq_class(2 * n)) * mpq_class(n));
}

// Thrackled-matching partitions of K_3, K_4 and K_5 on the circle 0..t-1.
inline ConvexDrawing small_complete_partition(int t) {
    ConvexDrawing d{Graph(), {}, {}};
    switch (t) {
        case 3: d.classes = {{{0, 1}}, {{1, 2}}, {{0, 2}}}; break;
        case 4: d.classes = {{{0, 2}, {1, 3}}, {{0, 1}}, {{1, 2}}, {{2, 3}}, {{0, 3}}}; break;
        case 5:
            d.classes = {{{0, 2}, {1, 3}}, {{1, 4}, {0, 3}}, {{2, 4}}, {{0, 1}}, {{1, 2}}, {{2, 3}}, {{3, 4}}, {{0, 4}}};
            break;
        default: throw InvalidInput("small_complete_partition supports t = 3, 4, 5");
    }
    d.graph = complete_graph(t);
    d.circular = identity_ordering(t);
    return d;
}

// Matching partition of K_t, chosen from the explicit small cases or the general construction.
inline ConvexDrawing thrackled_matching_partition(int t) {
    require(t >= 1, "t must be positive");
    if (t == 1) return {complete_graph(1), {0}, {}};
    if (t == 2) return {complete_graph(2), {0, 1}, {{{0, 1}}}};
    if (t <= 5) return small_complete_partition(t);
    return complete_matching_partition(t);
}

// Places the tracks consecutively in the circular order of P and gives each
// edge the class (colour, class of its track pair in P).
inline ConvexDrawing compose_track_to_convex(const TrackLayout& L, const ConvexDrawing& P) {
    validate_track_layout_or_throw(L);
    const int t = static_cast<int>(L.tracks.size());
    require(P.graph == complete_graph(t), "track partition must be on K_t with t = number of tracks");
    if (!is_valid_convex_partition(P)) throw InvalidInput("track-pair partition is not a convex thrackle partition");
    for (const auto& c : P.classes)
        if (!is_matching(c)) throw InvalidInput("track-pair partition class is not a matching");
    std::vector<int> pair_class(t * t, -1);
    for (std::size_t j = 0; j < P.classes.size(); ++j)
        for (const Edge& e : P.classes[j]) pair_class[e.u * t + e.v] = pair_class[e.v * t + e.u] = static_cast<int>(j);

    const Graph& g = L.graph;
    std::vector<int> track(g.n());
    for (int i = 0; i < t; ++i)
        for (int v : L.tracks[i]) track[v] = i;
    ConvexDrawing out{g, {}, {}};
    for (int i : P.circular) out.circular.insert(out.circular.end(), L.tracks[i].begin(), L.tracks[i].end());
    const int k = L.color_count();
    const int p = static_cast<int>(P.classes.size());
    EdgePartition classes(static_cast<std::size_t>(k) * p);
    for (int a = 0; a < g.m(); ++a) {
        Edge e = g.edges()[a];
        int j = pair_class[track[e.u] * t + track[e.v]];
        classes[static_cast<std::size_t>(L.colors[a]) * p + j].push_back(e);
    }
    out.classes = drop_empty(std::move(classes));
    return out;
}

// Largest set of pairwise disjoint edges in a convex drawing. Read linearly,
// such a set is a family of intervals with distinct endpoints, pairwise nested
// or separated; best[a][b] is the optimum using positions a..b.
inline int max_convex_disjoint_set(const Graph& g, const std::vector<int>& circular) {
    const int n = g.n();
    if (n == 0) return 0;
    auto pos = positions(circular);
    std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) {
        int a = pos[e.u], b = pos[e.v];
        if (a > b) std::swap(a, b);
        has[a][b] = 1;
    }
    std::vector<std::vector<int>> best(n + 1, std::vector<int>(n + 1, 0));
    for (int len = 1; len < n; ++len)
        for (int a = 0; a + len < n; ++a) {
            int b = a + len;
            int v = std::max(best[a + 1][b], best[a][b - 1]);
            if (has[a][b]) v = std::max(v, 1 + (b - a >= 2 ? best[a + 1][b - 1] : 0));
            for (int c = a; c < b; ++c) v = std::max(v, best[a][c] + best[c + 1][b]);
            best[a][b] = v;
        }
    return best[0][n - 1];
}

inline long queue_arch_bound(int k) {
    long s = 0;
    for (int i = 1; i <= k; ++i) s += k / i;
    return s;
}

// Queues by nesting depth in the linear order read off the circle; queue i is
// split by the longest chain of queue-mates lying strictly to the left.
inline EdgePartition convex_queue_arch_partition(const ConvexDrawing& d) {
    require(is_permutation_of(d.circular, d.graph.n()), "circular order is not a permutation");
    const Graph& g = d.graph;
    auto pos = positions(d.circular);
    auto depth = rainbow_depths(g, d.circular);
    const int m = g.m();
    std::vector<Span> sp(m);
    for (int i = 0; i < m; ++i) sp[i] = span(pos, g.edges()[i]);
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sp[a].l < sp[b].l || (sp[a].l == sp[b].l && sp[a].r < sp[b].r); });
    std::vector<int> rank(m, 1);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < x; ++y) {
            int e = idx[x], f = idx[y];
            if (depth[e] == depth[f] && sp[f].r < sp[e].l) rank[e] = std::max(rank[e], rank[f] + 1);
        }
    std::vector<std::pair<int, int>> keys;
    for (int i = 0; i < m; ++i) keys.emplace_back(depth[i], rank[i]);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    EdgePartition p(keys.size());
    for (int i = 0; i < m; ++i) {
        auto it = std::lower_bound(keys.begin(), keys.end(), std::pair(depth[i], rank[i]));
        p[it - keys.begin()].push_back(g.edges()[i]);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Circular graphs G(n, l) and the upward colouring recursion

inline int circular_distance(int n, int i, int j) {
    int d = std::abs(i - j);
    return std::min(d, n - d);
}

inline ConvexDrawing circular_graph(int n, int l) {
    require(n >= 2, "circular_graph needs n >= 2");
    require(l >= 1 && l <= n / 2, "circular_graph needs 1 <= l <= n/2");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (circular_distance(n, i, j) >= l) e.emplace_back(i, j);
    return {Graph(n, std::move(e)), identity_ordering(n), {}};
}

struct ConstructionStep {
    int n = 0;
    int l = 0;
    bool balanced_fallback = false;  // spacing gaps of l-1 or l were impossible
    std::vector<int> s;              // chosen vertices, ascending
    EdgePartition classes;           // one per member of s, empty ones dropped
    std::vector<int> survivors;      // vertices outside s, in circular order
    Graph residual;                  // uncoloured edges relabelled onto survivors
};

// Gaps between consecutive chosen vertices (counted as non-chosen vertices in between).
inline std::vector<int> construction_gaps(int n, int l, bool* fallback = nullptr) {
    const int s = (n + l) / (l + 1);
    std::vector<int> gaps;
    if (n >= s * l) {
        int wide = n - s * l;
        for (int i = 0; i < s; ++i) gaps.push_back(i < wide ? l : l - 1);
        if (fallback) *fallback = false;
    } else {
        int q = (n - s) / s, r = (n - s) % s;
        for (int i = 0; i < s; ++i) gaps.push_back(i < r ? q + 1 : q);
        if (fallback) *fallback = true;
    }
    return gaps;
}

// One colouring step on the circle 0..n-1 restricted to the given edges.
inline ConstructionStep construction_step_on(int n, int l, const std::vector<Edge>& edges) {
    require(l >= 1 && l <= n / 2, "construction step needs 1 <= l <= n/2");
    ConstructionStep st;
    st.n = n;
    st.l = l;
    auto gaps = construction_gaps(n, l, &st.balanced_fallback);
    std::vector<int> member(n, -1);
    for (int v = 0, i = 0; i < static_cast<int>(gaps.size()); v += gaps[i] + 1, ++i) {
        st.s.push_back(v);
        member[v] = i;
    }
    EdgePartition classes(st.s.size());
    std::vector<Edge> rest;
    for (const Edge& e : edges) {
        int c = member[e.u] >= 0 ? member[e.u] : member[e.v];
        if (c < 0) {
            int d = circular_distance(n, e.u, e.v);
            if (d == l || d == l + 1) {
                // Interior of the shorter boundary path; ties go clockwise from the smaller end.
                int from = e.u, len = e.v - e.u;
                if (len > n - len) from = e.v, len = n - len;
                for (int t = 1; t < len && c < 0; ++t) c = member[(from + t) % n];
            }
        }
        if (c >= 0)
            classes[c].push_back(e);
        else
            rest.push_back(e);
    }
    st.classes = drop_empty(std::move(classes));
    std::vector<int> relabel(n, -1);
    for (int v = 0; v < n; ++v)
        if (member[v] < 0) {
            relabel[v] = static_cast<int>(st.survivors.size());
            st.survivors.push_back(v);
        }
    std::vector<Edge> re;
    for (const Edge& e : rest) {
        if (relabel[e.u] < 0 || relabel[e.v] < 0) throw ConstructionError("uncoloured edge at a chosen vertex");
        re.emplace_back(relabel[e.u], relabel[e.v]);
    }
    st.residual = Graph(static_cast<int>(st.survivors.size()), std::move(re));
    return st;
}

inline ConstructionStep convex_construction_step(int n, int l) {
    return construction_step_on(n, l, circular_graph(n, l).graph.edges());
}

inline int min_circular_distance(int n, const std::vector<Edge>& edges) {
    int d = n;
    for (const Edge& e : edges) d = std::min(d, circular_distance(n, e.u, e.v));
    return d;
}

struct UpperColoring {
    ConvexDrawing drawing;           // K_n on 0..n-1 with the colouring
    std::vector<int> step_levels;    // l used by each step
    std::vector<int> step_sizes;     // classes emitted by each step
    std::vector<int> residual_sizes; // vertex count after each step
    int fallback_steps = 0;          // steps that needed balanced spacing
};

// Colours K_n by repeated construction steps on the shrinking residual. Each
// step runs at the largest l with residual contained in G(m, l), which is l+1
// after the previous step whenever the residual is exactly G(m, l+1). Once
// l >= floor(m/2) the residual is a single thrackle and closes the colouring.
inline UpperColoring convex_kn_upper_coloring(int n) {
    require(n >= 3, "convex_kn_upper_coloring needs n >= 3");
    UpperColoring out;
    out.drawing = {complete_graph(n), identity_ordering(n), {}};
    std::vector<int> label = identity_ordering(n);  // current vertex -> original vertex
    std::vector<Edge> edges = out.drawing.graph.edges();
    int m = n;
    while (!edges.empty()) {
        const int l = min_circular_distance(m, edges);
        if (l >= m / 2) {
            if (!is_convex_thrackle(identity_ordering(m), edges))
                throw ConstructionError("residual of long edges is not a thrackle");
            EdgeClass c;
            for (const Edge& e : edges) c.emplace_back(label[e.u], label[e.v]);
            out.drawing.classes.push_back(c);
            break;
        }
        auto st = construction_step_on(m, l, edges);
        if (st.balanced_fallback) ++out.fallback_steps;
        for (const auto& cls : st.classes) {
            EdgeClass c;
            for (const Edge& e : cls) c.emplace_back(label[e.u], label[e.v]);
            out.drawing.classes.push_back(c);
        }
        out.step_levels.push_back(l);
        out.step_sizes.push_back(static_cast<int>(st.classes.size()));
        std::vector<int> next(st.survivors.size());
        for (std::size_t i = 0; i < st.survivors.size(); ++i) next[i] = label[st.survivors[i]];
        label = std::move(next);
        edges = st.residual.edges();
        m = st.residual.n();
        out.residual_sizes.push_back(m);
    }
    return out;
}

// n - sqrt(n/2) - ln(n)/2 + 4
inline Enclosure convex_kn_upper_bound(int n) {
    mpq_class q(n);
    return (q + mpq_class(4)) - thrackle::sqrt(mpq_class(n, 2)) - ln(q) * mpq_class(1, 2);
}

inline int convex_kn_lower_bound(int n) { return 2 * ((n + 1) / 3) - 1; }

// n - floor(sqrt(2n + 1/4) - 1/2), i.e. n - (largest r with r(r+1)/2 <= n).
inline int ctn_complete_formula(int n) {
    int r = 0;
    while ((r + 1) * (r + 2) / 2 <= n) ++r;
    return n - r;
}

// ---------------------------------------------------------------------------
// Walecki decomposition

struct WaleckiPartition {
    Graph graph;
    EdgePartition classes;  // Hamiltonian cycles, then a star when n is even
};

inline WaleckiPartition walecki_partition(int n) {
    require(n >= 3, "walecki_partition needs n >= 3");
    WaleckiPartition w{complete_graph(n), {}};
    const int odd = n % 2 ? n : n - 1;  // cycles live on 0..odd-1
    const int m = odd - 1;              // zig-zag vertices 0..m-1, hub m
    for (int i = 0; i < m / 2; ++i) {
        std::vector<int> path{i};
        for (int t = 1; static_cast<int>(path.size()) < m; ++t) {
            path.push_back(((i + t) % m + m) % m);
            if (static_cast<int>(path.size()) < m) path.push_back(((i - t) % m + m) % m);
        }
        EdgeClass c{{m, path.front()}, {m, path.back()}};
        for (std::size_t a = 0; a + 1 < path.size(); ++a) c.emplace_back(path[a], path[a + 1]);
        std::sort(c.begin(), c.end());
        w.classes.push_back(c);
    }
    if (n % 2 == 0) {
        EdgeClass star;
        for (int v = 0; v < n - 1; ++v) star.emplace_back(v, n - 1);
        w.classes.push_back(star);
    }
    return w;
}

inline bool is_cycle_on(const std::vector<Edge>& c, int vertices) {
    if (static_cast<int>(c.size()) != vertices || vertices < 3) return false;
    std::vector<std::vector<int>> adj;
    std::vector<int> ids;
    for (const Edge& e : c) ids.push_back(e.u), ids.push_back(e.v);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (static_cast<int>(ids.size()) != vertices) return false;
    auto id = [&](int v) { return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()); };
    adj.resize(vertices);
    for (const Edge& e : c) adj[id(e.u)].push_back(id(e.v)), adj[id(e.v)].push_back(id(e.u));
    for (auto& a : adj)
        if (a.size() != 2) return false;
    int prev = -1, cur = 0, steps = 0;
    do {
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur, cur = nxt, ++steps;
    } while (cur != 0 && steps <= vertices);
    return steps == vertices;
}

inline void validate_walecki(const WaleckiPartition& w) {
    validate_partition(w.graph, w.classes);
    const int n = w.graph.n();
    const int cycles = n % 2 ? (n - 1) / 2 : (n - 2) / 2;
    if (static_cast<int>(w.classes.size()) != n / 2)
        throw VerificationFailure("expected " + std::to_string(n / 2) + " classes, got " + std::to_string(w.classes.size()));
    for (int c = 0; c < cycles; ++c)
        if (!is_cycle_on(w.classes[c], n % 2 ? n : n - 1))
            throw VerificationFailure("class " + std::to_string(c) + " is not a Hamiltonian cycle");
    if (n % 2 == 0) {
        const auto& star = w.classes.back();
        if (static_cast<int>(star.size()) != n - 1 || !std::all_of(star.begin(), star.end(), [&](const Edge& e) { return e.v == n - 1; }))
            throw VerificationFailure("last class is not the star at the extra vertex");
    }
}

}  // namespace thrackle
