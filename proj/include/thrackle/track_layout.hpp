#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "graph.hpp"
#include "linear_layout.hpp"

namespace thrackle {

// Bipartite graph drawn on two parallel tracks, each ordered left to right.
struct TwoTrackDrawing {
    Graph graph;
    std::vector<int> top;
    std::vector<int> bottom;
};

// Track positions of an edge: x on the top track, y on the bottom track.
struct TrackCoords {
    int x;
    int y;
};

namespace detail {

struct TwoTrackIndex {
    std::vector<int> track;  // 0 top, 1 bottom
    std::vector<int> pos;
};

inline TwoTrackIndex index_two_track(const TwoTrackDrawing& d) {
    const int n = d.graph.n();
    TwoTrackIndex ix{std::vector<int>(n, -1), std::vector<int>(n, -1)};
    auto place = [&](const std::vector<int>& t, int which) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            int v = t[i];
            if (v < 0 || v >= n) throw InvalidInput("track vertex " + std::to_string(v) + " out of range");
            if (ix.track[v] >= 0) throw InvalidInput("vertex " + std::to_string(v) + " appears twice on the tracks");
            ix.track[v] = which;
            ix.pos[v] = static_cast<int>(i);
        }
    };
    place(d.top, 0);
    place(d.bottom, 1);
    for (int v = 0; v < n; ++v)
        if (ix.track[v] < 0) throw InvalidInput("vertex " + std::to_string(v) + " is on no track");
    for (const Edge& e : d.graph.edges())
        if (ix.track[e.u] == ix.track[e.v]) throw InvalidInput("edge " + to_string(e) + " joins a track to itself");
    return ix;
}

}  // namespace detail

inline std::vector<TrackCoords> track_coords(const TwoTrackDrawing& d) {
    auto ix = detail::index_two_track(d);
    std::vector<TrackCoords> c;
    c.reserve(d.graph.m());
    for (const Edge& e : d.graph.edges()) {
        int t = ix.track[e.u] == 0 ? e.u : e.v;
        c.push_back({ix.pos[t], ix.pos[e.other(t)]});
    }
    return c;
}

inline PairRelation two_track_relation(TrackCoords a, TrackCoords b) {
    if (a.x == b.x || a.y == b.y) return PairRelation::adjacent;
    return (a.x < b.x) == (a.y < b.y) ? PairRelation::disjoint : PairRelation::cross;
}

inline TwoTrackDrawing reverse_bottom_track(TwoTrackDrawing d) {
    std::reverse(d.bottom.begin(), d.bottom.end());
    return d;
}

// Edge e goes to class i+1 where i is the largest pairwise-disjoint set lying
// entirely below-left of e. Classes are 2-track thrackles.
inline EdgePartition two_track_thrackle_partition(const TwoTrackDrawing& d) {
    auto c = track_coords(d);
    const int m = d.graph.m();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return std::pair(c[a].x, c[a].y) < std::pair(c[b].x, c[b].y); });
    std::vector<int> rank(m, 1);
    int k = 0;
    for (int i = 0; i < m; ++i) {
        int e = order[i];
        for (int j = 0; j < i; ++j) {
            int f = order[j];
            if (c[f].x < c[e].x && c[f].y < c[e].y) rank[e] = std::max(rank[e], rank[f] + 1);
        }
        k = std::max(k, rank[e]);
    }
    EdgePartition p(k);
    for (int i = 0; i < m; ++i) p[rank[i] - 1].push_back(d.graph.edges()[i]);
    return p;
}

// Reversing one track swaps crossing and disjoint pairs, so the thrackle
// partition of the reversed drawing is a crossing-free partition of d.
inline EdgePartition two_track_noncrossing_partition(const TwoTrackDrawing& d) {
    return two_track_thrackle_partition(reverse_bottom_track(d));
}

// Throws VerificationFailure unless every class avoids the forbidden relation.
inline void validate_two_track_classes(const TwoTrackDrawing& d, const EdgePartition& p, PairRelation forbidden) {
    validate_partition(d.graph, p);
    auto c = track_coords(d);
    for (std::size_t k = 0; k < p.size(); ++k)
        for (std::size_t i = 0; i < p[k].size(); ++i)
            for (std::size_t j = i + 1; j < p[k].size(); ++j) {
                auto a = c[d.graph.index_of(p[k][i])], b = c[d.graph.index_of(p[k][j])];
                if (two_track_relation(a, b) == forbidden)
                    throw VerificationFailure("class " + std::to_string(k) + " has " + to_string(forbidden) + " pair " +
                                              to_string(p[k][i]) + ", " + to_string(p[k][j]));
            }
}

struct TreeTwoTrack {
    TwoTrackDrawing drawing;
    EdgePartition classes;  // crossing-free classes
};

// Tracks hold even and odd BFS depths in BFS order; an edge's class is the
// parity of its parent's depth.
inline TreeTwoTrack tree_two_track_layout(const Graph& t, int root = 0) {
    require(is_tree(t), "tree_two_track_layout needs a tree");
    require(root >= 0 && root < t.n(), "root out of range");
    auto order = bfs_ordering(t, root);
    auto adj = t.adjacency();
    std::vector<int> depth(t.n(), -1);
    depth[root] = 0;
    for (int x : order)
        for (int y : adj[x])
            if (depth[y] < 0) depth[y] = depth[x] + 1;
    TreeTwoTrack r;
    r.drawing.graph = t;
    for (int x : order) (depth[x] % 2 == 0 ? r.drawing.top : r.drawing.bottom).push_back(x);
    EdgePartition p(2);
    for (const Edge& e : t.edges()) {
        int parent = depth[e.u] < depth[e.v] ? e.u : e.v;
        p[depth[parent] % 2].push_back(e);
    }
    r.classes = drop_empty(std::move(p));
    return r;
}

// ---------------------------------------------------------------------------
// (k,t)-track layouts

struct TrackLayout {
    Graph graph;
    std::vector<std::vector<int>> tracks;
    std::vector<int> colors;  // colour of graph.edges()[i]

    int color_count() const { return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1; }
};

// Throws VerificationFailure with the first violation found.
inline void validate_track_layout_or_throw(const TrackLayout& L) {
    const Graph& g = L.graph;
    std::vector<int> track(g.n(), -1), pos(g.n(), -1);
    for (std::size_t i = 0; i < L.tracks.size(); ++i)
        for (std::size_t j = 0; j < L.tracks[i].size(); ++j) {
            int v = L.tracks[i][j];
            if (v < 0 || v >= g.n()) throw VerificationFailure("track vertex " + std::to_string(v) + " out of range");
            if (track[v] >= 0) throw VerificationFailure("vertex " + std::to_string(v) + " is on two tracks");
            track[v] = static_cast<int>(i);
            pos[v] = static_cast<int>(j);
        }
    for (int v = 0; v < g.n(); ++v)
        if (track[v] < 0) throw VerificationFailure("vertex " + std::to_string(v) + " is on no track");
    if (static_cast<int>(L.colors.size()) != g.m()) throw VerificationFailure("colour list does not match the edges");
    for (int c : L.colors)
        if (c < 0) throw VerificationFailure("negative colour");
    for (const Edge& e : g.edges())
        if (track[e.u] == track[e.v]) throw VerificationFailure("edge " + to_string(e) + " lies within one track");
    for (int a = 0; a < g.m(); ++a)
        for (int b = a + 1; b < g.m(); ++b) {
            if (L.colors[a] != L.colors[b]) continue;
            Edge e = g.edges()[a], f = g.edges()[b];
            // Orient both edges from the lower-numbered track.
            int e1 = track[e.u] < track[e.v] ? e.u : e.v, e2 = e.other(e1);
            int f1 = track[f.u] < track[f.v] ? f.u : f.v, f2 = f.other(f1);
            if (track[e1] != track[f1] || track[e2] != track[f2]) continue;
            if (e1 == f1 || e2 == f2) continue;
            if ((pos[e1] < pos[f1]) != (pos[e2] < pos[f2]))
                throw VerificationFailure("monochromatic X-crossing " + to_string(e) + ", " + to_string(f));
        }
}

inline bool validate_track_layout(const TrackLayout& L) {
    try {
        validate_track_layout_or_throw(L);
        return true;
    } catch (const VerificationFailure&) {
        return false;
    }
}

namespace detail {

// Greedy colouring of edges avoiding monochromatic X-crossings; empty on failure.
inline std::vector<int> greedy_track_colors(const Graph& g, const std::vector<int>& track, const std::vector<int>& pos,
                                            const std::vector<int>& edge_order, int k) {
    std::vector<int> color(g.m(), -1);
    for (int a : edge_order) {
        Edge e = g.edges()[a];
        int e1 = track[e.u] < track[e.v] ? e.u : e.v, e2 = e.other(e1);
        std::vector<char> blocked(k, 0);
        for (int b = 0; b < g.m(); ++b) {
            if (color[b] < 0) continue;
            Edge f = g.edges()[b];
            int f1 = track[f.u] < track[f.v] ? f.u : f.v, f2 = f.other(f1);
            if (track[e1] != track[f1] || track[e2] != track[f2] || e1 == f1 || e2 == f2) continue;
            if ((pos[e1] < pos[f1]) != (pos[e2] < pos[f2])) blocked[color[b]] = 1;
        }
        int c = 0;
        while (c < k && blocked[c]) ++c;
        if (c == k) return {};
        color[a] = c;
    }
    return color;
}

}  // namespace detail

inline constexpr int kTrackLayoutAttempts = 10000;

// Randomised search for a (k,t)-track layout: random proper vertex colouring,
// random track orders, greedy edge colouring. Forests fall back to the BFS
// 2-track construction. Returns nullopt when every attempt fails.
inline std::optional<TrackLayout> random_track_layout(const Graph& g, int t, int k, unsigned seed,
                                                      int attempts = kTrackLayoutAttempts) {
    require(t >= 2, "random_track_layout needs t >= 2");
    require(k >= 1, "random_track_layout needs k >= 1");
    std::mt19937 rng(seed);
    auto adj = g.adjacency();
    const int n = g.n();
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<int> vorder(n);
        std::iota(vorder.begin(), vorder.end(), 0);
        std::shuffle(vorder.begin(), vorder.end(), rng);
        std::vector<int> track(n, -1);
        bool ok = true;
        for (int v : vorder) {
            std::vector<int> free;
            for (int i = 0; i < t; ++i)
                if (std::none_of(adj[v].begin(), adj[v].end(), [&](int w) { return track[w] == i; })) free.push_back(i);
            if (free.empty()) {
                ok = false;
                break;
            }
            track[v] = free[std::uniform_int_distribution<int>(0, static_cast<int>(free.size()) - 1)(rng)];
        }
        if (!ok) continue;
        std::vector<std::vector<int>> tracks(t);
        for (int v : vorder) tracks[track[v]].push_back(v);
        std::vector<int> pos(n);
        for (auto& tr : tracks)
            for (std::size_t j = 0; j < tr.size(); ++j) pos[tr[j]] = static_cast<int>(j);
        std::vector<int> eorder(g.m());
        std::iota(eorder.begin(), eorder.end(), 0);
        std::shuffle(eorder.begin(), eorder.end(), rng);
        auto colors = detail::greedy_track_colors(g, track, pos, eorder, k);
        if (colors.empty() && g.m() > 0) continue;
        TrackLayout L{g, tracks, colors};
        if (validate_track_layout(L)) return L;
    }
    if (k >= 2 && is_forest(n, g.edges())) {
        // Each component occupies its own interval on both tracks.
        TrackLayout L{g, std::vector<std::vector<int>>(t), std::vector<int>(g.m(), 0)};
        DisjointSets ds(n);
        for (const Edge& e : g.edges()) ds.unite(e.u, e.v);
        std::vector<char> done(n, 0);
        for (int s = 0; s < n; ++s) {
            if (done[ds.find(s)]) continue;
            done[ds.find(s)] = 1;
            std::vector<int> members;
            for (int v = 0; v < n; ++v)
                if (ds.find(v) == ds.find(s)) members.push_back(v);
            auto tt = tree_two_track_layout(induced_subgraph(g, members), 0);
            for (int v : tt.drawing.top) L.tracks[0].push_back(members[v]);
            for (int v : tt.drawing.bottom) L.tracks[1].push_back(members[v]);
            for (std::size_t c = 0; c < tt.classes.size(); ++c)
                for (const Edge& e : tt.classes[c]) L.colors[g.index_of({members[e.u], members[e.v]})] = static_cast<int>(c);
        }
        if (validate_track_layout(L)) return L;
    }
    return std::nullopt;
}

}  // namespace thrackle
