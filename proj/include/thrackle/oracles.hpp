#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <future>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "convex.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "linear_layout.hpp"
#include "track_layout.hpp"

namespace thrackle {

using Mask = std::uint64_t;
constexpr int kMaskBits = 64;

// Auxiliary graph on the edges of G: crossing pairs, or crossing-or-sharing-an-endpoint pairs.
enum class AuxMode { crossing, crossing_or_adjacent };

struct AuxiliaryGraph {
    AuxMode mode = AuxMode::crossing;
    std::vector<Mask> adj;
    int size() const { return static_cast<int>(adj.size()); }
    bool adjacent(int i, int j) const { return adj[i] >> j & 1; }
};

inline AuxiliaryGraph convex_auxiliary_graph(const Graph& g, const VertexOrdering& circular, AuxMode mode) {
    if (g.m() > kMaskBits) throw SizeCapError("auxiliary graphs hold at most 64 edges");
    auto pos = positions(circular);
    AuxiliaryGraph h{mode, std::vector<Mask>(g.m(), 0)};
    const auto& E = g.edges();
    for (int i = 0; i < g.m(); ++i)
        for (int j = i + 1; j < g.m(); ++j) {
            auto r = convex_relation(pos, E[i], E[j]);
            bool on = r == PairRelation::cross || (mode == AuxMode::crossing_or_adjacent && r == PairRelation::adjacent);
            if (on) {
                h.adj[i] |= Mask{1} << j;
                h.adj[j] |= Mask{1} << i;
            }
        }
    return h;
}

inline std::vector<Mask> complement(const std::vector<Mask>& adj) {
    const int n = static_cast<int>(adj.size());
    const Mask all = n == kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1;
    std::vector<Mask> out(n);
    for (int i = 0; i < n; ++i) out[i] = ~adj[i] & all & ~(Mask{1} << i);
    return out;
}

inline int max_clique_size(const std::vector<Mask>& adj, long* nodes = nullptr) {
    int best = 0;
    auto grow = [&](auto& self, Mask cand, int size) -> void {
        if (nodes) ++*nodes;
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, cand & adj[v], size + 1);
        }
    };
    const int n = static_cast<int>(adj.size());
    grow(grow, n == kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1, 0);
    return best;
}

// Proper coloring with fewer than `limit` colors minimizing the count (DSATUR branch and bound),
// or nullopt when none exists. Stops as soon as `lower` colors are reached.
inline std::optional<std::vector<int>> exact_coloring(const std::vector<Mask>& adj, int limit, int lower = 0,
                                                      long* nodes = nullptr) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return limit > 0 ? std::optional<std::vector<int>>(std::vector<int>{}) : std::nullopt;
    lower = std::max(lower, 1);
    std::vector<int> color(n, -1), best;
    int best_count = limit;
    std::vector<Mask> seen(n, 0);
    auto recurse = [&](auto& self, int colored, int used) -> bool {
        if (nodes) ++*nodes;
        if (colored == n) {
            best = color;
            best_count = used;
            return used <= lower;
        }
        int v = -1, vsat = -1, vdeg = -1;
        for (int x = 0; x < n; ++x) {
            if (color[x] >= 0) continue;
            int sat = std::popcount(seen[x]);
            int deg = 0;
            for (Mask r = adj[x]; r; r &= r - 1)
                if (color[std::countr_zero(r)] < 0) ++deg;
            if (sat > vsat || (sat == vsat && deg > vdeg)) v = x, vsat = sat, vdeg = deg;
        }
        const int top = std::min(used + 1, best_count - 1);
        for (int c = 0; c < top; ++c) {
            if (seen[v] >> c & 1) continue;
            color[v] = c;
            std::vector<std::pair<int, Mask>> undo;
            for (Mask r = adj[v]; r; r &= r - 1) {
                int w = std::countr_zero(r);
                if (color[w] < 0 && !(seen[w] >> c & 1)) {
                    undo.emplace_back(w, seen[w]);
                    seen[w] |= Mask{1} << c;
                }
            }
            bool done = self(self, colored + 1, std::max(used, c + 1));
            for (auto& [w, s] : undo) seen[w] = s;
            color[v] = -1;
            if (done) return true;
            if (best_count <= std::max(used, c + 1)) break;
        }
        return false;
    };
    recurse(recurse, 0, 0);
    if (best.empty()) return std::nullopt;
    return best;
}

inline int chromatic_number(const std::vector<Mask>& adj, long* nodes = nullptr) {
    int lower = max_clique_size(adj, nodes);
    auto c = exact_coloring(adj, static_cast<int>(adj.size()) + 1, lower, nodes);
    return c ? (c->empty() ? 0 : *std::max_element(c->begin(), c->end()) + 1) : 0;
}

struct ParameterResult {
    int value = 0;
    VertexOrdering ordering;
    std::vector<VertexOrdering> tracks;
    EdgePartition classes;
    std::vector<std::vector<int>> index_classes;
    double elapsed = 0;
    long nodes = 0;
    std::string note;
};

struct OracleCaps {
    int max_vertices = 9;
    int max_edges = 45;
    int max_side = 7;
    int jobs = 1;
};

inline constexpr OracleCaps kDefaultCaps{};

namespace detail {

class Stopwatch {
  public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline EdgePartition classes_from_coloring(const Graph& g, const std::vector<int>& color) {
    int k = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    EdgePartition out(k);
    for (int i = 0; i < g.m(); ++i) out[color[i]].push_back(g.edges()[i]);
    return out;
}

inline void check_vertex_cap(const Graph& g, const OracleCaps& caps) {
    if (g.n() > caps.max_vertices)
        throw SizeCapError("graph has " + std::to_string(g.n()) + " vertices, cap is " + std::to_string(caps.max_vertices));
}

inline void check_edge_cap(const Graph& g, const OracleCaps& caps) {
    if (g.m() > std::min(caps.max_edges, kMaskBits))
        throw SizeCapError("graph has " + std::to_string(g.m()) + " edges, cap is " + std::to_string(caps.max_edges));
}

inline ParameterResult edgeless_result(const Graph& g) {
    ParameterResult r;
    r.ordering = identity_ordering(g.n());
    r.note = "no edges";
    return r;
}

inline bool is_complete(const Graph& g) { return 2L * g.m() == static_cast<long>(g.n()) * (g.n() - 1); }

// Calls visit(order) for each circular ordering with vertex 0 first, up to reflection.
// The second position is split across `jobs` workers; visit must be thread-safe when jobs > 1.
template <class Visit>
void for_each_circular_ordering(int n, int jobs, Visit visit) {
    if (n <= 3) {
        visit(identity_ordering(n));
        return;
    }
    auto run_second = [&](int second) {
        std::vector<int> rest;
        for (int v = 1; v < n; ++v)
            if (v != second) rest.push_back(v);
        do {
            if (rest.back() < second) continue;
            VertexOrdering order{0, second};
            order.insert(order.end(), rest.begin(), rest.end());
            if (!visit(order)) return;
        } while (std::next_permutation(rest.begin(), rest.end()));
    };
    if (jobs <= 1) {
        for (int second = 1; second < n; ++second) run_second(second);
        return;
    }
    std::atomic<int> next{1};
    std::vector<std::future<void>> workers;
    for (int t = 0; t < jobs; ++t)
        workers.push_back(std::async(std::launch::async, [&] {
            for (int s = next++; s < n; s = next++) run_second(s);
        }));
    for (auto& w : workers) w.get();
}

// Minimum over circular orderings of the chromatic number of a per-ordering conflict graph.
template <class Conflicts>
ParameterResult min_coloring_over_circular(const Graph& g, const OracleCaps& caps, int lower, bool one_ordering,
                                           Conflicts conflicts) {
    Stopwatch clock;
    ParameterResult res;
    res.value = g.m() + 1;
    std::mutex mu;
    std::atomic<long> nodes{0};
    std::atomic<bool> done{false};
    auto visit = [&](const VertexOrdering& order) -> bool {
        if (done) return false;
        int limit;
        {
            std::lock_guard lock(mu);
            limit = res.value;
        }
        long local = 0;
        auto col = exact_coloring(conflicts(order), limit, lower, &local);
        nodes += local;
        if (!col) return true;
        int k = col->empty() ? 0 : *std::max_element(col->begin(), col->end()) + 1;
        std::lock_guard lock(mu);
        if (k < res.value) {
            res.value = k;
            res.ordering = order;
            res.classes = classes_from_coloring(g, *col);
        }
        if (res.value <= lower) done = true;
        return !done;
    };
    if (one_ordering)
        visit(identity_ordering(g.n()));
    else
        for_each_circular_ordering(g.n(), caps.jobs, visit);
    res.nodes = nodes;
    res.elapsed = clock.seconds();
    return res;
}

}  // namespace detail

// Fewest cliques covering the auxiliary graph (chromatic number of its complement), as index classes.
inline ParameterResult min_clique_cover(const AuxiliaryGraph& h, int cap = 45) {
    if (h.size() > std::min(cap, kMaskBits))
        throw SizeCapError("clique cover supports at most " + std::to_string(cap) + " vertices");
    detail::Stopwatch clock;
    ParameterResult res;
    auto comp = complement(h.adj);
    int lower = max_clique_size(comp, &res.nodes);
    auto col = exact_coloring(comp, h.size() + 1, lower, &res.nodes);
    res.value = col->empty() ? 0 : *std::max_element(col->begin(), col->end()) + 1;
    res.index_classes.assign(res.value, {});
    for (int i = 0; i < h.size(); ++i) res.index_classes[(*col)[i]].push_back(i);
    res.elapsed = clock.seconds();
    return res;
}

// Thrackle classes of the clique cover as edge lists of g.
inline EdgePartition cover_classes(const Graph& g, const ParameterResult& cover) {
    EdgePartition out;
    for (const auto& cl : cover.index_classes) {
        EdgeClass c;
        for (int i : cl) c.push_back(g.edges()[i]);
        out.push_back(c);
    }
    return out;
}

// Convex antithickness of a fixed convex drawing.
inline ParameterResult convex_drawing_antithickness(const Graph& g, const VertexOrdering& circular, int cap = 45) {
    require(is_permutation_of(circular, g.n()), "circular order is not a permutation of the vertices");
    auto res = min_clique_cover(convex_auxiliary_graph(g, circular, AuxMode::crossing_or_adjacent), cap);
    res.classes = cover_classes(g, res);
    res.ordering = circular;
    return res;
}

// Minimum over circular orderings of the clique-cover number of the crossing-or-adjacent graph.
inline ParameterResult convex_antithickness_exact(const Graph& g, const OracleCaps& caps = kDefaultCaps) {
    detail::check_edge_cap(g, caps);
    const bool symmetric = detail::is_complete(g);
    if (!symmetric) detail::check_vertex_cap(g, caps);
    if (g.m() == 0) return detail::edgeless_result(g);
    int lower = std::max(1, (g.m() + g.n() - 1) / g.n());
    auto res = detail::min_coloring_over_circular(g, caps, lower, symmetric, [&](const VertexOrdering& order) {
        return complement(convex_auxiliary_graph(g, order, AuxMode::crossing_or_adjacent).adj);
    });
    res.note = symmetric ? "complete graph: one circular ordering" : "circular orderings from vertex 0 up to reflection";
    return res;
}

// Minimum over circular orderings of the chromatic number of the crossing graph.
inline ParameterResult book_thickness_exact(const Graph& g, const OracleCaps& caps = kDefaultCaps) {
    detail::check_edge_cap(g, caps);
    const bool symmetric = detail::is_complete(g);
    if (!symmetric) detail::check_vertex_cap(g, caps);
    if (g.m() == 0) return detail::edgeless_result(g);
    // k pages hold at most (k + 1)n - 3k edges.
    int lower = 1;
    if (g.n() >= 4 && g.m() > g.n()) lower = std::max(lower, (g.m() - 4) / (g.n() - 3));
    auto res = detail::min_coloring_over_circular(g, caps, lower, symmetric, [&](const VertexOrdering& order) {
        return convex_auxiliary_graph(g, order, AuxMode::crossing).adj;
    });
    res.note = symmetric ? "complete graph: one circular ordering" : "circular orderings from vertex 0 up to reflection";
    return res;
}

// Minimum over vertex orderings of the largest rainbow.
inline ParameterResult queue_number_exact(const Graph& g, const OracleCaps& caps = kDefaultCaps) {
    detail::check_vertex_cap(g, caps);
    detail::Stopwatch clock;
    ParameterResult res;
    if (g.m() == 0) return detail::edgeless_result(g);
    const int n = g.n(), m = g.m();
    auto adj = g.adjacency();
    std::vector<int> pos(n, -1);
    VertexOrdering order;
    // Edges in order of completion, with spans; depth of each completed edge as outermost of a rainbow.
    std::vector<Span> done_span;
    std::vector<int> done_depth;
    auto feasible = [&](auto& self, int k) -> bool {
        ++res.nodes;
        if (static_cast<int>(order.size()) == n) return true;
        for (int v = 0; v < n; ++v) {
            if (pos[v] >= 0) continue;
            const int p = static_cast<int>(order.size());
            pos[v] = p;
            order.push_back(v);
            std::size_t mark = done_span.size();
            bool ok = true;
            for (int w : adj[v]) {
                if (pos[w] < 0 || w == v) continue;
                Span s{pos[w], p};
                int depth = 1;
                for (std::size_t e = 0; e < done_span.size(); ++e)
                    if (nested_inside(done_span[e], s)) depth = std::max(depth, done_depth[e] + 1);
                done_span.push_back(s);
                done_depth.push_back(depth);
                if (depth > k) ok = false;
            }
            // An open edge starting left of a completed edge will nest over it.
            if (ok)
                for (std::size_t e = 0; e < done_span.size() && ok; ++e) {
                    if (done_depth[e] < k) continue;
                    for (int a = 0; a < n && ok; ++a)
                        if (pos[a] >= 0 && pos[a] < done_span[e].l)
                            for (int b : adj[a])
                                if (pos[b] < 0) {
                                    ok = false;
                                    break;
                                }
                }
            if (ok && self(self, k)) return true;
            done_span.resize(mark);
            done_depth.resize(mark);
            order.pop_back();
            pos[v] = -1;
        }
        return false;
    };
    int k = std::max(1, (m + 2 * n - 4) / (2 * n - 3));
    while (!feasible(feasible, k)) ++k;
    res.value = k;
    res.ordering = order;
    res.classes = greedy_queue_assign(g, order).classes;
    res.note = "vertex orderings by depth-first search with partial rainbow pruning";
    res.elapsed = clock.seconds();
    return res;
}

// Minimum over track orderings of both sides of the largest pairwise-crossing edge set.
inline ParameterResult two_track_thickness_exact(const Graph& g, const OracleCaps& caps = kDefaultCaps) {
    auto side = bipartition(g);
    require(g.n() == 0 || !side.empty(), "graph is not bipartite");
    detail::Stopwatch clock;
    ParameterResult res;
    // Components may be flipped independently; enumerate flips of all but the first.
    DisjointSets ds(g.n());
    for (const Edge& e : g.edges()) ds.unite(e.u, e.v);
    std::vector<int> roots;
    for (int v = 0; v < g.n(); ++v)
        if (ds.find(v) == v && std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return ds.find(e.u) == v; }))
            roots.push_back(v);
    if (roots.size() > 12) throw SizeCapError("two-track oracle supports at most 12 nontrivial components");
    res.value = g.m() == 0 ? 0 : g.m() + 1;
    if (g.m() == 0) {
        auto r = detail::edgeless_result(g);
        r.tracks = {identity_ordering(g.n()), {}};
        return r;
    }
    const auto& E = g.edges();
    for (unsigned flip = 0; flip < (1u << std::max<std::size_t>(roots.size(), 1) >> 1) && res.value > 1; ++flip) {
        std::vector<int> track(g.n(), 0);
        for (int v = 0; v < g.n(); ++v) {
            int r = static_cast<int>(std::find(roots.begin(), roots.end(), ds.find(v)) - roots.begin());
            bool f = r > 0 && r < static_cast<int>(roots.size()) && (flip >> (r - 1) & 1);
            track[v] = side[v] ^ f;
        }
        std::vector<int> top, bottom;
        for (int v = 0; v < g.n(); ++v)
            if (std::any_of(E.begin(), E.end(), [&](const Edge& e) { return e.has(v); }))
                (track[v] == 0 ? top : bottom).push_back(v);
        if (static_cast<int>(std::max(top.size(), bottom.size())) > caps.max_side)
            throw SizeCapError("two-track oracle supports at most " + std::to_string(caps.max_side) + " vertices per side");
        std::vector<int> tpos(g.n(), -1), bpos(g.n(), -1);
        std::vector<int> bot_order;
        // Longest chain of placed edges pairwise crossing: top increasing, bottom decreasing.
        auto max_cross = [&]() {
            std::vector<std::pair<int, int>> placed;
            for (const Edge& e : E) {
                int t = track[e.u] == 0 ? e.u : e.v, b = e.other(t);
                if (bpos[b] >= 0) placed.emplace_back(tpos[t], bpos[b]);
            }
            std::sort(placed.begin(), placed.end());
            std::vector<int> best(placed.size(), 1);
            int out = placed.empty() ? 0 : 1;
            for (std::size_t i = 0; i < placed.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if (placed[j].first < placed[i].first && placed[j].second > placed[i].second) {
                        best[i] = std::max(best[i], best[j] + 1);
                        out = std::max(out, best[i]);
                    }
            return out;
        };
        auto place_bottom = [&](auto& self) -> void {
            ++res.nodes;
            int cur = max_cross();
            if (cur >= res.value) return;
            if (bot_order.size() == bottom.size()) {
                res.value = cur;
                res.tracks = {top, bot_order};
                return;
            }
            for (int b : bottom) {
                if (bpos[b] >= 0) continue;
                bpos[b] = static_cast<int>(bot_order.size());
                bot_order.push_back(b);
                self(self);
                bot_order.pop_back();
                bpos[b] = -1;
            }
        };
        std::sort(top.begin(), top.end());
        do {
            // Reversing both tracks preserves crossings; keep the first top vertex before the last.
            if (top.size() > 1 && top.front() > top.back()) continue;
            for (std::size_t i = 0; i < top.size(); ++i) tpos[top[i]] = static_cast<int>(i);
            place_bottom(place_bottom);
        } while (std::next_permutation(top.begin(), top.end()) && res.value > 1);
    }
    for (int v = 0; v < g.n(); ++v)
        if (std::none_of(E.begin(), E.end(), [&](const Edge& e) { return e.has(v); })) res.tracks[0].push_back(v);
    TwoTrackDrawing d{g, res.tracks[0], res.tracks[1]};
    res.classes = two_track_noncrossing_partition(d);
    res.note = "track orderings of both sides, bottom track by depth-first search";
    res.elapsed = clock.seconds();
    return res;
}

inline int thickness_lower_by_density(const Graph& g) {
    require(g.n() >= 3, "density bound needs at least 3 vertices");
    const long cap = 3L * (g.n() - 2);
    return static_cast<int>((g.m() + cap - 1) / cap);
}

struct Bounds {
    int lower;
    int upper;
};

// Lower bound from the thrackle edge bound 167n/117, upper bound from arboricity.
inline Bounds antithickness_bounds(const Graph& g, int cap = 16) {
    int upper = arboricity(g, cap);
    if (g.m() == 0) return {0, 0};
    const long num = 117L * g.m(), den = 167L * g.n();
    int lower = static_cast<int>((num + den - 1) / den);
    if (lower > upper) throw VerificationFailure("antithickness lower bound exceeds arboricity");
    return {lower, upper};
}

// Bounds on the antithickness of K_n; the upper bound is witnessed by a verified Walecki partition.
inline Bounds complete_antithickness_bounds(int n) {
    require(n >= 3, "complete antithickness bounds need n >= 3");
    auto w = walecki_partition(n);
    validate_walecki(w);
    return {(n + 2) / 3, static_cast<int>(w.classes.size())};
}

}  // namespace thrackle
