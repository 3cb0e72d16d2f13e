#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "graph.hpp"

namespace thrackle {

// A vertex ordering lists the vertices left to right.
using VertexOrdering = std::vector<int>;

enum class PairRelation { adjacent, cross, nest, disjoint };

inline const char* to_string(PairRelation r) {
    switch (r) {
        case PairRelation::adjacent: return "adjacent";
        case PairRelation::cross: return "cross";
        case PairRelation::nest: return "nest";
        case PairRelation::disjoint: return "disjoint";
    }
    return "?";
}

inline VertexOrdering identity_ordering(int n) {
    VertexOrdering p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline bool is_permutation_of(const VertexOrdering& order, int n) {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

// pos[v] = index of v in the ordering.
inline std::vector<int> positions(const VertexOrdering& order) {
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    return pos;
}

// Endpoints of an edge in ordering positions, left first.
struct Span {
    int l;
    int r;
};

inline Span span(const std::vector<int>& pos, const Edge& e) {
    int a = pos[e.u], b = pos[e.v];
    return a < b ? Span{a, b} : Span{b, a};
}

inline PairRelation classify_spans(Span a, Span b) {
    if (a.l == b.l || a.l == b.r || a.r == b.l || a.r == b.r) return PairRelation::adjacent;
    if (b.l < a.l) std::swap(a, b);
    if (a.r < b.l) return PairRelation::disjoint;
    if (b.r < a.r) return PairRelation::nest;
    return PairRelation::cross;
}

inline PairRelation classify_pair(const std::vector<int>& pos, const Edge& e, const Edge& f) {
    require(e != f, "classify_pair needs distinct edges");
    return classify_spans(span(pos, e), span(pos, f));
}

inline PairRelation classify_pair_in(const VertexOrdering& order, const Edge& e, const Edge& f) {
    return classify_pair(positions(order), e, f);
}

// True when a strictly nests inside b.
inline bool nested_inside(Span a, Span b) { return b.l < a.l && a.r < b.r; }

// For each edge, the size of the largest rainbow in which it is the outermost edge.
inline std::vector<int> rainbow_depths(const Graph& g, const VertexOrdering& order) {
    auto pos = positions(order);
    const int m = g.m();
    std::vector<Span> sp(m);
    for (int i = 0; i < m; ++i) sp[i] = span(pos, g.edges()[i]);
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sp[a].r - sp[a].l < sp[b].r - sp[b].l; });
    std::vector<int> depth(m, 1);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < a; ++b)
            if (nested_inside(sp[idx[b]], sp[idx[a]])) depth[idx[a]] = std::max(depth[idx[a]], depth[idx[b]] + 1);
    return depth;
}

inline int max_rainbow(const Graph& g, const VertexOrdering& order) {
    require(is_permutation_of(order, g.n()), "ordering is not a permutation of the vertices");
    auto d = rainbow_depths(g, order);
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

enum class LayoutKind { stack, queue };

inline const char* to_string(LayoutKind k) { return k == LayoutKind::stack ? "stack" : "queue"; }

struct LinearLayout {
    VertexOrdering ordering;
    EdgePartition classes;
    LayoutKind kind = LayoutKind::queue;
};

// Queue i+1 receives the edges with i edges pairwise nested inside them.
inline LinearLayout greedy_queue_assign(const Graph& g, const VertexOrdering& order) {
    require(is_permutation_of(order, g.n()), "ordering is not a permutation of the vertices");
    auto depth = rainbow_depths(g, order);
    int k = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
    LinearLayout out{order, EdgePartition(k), LayoutKind::queue};
    for (int i = 0; i < g.m(); ++i) out.classes[depth[i] - 1].push_back(g.edges()[i]);
    return out;
}

// Throws VerificationFailure naming the first offending pair.
inline void validate_linear_layout(const Graph& g, const LinearLayout& L) {
    if (!is_permutation_of(L.ordering, g.n())) throw VerificationFailure("ordering is not a permutation of the vertices");
    validate_partition(g, L.classes);
    auto pos = positions(L.ordering);
    const PairRelation bad = L.kind == LayoutKind::stack ? PairRelation::cross : PairRelation::nest;
    for (std::size_t c = 0; c < L.classes.size(); ++c) {
        const auto& cl = L.classes[c];
        for (std::size_t i = 0; i < cl.size(); ++i)
            for (std::size_t j = i + 1; j < cl.size(); ++j)
                if (classify_pair(pos, cl[i], cl[j]) == bad)
                    throw VerificationFailure(std::string(to_string(L.kind)) + " " + std::to_string(c) + " has " +
                                              to_string(bad) + " pair " + to_string(cl[i]) + ", " + to_string(cl[j]));
    }
}

inline bool is_valid_linear_layout(const Graph& g, const LinearLayout& L) {
    try {
        validate_linear_layout(g, L);
        return true;
    } catch (const VerificationFailure&) {
        return false;
    }
}

// Breadth-first vertex ordering from root, visiting neighbours in ascending order;
// unreached components follow, each started from its smallest vertex.
inline VertexOrdering bfs_ordering(const Graph& g, int root = 0) {
    auto adj = g.adjacency();
    VertexOrdering order;
    std::vector<char> seen(g.n(), 0);
    auto run = [&](int s) {
        std::size_t head = order.size();
        seen[s] = 1;
        order.push_back(s);
        while (head < order.size()) {
            int x = order[head++];
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    order.push_back(y);
                }
        }
    };
    if (g.n() > 0) run(root);
    for (int v = 0; v < g.n(); ++v)
        if (!seen[v]) run(v);
    return order;
}

}  // namespace thrackle
