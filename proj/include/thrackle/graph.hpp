#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace thrackle {

struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool has(int x) const { return u == x || v == x; }
    bool touches(const Edge& o) const { return has(o.u) || has(o.v); }
    int other(int x) const { return x == u ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

inline std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// Simple undirected graph on vertices 0..n-1 with a sorted edge list.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n, std::vector<Edge> edges = {}) : n_(n), edges_(std::move(edges)) {
        require(n >= 0, "vertex count must be non-negative");
        for (const Edge& e : edges_) {
            require(e.u != e.v, "loop at vertex " + std::to_string(e.u));
            require(e.u >= 0 && e.v < n_, "edge " + to_string(e) + " has an endpoint outside [0, n)");
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        require(dup == edges_.end(), "parallel edge " + (dup == edges_.end() ? "" : to_string(*dup)));
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    int index_of(Edge e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        return (it != edges_.end() && *it == e) ? static_cast<int>(it - edges_.begin()) : -1;
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n_);
        for (const Edge& e : edges_) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (const Edge& e : edges_) ++d[e.u], ++d[e.v];
        return d;
    }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

using EdgeClass = std::vector<Edge>;
using EdgePartition = std::vector<EdgeClass>;

// Throws VerificationFailure unless the classes are nonempty, disjoint and cover E(G).
inline void validate_partition(const Graph& g, const EdgePartition& p) {
    std::vector<int> seen(g.m(), -1);
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (p[c].empty()) throw VerificationFailure("class " + std::to_string(c) + " is empty");
        for (const Edge& e : p[c]) {
            int i = g.index_of(e);
            if (i < 0) throw VerificationFailure("class " + std::to_string(c) + " contains non-edge " + to_string(e));
            if (seen[i] >= 0)
                throw VerificationFailure("edge " + to_string(e) + " is in classes " + std::to_string(seen[i]) +
                                          " and " + std::to_string(c));
            seen[i] = static_cast<int>(c);
        }
    }
    for (int i = 0; i < g.m(); ++i)
        if (seen[i] < 0) throw VerificationFailure("edge " + to_string(g.edges()[i]) + " is in no class");
}

inline bool is_partition(const Graph& g, const EdgePartition& p) {
    try {
        validate_partition(g, p);
        return true;
    } catch (const VerificationFailure&) {
        return false;
    }
}

inline EdgePartition drop_empty(EdgePartition p) {
    std::erase_if(p, [](const EdgeClass& c) { return c.empty(); });
    return p;
}

// ---------------------------------------------------------------------------
// Generators

inline Graph complete_graph(int n) {
    require(n >= 1, "complete_graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete_bipartite needs both sides nonempty");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e));
}

inline Graph path_graph(int n) {
    require(n >= 1, "path_graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
    require(n >= 3, "cycle_graph needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

inline Graph star_graph(int leaves) {
    require(leaves >= 1, "star_graph needs at least one leaf");
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e));
}

// Division vertex of {i,j} (i<j) is n + the lexicographic rank of (i,j).
inline int division_vertex(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return n + i * (2 * n - i - 1) / 2 + (j - i - 1);
}

inline Graph complete_subdivision(int n) {
    require(n >= 2, "complete_subdivision needs n >= 2");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int x = division_vertex(n, i, j);
            e.emplace_back(i, x);
            e.emplace_back(j, x);
        }
    return Graph(n + n * (n - 1) / 2, std::move(e));
}

// r = 0, v1..v3 = 1..3, w1..w3 = 4..6.
inline Graph two_claw() {
    return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
}

// u<i> = i, v<i> = n+i, w<i> = 2n+i.
inline Graph nested_triangles(int n) {
    require(n >= 2, "nested_triangles needs n >= 2");
    auto u = [n](int i) { return i; };
    auto v = [n](int i) { return n + i; };
    auto w = [n](int i) { return 2 * n + i; };
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) {
        e.emplace_back(u(i), u(i + 1));
        e.emplace_back(v(i), v(i + 1));
        e.emplace_back(w(i), w(i + 1));
        e.emplace_back(u(i), v(i + 1));
        e.emplace_back(v(i), w(i + 1));
        e.emplace_back(w(i), u(i + 1));
    }
    for (int i = 0; i < n; ++i) {
        e.emplace_back(u(i), v(i));
        e.emplace_back(v(i), w(i));
        e.emplace_back(w(i), u(i));
    }
    return Graph(3 * n, std::move(e));
}

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Singletons are 0..n-1; tripleton {a<b<c} is n + its lexicographic rank.
inline Graph singleton_tripleton_graph(int n) {
    require(n >= 3, "singleton_tripleton_graph needs n >= 3");
    std::vector<Edge> e;
    int t = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c, ++t) {
                e.emplace_back(a, t);
                e.emplace_back(b, t);
                e.emplace_back(c, t);
            }
    return Graph(t, std::move(e));
}

// Class r holds the edges whose singleton has rank r within its tripleton.
inline EdgePartition star_forest_partition_gn(const Graph& g) {
    int n = 3;
    while (n + binomial(n, 3) < g.n()) ++n;
    if (n + binomial(n, 3) != g.n() || g != singleton_tripleton_graph(n))
        throw InvalidInput("graph is not a singleton-tripleton graph");
    EdgePartition p(3);
    int t = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c, ++t) {
                p[0].emplace_back(a, t);
                p[1].emplace_back(b, t);
                p[2].emplace_back(c, t);
            }
    for (auto& c : p) std::sort(c.begin(), c.end());
    return p;
}

// Components and cycle detection via union-find.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

inline bool is_forest(int n, const std::vector<Edge>& edges) {
    DisjointSets ds(n);
    for (const Edge& e : edges)
        if (!ds.unite(e.u, e.v)) return false;
    return true;
}

inline bool is_tree(const Graph& g) {
    return g.n() >= 1 && g.m() == g.n() - 1 && is_forest(g.n(), g.edges());
}

// Every component is a star: acyclic, and no edge joins two vertices of degree > 1.
inline bool is_star_forest(int n, const std::vector<Edge>& edges) {
    if (!is_forest(n, edges)) return false;
    std::vector<int> d(n, 0);
    for (const Edge& e : edges) ++d[e.u], ++d[e.v];
    return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return d[e.u] == 1 || d[e.v] == 1; });
}

// 2-colouring of a bipartite graph, or empty if an odd cycle exists.
inline std::vector<int> bipartition(const Graph& g) {
    auto adj = g.adjacency();
    std::vector<int> side(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x]) {
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    stack.push_back(y);
                } else if (side[y] == side[x]) {
                    return {};
                }
            }
        }
    }
    return side;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> pos(g.n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    std::vector<Edge> e;
    for (const Edge& x : g.edges())
        if (pos[x.u] >= 0 && pos[x.v] >= 0) e.emplace_back(pos[x.u], pos[x.v]);
    return Graph(static_cast<int>(keep.size()), std::move(e));
}

// ---------------------------------------------------------------------------
// Arboricity as the maximum of ceil(|E(H)| / (|V(H)|-1)) over induced subgraphs.

inline int arboricity(const Graph& g, int cap = 16) {
    if (g.n() > cap)
        throw SizeCapError("arboricity: " + std::to_string(g.n()) + " vertices exceeds cap " + std::to_string(cap));
    if (g.m() == 0) return 0;
    if (g.n() > 30) throw SizeCapError("arboricity: vertex subsets beyond 2^30 are not enumerated");
    const int n = g.n();
    std::vector<std::uint32_t> nbr(n, 0);
    for (const Edge& e : g.edges()) {
        nbr[e.u] |= 1u << e.v;
        nbr[e.v] |= 1u << e.u;
    }
    // Edge count of subset S computed from S minus its lowest vertex.
    std::vector<int> edges_in(std::size_t{1} << n, 0);
    int best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int low = __builtin_ctz(s);
        std::uint32_t rest = s & (s - 1);
        edges_in[s] = edges_in[rest] + __builtin_popcount(nbr[low] & rest);
        int k = __builtin_popcount(s);
        if (k >= 2) best = std::max(best, (edges_in[s] + k - 2) / (k - 1));
    }
    return best;
}

}  // namespace thrackle
