#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <string>
#include <vector>

#include "graph.hpp"

namespace thrackle {

inline bool planarity_check(const Graph& g) {
    if (g.n() >= 3 && g.m() > 3 * g.n() - 6) return false;
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BG bg(g.n());
    for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline int smallest_prime_above(int x) {
    int p = x + 1;
    while (!is_prime(p)) ++p;
    return p;
}

using VertexMap = std::vector<int>;

inline Graph relabel(const Graph& g, const VertexMap& f) {
    std::vector<Edge> e;
    e.reserve(g.m());
    for (const Edge& x : g.edges()) e.emplace_back(f[x.u], f[x.v]);
    return Graph(g.n(), std::move(e));
}

struct CompatibleBijections {
    int k = 0;
    int prime = 0;
    Graph base;                  // nested triangles on 3*prime vertices
    std::vector<VertexMap> maps; // maps[p-1] is f_p
    std::vector<Graph> copies;   // copies[p-1] is G^{f_p}
    Graph combined;
};

// Builds k relabelled copies of the nested-triangles graph on a prime n > 3k^2
// and checks they are pairwise edge-disjoint with 3k(3n-2) edges in total.
inline CompatibleBijections compatible_bijections(int k) {
    require(k >= 1, "compatible_bijections needs k >= 1");
    CompatibleBijections r;
    r.k = k;
    const int n = smallest_prime_above(3 * k * k);
    r.prime = n;
    r.base = nested_triangles(n);
    auto mod = [n](long long x) { return static_cast<int>(((x % n) + n) % n); };
    for (int p = 1; p <= k; ++p) {
        VertexMap f(3 * n);
        for (int i = 0; i < n; ++i) {
            f[i] = mod(static_cast<long long>(p) * i);
            f[n + i] = n + mod(static_cast<long long>(p) * i + p * (k + 1));
            f[2 * n + i] = 2 * n + mod(static_cast<long long>(p) * i + 2 * p * (k + 1));
        }
        std::vector<int> image(f);
        std::sort(image.begin(), image.end());
        for (int x = 0; x < 3 * n; ++x)
            if (image[x] != x) throw ConstructionError("f_" + std::to_string(p) + " is not a bijection");
        r.copies.push_back(relabel(r.base, f));
        r.maps.push_back(std::move(f));
    }
    std::vector<Edge> all;
    for (std::size_t p = 0; p < r.copies.size(); ++p) {
        for (std::size_t q = p + 1; q < r.copies.size(); ++q) {
            std::vector<Edge> common;
            const auto& a = r.copies[p].edges();
            const auto& b = r.copies[q].edges();
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (!common.empty())
                throw ConstructionError("copies " + std::to_string(p + 1) + " and " + std::to_string(q + 1) +
                                        " share edge " + to_string(common.front()));
        }
        all.insert(all.end(), r.copies[p].edges().begin(), r.copies[p].edges().end());
    }
    r.combined = Graph(3 * n, std::move(all));
    if (r.combined.m() != 3 * k * (3 * n - 2))
        throw ConstructionError("union has " + std::to_string(r.combined.m()) + " edges, expected " +
                                std::to_string(3 * k * (3 * n - 2)));
    return r;
}

}  // namespace thrackle
