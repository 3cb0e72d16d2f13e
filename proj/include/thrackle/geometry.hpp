#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "linear_layout.hpp"

namespace thrackle {

struct Point {
    mpq_class x;
    mpq_class y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

inline std::string to_string(const Point& p) { return "(" + p.x.get_str() + ", " + p.y.get_str() + ")"; }

// Sign of the cross product (b - a) x (c - a).
inline int orientation(const Point& a, const Point& b, const Point& c) {
    mpq_class v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(v);
}

// For c collinear with a-b: true when c lies on the closed segment.
inline bool on_closed_segment(const Point& a, const Point& b, const Point& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
}

inline bool point_on_segment(const Point& a, const Point& b, const Point& c) {
    return orientation(a, b, c) == 0 && on_closed_segment(a, b, c);
}

inline bool point_in_segment_interior(const Point& a, const Point& b, const Point& c) {
    return !(c == a) && !(c == b) && point_on_segment(a, b, c);
}

// Closed segments a-b and c-d share at least one point.
inline bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d), o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && on_closed_segment(a, b, c)) || (o2 == 0 && on_closed_segment(a, b, d)) ||
           (o3 == 0 && on_closed_segment(c, d, a)) || (o4 == 0 && on_closed_segment(c, d, b));
}

enum class SegmentRelation { shared_endpoint, proper_crossing, disjoint, invalid };

inline const char* to_string(SegmentRelation r) {
    switch (r) {
        case SegmentRelation::shared_endpoint: return "shared-endpoint";
        case SegmentRelation::proper_crossing: return "proper-crossing";
        case SegmentRelation::disjoint: return "disjoint";
        case SegmentRelation::invalid: return "invalid";
    }
    return "?";
}

inline SegmentRelation segment_relation(const Point& a, const Point& b, const Point& c, const Point& d) {
    require(!(a == b) && !(c == d), "zero-length segment");
    const bool same_ab = (a == c && b == d) || (a == d && b == c);
    if (same_ab) return SegmentRelation::invalid;
    std::optional<Point> common;
    Point p, q;
    if (a == c || a == d) {
        common = a;
        p = b;
        q = a == c ? d : c;
    } else if (b == c || b == d) {
        common = b;
        p = a;
        q = b == c ? d : c;
    }
    if (common) {
        if (orientation(*common, p, q) != 0) return SegmentRelation::shared_endpoint;
        mpq_class dot = (p.x - common->x) * (q.x - common->x) + (p.y - common->y) * (q.y - common->y);
        return dot > 0 ? SegmentRelation::invalid : SegmentRelation::shared_endpoint;
    }
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d), o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if ((o1 == 0 && on_closed_segment(a, b, c)) || (o2 == 0 && on_closed_segment(a, b, d)) ||
        (o3 == 0 && on_closed_segment(c, d, a)) || (o4 == 0 && on_closed_segment(c, d, b)))
        return SegmentRelation::invalid;
    if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::proper_crossing;
    return SegmentRelation::disjoint;
}

// Intersection point of the supporting lines of two properly crossing segments.
inline Point crossing_point(const Point& a, const Point& b, const Point& c, const Point& d) {
    mpq_class den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
    require(den != 0, "parallel segments have no crossing point");
    mpq_class t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / den;
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

// Parameter of p along a -> b, assuming p lies on the line.
inline mpq_class parameter_along(const Point& a, const Point& b, const Point& p) {
    if (b.x != a.x) return mpq_class((p.x - a.x) / (b.x - a.x));
    return mpq_class((p.y - a.y) / (b.y - a.y));
}

// Exact rational point on the circle of the given radius near angle theta (tan-half-angle parametrization).
inline Point circle_point(double theta, const mpq_class& radius = 1) {
    const double pi = std::numbers::pi;
    theta = std::remainder(theta, 2 * pi);
    bool flip = std::abs(theta) > pi / 2;
    if (flip) theta = std::remainder(theta - pi, 2 * pi);
    mpq_class t(static_cast<long>(std::llround(std::tan(theta / 2) * (1 << 20))), 1L << 20);
    t.canonicalize();
    mpq_class den = 1 + t * t;
    Point p{mpq_class((1 - t * t) / den), mpq_class(2 * t / den)};
    if (flip) p = {-p.x, -p.y};
    return {radius * p.x, radius * p.y};
}

// Straight-line drawing; bends[e] turns edge e into the polyline endpoint-bend-endpoint.
struct GeometricDrawing {
    Graph graph;
    std::vector<Point> points;
    std::vector<int> colors;
    std::vector<Point> bends;

    bool is_polyline() const { return !bends.empty(); }
    const Point& at(int v) const { return points[v]; }
    int color_count() const { return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1; }
};

inline SegmentRelation edge_relation(const GeometricDrawing& d, const Edge& e, const Edge& f) {
    return segment_relation(d.at(e.u), d.at(e.v), d.at(f.u), d.at(f.v));
}

// First violation of the drawing rules for straight-line drawings, if any.
inline std::optional<std::string> drawing_defect(const GeometricDrawing& d) {
    const Graph& g = d.graph;
    if (static_cast<int>(d.points.size()) != g.n()) return "point count does not match vertex count";
    if (!d.colors.empty() && static_cast<int>(d.colors.size()) != g.m()) return "color count does not match edge count";
    for (int c : d.colors)
        if (c < 0) return "negative color";
    if (d.is_polyline()) return "polyline drawing has no straight-line validity check";
    for (int v = 0; v < g.n(); ++v)
        for (int w = v + 1; w < g.n(); ++w)
            if (d.points[v] == d.points[w]) return "vertices " + std::to_string(v) + " and " + std::to_string(w) + " coincide";
    for (const Edge& e : g.edges())
        for (int v = 0; v < g.n(); ++v)
            if (!e.has(v) && point_on_segment(d.at(e.u), d.at(e.v), d.at(v)))
                return "edge " + to_string(e) + " passes through vertex " + std::to_string(v);
    const auto& E = g.edges();
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j)
            if (edge_relation(d, E[i], E[j]) == SegmentRelation::invalid)
                return "edges " + to_string(E[i]) + " and " + to_string(E[j]) + " overlap or touch";
    return std::nullopt;
}

inline void validate_drawing(const GeometricDrawing& d) {
    if (auto why = drawing_defect(d)) throw VerificationFailure(*why);
}

// Color classes that contain a properly crossing pair, as (edge, edge) examples.
inline std::vector<std::pair<Edge, Edge>> monochromatic_crossings(const GeometricDrawing& d) {
    std::vector<std::pair<Edge, Edge>> out;
    const auto& E = d.graph.edges();
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j)
            if (d.colors[i] == d.colors[j] && edge_relation(d, E[i], E[j]) == SegmentRelation::proper_crossing)
                out.emplace_back(E[i], E[j]);
    return out;
}

// Every pair within each color class intersects exactly once.
inline bool color_classes_are_thrackles(const GeometricDrawing& d) {
    const auto& E = d.graph.edges();
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j)
            if (d.colors[i] == d.colors[j] && edge_relation(d, E[i], E[j]) == SegmentRelation::disjoint) return false;
    return true;
}

namespace detail {

// Largest clique in a graph on at most 32 vertices given as adjacency bitmasks.
inline int max_clique(const std::vector<std::uint32_t>& adj) {
    int best = 0;
    auto grow = [&](auto& self, std::uint32_t cand, int size) -> void {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + __builtin_popcount(cand) <= best) return;
        while (cand) {
            if (size + __builtin_popcount(cand) <= best) return;
            int v = __builtin_ctz(cand);
            cand &= cand - 1;
            self(self, cand & adj[v], size + 1);
        }
    };
    grow(grow, adj.empty() ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << adj.size()) - 1), 0);
    return best;
}

}  // namespace detail

constexpr int kDrawingBoundsEdgeCap = 24;

struct DrawingBounds {
    int max_crossing;
    int max_disjoint;
};

// Largest pairwise-crossing edge set and largest pairwise-disjoint edge set of a straight-line drawing.
inline DrawingBounds drawing_thickness_antithickness_bounds(const GeometricDrawing& d) {
    const int m = d.graph.m();
    if (m > kDrawingBoundsEdgeCap)
        throw SizeCapError("drawing bounds need at most " + std::to_string(kDrawingBoundsEdgeCap) + " edges");
    validate_drawing(d);
    std::vector<std::uint32_t> cross(m, 0), apart(m, 0);
    const auto& E = d.graph.edges();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            auto r = edge_relation(d, E[i], E[j]);
            if (r == SegmentRelation::proper_crossing) cross[i] |= 1u << j;
            if (r == SegmentRelation::disjoint) apart[i] |= 1u << j;
        }
    return {detail::max_clique(cross), detail::max_clique(apart)};
}

// Vertices of a convex drawing on a circle, circular[i] placed at the i-th of n evenly spaced angles.
inline GeometricDrawing convex_position_drawing(const Graph& g, const VertexOrdering& circular) {
    require(is_permutation_of(circular, g.n()), "circular order is not a permutation of the vertices");
    GeometricDrawing d{g, std::vector<Point>(g.n()), {}, {}};
    for (int i = 0; i < g.n(); ++i) d.points[circular[i]] = circle_point(std::numbers::pi / 2 - 2 * std::numbers::pi * i / g.n());
    return d;
}

inline long extremal_edge_count(int k, int s) {
    long n = 2L * k * s;
    return k * (3 * n - 4L * k - 3);
}

// Upper bound on the edges of an n-vertex graph with geometric thickness k.
inline long geometric_thickness_upper_check(int n, int k) {
    require(k >= 1 && n >= std::max(2 * k, 3), "need k >= 1 and n >= max(2k, 3)");
    return static_cast<long>(k) * (3L * n - k - 5);
}

struct ExtremalDrawing {
    GeometricDrawing drawing;
    std::vector<mpq_class> radii;
};

namespace detail {

struct ColoredEdge {
    int u, v, color;
};

inline int level_vertex(int k, int a, int i) {
    const int K = 2 * k;
    return (a - 1) * K + ((i - 1) % K + K) % K;
}

// Edges of the layered family, colors 0..k-1. Vertex (a, i) is (a-1)*2k + (i-1).
inline std::vector<ColoredEdge> extremal_edges(int k, int s) {
    const int K = 2 * k;
    auto color = [&](int i, int j) {
        for (int l = 1; l <= k; ++l)
            if (((i + j - 2 * l) % K + K) % K == 0 || ((i + j - 2 * l + 1) % K + K) % K == 0) return l - 1;
        return -1;
    };
    std::vector<ColoredEdge> out;
    for (int a = 1; a <= s; ++a)
        for (int i = 1; i <= K; ++i)
            for (int j = i + 1; j <= K; ++j) {
                if (a >= 2 && (j - i) == k) continue;
                out.push_back({level_vertex(k, a, i), level_vertex(k, a, j), color(i, j)});
            }
    for (int a = 2; a <= s; ++a)
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= K; ++j) {
                out.push_back({level_vertex(k, a, i + k / 2), level_vertex(k, a - 1, j), i - 1});
                out.push_back({level_vertex(k, a, i + 3 * k / 2), level_vertex(k, a - 1, j), i - 1});
            }
    // Skip-level targets: (a-1, k+i) and (a-1, i) for odd k, exchanged for even k.
    const bool even = k % 2 == 0;
    for (int a = 2; a <= s - 1; ++a)
        for (int i = 1; i <= k; ++i) {
            out.push_back({level_vertex(k, a + 1, i + k / 2), level_vertex(k, a - 1, even ? i : k + i), i - 1});
            out.push_back({level_vertex(k, a + 1, i + 3 * k / 2), level_vertex(k, a - 1, even ? k + i : i), i - 1});
        }
    return out;
}

// Unit-circle position of (a, i): clockwise, each level turned by a quarter step.
inline Point extremal_unit_point(int k, int a, int i) {
    const double pi = std::numbers::pi;
    const double step = pi / k;
    const double turn = (k % 2 == 0 ? 1.0 : -1.0) * step / 4;
    return circle_point(step / 2 + (a - 1) * turn - step * (i - 1));
}

}  // namespace detail

constexpr int kRadiusDoublingCap = 64;

// Layered drawing with n = 2ks vertices, k noncrossing color classes and k(3n - 4k - 3) edges.
inline ExtremalDrawing geometric_thickness_extremal(int k, int s) {
    require(k >= 1 && s >= 2, "need k >= 1 and s >= 2");
    const int K = 2 * k, n = K * s;
    auto cedges = detail::extremal_edges(k, s);
    std::vector<Point> unit(n), pts(n);
    for (int a = 1; a <= s; ++a)
        for (int i = 1; i <= K; ++i) unit[detail::level_vertex(k, a, i)] = detail::extremal_unit_point(k, a, i);
    auto level = [K](int v) { return v / K + 1; };
    std::vector<mpq_class> radii{1};
    for (int i = 0; i < K; ++i) pts[i] = unit[i];

    auto level_ok = [&](int a) -> bool {
        std::vector<int> old, fresh;
        for (int e = 0; e < static_cast<int>(cedges.size()); ++e) {
            int top = std::max(level(cedges[e].u), level(cedges[e].v));
            if (top < a) old.push_back(e);
            if (top == a) fresh.push_back(e);
        }
        auto bad_pair = [&](int e, int f) {
            const auto &x = cedges[e], &y = cedges[f];
            auto r = segment_relation(pts[x.u], pts[x.v], pts[y.u], pts[y.v]);
            return r == SegmentRelation::invalid || (x.color == y.color && r == SegmentRelation::proper_crossing);
        };
        for (std::size_t p = 0; p < fresh.size(); ++p) {
            for (int o : old)
                if (bad_pair(fresh[p], o)) return false;
            for (std::size_t q = p + 1; q < fresh.size(); ++q)
                if (bad_pair(fresh[p], fresh[q])) return false;
        }
        for (int v = 0; v < a * K; ++v)
            for (int e = 0; e < static_cast<int>(cedges.size()); ++e) {
                const auto& x = cedges[e];
                int top = std::max(level(x.u), level(x.v));
                if (top > a || (top < a && level(v) < a) || x.u == v || x.v == v) continue;
                if (point_on_segment(pts[x.u], pts[x.v], pts[v])) return false;
            }
        return true;
    };

    if (!level_ok(1)) throw ConstructionError("first level of the layered drawing is degenerate");
    for (int a = 2; a <= s; ++a) {
        mpq_class r = 4 * radii.back();
        bool placed = false;
        for (int tries = 0; tries <= kRadiusDoublingCap && !placed; ++tries, r *= 2) {
            for (int i = 1; i <= K; ++i) {
                int v = detail::level_vertex(k, a, i);
                pts[v] = {r * unit[v].x, r * unit[v].y};
            }
            if (level_ok(a)) {
                radii.push_back(r);
                placed = true;
            }
        }
        if (!placed) throw ConstructionError("no radius separates level " + std::to_string(a) + " of the layered drawing");
    }

    std::vector<Edge> es;
    for (const auto& e : cedges) es.emplace_back(e.u, e.v);
    Graph g(n, es);
    std::vector<int> colors(g.m());
    for (const auto& e : cedges) colors[g.index_of(Edge(e.u, e.v))] = e.color;
    return {GeometricDrawing{std::move(g), std::move(pts), std::move(colors), {}}, std::move(radii)};
}

// Partial drawing of the subdivided complete graph: original vertex i at (2(i+1), 0), division vertices placed so far.
struct KnPrimeState {
    int n = 0;
    Graph graph;
    std::vector<std::optional<Point>> points;
};

namespace detail {

inline int knprime_division(int n, int i, int j) { return division_vertex(n, i, j); }

// Blue edge of x_{i,j} runs to v_i, red edge to v_j; both returned as (original, division).
inline std::vector<std::pair<int, int>> knprime_placed_edges(const KnPrimeState& st, bool blue) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < st.n; ++i)
        for (int j = i + 1; j < st.n; ++j) {
            int x = knprime_division(st.n, i, j);
            if (st.points[x]) out.emplace_back(blue ? i : j, x);
        }
    return out;
}

}  // namespace detail

// Invariants: along v_i x_{i,i+1} no blue edge crosses beyond its crossing with v_j x_{j-1,j},
// and along v_j x_{j-1,j} no red edge crosses beyond that same crossing (j >= i + 2).
inline bool knprime_invariants_hold(const KnPrimeState& st) {
    const int n = st.n;
    auto P = [&](int v) -> const Point& { return *st.points[v]; };
    auto blue = detail::knprime_placed_edges(st, true), red = detail::knprime_placed_edges(st, false);
    auto beyond = [&](int from, int to, const std::vector<std::pair<int, int>>& family, const mpq_class& tc) {
        for (auto [o, x] : family) {
            if (o == from || x == to) continue;
            if (segment_relation(P(from), P(to), P(o), P(x)) != SegmentRelation::proper_crossing) continue;
            Point q = crossing_point(P(from), P(to), P(o), P(x));
            if (parameter_along(P(from), P(to), q) > tc) return true;
        }
        return false;
    };
    for (int i = 0; i + 2 < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            int xi = detail::knprime_division(n, i, i + 1), xj = detail::knprime_division(n, j - 1, j);
            if (segment_relation(P(i), P(xi), P(j), P(xj)) != SegmentRelation::proper_crossing) return false;
            Point c = crossing_point(P(i), P(xi), P(j), P(xj));
            if (beyond(i, xi, blue, parameter_along(P(i), P(xi), c))) return false;
            if (beyond(j, xj, red, parameter_along(P(j), P(xj), c))) return false;
        }
    return true;
}

constexpr int kKnPrimeHalvings = 200;

// Runs the first-stage placement and then at most `insertions` second-stage placements (all when negative).
inline KnPrimeState knprime_place(int n, int insertions = -1) {
    require(n >= 3 && n <= 8, "subdivided complete graph drawing supports 3 <= n <= 8");
    KnPrimeState st{n, complete_subdivision(n), {}};
    st.points.assign(st.graph.n(), std::nullopt);
    for (int i = 0; i < n; ++i) st.points[i] = Point{2 * (i + 1), 0};
    for (int i = 0; i + 1 < n; ++i) st.points[detail::knprime_division(n, i, i + 1)] = Point{2 * (n - i - 1) + 1, 1};
    auto P = [&](int v) -> const Point& { return *st.points[v]; };

    auto acceptable = [&](int i, int j, int x, const Point& p) {
        for (int v = 0; v < st.graph.n(); ++v)
            if (st.points[v] && P(v) == p) return false;
        st.points[x] = p;
        bool ok = true;
        for (int v = 0; v < st.graph.n() && ok; ++v)
            if (st.points[v] && v != i && v != x && point_on_segment(P(i), p, P(v))) ok = false;
        for (int v = 0; v < st.graph.n() && ok; ++v)
            if (st.points[v] && v != j && v != x && point_on_segment(P(j), p, P(v))) ok = false;
        auto blue = detail::knprime_placed_edges(st, true), red = detail::knprime_placed_edges(st, false);
        for (bool new_blue : {true, false}) {
            int o = new_blue ? i : j;
            for (bool other_blue : {true, false})
                for (auto [a, y] : other_blue ? blue : red) {
                    if (!ok) break;
                    if (y == x) continue;
                    if (point_on_segment(P(a), P(y), p)) ok = false;
                    auto r = segment_relation(P(o), p, P(a), P(y));
                    if (r == SegmentRelation::invalid) ok = false;
                    if (new_blue == other_blue && r == SegmentRelation::disjoint) ok = false;
                }
        }
        if (ok) ok = knprime_invariants_hold(st);
        if (!ok) st.points[x] = std::nullopt;
        return ok;
    };

    const int dirs[8][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    int done = 0;
    for (int i = 0; i + 2 < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            if (insertions >= 0 && done == insertions) return st;
            int x = detail::knprime_division(n, i, j);
            int xi = detail::knprime_division(n, i, i + 1), xj = detail::knprime_division(n, j - 1, j);
            Point c = crossing_point(P(i), P(xi), P(j), P(xj));
            mpq_class eps(1, 4);
            bool placed = false;
            for (int h = 0; h < kKnPrimeHalvings && !placed; ++h, eps /= 2)
                for (const auto& d : dirs)
                    if (acceptable(i, j, x, Point{c.x + eps * d[0], c.y + eps * d[1]})) {
                        placed = true;
                        break;
                    }
            if (!placed)
                throw ConstructionError("no position for division vertex of v" + std::to_string(i) + " v" +
                                        std::to_string(j) + " near " + to_string(c));
            ++done;
        }
    return st;
}

// Drawing of the subdivided K_n with blue edges (color 0) and red edges (color 1) each forming a geometric thrackle.
inline GeometricDrawing knprime_antithickness2_drawing(int n) {
    KnPrimeState st = knprime_place(n);
    GeometricDrawing d{st.graph, {}, std::vector<int>(st.graph.m()), {}};
    for (const auto& p : st.points) d.points.push_back(*p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int x = division_vertex(n, i, j);
            d.colors[d.graph.index_of(Edge(j, x))] = 1;
        }
    return d;
}

// Vertex v at (v+1, 0); edges ordered by decreasing left endpoint, the t-th edge bent at (t, 1).
inline GeometricDrawing one_bend_all_intersecting(const Graph& g) {
    GeometricDrawing d{g, {}, {}, std::vector<Point>(g.m())};
    for (int v = 0; v < g.n(); ++v) d.points.push_back(Point{v + 1, 0});
    std::vector<int> idx(g.m());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        const Edge &e = g.edges()[a], &f = g.edges()[b];
        return e.u != f.u ? e.u > f.u : e.v > f.v;
    });
    for (int t = 0; t < g.m(); ++t) d.bends[idx[t]] = Point{t + 1, 1};
    return d;
}

inline bool polylines_intersect(const GeometricDrawing& d, int e, int f) {
    const Edge &a = d.graph.edges()[e], &b = d.graph.edges()[f];
    const Point pa[2] = {d.at(a.u), d.at(a.v)}, pb[2] = {d.at(b.u), d.at(b.v)};
    for (const auto& x : pa)
        for (const auto& y : pb)
            if (segments_intersect(x, d.bends[e], y, d.bends[f])) return true;
    return false;
}

// Pairs of 1-bend edges that do not meet at all.
inline std::vector<std::pair<Edge, Edge>> non_intersecting_polyline_pairs(const GeometricDrawing& d) {
    require(static_cast<int>(d.bends.size()) == d.graph.m(), "drawing has no bend per edge");
    std::vector<std::pair<Edge, Edge>> out;
    for (int e = 0; e < d.graph.m(); ++e)
        for (int f = e + 1; f < d.graph.m(); ++f)
            if (!polylines_intersect(d, e, f)) out.emplace_back(d.graph.edges()[e], d.graph.edges()[f]);
    return out;
}

// Edge pairs of a straight-line drawing that do not intersect exactly once.
inline std::vector<std::pair<Edge, Edge>> non_thrackle_pairs(const GeometricDrawing& d) {
    std::vector<std::pair<Edge, Edge>> out;
    const auto& E = d.graph.edges();
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j)
            if (edge_relation(d, E[i], E[j]) == SegmentRelation::disjoint) out.emplace_back(E[i], E[j]);
    return out;
}

// True when the straight-line drawing of the 2-claw is not a thrackle.
inline bool check_not_geometric_thrackle(const GeometricDrawing& d) {
    require(d.graph == two_claw(), "drawing is not of the 2-claw");
    if (auto why = drawing_defect(d)) throw InvalidInput("invalid drawing: " + *why);
    return !non_thrackle_pairs(d).empty();
}

// Random valid placement with coordinates num/den, |num| <= range, 1 <= den <= 16.
template <class Rng>
GeometricDrawing random_rational_placement(const Graph& g, Rng& rng, int range = 1000) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 16);
    for (;;) {
        GeometricDrawing d{g, {}, {}, {}};
        for (int v = 0; v < g.n(); ++v) {
            mpq_class x(num(rng), den(rng)), y(num(rng), den(rng));
            x.canonicalize();
            y.canonicalize();
            d.points.push_back({x, y});
        }
        if (!drawing_defect(d)) return d;
    }
}

}  // namespace thrackle
