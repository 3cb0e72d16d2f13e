#include <gtest/gtest.h>

#include <random>

#include "thrackle/geometry.hpp"

using namespace thrackle;

namespace {

Point P(long x, long y) { return {mpq_class(x), mpq_class(y)}; }

// Floating-point crossing test used as an independent reference away from degeneracies.
bool float_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    auto o = [](const Point& p, const Point& q, const Point& r) {
        double v = (q.x.get_d() - p.x.get_d()) * (r.y.get_d() - p.y.get_d()) -
                   (q.y.get_d() - p.y.get_d()) * (r.x.get_d() - p.x.get_d());
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };
    return o(a, b, c) * o(a, b, d) < 0 && o(c, d, a) * o(c, d, b) < 0;
}

template <class Pred>
int max_pairwise_subset(int m, Pred pred) {
    int best = 0;
    for (unsigned s = 0; s < (1u << m); ++s) {
        int k = __builtin_popcount(s);
        if (k <= best) continue;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            if (s >> i & 1)
                for (int j = i + 1; j < m && ok; ++j)
                    if (s >> j & 1) ok = pred(i, j);
        if (ok) best = k;
    }
    return best;
}

}  // namespace

TEST(SegmentRelation, Examples) {
    EXPECT_EQ(segment_relation(P(0, 0), P(2, 2), P(0, 2), P(2, 0)), SegmentRelation::proper_crossing);
    EXPECT_EQ(segment_relation(P(0, 0), P(1, 0), P(2, 0), P(3, 0)), SegmentRelation::disjoint);
    EXPECT_EQ(segment_relation(P(0, 0), P(1, 1), P(1, 1), P(2, 0)), SegmentRelation::shared_endpoint);
    EXPECT_EQ(segment_relation(P(0, 0), P(2, 0), P(1, 0), P(3, 0)), SegmentRelation::invalid);
    EXPECT_EQ(segment_relation(P(0, 0), P(2, 0), P(1, 0), P(1, 5)), SegmentRelation::invalid);
    EXPECT_EQ(segment_relation(P(0, 0), P(2, 0), P(0, 0), P(1, 0)), SegmentRelation::invalid);
    EXPECT_EQ(segment_relation(P(0, 0), P(2, 0), P(0, 0), P(-1, 0)), SegmentRelation::shared_endpoint);
    EXPECT_EQ(segment_relation(P(0, 0), P(1, 0), P(1, 0), P(0, 0)), SegmentRelation::invalid);
    EXPECT_THROW(segment_relation(P(0, 0), P(0, 0), P(1, 0), P(2, 0)), InvalidInput);
}

TEST(SegmentRelation, AgreesWithFloatsAndAffineMaps) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-20, 20);
    for (int trial = 0; trial < 3000; ++trial) {
        Point a = P(c(rng), c(rng)), b = P(c(rng), c(rng)), p = P(c(rng), c(rng)), q = P(c(rng), c(rng));
        if (a == b || p == q) continue;
        auto r = segment_relation(a, b, p, q);
        if (orientation(a, b, p) && orientation(a, b, q) && orientation(p, q, a) && orientation(p, q, b))
            EXPECT_EQ(r == SegmentRelation::proper_crossing, float_cross(a, b, p, q));
        EXPECT_EQ(r, segment_relation(p, q, a, b));
        EXPECT_EQ(r, segment_relation(b, a, q, p));
        // Positive-determinant rational affine map.
        mpq_class m00(c(rng), 7), m01(c(rng), 3), m10(c(rng), 5), m11(c(rng), 2);
        if (m00 * m11 - m01 * m10 <= 0) std::swap(m00, m01), std::swap(m10, m11);
        if (m00 * m11 - m01 * m10 <= 0) continue;
        Point shift{mpq_class(c(rng), 11), mpq_class(c(rng), 13)};
        auto T = [&](const Point& x) {
            return Point{m00 * x.x + m01 * x.y + shift.x, m10 * x.x + m11 * x.y + shift.y};
        };
        EXPECT_EQ(r, segment_relation(T(a), T(b), T(p), T(q)));
    }
}

TEST(CirclePoint, ExactlyOnCircleAndOrdered) {
    for (int n : {3, 4, 7, 12}) {
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) pts.push_back(circle_point(2 * std::numbers::pi * i / n, 3));
        for (const auto& p : pts) EXPECT_EQ(p.x * p.x + p.y * p.y, 9);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j != i && j != (i + 1) % n) EXPECT_EQ(orientation(pts[i], pts[(i + 1) % n], pts[j]), 1);
    }
}

TEST(DrawingBounds, Examples) {
    auto k4 = convex_position_drawing(complete_graph(4), identity_ordering(4));
    auto b = drawing_thickness_antithickness_bounds(k4);
    EXPECT_EQ(b.max_crossing, 2);
    EXPECT_EQ(b.max_disjoint, 2);

    GeometricDrawing tm{Graph(6, {{0, 3}, {1, 4}, {2, 5}}), {}, {}, {}};
    for (int i = 0; i < 6; ++i) tm.points.push_back(circle_point(2 * std::numbers::pi * i / 6));
    b = drawing_thickness_antithickness_bounds(tm);
    EXPECT_EQ(b.max_crossing, 3);
    EXPECT_EQ(b.max_disjoint, 1);

    GeometricDrawing par{Graph(4, {{0, 1}, {2, 3}}), {P(0, 0), P(1, 0), P(0, 1), P(1, 1)}, {}, {}};
    b = drawing_thickness_antithickness_bounds(par);
    EXPECT_EQ(b.max_crossing, 1);
    EXPECT_EQ(b.max_disjoint, 2);

    auto big = convex_position_drawing(complete_graph(8), identity_ordering(8));
    EXPECT_THROW(drawing_thickness_antithickness_bounds(big), SizeCapError);
}

TEST(DrawingBounds, MatchSubsetOracle) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Edge> es;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                if (rng() % 3 == 0) es.emplace_back(i, j);
        if (es.size() > 14) es.resize(14);
        auto d = random_rational_placement(Graph(7, es), rng, 50);
        auto b = drawing_thickness_antithickness_bounds(d);
        const auto& E = d.graph.edges();
        auto rel = [&](int i, int j) { return edge_relation(d, E[i], E[j]); };
        EXPECT_EQ(b.max_crossing,
                  std::max(max_pairwise_subset(d.graph.m(), [&](int i, int j) { return rel(i, j) == SegmentRelation::proper_crossing; }),
                           d.graph.m() ? 1 : 0));
        EXPECT_EQ(b.max_disjoint,
                  std::max(max_pairwise_subset(d.graph.m(), [&](int i, int j) { return rel(i, j) == SegmentRelation::disjoint; }),
                           d.graph.m() ? 1 : 0));
    }
}

TEST(DrawingValidity, Rejections) {
    GeometricDrawing through{Graph(3, {{0, 2}}), {P(0, 0), P(1, 0), P(2, 0)}, {}, {}};
    EXPECT_TRUE(drawing_defect(through).has_value());
    GeometricDrawing same{Graph(2, {{0, 1}}), {P(0, 0), P(0, 0)}, {}, {}};
    EXPECT_THROW(validate_drawing(same), VerificationFailure);
    GeometricDrawing ok{Graph(3, {{0, 1}, {1, 2}}), {P(0, 0), P(1, 0), P(2, 1)}, {}, {}};
    EXPECT_FALSE(drawing_defect(ok).has_value());
}

TEST(Extremal, CountsCapsAndNoMonochromaticCrossing) {
    for (auto [k, s] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        auto ex = geometric_thickness_extremal(k, s);
        const auto& d = ex.drawing;
        const int n = 2 * k * s;
        EXPECT_EQ(d.graph.n(), n);
        EXPECT_EQ(d.graph.m(), k * (3 * n - 4 * k - 3)) << k << " " << s;
        EXPECT_EQ(d.graph.m(), extremal_edge_count(k, s));
        EXPECT_LE(d.graph.m(), geometric_thickness_upper_check(n, k));
        EXPECT_EQ(d.color_count(), k);
        EXPECT_FALSE(drawing_defect(d).has_value()) << *drawing_defect(d);
        // Independent pair scan with floats: every monochromatic pair is noncrossing.
        const auto& E = d.graph.edges();
        for (int i = 0; i < d.graph.m(); ++i)
            for (int j = i + 1; j < d.graph.m(); ++j)
                if (d.colors[i] == d.colors[j])
                    EXPECT_FALSE(float_cross(d.at(E[i].u), d.at(E[i].v), d.at(E[j].u), d.at(E[j].v)));
        EXPECT_TRUE(monochromatic_crossings(d).empty());
        // Each level lies on its circle in convex position.
        for (int a = 0; a < s; ++a) {
            const int K = 2 * k;
            for (int i = 0; i < K; ++i) {
                const Point& p = d.at(a * K + i);
                EXPECT_EQ(p.x * p.x + p.y * p.y, ex.radii[a] * ex.radii[a]);
                for (int j = 0; j < K; ++j)
                    if (j != i && j != (i + 1) % K)
                        EXPECT_EQ(orientation(p, d.at(a * K + (i + 1) % K), d.at(a * K + j)), -1);
            }
        }
    }
}

TEST(Extremal, SpecExamples) {
    EXPECT_EQ(geometric_thickness_extremal(2, 2).drawing.graph.m(), 26);
    EXPECT_EQ(extremal_edge_count(2, 4), 74);
    EXPECT_EQ(extremal_edge_count(3, 3), 117);
    EXPECT_EQ(geometric_thickness_upper_check(8, 2), 34);
    EXPECT_EQ(geometric_thickness_upper_check(4, 2), 2 * (5 * 2 - 5));
    EXPECT_EQ(geometric_thickness_upper_check(5, 1), 9);
    EXPECT_THROW(geometric_thickness_upper_check(3, 2), InvalidInput);
    EXPECT_THROW(geometric_thickness_extremal(2, 1), InvalidInput);
}

TEST(Extremal, FirstLevelIsBookEmbedding) {
    // Level-one color classes are noncrossing paths between (1,l) and (1,k+l).
    for (int k = 2; k <= 4; ++k) {
        auto d = geometric_thickness_extremal(k, 2).drawing;
        for (int l = 0; l < k; ++l) {
            std::vector<Edge> cls;
            for (int e = 0; e < d.graph.m(); ++e)
                if (d.colors[e] == l && d.graph.edges()[e].v < 2 * k) cls.push_back(d.graph.edges()[e]);
            Graph path(2 * k, cls);
            EXPECT_EQ(path.m(), 2 * k - 1);
            EXPECT_TRUE(is_tree(path));
            auto deg = path.degrees();
            EXPECT_EQ(deg[l], 1);
            EXPECT_EQ(deg[k + l], 1);
        }
    }
}

TEST(KnPrime, ThracklesAndInvariants) {
    for (int n = 3; n <= 5; ++n) {
        auto d = knprime_antithickness2_drawing(n);
        EXPECT_EQ(d.graph, complete_subdivision(n));
        EXPECT_FALSE(drawing_defect(d).has_value());
        EXPECT_TRUE(color_classes_are_thrackles(d)) << n;
        EXPECT_EQ(d.color_count(), 2);
        const auto& E = d.graph.edges();
        int blue_pairs = 0;
        for (int i = 0; i < d.graph.m(); ++i)
            for (int j = i + 1; j < d.graph.m(); ++j)
                if (d.colors[i] == d.colors[j] && d.colors[i] == 0) {
                    ++blue_pairs;
                    auto r = edge_relation(d, E[i], E[j]);
                    EXPECT_TRUE(r == SegmentRelation::proper_crossing || r == SegmentRelation::shared_endpoint);
                }
        EXPECT_EQ(blue_pairs, n * (n - 1) / 2 * (n * (n - 1) / 2 - 1) / 2);
        const int placements = (n - 2) * (n - 1) / 2;
        for (int t = 0; t <= placements; ++t) EXPECT_TRUE(knprime_invariants_hold(knprime_place(n, t))) << n << " " << t;
        if (n >= 4) EXPECT_GT(d.graph.m(), d.graph.n());
    }
    EXPECT_THROW(knprime_place(2), InvalidInput);
}

TEST(KnPrime, FirstStagePlacement) {
    auto st = knprime_place(4, 0);
    EXPECT_EQ(*st.points[0], P(2, 0));
    EXPECT_EQ(*st.points[3], P(8, 0));
    EXPECT_EQ(*st.points[division_vertex(4, 0, 1)], P(7, 1));
    EXPECT_EQ(*st.points[division_vertex(4, 2, 3)], P(3, 1));
    EXPECT_FALSE(st.points[division_vertex(4, 0, 2)].has_value());
}

TEST(OneBend, AllPairsIntersect) {
    auto p3 = one_bend_all_intersecting(path_graph(3));
    EXPECT_TRUE(non_intersecting_polyline_pairs(p3).empty());
    auto m2 = one_bend_all_intersecting(Graph(4, {{0, 1}, {2, 3}}));
    EXPECT_TRUE(non_intersecting_polyline_pairs(m2).empty());
    auto k4 = one_bend_all_intersecting(complete_graph(4));
    EXPECT_TRUE(non_intersecting_polyline_pairs(k4).empty());
    // Every graph on at most 5 vertices, and every graph on 6 vertices drawn from a sample of edge masks.
    for (int n = 2; n <= 5; ++n) {
        Graph kn = complete_graph(n);
        for (unsigned mask = 0; mask < (1u << kn.m()); ++mask) {
            std::vector<Edge> es;
            for (int e = 0; e < kn.m(); ++e)
                if (mask >> e & 1) es.push_back(kn.edges()[e]);
            EXPECT_TRUE(non_intersecting_polyline_pairs(one_bend_all_intersecting(Graph(n, es))).empty());
        }
    }
    Graph k6 = complete_graph(6);
    for (unsigned mask = 0; mask < (1u << 15); mask += 7) {
        std::vector<Edge> es;
        for (int e = 0; e < 15; ++e)
            if (mask >> e & 1) es.push_back(k6.edges()[e]);
        EXPECT_TRUE(non_intersecting_polyline_pairs(one_bend_all_intersecting(Graph(6, es))).empty());
    }
}

TEST(OneBend, IdentityOrderFailsForDisjointEdges) {
    // Bending edges in increasing order of left endpoint leaves disjoint edges apart.
    GeometricDrawing d{Graph(4, {{0, 1}, {2, 3}}), {P(1, 0), P(2, 0), P(3, 0), P(4, 0)}, {}, {P(1, 1), P(2, 1)}};
    EXPECT_EQ(non_intersecting_polyline_pairs(d).size(), 1u);
}

TEST(TwoClaw, RandomPlacementsAreNeverThrackles) {
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) EXPECT_TRUE(check_not_geometric_thrackle(random_rational_placement(two_claw(), rng)));
}

TEST(TwoClaw, SplitNeighboursGiveNamedFailure) {
    // r=0, v1..v3 = 1..3, w1..w3 = 4..6. v2 and v3 on opposite sides of line r v1.
    std::mt19937 rng(13);
    int checked = 0;
    while (checked < 200) {
        auto d = random_rational_placement(two_claw(), rng, 100);
        int s2 = orientation(d.at(0), d.at(1), d.at(2)), s3 = orientation(d.at(0), d.at(1), d.at(3));
        if (s2 * s3 >= 0) continue;
        ++checked;
        auto r2 = edge_relation(d, Edge(1, 4), Edge(0, 2)), r3 = edge_relation(d, Edge(1, 4), Edge(0, 3));
        EXPECT_TRUE(r2 == SegmentRelation::disjoint || r3 == SegmentRelation::disjoint);
    }
}

TEST(TwoClaw, Rejections) {
    GeometricDrawing path{path_graph(7), {}, {}, {}};
    for (int i = 0; i < 7; ++i) path.points.push_back(P(i, i * i));
    EXPECT_THROW(check_not_geometric_thrackle(path), InvalidInput);
    GeometricDrawing flat{two_claw(), {}, {}, {}};
    for (int i = 0; i < 7; ++i) flat.points.push_back(P(i, 0));
    EXPECT_THROW(check_not_geometric_thrackle(flat), InvalidInput);
}
