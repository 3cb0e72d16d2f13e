#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "thrackle/oracles.hpp"
#include "thrackle/planarity.hpp"

using namespace thrackle;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

// Chromatic number by trying every assignment with k colors, smallest k first.
int brute_chromatic(const std::vector<Mask>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> c(n, 0);
        for (;;) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n && ok; ++j)
                    if ((adj[i] >> j & 1) && c[i] == c[j]) ok = false;
            if (ok) return k;
            int i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
}

// Queue number by scanning all n! orderings.
int brute_queue_number(const Graph& g) {
    auto order = identity_ordering(g.n());
    int best = g.m();
    do best = std::min(best, max_rainbow(g, order));
    while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// Convex antithickness over all n! circular orders, coloring the disjointness graph by brute force.
int brute_convex_antithickness(const Graph& g) {
    auto order = identity_ordering(g.n());
    int best = g.m();
    do best = std::min(best, brute_chromatic(complement(convex_auxiliary_graph(g, order, AuxMode::crossing_or_adjacent).adj)));
    while (std::next_permutation(order.begin(), order.end()));
    return best;
}

int brute_book_thickness(const Graph& g) {
    auto order = identity_ordering(g.n());
    int best = g.m();
    do best = std::min(best, brute_chromatic(convex_auxiliary_graph(g, order, AuxMode::crossing).adj));
    while (std::next_permutation(order.begin(), order.end()));
    return best;
}

void expect_convex_certificate(const Graph& g, const ParameterResult& r) {
    ConvexDrawing d{g, r.ordering, r.classes};
    EXPECT_NO_THROW(validate_convex_partition(d));
    EXPECT_EQ(static_cast<int>(r.classes.size()), r.value);
}

void expect_book_certificate(const Graph& g, const ParameterResult& r) {
    LinearLayout L{r.ordering, r.classes, LayoutKind::stack};
    EXPECT_NO_THROW(validate_linear_layout(g, L));
    EXPECT_EQ(static_cast<int>(r.classes.size()), r.value);
}

}  // namespace

TEST(Coloring, MatchesBruteForce) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(3 + trial % 6, 0.5, rng);
        std::vector<Mask> adj(g.n(), 0);
        for (const Edge& e : g.edges()) adj[e.u] |= Mask{1} << e.v, adj[e.v] |= Mask{1} << e.u;
        EXPECT_EQ(chromatic_number(adj), brute_chromatic(adj));
        int chi = brute_chromatic(adj);
        EXPECT_FALSE(exact_coloring(adj, chi).has_value());
        auto c = exact_coloring(adj, chi + 1);
        ASSERT_TRUE(c.has_value());
        for (const Edge& e : g.edges()) EXPECT_NE((*c)[e.u], (*c)[e.v]);
    }
}

TEST(CliqueCover, ConvexCompleteExamples) {
    EXPECT_EQ(convex_drawing_antithickness(complete_graph(3), identity_ordering(3)).value, 1);
    EXPECT_EQ(convex_drawing_antithickness(complete_graph(4), identity_ordering(4)).value, 2);
    auto k6 = convex_drawing_antithickness(complete_graph(6), identity_ordering(6));
    EXPECT_EQ(k6.value, 3);
    expect_convex_certificate(complete_graph(6), k6);
    AuxiliaryGraph h = convex_auxiliary_graph(complete_graph(5), identity_ordering(5), AuxMode::crossing);
    AuxiliaryGraph hp = convex_auxiliary_graph(complete_graph(5), identity_ordering(5), AuxMode::crossing_or_adjacent);
    for (int i = 0; i < h.size(); ++i) EXPECT_EQ(h.adj[i] & ~hp.adj[i], 0u);
    EXPECT_THROW(min_clique_cover(hp, 5), SizeCapError);
}

TEST(ConvexAntithickness, CompleteGraphsMatchFormula) {
    for (int n = 3; n <= 8; ++n) {
        auto r = convex_antithickness_exact(complete_graph(n));
        EXPECT_EQ(r.value, ctn_complete_formula(n)) << n;
        expect_convex_certificate(complete_graph(n), r);
    }
}

TEST(ConvexAntithickness, SmallExamplesAndBruteForce) {
    EXPECT_EQ(convex_antithickness_exact(path_graph(3)).value, 1);
    // Two disjoint edges placed to interleave cross, so they form one convex thrackle.
    auto m2 = convex_antithickness_exact(Graph(4, {{0, 1}, {2, 3}}));
    EXPECT_EQ(m2.value, 1);
    EXPECT_EQ(convex_drawing_antithickness(Graph(4, {{0, 1}, {2, 3}}), identity_ordering(4)).value, 2);
    EXPECT_EQ(convex_antithickness_exact(Graph(5, {})).value, 0);
    std::mt19937 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(4 + trial % 3, 0.5, rng);
        auto r = convex_antithickness_exact(g);
        EXPECT_EQ(r.value, brute_convex_antithickness(g));
        expect_convex_certificate(g, r);
    }
    OracleCaps threads;
    threads.jobs = 3;
    Graph pet = random_graph(7, 0.5, rng);
    EXPECT_EQ(convex_antithickness_exact(pet, threads).value, convex_antithickness_exact(pet).value);
    EXPECT_THROW(convex_antithickness_exact(path_graph(10)), SizeCapError);
}

TEST(BookThickness, ExamplesAndBruteForce) {
    EXPECT_EQ(book_thickness_exact(cycle_graph(6)).value, 1);
    EXPECT_EQ(book_thickness_exact(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {0, 3}})).value, 1);
    EXPECT_EQ(book_thickness_exact(complete_graph(4)).value, 2);
    auto k6 = book_thickness_exact(complete_graph(6));
    EXPECT_EQ(k6.value, 3);
    expect_book_certificate(complete_graph(6), k6);
    EXPECT_EQ(book_thickness_exact(complete_bipartite(2, 3)).value, 2);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(4 + trial % 3, 0.6, rng);
        auto r = book_thickness_exact(g);
        EXPECT_EQ(r.value, brute_book_thickness(g));
        expect_book_certificate(g, r);
        // Pages of a k-page book hold at most (k+1)n - 3k edges.
        if (r.value >= 1 && g.n() >= 3) EXPECT_LE(g.m(), (r.value + 1) * g.n() - 3 * r.value);
    }
}

TEST(QueueNumber, ExamplesAndBruteForce) {
    EXPECT_EQ(queue_number_exact(path_graph(6)).value, 1);
    EXPECT_EQ(queue_number_exact(complete_graph(4)).value, 2);
    EXPECT_EQ(queue_number_exact(two_claw()).value, 1);
    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(3 + trial % 5, 0.5, rng);
        auto r = queue_number_exact(g);
        EXPECT_EQ(r.value, g.m() ? brute_queue_number(g) : 0);
        if (g.m()) {
            EXPECT_EQ(max_rainbow(g, r.ordering), r.value);
            EXPECT_NO_THROW(validate_linear_layout(g, LinearLayout{r.ordering, r.classes, LayoutKind::queue}));
        }
    }
}

TEST(TwoTrackThickness, Examples) {
    auto claw = two_track_thickness_exact(two_claw());
    EXPECT_EQ(claw.value, 2);
    TwoTrackDrawing d{two_claw(), claw.tracks[0], claw.tracks[1]};
    EXPECT_NO_THROW(validate_two_track_classes(d, claw.classes, PairRelation::cross));
    // Caterpillar: spine 0-1-2 with legs.
    Graph cat(7, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}});
    EXPECT_EQ(two_track_thickness_exact(cat).value, 1);
    Graph k33 = complete_bipartite(3, 3);
    int v = two_track_thickness_exact(k33).value;
    EXPECT_EQ(v, 3);
    EXPECT_GT(k33.m(), (v - 1) * (k33.n() - (v - 1)));
    EXPECT_LE(k33.m(), v * (k33.n() - v));
    EXPECT_THROW(two_track_thickness_exact(complete_graph(3)), InvalidInput);
    EXPECT_EQ(two_track_thickness_exact(Graph(4, {{0, 1}, {2, 3}})).value, 1);
}

TEST(DensityAndBounds, Examples) {
    EXPECT_EQ(thickness_lower_by_density(complete_graph(5)), 2);
    EXPECT_EQ(thickness_lower_by_density(cycle_graph(8)), 1);
    auto cb = compatible_bijections(2);
    EXPECT_EQ(thickness_lower_by_density(cb.combined), 2);
    auto t = antithickness_bounds(path_graph(6));
    EXPECT_EQ(t.lower, 1);
    EXPECT_EQ(t.upper, 1);
    auto k5 = antithickness_bounds(complete_graph(5));
    EXPECT_EQ(k5.lower, 2);
    EXPECT_EQ(k5.upper, 3);
    auto k9 = antithickness_bounds(complete_graph(9));
    EXPECT_EQ(k9.lower, 3);
    EXPECT_EQ(k9.upper, 5);
    for (auto [n, lo, hi] : std::vector<std::tuple<int, int, int>>{{7, 3, 3}, {5, 2, 2}, {12, 4, 6}}) {
        auto b = complete_antithickness_bounds(n);
        EXPECT_EQ(b.lower, lo);
        EXPECT_EQ(b.upper, hi);
    }
}

TEST(Chains, QueueBookTrackAndMonotone) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(5 + trial % 2, 0.45, rng);
        int q = queue_number_exact(g).value, c = convex_antithickness_exact(g).value, b = book_thickness_exact(g).value;
        EXPECT_LE(q, c);
        EXPECT_LE(b, c);
        // Drop one edge: parameters do not increase.
        if (g.m() > 1) {
            std::vector<Edge> es(g.edges().begin() + 1, g.edges().end());
            Graph h(g.n(), es);
            EXPECT_LE(queue_number_exact(h).value, q);
            EXPECT_LE(convex_antithickness_exact(h).value, c);
            EXPECT_LE(book_thickness_exact(h).value, b);
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Edge> es;
        for (int a = 0; a < 3; ++a)
            for (int c = 3; c < 7; ++c)
                if (rng() % 2) es.emplace_back(a, c);
        Graph g(7, es);
        EXPECT_LE(book_thickness_exact(g).value, two_track_thickness_exact(g).value);
    }
}

TEST(Constructions, NeverBeatOracles) {
    for (int n = 3; n <= 8; ++n) {
        int exact = convex_antithickness_exact(complete_graph(n)).value;
        EXPECT_GE(static_cast<int>(convex_kn_upper_coloring(n).drawing.classes.size()), exact);
        EXPECT_GE(static_cast<int>(complete_matching_partition(n).classes.size()), exact);
    }
}
