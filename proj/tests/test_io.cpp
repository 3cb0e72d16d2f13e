#include <gtest/gtest.h>

#include "thrackle/io.hpp"

using namespace thrackle;

TEST(GraphJson, RoundTripAndSchema) {
    Graph g = nested_triangles(4);
    Json j = graph_json(g);
    EXPECT_EQ(j.dump(), graph_json(graph_from_json(Json::parse(j.dump()))).dump());
    EXPECT_EQ(graph_from_json(j), g);
    EXPECT_EQ(Json::parse(R"({"n":3,"edges":[[0,1],[1,2]]})"), graph_json(path_graph(3)));
    EXPECT_THROW(graph_from_json(Json::parse(R"({"edges":[]})")), InvalidInput);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"n":3,"edges":[[0,0]]})")), InvalidInput);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"n":3,"edges":[[0,5]]})")), InvalidInput);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"n":3,"edges":[[0,1,2]]})")), InvalidInput);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"n":"3","edges":[]})")), InvalidInput);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"n":3,"edges":[[0,1],[1,0]]})")), InvalidInput);
}

TEST(VerifyDocument, RoundTripsOfEveryArtifact) {
    Graph g = two_claw();
    auto L = greedy_queue_assign(g, bfs_ordering(g));
    EXPECT_NO_THROW(verify_document(Json::parse(linear_layout_json(g, L).dump())));

    auto tl = random_track_layout(complete_bipartite(2, 3), 2, 2, 0);
    ASSERT_TRUE(tl.has_value());
    Json tj = track_layout_json(*tl);
    EXPECT_NO_THROW(verify_document(tj));
    TrackLayout back = track_layout_from_json(tj);
    EXPECT_EQ(back.colors, tl->colors);
    EXPECT_EQ(back.tracks, tl->tracks);

    auto tt = tree_two_track_layout(g);
    EXPECT_NO_THROW(verify_document(two_track_json(tt.drawing, tt.classes, PairRelation::cross)));

    auto cd = complete_matching_partition(7);
    Json cj = convex_drawing_json(cd);
    EXPECT_NO_THROW(verify_document(cj));
    EXPECT_EQ(convex_drawing_from_json(cj).classes, cd.classes);

    EXPECT_NO_THROW(verify_document(walecki_json(walecki_partition(8))));

    auto ex = geometric_thickness_extremal(2, 2).drawing;
    Json gj = geometric_drawing_json(ex, "noncrossing");
    auto gb = geometric_drawing_from_json(Json::parse(gj.dump()));
    EXPECT_EQ(gb.points, ex.points);
    EXPECT_EQ(gb.colors, ex.colors);
    EXPECT_NO_THROW(verify_document(gj));
    EXPECT_NO_THROW(verify_document(geometric_drawing_json(knprime_antithickness2_drawing(4), "thrackle")));
    EXPECT_NO_THROW(verify_document(geometric_drawing_json(one_bend_all_intersecting(complete_graph(5)), "all-intersecting")));

    auto r = convex_antithickness_exact(complete_graph(6));
    EXPECT_NO_THROW(verify_document(parameter_result_json("convex-antithickness", complete_graph(6), r, false)));
    auto q = queue_number_exact(complete_graph(5));
    EXPECT_NO_THROW(verify_document(parameter_result_json("queue-number", complete_graph(5), q, false)));
    auto t = two_track_thickness_exact(two_claw());
    EXPECT_NO_THROW(verify_document(parameter_result_json("two-track-thickness", two_claw(), t, false)));

    auto cb = compatible_bijections(1);
    EdgePartition copies;
    for (const Graph& c : cb.copies) copies.push_back(c.edges());
    EXPECT_NO_THROW(verify_document(planar_partition_json(cb.combined, copies)));
    EXPECT_NO_THROW(verify_document(graph_json(g)));
}

TEST(VerifyDocument, FailuresNameTheOffendingPair) {
    ConvexDrawing bad{Graph(4, {{0, 1}, {2, 3}}), {0, 1, 2, 3}, {{{0, 1}, {2, 3}}}};
    try {
        verify_document(convex_drawing_json(bad));
        FAIL() << "expected a verification failure";
    } catch (const VerificationFailure& e) {
        EXPECT_NE(std::string(e.what()).find("0-1, 2-3"), std::string::npos) << e.what();
    }
    auto ex = geometric_thickness_extremal(2, 2).drawing;
    for (int& c : ex.colors) c = 0;
    EXPECT_THROW(verify_document(geometric_drawing_json(ex, "noncrossing")), VerificationFailure);
    Json lay = linear_layout_json(complete_graph(4), {identity_ordering(4), {complete_graph(4).edges()}, LayoutKind::queue});
    EXPECT_THROW(verify_document(lay), VerificationFailure);
    auto r = convex_antithickness_exact(complete_graph(5));
    r.value = 2;
    EXPECT_THROW(verify_document(parameter_result_json("convex-antithickness", complete_graph(5), r, false)),
                 VerificationFailure);
    EXPECT_THROW(verify_document(Json::parse(R"({"type":"mystery"})")), InvalidInput);
    Json gj = geometric_drawing_json(ex, "noncrossing");
    gj["points"]["0"] = Json::array({"1/0", "0"});
    EXPECT_THROW(verify_document(gj), InvalidInput);
}

TEST(GeometricJson, RationalStrings) {
    GeometricDrawing d{path_graph(2), {{mpq_class(1, 3), mpq_class(-2)}, {mpq_class(5, 2), mpq_class(0)}}, {}, {}};
    Json j = geometric_drawing_json(d, "valid");
    EXPECT_EQ(j["points"]["0"], Json::array({"1/3", "-2/1"}));
    EXPECT_EQ(geometric_drawing_from_json(j).points, d.points);
}

TEST(ParameterResultJson, TimingOnlyWhenAsked) {
    auto r = book_thickness_exact(complete_graph(5));
    EXPECT_FALSE(parameter_result_json("book-thickness", complete_graph(5), r, false).contains("elapsed"));
    EXPECT_TRUE(parameter_result_json("book-thickness", complete_graph(5), r, true).contains("elapsed"));
    EXPECT_EQ(parameter_result_json("book-thickness", complete_graph(5), r, false)["value"], 3);
}

TEST(Svg, Structure) {
    auto cd = complete_matching_partition(6);
    std::string s = svg_convex(cd);
    EXPECT_EQ(s.rfind("<?xml", 0), 0u);
    EXPECT_NE(s.find("version=\"1.1\""), std::string::npos);
    auto count = [&](const std::string& hay, const std::string& needle) {
        int c = 0;
        for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
        return c;
    };
    EXPECT_EQ(count(s, "<polyline"), 15);
    EXPECT_EQ(count(s, "<circle"), 6);
    std::string b = svg_geometric(one_bend_all_intersecting(complete_graph(4)));
    EXPECT_EQ(count(b, "<polyline"), 6);
    EXPECT_NE(b.find("</svg>"), std::string::npos);
}
