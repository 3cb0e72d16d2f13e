#pragma once

#include <gmpxx.h>

#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "convex.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "linear_layout.hpp"
#include "oracles.hpp"
#include "planarity.hpp"
#include "track_layout.hpp"

namespace thrackle {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
    return j.get<int>();
}

inline std::vector<int> as_int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

inline Edge as_edge(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidInput("edge must be a pair [u, v]");
    int u = as_int(j[0], "edge endpoint"), v = as_int(j[1], "edge endpoint");
    require(u != v, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is a loop");
    return Edge(u, v);
}

inline Edge parse_edge_key(const std::string& key) {
    int u, v;
    char tail;
    if (std::sscanf(key.c_str(), "%d-%d%c", &u, &v, &tail) != 2) throw InvalidInput("edge key \"" + key + "\" is not u-v");
    require(u != v, "edge key \"" + key + "\" is a loop");
    return Edge(u, v);
}

inline mpq_class parse_rational(const Json& j) {
    if (!j.is_string()) throw InvalidInput("coordinates must be rational strings");
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("\"" + j.get<std::string>() + "\" is not a rational");
    if (q.get_den() == 0) throw InvalidInput("zero denominator in \"" + j.get<std::string>() + "\"");
    q.canonicalize();
    return q;
}

inline std::string rational_string(const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() + "/1" : q.get_str();
}

inline Json point_json(const Point& p) { return Json::array({rational_string(p.x), rational_string(p.y)}); }

inline Point as_point(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidInput("point must be [x, y]");
    return {parse_rational(j[0]), parse_rational(j[1])};
}

}  // namespace detail

inline Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json edges_json(const std::vector<Edge>& es) {
    Json a = Json::array();
    for (const Edge& e : es) a.push_back(edge_json(e));
    return a;
}

inline Json classes_json(const EdgePartition& p) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(edges_json(c));
    return a;
}

inline EdgePartition classes_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("classes must be an array");
    EdgePartition p;
    for (const auto& c : j) {
        if (!c.is_array()) throw InvalidInput("each class must be an array of edges");
        EdgeClass cl;
        for (const auto& e : c) cl.push_back(detail::as_edge(e));
        p.push_back(cl);
    }
    return p;
}

inline Json graph_json(const Graph& g) { return Json{{"n", g.n()}, {"edges", edges_json(g.edges())}}; }

inline Graph graph_from_json(const Json& j) {
    int n = detail::as_int(detail::field(j, "n"), "n");
    require(n >= 0, "n must be nonnegative");
    const Json& es = detail::field(j, "edges");
    if (!es.is_array()) throw InvalidInput("edges must be an array");
    std::vector<Edge> edges;
    for (const auto& e : es) edges.push_back(detail::as_edge(e));
    return Graph(n, edges);
}

inline Json linear_layout_json(const Graph& g, const LinearLayout& L) {
    return Json{{"type", "linear-layout"},
                {"graph", graph_json(g)},
                {"ordering", L.ordering},
                {"classes", classes_json(L.classes)},
                {"kind", to_string(L.kind)}};
}

inline LinearLayout linear_layout_from_json(const Json& j) {
    LinearLayout L;
    L.ordering = detail::as_int_list(detail::field(j, "ordering"), "ordering");
    L.classes = classes_from_json(detail::field(j, "classes"));
    const Json& k = detail::field(j, "kind");
    if (k == "stack")
        L.kind = LayoutKind::stack;
    else if (k == "queue")
        L.kind = LayoutKind::queue;
    else
        throw InvalidInput("kind must be \"stack\" or \"queue\"");
    return L;
}

inline Json track_layout_json(const TrackLayout& L) {
    Json colors = Json::object();
    for (int i = 0; i < L.graph.m(); ++i) colors[to_string(L.graph.edges()[i])] = L.colors[i];
    return Json{{"type", "track-layout"}, {"graph", graph_json(L.graph)}, {"tracks", L.tracks}, {"colors", colors}};
}

inline TrackLayout track_layout_from_json(const Json& j) {
    Graph g = graph_from_json(detail::field(j, "graph"));
    const Json& tr = detail::field(j, "tracks");
    if (!tr.is_array()) throw InvalidInput("tracks must be an array");
    std::vector<std::vector<int>> tracks;
    for (const auto& t : tr) tracks.push_back(detail::as_int_list(t, "track"));
    const Json& cj = detail::field(j, "colors");
    if (!cj.is_object()) throw InvalidInput("colors must map \"u-v\" to a color");
    std::vector<int> colors(g.m(), -1);
    for (const auto& [key, c] : cj.items()) {
        Edge e = detail::parse_edge_key(key);
        require(g.has_edge(e), "colored edge " + key + " is not in the graph");
        colors[g.index_of(e)] = detail::as_int(c, "color");
    }
    for (int i = 0; i < g.m(); ++i) require(colors[i] >= 0, "edge " + to_string(g.edges()[i]) + " has no color");
    return TrackLayout{std::move(g), std::move(tracks), std::move(colors)};
}

inline Json two_track_json(const TwoTrackDrawing& d, const EdgePartition& classes, PairRelation forbidden) {
    return Json{{"type", "two-track"},      {"graph", graph_json(d.graph)},  {"top", d.top},
                {"bottom", d.bottom},       {"classes", classes_json(classes)},
                {"forbidden", to_string(forbidden)}};
}

inline Json convex_drawing_json(const ConvexDrawing& d) {
    return Json{{"type", "convex-drawing"},
                {"graph", graph_json(d.graph)},
                {"circular", d.circular},
                {"classes", classes_json(d.classes)}};
}

inline ConvexDrawing convex_drawing_from_json(const Json& j) {
    return ConvexDrawing{graph_from_json(detail::field(j, "graph")),
                         detail::as_int_list(detail::field(j, "circular"), "circular"),
                         classes_from_json(detail::field(j, "classes"))};
}

inline Json walecki_json(const WaleckiPartition& w) {
    return Json{{"type", "walecki"}, {"graph", graph_json(w.graph)}, {"classes", classes_json(w.classes)}};
}

// Partition whose classes are each claimed planar.
inline Json planar_partition_json(const Graph& g, const EdgePartition& classes) {
    return Json{{"type", "planar-partition"}, {"graph", graph_json(g)}, {"classes", classes_json(classes)}};
}

// Property claimed by a geometric drawing: color classes noncrossing, color classes thrackles,
// or every pair of edges intersecting.
inline Json geometric_drawing_json(const GeometricDrawing& d, const std::string& property) {
    Json pts = Json::object();
    for (int v = 0; v < d.graph.n(); ++v) pts[std::to_string(v)] = detail::point_json(d.points[v]);
    Json out{{"type", "geometric-drawing"}, {"property", property}, {"n", d.graph.n()}, {"points", pts},
             {"edges", edges_json(d.graph.edges())}, {"colors", d.colors}};
    if (d.is_polyline()) {
        Json b = Json::array();
        for (const auto& p : d.bends) b.push_back(detail::point_json(p));
        out["bends"] = b;
    }
    return out;
}

inline GeometricDrawing geometric_drawing_from_json(const Json& j) {
    const Json& pts = detail::field(j, "points");
    if (!pts.is_object()) throw InvalidInput("points must map vertex ids to [x, y]");
    int n = j.contains("n") ? detail::as_int(j.at("n"), "n") : static_cast<int>(pts.size());
    require(n >= 0, "n must be nonnegative");
    std::vector<Point> points(n);
    std::vector<char> seen(n, 0);
    for (const auto& [key, p] : pts.items()) {
        int v;
        char tail;
        if (std::sscanf(key.c_str(), "%d%c", &v, &tail) != 1 || v < 0 || v >= n)
            throw InvalidInput("point key \"" + key + "\" is not a vertex id");
        points[v] = detail::as_point(p);
        seen[v] = 1;
    }
    for (int v = 0; v < n; ++v) require(seen[v], "vertex " + std::to_string(v) + " has no point");
    const Json& es = detail::field(j, "edges");
    if (!es.is_array()) throw InvalidInput("edges must be an array");
    std::vector<Edge> edges;
    for (const auto& e : es) edges.push_back(detail::as_edge(e));
    // Colors and bends follow the listed edge order; reorder to the sorted graph edges.
    Graph g(n, edges);
    std::vector<int> colors;
    if (j.contains("colors")) {
        auto c = detail::as_int_list(j.at("colors"), "color");
        require(c.empty() || c.size() == edges.size(), "colors must match edges");
        if (!c.empty()) {
            colors.assign(g.m(), 0);
            for (std::size_t i = 0; i < edges.size(); ++i) colors[g.index_of(edges[i])] = c[i];
        }
    }
    std::vector<Point> bends;
    if (j.contains("bends")) {
        const Json& b = j.at("bends");
        require(b.is_array() && b.size() == edges.size(), "bends must match edges");
        bends.resize(g.m());
        for (std::size_t i = 0; i < edges.size(); ++i) bends[g.index_of(edges[i])] = detail::as_point(b[i]);
    }
    return GeometricDrawing{std::move(g), std::move(points), std::move(colors), std::move(bends)};
}

inline Json parameter_result_json(const std::string& parameter, const Graph& g, const ParameterResult& r, bool timing) {
    Json cert = Json::object();
    if (!r.ordering.empty()) cert["ordering"] = r.ordering;
    if (!r.tracks.empty()) cert["tracks"] = r.tracks;
    if (!r.classes.empty()) cert["classes"] = classes_json(r.classes);
    Json out{{"type", "parameter-result"}, {"parameter", parameter}, {"graph", graph_json(g)}, {"value", r.value},
             {"certificate", cert},         {"nodes", r.nodes},       {"note", r.note}};
    if (timing) out["elapsed"] = r.elapsed;
    return out;
}

namespace detail {

inline PairRelation relation_from_string(const std::string& s) {
    if (s == "cross") return PairRelation::cross;
    if (s == "disjoint") return PairRelation::disjoint;
    if (s == "nest") return PairRelation::nest;
    throw InvalidInput("forbidden relation must be cross, disjoint or nest");
}

inline std::string count_summary(std::size_t classes, const Graph& g) {
    return std::to_string(classes) + " classes over " + std::to_string(g.m()) + " edges";
}

inline std::string verify_certificate(const Json& j) {
    Graph g = graph_from_json(field(j, "graph"));
    const std::string param = field(j, "parameter").get<std::string>();
    const int value = as_int(field(j, "value"), "value");
    const Json& cert = field(j, "certificate");
    EdgePartition classes = cert.contains("classes") ? classes_from_json(cert.at("classes")) : EdgePartition{};
    if (param == "convex-antithickness" || param == "book-thickness" || param == "queue-number" ||
        param == "two-track-thickness") {
        if (static_cast<int>(classes.size()) != value)
            throw VerificationFailure("certificate has " + std::to_string(classes.size()) + " classes, value is " +
                                      std::to_string(value));
    }
    if (param == "convex-antithickness") {
        validate_convex_partition({g, as_int_list(field(cert, "ordering"), "ordering"), classes});
    } else if (param == "book-thickness" || param == "queue-number") {
        LinearLayout L{as_int_list(field(cert, "ordering"), "ordering"), classes,
                       param == "book-thickness" ? LayoutKind::stack : LayoutKind::queue};
        validate_linear_layout(g, L);
    } else if (param == "two-track-thickness") {
        const Json& tr = field(cert, "tracks");
        if (!tr.is_array() || tr.size() != 2) throw InvalidInput("two-track certificate needs two tracks");
        validate_two_track_classes({g, as_int_list(tr[0], "track"), as_int_list(tr[1], "track")}, classes,
                                   PairRelation::cross);
    }
    return param + " = " + std::to_string(value) + ", certificate re-verified";
}

inline std::string verify_geometric(const Json& j) {
    GeometricDrawing d = geometric_drawing_from_json(j);
    const std::string property = j.contains("property") ? j.at("property").get<std::string>() : "valid";
    if (property == "all-intersecting") {
        auto bad = non_intersecting_polyline_pairs(d);
        if (!bad.empty())
            throw VerificationFailure("edges " + to_string(bad[0].first) + " and " + to_string(bad[0].second) +
                                      " do not intersect");
        return "all " + std::to_string(d.graph.m()) + " polylines pairwise intersect";
    }
    validate_drawing(d);
    if (property == "noncrossing") {
        if (d.colors.empty()) throw InvalidInput("noncrossing drawings need colors");
        auto bad = monochromatic_crossings(d);
        if (!bad.empty())
            throw VerificationFailure("edges " + to_string(bad[0].first) + " and " + to_string(bad[0].second) +
                                      " cross within a color class");
        return std::to_string(d.color_count()) + " noncrossing color classes over " + std::to_string(d.graph.m()) + " edges";
    }
    if (property == "thrackle") {
        if (d.colors.empty()) throw InvalidInput("thrackle drawings need colors");
        const auto& E = d.graph.edges();
        for (int a = 0; a < d.graph.m(); ++a)
            for (int b = a + 1; b < d.graph.m(); ++b)
                if (d.colors[a] == d.colors[b] && edge_relation(d, E[a], E[b]) == SegmentRelation::disjoint)
                    throw VerificationFailure("class " + std::to_string(d.colors[a]) + " has disjoint pair " +
                                              to_string(E[a]) + ", " + to_string(E[b]));
        return std::to_string(d.color_count()) + " thrackle color classes over " + std::to_string(d.graph.m()) + " edges";
    }
    if (property != "valid") throw InvalidInput("unknown drawing property \"" + property + "\"");
    return "valid drawing with " + std::to_string(d.graph.m()) + " edges";
}

}  // namespace detail

// Re-checks every invariant of an emitted artifact; returns a one-line summary or throws.
inline std::string verify_document(const Json& j) {
    if (!j.is_object()) throw InvalidInput("document must be a JSON object");
    if (!j.contains("type")) {
        Graph g = graph_from_json(j);
        return "graph with " + std::to_string(g.n()) + " vertices and " + std::to_string(g.m()) + " edges";
    }
    const Json& tj = j.at("type");
    if (!tj.is_string()) throw InvalidInput("type must be a string");
    const std::string type = tj.get<std::string>();
    if (type == "linear-layout") {
        Graph g = graph_from_json(detail::field(j, "graph"));
        LinearLayout L = linear_layout_from_json(j);
        validate_linear_layout(g, L);
        return std::string(to_string(L.kind)) + " layout with " + detail::count_summary(L.classes.size(), g);
    }
    if (type == "track-layout") {
        TrackLayout L = track_layout_from_json(j);
        validate_track_layout_or_throw(L);
        return std::to_string(L.tracks.size()) + "-track layout with " + std::to_string(L.color_count()) + " colors";
    }
    if (type == "two-track") {
        TwoTrackDrawing d{graph_from_json(detail::field(j, "graph")), detail::as_int_list(detail::field(j, "top"), "top"),
                          detail::as_int_list(detail::field(j, "bottom"), "bottom")};
        EdgePartition p = classes_from_json(detail::field(j, "classes"));
        validate_two_track_classes(d, p, detail::relation_from_string(detail::field(j, "forbidden").get<std::string>()));
        return "2-track drawing with " + detail::count_summary(p.size(), d.graph);
    }
    if (type == "convex-drawing") {
        ConvexDrawing d = convex_drawing_from_json(j);
        validate_convex_partition(d);
        return "convex drawing with " + detail::count_summary(d.classes.size(), d.graph) + ", every class a thrackle";
    }
    if (type == "walecki") {
        WaleckiPartition w{graph_from_json(detail::field(j, "graph")), classes_from_json(detail::field(j, "classes"))};
        validate_walecki(w);
        return "Walecki partition with " + detail::count_summary(w.classes.size(), w.graph);
    }
    if (type == "planar-partition") {
        Graph g = graph_from_json(detail::field(j, "graph"));
        EdgePartition p = classes_from_json(detail::field(j, "classes"));
        validate_partition(g, p);
        for (std::size_t c = 0; c < p.size(); ++c)
            if (!planarity_check(Graph(g.n(), p[c]))) throw VerificationFailure("class " + std::to_string(c) + " is not planar");
        return "planar partition with " + detail::count_summary(p.size(), g);
    }
    if (type == "geometric-drawing") return detail::verify_geometric(j);
    if (type == "parameter-result") return detail::verify_certificate(j);
    throw InvalidInput("unknown document type \"" + type + "\"");
}

// SVG rendering.

inline const char* class_color(int c) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};
    return palette[c % 12];
}

namespace detail {

struct SvgCanvas {
    double minx, miny, maxx, maxy;
    std::ostringstream body;

    std::string finish() const {
        const double pad = 0.05 * std::max(maxx - minx, maxy - miny) + 1e-9;
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\""
            << minx - pad << ' ' << -(maxy + pad) << ' ' << (maxx - minx + 2 * pad) << ' ' << (maxy - miny + 2 * pad)
            << "\">\n"
            << body.str() << "</svg>\n";
        return out.str();
    }
};

}  // namespace detail

// Points are drawn with y up; the stroke width scales with the drawing.
inline std::string svg_geometric(const GeometricDrawing& d) {
    std::vector<std::pair<double, double>> xy;
    for (const auto& p : d.points) xy.emplace_back(p.x.get_d(), p.y.get_d());
    for (const auto& p : d.bends) xy.emplace_back(p.x.get_d(), p.y.get_d());
    detail::SvgCanvas cv{1e300, 1e300, -1e300, -1e300, {}};
    for (auto [x, y] : xy) {
        cv.minx = std::min(cv.minx, x), cv.maxx = std::max(cv.maxx, x);
        cv.miny = std::min(cv.miny, y), cv.maxy = std::max(cv.maxy, y);
    }
    if (xy.empty()) cv = {0, 0, 1, 1, {}};
    const double w = 0.004 * std::max(cv.maxx - cv.minx, cv.maxy - cv.miny) + 1e-9;
    for (int i = 0; i < d.graph.m(); ++i) {
        const Edge& e = d.graph.edges()[i];
        const char* col = d.colors.empty() ? "#000000" : class_color(d.colors[i]);
        cv.body << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"" << w << "\" points=\"";
        cv.body << xy[e.u].first << ',' << -xy[e.u].second << ' ';
        if (d.is_polyline()) cv.body << d.bends[i].x.get_d() << ',' << -d.bends[i].y.get_d() << ' ';
        cv.body << xy[e.v].first << ',' << -xy[e.v].second << "\"/>\n";
    }
    for (int v = 0; v < d.graph.n(); ++v)
        cv.body << "<circle cx=\"" << xy[v].first << "\" cy=\"" << -xy[v].second << "\" r=\"" << 2.5 * w
                << "\" fill=\"#000000\"><title>" << v << "</title></circle>\n";
    return cv.finish();
}

// Vertices on a unit circle in circular order, one stroke color per class.
inline std::string svg_convex(const ConvexDrawing& d) {
    GeometricDrawing g = convex_position_drawing(d.graph, d.circular);
    g.colors.assign(d.graph.m(), 0);
    for (std::size_t c = 0; c < d.classes.size(); ++c)
        for (const Edge& e : d.classes[c])
            if (d.graph.has_edge(e)) g.colors[d.graph.index_of(e)] = static_cast<int>(c);
    return svg_geometric(g);
}

}  // namespace thrackle
