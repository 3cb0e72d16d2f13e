#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "thrackle/convex.hpp"
#include "thrackle/enclosure.hpp"
#include "thrackle/geometry.hpp"
#include "thrackle/graph.hpp"
#include "thrackle/io.hpp"
#include "thrackle/linear_layout.hpp"
#include "thrackle/oracles.hpp"
#include "thrackle/planarity.hpp"
#include "thrackle/track_layout.hpp"

using namespace thrackle;

namespace {

struct Options {
    std::string family, name, param, topic;
    std::string input = "-";
    std::string svg;
    int n = -1, k = -1, s = -1, a = -1, b = -1, l = -1;
    int tracks = 2, colors = 1, root = 0, attempts = kTrackLayoutAttempts;
    int jobs = 1, nmax = 16, cap = 16;
    int max_vertices = kDefaultCaps.max_vertices, max_edges = kDefaultCaps.max_edges, max_side = kDefaultCaps.max_side;
    double p = 0.5;
    unsigned seed = 0;
    bool timing = false;
};

Json read_document(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

void write_svg(const std::string& path, const std::string& svg) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << svg;
}

int need(int value, const char* flag) {
    require(value >= 0, std::string("missing ") + flag);
    return value;
}

Graph random_graph(int n, double p, unsigned seed) {
    require(n >= 0 && p >= 0 && p <= 1, "random graph needs n >= 0 and 0 <= p <= 1");
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.emplace_back(i, j);
    return Graph(n, es);
}

Graph random_tree(int n, unsigned seed) {
    require(n >= 1, "random tree needs n >= 1");
    std::mt19937 rng(seed);
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    return Graph(n, es);
}

Graph generate(const Options& o) {
    const std::string& f = o.family;
    if (f == "complete") return complete_graph(need(o.n, "--n"));
    if (f == "complete-bipartite") return complete_bipartite(need(o.a, "--a"), need(o.b, "--b"));
    if (f == "path") return path_graph(need(o.n, "--n"));
    if (f == "cycle") return cycle_graph(need(o.n, "--n"));
    if (f == "star") return star_graph(need(o.n, "--n"));
    if (f == "subdivision") return complete_subdivision(need(o.n, "--n"));
    if (f == "two-claw") return two_claw();
    if (f == "nested-triangles") return nested_triangles(need(o.n, "--n"));
    if (f == "compatible-union") return compatible_bijections(need(o.k, "--k")).combined;
    if (f == "circular") return circular_graph(need(o.n, "--n"), need(o.l, "--l")).graph;
    if (f == "singleton-tripleton") return singleton_tripleton_graph(need(o.n, "--n"));
    if (f == "random") return random_graph(need(o.n, "--n"), o.p, o.seed);
    if (f == "random-tree") return random_tree(need(o.n, "--n"), o.seed);
    if (f == "random-bipartite") {
        Graph kab = complete_bipartite(need(o.a, "--a"), need(o.b, "--b"));
        std::mt19937 rng(o.seed);
        std::bernoulli_distribution coin(o.p);
        std::vector<Edge> es;
        for (const Edge& e : kab.edges())
            if (coin(rng)) es.push_back(e);
        return Graph(kab.n(), es);
    }
    throw InvalidInput("unknown family \"" + f + "\"");
}

Graph input_graph(const Options& o) { return graph_from_json(read_document(o.input)); }

TwoTrackDrawing sides_as_tracks(const Graph& g) {
    auto side = bipartition(g);
    require(g.n() == 0 || !side.empty(), "graph is not bipartite");
    TwoTrackDrawing d{g, {}, {}};
    for (int v = 0; v < g.n(); ++v) (side[v] == 0 ? d.top : d.bottom).push_back(v);
    return d;
}

Json construct(const Options& o) {
    const std::string& c = o.name;
    auto convex_out = [&](const ConvexDrawing& d) {
        if (!o.svg.empty()) write_svg(o.svg, svg_convex(d));
        return convex_drawing_json(d);
    };
    auto geometric_out = [&](const GeometricDrawing& d, const std::string& property) {
        if (!o.svg.empty()) write_svg(o.svg, svg_geometric(d));
        return geometric_drawing_json(d, property);
    };
    auto no_svg = [&] { require(o.svg.empty(), "construction \"" + c + "\" has no SVG view"); };
    if (c == "complete-matching") {
        int n = o.n;
        if (n < 0) {
            Graph g = input_graph(o);
            require(g == complete_graph(g.n()), "complete-matching needs a complete graph");
            n = g.n();
        }
        return convex_out(complete_matching_partition(n));
    }
    if (c == "small-complete") return convex_out(small_complete_partition(need(o.n, "--n")));
    if (c == "convex-upper") return convex_out(convex_kn_upper_coloring(need(o.n, "--n")).drawing);
    if (c == "queue-arch") {
        Graph g = input_graph(o);
        ConvexDrawing d{g, identity_ordering(g.n()), {}};
        d.classes = convex_queue_arch_partition(d);
        return convex_out(d);
    }
    if (c == "compose") {
        TrackLayout L = track_layout_from_json(read_document(o.input));
        return convex_out(compose_track_to_convex(L, thrackled_matching_partition(static_cast<int>(L.tracks.size()))));
    }
    if (c == "queue-layout") {
        no_svg();
        Graph g = input_graph(o);
        return linear_layout_json(g, greedy_queue_assign(g, bfs_ordering(g, g.n() ? o.root : 0)));
    }
    if (c == "tree-two-track") {
        no_svg();
        auto t = tree_two_track_layout(input_graph(o), o.root);
        return two_track_json(t.drawing, t.classes, PairRelation::cross);
    }
    if (c == "two-track-thrackle" || c == "two-track-noncrossing") {
        no_svg();
        TwoTrackDrawing d = sides_as_tracks(input_graph(o));
        if (c == "two-track-thrackle") return two_track_json(d, two_track_thrackle_partition(d), PairRelation::disjoint);
        return two_track_json(d, two_track_noncrossing_partition(d), PairRelation::cross);
    }
    if (c == "track-layout") {
        no_svg();
        auto L = random_track_layout(input_graph(o), o.tracks, o.colors, o.seed, o.attempts);
        if (!L) throw ConstructionError("no valid track layout found within the attempt budget");
        return track_layout_json(*L);
    }
    if (c == "walecki") {
        no_svg();
        return walecki_json(walecki_partition(need(o.n, "--n")));
    }
    if (c == "compatible-bijections") {
        no_svg();
        auto cb = compatible_bijections(need(o.k, "--k"));
        EdgePartition copies;
        for (const Graph& g : cb.copies) copies.push_back(g.edges());
        return planar_partition_json(cb.combined, copies);
    }
    if (c == "geometric-extremal") return geometric_out(geometric_thickness_extremal(need(o.k, "--k"), need(o.s, "--s")).drawing, "noncrossing");
    if (c == "knprime") return geometric_out(knprime_antithickness2_drawing(need(o.n, "--n")), "thrackle");
    if (c == "one-bend") return geometric_out(one_bend_all_intersecting(input_graph(o)), "all-intersecting");
    throw InvalidInput("unknown construction \"" + c + "\"");
}

Json bounds_json(const std::string& param, const Bounds& b) {
    return Json{{"type", "bounds"}, {"parameter", param}, {"lower", b.lower}, {"upper", b.upper}};
}

Json solve(const Options& o) {
    const std::string& p = o.param;
    OracleCaps caps{o.max_vertices, o.max_edges, o.max_side, o.jobs};
    if (p == "drawing-bounds" || p == "not-geometric-thrackle") {
        GeometricDrawing d = geometric_drawing_from_json(read_document(o.input));
        if (p == "drawing-bounds") {
            auto b = drawing_thickness_antithickness_bounds(d);
            return Json{{"type", "drawing-bounds"}, {"max_crossing", b.max_crossing}, {"max_disjoint", b.max_disjoint}};
        }
        bool not_thrackle = check_not_geometric_thrackle(d);
        Json out{{"type", "two-claw-check"}, {"not_thrackle", not_thrackle}};
        auto bad = non_thrackle_pairs(d);
        if (!bad.empty()) out["disjoint_pair"] = Json::array({to_string(bad[0].first), to_string(bad[0].second)});
        if (!not_thrackle) throw VerificationFailure("placement is a geometric thrackle of the 2-claw");
        return out;
    }
    Graph g = input_graph(o);
    auto result = [&](const ParameterResult& r) {
        if (o.timing) std::cerr << "elapsed " << r.elapsed << " s\n";
        return parameter_result_json(p, g, r, o.timing);
    };
    if (p == "convex-antithickness") return result(convex_antithickness_exact(g, caps));
    if (p == "book-thickness") return result(book_thickness_exact(g, caps));
    if (p == "queue-number") return result(queue_number_exact(g, caps));
    if (p == "two-track-thickness") return result(two_track_thickness_exact(g, caps));
    if (p == "arboricity") return Json{{"type", "value"}, {"parameter", p}, {"value", arboricity(g, o.cap)}};
    if (p == "thickness-density") return Json{{"type", "value"}, {"parameter", p}, {"value", thickness_lower_by_density(g)}};
    if (p == "antithickness-bounds") return bounds_json(p, antithickness_bounds(g, o.cap));
    if (p == "complete-antithickness-bounds") {
        require(g == complete_graph(g.n()), "complete-antithickness-bounds needs a complete graph");
        return bounds_json(p, complete_antithickness_bounds(g.n()));
    }
    throw InvalidInput("unknown parameter \"" + p + "\"");
}

Json report(const Options& o, bool& all_hold) {
    require(o.topic == "bounds", "the only report is \"bounds\"");
    require(o.nmax >= 6, "--nmax must be at least 6");
    all_hold = true;
    Json ctn = Json::array();
    OracleCaps caps;
    caps.jobs = o.jobs;
    for (int n = 3; n <= std::min(o.nmax, 10); ++n) {
        int exact = convex_antithickness_exact(complete_graph(n), caps).value, formula = ctn_complete_formula(n);
        all_hold = all_hold && exact == formula;
        ctn.push_back({{"n", n}, {"oracle", exact}, {"formula", formula}, {"match", exact == formula}});
    }
    Json cm = Json::array();
    for (int n = 6; n <= o.nmax; ++n) {
        auto d = complete_matching_partition(n);
        long count = static_cast<long>(d.classes.size());
        bool below = complete_matching_count_below_bound(n, count);
        bool ok = count == complete_matching_class_count(n) && below && is_valid_convex_partition(d);
        all_hold = all_hold && ok;
        cm.push_back({{"n", n}, {"classes", count}, {"n_ln_2n", to_decimal((mpq_class(n) * ln(mpq_class(2 * n))).center(), 6)},
                      {"holds", ok}});
    }
    Json up = Json::array();
    for (int n = 6; n <= o.nmax; ++n) {
        auto u = convex_kn_upper_coloring(n);
        int count = static_cast<int>(u.drawing.classes.size());
        Enclosure bound = convex_kn_upper_bound(n);
        bool ok = is_valid_convex_partition(u.drawing) && certainly_leq(mpq_class(count), bound) &&
                  count >= convex_kn_lower_bound(n) && count >= ctn_complete_formula(n);
        all_hold = all_hold && ok;
        up.push_back({{"n", n}, {"classes", count}, {"upper_bound", to_decimal(bound.center(), 6)},
                      {"lower_bound", convex_kn_lower_bound(n)}, {"holds", ok}});
    }
    Json ex = Json::array();
    for (int k = 1; k <= 3; ++k)
        for (int s = 2; s <= 4 && 2 * k * s <= o.nmax; ++s) {
            auto d = geometric_thickness_extremal(k, s).drawing;
            const int n = 2 * k * s;
            bool ok = d.graph.m() == extremal_edge_count(k, s) && d.graph.m() <= geometric_thickness_upper_check(n, k) &&
                      monochromatic_crossings(d).empty();
            all_hold = all_hold && ok;
            ex.push_back({{"k", k}, {"s", s}, {"n", n}, {"edges", d.graph.m()}, {"formula", extremal_edge_count(k, s)},
                          {"cap", geometric_thickness_upper_check(n, k)}, {"holds", ok}});
        }
    return Json{{"type", "report"},
                {"topic", "bounds"},
                {"convex_antithickness_complete", ctn},
                {"complete_matching", cm},
                {"upper_coloring", up},
                {"geometric_extremal", ex},
                {"all_hold", all_hold}};
}

Json export_svg(const Options& o) {
    require(!o.svg.empty(), "export needs --svg");
    Json j = read_document(o.input);
    verify_document(j);
    const std::string type = j.value("type", "");
    if (type == "convex-drawing") {
        write_svg(o.svg, svg_convex(convex_drawing_from_json(j)));
    } else if (type == "geometric-drawing") {
        write_svg(o.svg, svg_geometric(geometric_drawing_from_json(j)));
    } else if (type == "linear-layout" || type == "walecki") {
        ConvexDrawing d{graph_from_json(j.at("graph")), {}, classes_from_json(j.at("classes"))};
        d.circular = type == "linear-layout" ? linear_layout_from_json(j).ordering : identity_ordering(d.graph.n());
        write_svg(o.svg, svg_convex(d));
    } else {
        throw InvalidInput("no SVG view for this document");
    }
    return Json{{"type", "export"}, {"svg", o.svg}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thickness and antithickness layouts: constructions, verification and exact oracles"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "emit a graph family as Graph JSON");
    gen->add_option("family", o.family, "complete, complete-bipartite, path, cycle, star, subdivision, two-claw, "
                                        "nested-triangles, compatible-union, circular, singleton-tripleton, random, "
                                        "random-tree, random-bipartite")
        ->required();
    auto* con = app.add_subcommand("construct", "run a construction and emit its layout or drawing");
    con->add_option("name", o.name, "complete-matching, small-complete, convex-upper, queue-arch, compose, queue-layout, "
                                    "tree-two-track, two-track-thrackle, two-track-noncrossing, track-layout, walecki, "
                                    "compatible-bijections, geometric-extremal, knprime, one-bend")
        ->required();
    auto* ver = app.add_subcommand("verify", "re-check every invariant of an emitted document");
    ver->add_option("file", o.input, "document path, - for stdin");
    auto* sol = app.add_subcommand("solve", "compute a parameter exactly or bound it");
    sol->add_option("param", o.param, "convex-antithickness, book-thickness, queue-number, two-track-thickness, arboricity, "
                                      "thickness-density, antithickness-bounds, complete-antithickness-bounds, "
                                      "drawing-bounds, not-geometric-thrackle")
        ->required();
    sol->add_option("file", o.input, "input document, - for stdin");
    auto* rep = app.add_subcommand("report", "regenerate the bound tables");
    rep->add_option("topic", o.topic, "bounds")->required();
    auto* exp = app.add_subcommand("export", "render a convex or geometric document as SVG");
    exp->add_option("file", o.input, "document path, - for stdin");

    for (auto* sub : {gen, con}) {
        sub->add_option("--n", o.n, "vertex count");
        sub->add_option("--k", o.k, "parameter k");
        sub->add_option("--seed", o.seed, "random seed")->default_val(0);
    }
    gen->add_option("--a", o.a, "first side size");
    gen->add_option("--b", o.b, "second side size");
    gen->add_option("--l", o.l, "minimum boundary distance");
    gen->add_option("--p", o.p, "edge probability");
    con->add_option("--s", o.s, "number of levels");
    con->add_option("--input", o.input, "input document, - for stdin");
    con->add_option("--tracks", o.tracks, "track count");
    con->add_option("--colors", o.colors, "edge color count");
    con->add_option("--root", o.root, "root vertex");
    con->add_option("--attempts", o.attempts, "random orderings tried");
    con->add_option("--svg", o.svg, "also write an SVG file");
    exp->add_option("--svg", o.svg, "SVG output path");
    for (auto* sub : {sol, rep}) sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sol->add_flag("--timing", o.timing, "include elapsed time in the result");
    sol->add_option("--max-vertices", o.max_vertices, "vertex cap for ordering searches");
    sol->add_option("--max-edges", o.max_edges, "edge cap for auxiliary graphs");
    sol->add_option("--max-side", o.max_side, "per-side cap for two-track search");
    sol->add_option("--cap", o.cap, "vertex cap for arboricity");
    rep->add_option("--nmax", o.nmax, "largest n in the tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Json out;
        int code = 0;
        if (*gen) {
            out = graph_json(generate(o));
        } else if (*con) {
            out = construct(o);
        } else if (*ver) {
            std::string summary = verify_document(read_document(o.input));
            out = Json{{"type", "verification"}, {"valid", true}, {"summary", summary}};
        } else if (*sol) {
            out = solve(o);
        } else if (*rep) {
            bool all = true;
            out = report(o, all);
            code = all ? 0 : 1;
        } else if (*exp) {
            out = export_svg(o);
        }
        std::cout << out.dump() << '\n';
        return code;
    } catch (const SizeCapError& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return 1;
    } catch (const ConstructionError& e) {
        std::cerr << "construction failed: " << e.what() << '\n';
        return 1;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    }
}
