// lamplight: build graphs, query distances and walk-TSP, run the embeddings
// and certify their claimed bounds.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lamplight/acceptance.hpp"
#include "lamplight/families.hpp"
#include "lamplight/json_io.hpp"
#include "lamplight/registry.hpp"

using namespace lamplight;

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::invalid_parameter, "cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        require(out.good(), Errc::invalid_parameter, "cannot write '" + out_path + "'");
        out << j.dump(2) << "\n";
    }
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        require(out.good(), Errc::invalid_parameter, "cannot write '" + out_path + "'");
        out << text;
    }
}

std::pair<Graph, std::optional<int>> load_graph(const std::string& path) {
    return graph_from_json(read_json_file(path));
}

PointedGraph load_pointed(const std::string& path, const std::string& basepoint_flag) {
    auto [g, bp] = load_graph(path);
    int base = 0;
    if (!basepoint_flag.empty())
        base = g.vertex(basepoint_flag);
    else if (bp)
        base = *bp;
    return PointedGraph(std::move(g), base);
}

std::vector<int> parse_legs(const std::string& csv) {
    std::vector<int> legs;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) legs.push_back(std::stoi(item));
    return legs;
}

NormP parse_norm(const std::string& p) {
    if (p == "1") return NormP::l1;
    if (p == "2") return NormP::l2;
    if (p == "inf") return NormP::linf;
    fail(Errc::invalid_parameter, "norm must be one of 1, 2, inf");
}

struct EmbedParams {
    int k = 0, n = 0, m = 0, gap = 1;
    double eps = 1.0;
    std::string p_norm = "inf";
    std::string graph_file, graph2_file, basepoint, basepoint2;
    std::string point_file, out, emit_target;
};

Json run_embed(const std::string& map, const EmbedParams& p, std::string* target_out_json) {
    Json point = read_json_file(p.point_file);

    if (map == "path-to-trees") {
        require(p.k >= 1, Errc::invalid_parameter, "path-to-trees needs --k");
        PathToTrees f(p.k);
        Graph path = build_path(p.k);
        auto img = f.map(lamp_state_from_json(path, point));
        return Json{{"left", img.first.str()}, {"right", img.second.str()}};
    }
    if (map == "hamming-coords" || map == "tree-to-hamming") {
        require(!p.graph_file.empty(), Errc::invalid_parameter, map + " needs --graph");
        auto pg = load_pointed(p.graph_file, p.basepoint);
        auto s = lamp_state_from_json(pg.graph, point);
        HammingPoint img = map == "hamming-coords"
                               ? hamming_coordinates(pg.graph, s)
                               : TreeToHamming(pg.graph, pg.basepoint).map(s);
        return Json{{"coords", img.coords}};
    }
    if (map == "binary-to-lamp-path") {
        require(p.k >= 1, Errc::invalid_parameter, "binary-to-lamp-path needs --k");
        BinaryToLampPath f(p.k);
        auto img = f.map(BinaryWord::parse(point.at("word").get<std::string>()));
        return lamp_state_to_json(f.path, img);
    }
    if (map == "hamming-to-lamp-complete") {
        require(p.k >= 1 && p.m >= 1, Errc::invalid_parameter,
                "hamming-to-lamp-complete needs --k and --m");
        HammingToLampComplete f(p.k, p.m);
        std::uint32_t subset = 0;
        for (const auto& i : point.at("set")) {
            int coord = i.get<int>();
            require(coord >= 1 && coord <= p.k, Errc::invalid_parameter,
                    "subset members must lie in 1..k");
            subset |= 1u << (coord - 1);
        }
        return lamp_state_to_json(f.complete, f.map(subset));
    }
    if (map == "complete-to-binary") {
        require(p.k >= 1, Errc::invalid_parameter, "complete-to-binary needs --k");
        CompleteToBinary f(p.k, p.eps);
        Graph kk = build_complete(p.k);
        return Json{{"word", f.map(kk.vertex(point.at("vertex").get<std::string>())).str()}};
    }
    if (map == "star-to-normed") {
        require(p.n >= 1 && p.k >= 1, Errc::invalid_parameter, "star-to-normed needs --n --k");
        StarToNormed f(p.n, p.k, parse_norm(p.p_norm));
        auto img = f.map(f.domain().vertex(point.at("vertex").get<std::string>()));
        return Json{{"coordinates", img.coordinates}};
    }
    if (map == "rose-to-euclidean") {
        require(p.n >= 1 && p.k >= 3, Errc::invalid_parameter, "rose-to-euclidean needs --n --k");
        RoseToEuclidean f(p.n, p.k);
        auto img = f.map(f.domain().vertex(point.at("vertex").get<std::string>()));
        return Json{{"coordinates", img.coordinates}};
    }
    if (map == "coalescence") {
        require(!p.graph_file.empty() && !p.graph2_file.empty(), Errc::invalid_parameter,
                "coalescence needs --graph and --graph2");
        CoalescenceEmbedding f(load_pointed(p.graph_file, p.basepoint),
                               load_pointed(p.graph2_file, p.basepoint2));
        auto img = f.map(lamp_state_from_json(f.co.pointed.graph, point));
        return Json{{"factor1", lamp_state_to_json(f.g1.graph, img.factor1)},
                    {"factor2", lamp_state_to_json(f.g2.graph, img.factor2)},
                    {"clover1", f.clover1.pointed.graph.label(img.clover1_vertex)},
                    {"clover2", f.clover2.pointed.graph.label(img.clover2_vertex)}};
    }
    if (map == "lamp-complete-to-lamp-binary") {
        require(p.k >= 1, Errc::invalid_parameter, "lamp-complete-to-lamp-binary needs --k");
        LampCompleteToLampBinary f(p.k, p.eps);
        auto img = f.map(lamp_state_from_json(f.domain_base(), point));
        if (target_out_json) *target_out_json = graph_to_json(f.target_tree()).dump(2) + "\n";
        return lamp_state_to_json(f.target_tree(), img);
    }
    if (map == "induced-complete-to-cycle") {
        require(p.k >= 2 && p.gap >= 1, Errc::invalid_parameter,
                "induced-complete-to-cycle needs --k and --gap");
        Graph cycle = build_cycle(p.k * p.gap);
        std::vector<int> image;
        for (int v = 0; v < p.k; ++v) image.push_back(v * p.gap);
        InducedMapM lift(GraphMap{build_complete(p.k), cycle, std::move(image), double(p.gap),
                                  double(p.gap) * (p.k / 2)},
                         p.m);
        auto img = lift.map(lamp_state_from_json(lift.f.src, point));
        if (target_out_json) *target_out_json = graph_to_json(cycle).dump(2) + "\n";
        return lamp_state_to_json(lift.f.tgt, img);
    }
    fail(Errc::invalid_parameter, "unknown map '" + map + "'");
}

CertifyInput build_certify_input(const std::string& map, const EmbedParams& p,
                                 int tree_size, const std::string& tree_kind,
                                 std::uint64_t seed) {
    if (map == "path-to-trees") return certify_path_to_trees(p.k);
    if (map == "tree-to-hamming") {
        if (!p.graph_file.empty()) {
            auto pg = load_pointed(p.graph_file, p.basepoint);
            return certify_tree_to_hamming(pg.graph, pg.basepoint);
        }
        require(tree_kind == "random", Errc::invalid_parameter,
                "tree-to-hamming needs --graph or --tree random --size N");
        Rng rng(seed);
        return certify_tree_to_hamming(random_tree(rng, tree_size), 0);
    }
    if (map == "binary-to-lamp-path") return certify_binary_to_lamp_path(p.k);
    if (map == "hamming-to-lamp-complete") return certify_hamming_to_lamp_complete(p.k, p.m);
    if (map == "complete-to-binary") return certify_complete_to_binary(p.k, p.eps);
    if (map == "star-to-normed") return certify_star_to_normed(p.n, p.k, parse_norm(p.p_norm));
    if (map == "rose-to-euclidean") return certify_rose_to_euclidean(p.n, p.k);
    if (map == "coalescence")
        return certify_coalescence(load_pointed(p.graph_file, p.basepoint),
                                   load_pointed(p.graph2_file, p.basepoint2));
    if (map == "lamp-complete-to-lamp-binary")
        return certify_lamp_complete_to_lamp_binary(p.k, p.eps);
    if (map == "induced-complete-to-cycle")
        return certify_induced_complete_to_cycle(p.k, p.gap, p.m);
    fail(Errc::invalid_parameter, "unknown map '" + map + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lamplighter-graph metrics, walk-TSP solvers and bi-Lipschitz embeddings"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for every randomized path");

    int exit_code = 0;

    // ---- gen
    auto* gen = app.add_subcommand("gen", "build a graph family and write it as JSON");
    std::string family, legs_csv, gen_out, gen_dot, gen_basepoint;
    int gen_k = 0, gen_n = 0;
    gen->add_option("--family", family, "path|cycle|complete|binary|star|rose|hamming|legs")
        ->required();
    gen->add_option("--k", gen_k, "size parameter k");
    gen->add_option("--n", gen_n, "count parameter n (star/rose branches)");
    gen->add_option("--legs", legs_csv, "comma-separated leg lengths for --family legs");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");
    gen->add_option("--dot", gen_dot, "also write a DOT rendering to this file");
    gen->add_option("--basepoint", gen_basepoint, "record this vertex as the basepoint");
    gen->callback([&] {
        Graph g = [&]() -> Graph {
            if (family == "path") return build_path(gen_k);
            if (family == "cycle") return build_cycle(gen_k);
            if (family == "complete") return build_complete(gen_k);
            if (family == "binary") return build_binary_tree(gen_k);
            if (family == "star") return build_star(gen_n, gen_k);
            if (family == "rose") return build_rose(gen_n, gen_k);
            if (family == "hamming") return build_hamming_graph(gen_k);
            if (family == "legs") return build_variable_leg_tree(parse_legs(legs_csv));
            fail(Errc::invalid_parameter, "unknown family '" + family + "'");
        }();
        std::optional<int> bp;
        if (!gen_basepoint.empty()) bp = g.vertex(gen_basepoint);
        emit(graph_to_json(g, bp), gen_out);
        if (!gen_dot.empty()) emit_text(graph_to_dot(g, bp), gen_dot);
    });

    // ---- dist
    auto* dist = app.add_subcommand("dist", "graph distance between two vertices");
    std::string dist_graph, dist_from, dist_to, dist_out;
    dist->add_option("--graph", dist_graph)->required();
    dist->add_option("--from", dist_from)->required();
    dist->add_option("--to", dist_to)->required();
    dist->add_option("-o,--out", dist_out);
    dist->callback([&] {
        auto [g, bp] = load_graph(dist_graph);
        emit(Json{{"distance", g.dist(g.vertex(dist_from), g.vertex(dist_to))}}, dist_out);
    });

    // ---- tsp
    auto* tsp = app.add_subcommand("tsp", "shortest walk visiting a target set");
    std::string tsp_graph, tsp_from, tsp_to, tsp_targets, tsp_instance, tsp_out;
    bool tsp_walk = false;
    tsp->add_option("--graph", tsp_graph);
    tsp->add_option("--from", tsp_from);
    tsp->add_option("--to", tsp_to);
    tsp->add_option("--targets", tsp_targets, "comma-separated vertex labels");
    tsp->add_option("--instance", tsp_instance, "instance JSON {graph, start, targets, end}");
    tsp->add_flag("--walk", tsp_walk, "include an optimal walk (trees only)");
    tsp->add_option("-o,--out", tsp_out);
    tsp->callback([&] {
        Graph g;
        std::string from, to;
        std::vector<std::string> target_labels;
        if (!tsp_instance.empty()) {
            Json inst = read_json_file(tsp_instance);
            g = graph_from_json(inst.at("graph")).first;
            from = inst.at("start").get<std::string>();
            to = inst.at("end").get<std::string>();
            for (const auto& t : inst.at("targets")) target_labels.push_back(t.get<std::string>());
        } else {
            require(!tsp_graph.empty(), Errc::invalid_parameter, "tsp needs --graph or --instance");
            g = load_graph(tsp_graph).first;
            from = tsp_from;
            to = tsp_to;
            std::stringstream ss(tsp_targets);
            std::string item;
            while (std::getline(ss, item, ',')) target_labels.push_back(item);
        }
        VertexSet targets = g.empty_vertex_set();
        for (const auto& l : target_labels) targets.set(static_cast<std::size_t>(g.vertex(l)));
        int x = g.vertex(from), y = g.vertex(to);
        int len = is_tree(g) ? tsp_tree(g, x, targets, y) : tsp_generic(g, x, targets, y);
        Json out{{"length", len}};
        if (tsp_walk) {
            auto walk = tsp_tree_walk(g, x, targets, y); // throws not-a-tree on cycles
            Json seq = Json::array();
            for (int v : walk.vertices) seq.push_back(g.label(v));
            out["walk"] = std::move(seq);
        }
        emit(out, tsp_out);
    });

    // ---- lamp-dist
    auto* ld = app.add_subcommand("lamp-dist", "lamplighter distance between two states");
    std::string ld_graph, ld_from, ld_to, ld_out;
    ld->add_option("--graph", ld_graph)->required();
    ld->add_option("--from", ld_from, "lamp state JSON file")->required();
    ld->add_option("--to", ld_to, "lamp state JSON file")->required();
    ld->add_option("-o,--out", ld_out);
    ld->callback([&] {
        auto [g, bp] = load_graph(ld_graph);
        auto u = lamp_state_from_json(g, read_json_file(ld_from));
        auto v = lamp_state_from_json(g, read_json_file(ld_to));
        int d = is_tree(g) ? lamp_distance_tree(g, u, v) : lamp_distance(g, u, v);
        emit(Json{{"distance", d}}, ld_out);
    });

    // ---- lamp-graph
    auto* lg = app.add_subcommand("lamp-graph", "explicit lamplighter graph of a base graph");
    std::string lg_graph, lg_out, lg_dot;
    lg->add_option("--graph", lg_graph)->required();
    lg->add_option("-o,--out", lg_out);
    lg->add_option("--dot", lg_dot);
    lg->callback([&] {
        auto [g, bp] = load_graph(lg_graph);
        if (!g.connected()) std::cerr << "warning: base graph is disconnected\n";
        auto la = build_lamplighter_graph(g);
        emit(graph_to_json(la), lg_out);
        if (!lg_dot.empty()) emit_text(graph_to_dot(la), lg_dot);
    });

    // ---- embed
    auto* embed = app.add_subcommand("embed", "apply one of the embedding maps to a point");
    std::string embed_map;
    EmbedParams ep;
    embed->add_option("--map", embed_map, "map name")->required();
    embed->add_option("--k", ep.k);
    embed->add_option("--n", ep.n);
    embed->add_option("--m", ep.m);
    embed->add_option("--gap", ep.gap);
    embed->add_option("--eps", ep.eps);
    embed->add_option("--p-norm", ep.p_norm, "1|2|inf");
    embed->add_option("--graph", ep.graph_file);
    embed->add_option("--graph2", ep.graph2_file);
    embed->add_option("--basepoint", ep.basepoint);
    embed->add_option("--basepoint2", ep.basepoint2);
    embed->add_option("--point", ep.point_file, "point JSON file")->required();
    embed->add_option("-o,--out", ep.out);
    embed->add_option("--emit-target", ep.emit_target, "write the target graph JSON here");
    embed->callback([&] {
        std::string target_json;
        Json img = run_embed(embed_map, ep, ep.emit_target.empty() ? nullptr : &target_json);
        emit(img, ep.out);
        if (!ep.emit_target.empty()) emit_text(target_json, ep.emit_target);
    });

    // ---- certify
    auto* cert = app.add_subcommand("certify", "measure a map's bounds against its claim");
    std::string cert_map, cert_tree_kind;
    EmbedParams cp;
    int cert_tree_size = 6;
    bool cert_exhaustive = false;
    std::uint64_t cert_samples = 0;
    double cert_tol = -1;
    cert->add_option("--map", cert_map)->required();
    cert->add_option("--k", cp.k);
    cert->add_option("--n", cp.n);
    cert->add_option("--m", cp.m);
    cert->add_option("--gap", cp.gap);
    cert->add_option("--eps", cp.eps);
    cert->add_option("--p-norm", cp.p_norm);
    cert->add_option("--graph", cp.graph_file);
    cert->add_option("--graph2", cp.graph2_file);
    cert->add_option("--basepoint", cp.basepoint);
    cert->add_option("--basepoint2", cp.basepoint2);
    cert->add_option("--tree", cert_tree_kind, "random: draw the domain tree from --seed");
    cert->add_option("--size", cert_tree_size, "random tree size");
    cert->add_flag("--exhaustive", cert_exhaustive, "sweep every point pair");
    cert->add_option("--sample", cert_samples, "sample this many pairs instead");
    cert->add_option("--tol", cert_tol, "verdict tolerance (default: exact / 1e-9)");
    cert->add_option("-o,--out", cp.out);
    cert->callback([&] {
        auto in = build_certify_input(cert_map, cp, cert_tree_size, cert_tree_kind, seed);
        require(cert_exhaustive || cert_samples > 0, Errc::invalid_parameter,
                "choose --exhaustive or --sample N");
        auto rep = certify(in, cert_exhaustive ? CertifyMode::exhaustive : CertifyMode::sampled,
                           cert_samples, seed, cert_tol);
        emit(report_to_json(rep), cp.out);
    });

    // ---- suite
    auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
    bool quick = false, full = false;
    suite->add_flag("--quick", quick, "reduced scale, finishes in seconds");
    suite->add_flag("--full", full, "full scale (default)");
    suite->callback([&] {
        auto level = quick && !full ? SuiteLevel::quick : SuiteLevel::full;
        bool all_pass = true;
        std::printf("%-4s %-6s %s\n", "id", "status", "criterion");
        for (const auto& r : run_acceptance(level)) {
            std::printf("%-4s %-6s %s\n     %s\n", r.id.c_str(), r.pass ? "PASS" : "FAIL",
                        r.title.c_str(), r.detail.c_str());
            all_pass = all_pass && r.pass;
        }
        std::printf("suite: %s\n", all_pass ? "all criteria pass" : "failures present");
        if (!all_pass) exit_code = 1;
    });

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
