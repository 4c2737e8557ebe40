#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "domdraw/dag.hpp"
#include "domdraw/errors.hpp"
#include "domdraw/fips.hpp"
#include "domdraw/json_io.hpp"
#include "domdraw/md_tree.hpp"
#include "domdraw/optimizer.hpp"
#include "domdraw/reach_index.hpp"
#include "domdraw/reachability.hpp"
#include "domdraw/svg.hpp"

namespace {

using domdraw::Dag;
using domdraw::Drawing;
using nlohmann::json;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open input file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + out_path);
    f << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Dag load_graph(const std::string& path) { return domdraw::parse_edge_list(slurp(path)); }

struct DrawingFile {
    Drawing drawing;
    std::vector<std::int64_t> costs;
};

DrawingFile load_drawing(const std::string& path) {
    json j = json::parse(slurp(path));
    DrawingFile out;
    out.drawing = domdraw::drawing_from_json(j);
    if (j.is_object() && j.contains("costs")) {
        for (const json& c : j["costs"]) {
            if (!c.is_number_integer())
                throw std::invalid_argument("vertex costs must be integers");
            out.costs.push_back(c.get<std::int64_t>());
        }
    }
    return out;
}

Dag parse_gen_spec(const std::string& spec, std::optional<std::uint64_t> seed) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("generator spec must look like kind:args");
    std::string kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    std::vector<std::string> parts;
    std::stringstream ss(args);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    auto as_int = [](const std::string& s) {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
        return v;
    };
    if (kind == "chain" && parts.size() == 1) return domdraw::gen_chain(as_int(parts[0]));
    if (kind == "antichain" && parts.size() == 1)
        return domdraw::gen_antichain(as_int(parts[0]));
    if (kind == "crown" && parts.size() == 1) return domdraw::gen_crown(as_int(parts[0]));
    if (kind == "random" && (parts.size() == 2 || parts.size() == 3)) {
        int n = as_int(parts[0]);
        double p = std::stod(parts[1]);
        if (parts.size() == 3) seed = std::uint64_t(std::stoull(parts[2]));
        if (!seed) throw std::invalid_argument("random spec needs a seed (random:n,p,seed)");
        return domdraw::gen_random_dag(n, p, *seed);
    }
    throw std::invalid_argument("unknown generator spec '" + spec +
                                "' (use chain:n, antichain:n, crown:n, random:n,p,seed)");
}

void print_tree_text(const domdraw::MdNode& node, int depth, std::ostringstream& out) {
    out << std::string(std::size_t(depth) * 2, ' ') << to_string(node.kind) << " {";
    for (std::size_t i = 0; i < node.members.size(); ++i)
        out << (i ? " " : "") << node.members[i];
    out << "}\n";
    for (const auto& child : node.children) print_tree_text(child, depth + 1, out);
}

domdraw::Drawing checked_drawing(const Dag& g, const Drawing& dr) {
    if (auto bad = domdraw::first_invalid_dimension(g, dr))
        throw std::invalid_argument("dimension " + std::to_string(*bad) +
                                    " is not a topological order of the graph");
    return dr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak dominance drawings of dags with minimum falsely implied paths"};
    app.require_subcommand(1);

    std::string spec, input, drawing_path, format = "json", out_path;
    int dims = 2, d_max = 3, max_k = 9;
    std::uint64_t seed = 0;
    bool sweep = false;
    int qu = -1, qv = -1;

    auto* gen = app.add_subcommand("gen", "generate a graph (chain:n, antichain:n, "
                                          "crown:n, random:n,p,seed)");
    gen->add_option("spec", spec, "generator spec")->required();
    auto* gen_seed = gen->add_option("--seed", seed, "seed for random:n,p");
    gen->add_option("--out", out_path, "output path (default stdout)");

    auto* dec = app.add_subcommand("decompose", "modular decomposition tree and width k");
    dec->add_option("input", input, "edge-list file")->required();
    dec->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    dec->add_option("--out", out_path, "output path");

    auto* draw = app.add_subcommand("draw", "minimum-fip drawing via the decomposition");
    draw->add_option("input", input, "edge-list file")->required();
    draw->add_option("--dims", dims, "dimension count (default 2)");
    draw->add_option("--max-k", max_k, "decomposition width bound (default 9)");
    draw->add_option("--format", format, "json | text | svg")
        ->check(CLI::IsMember({"json", "text", "svg"}));
    draw->add_option("--out", out_path, "output path");

    auto* fipc = app.add_subcommand("fips", "falsely implied pairs of a drawing");
    fipc->add_option("input", input, "edge-list file")->required();
    fipc->add_option("drawing", drawing_path, "drawing JSON file")->required();
    fipc->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    fipc->add_option("--out", out_path, "output path");

    auto* dim = app.add_subcommand("dimension", "smallest dimension with a zero-fip drawing");
    dim->add_option("input", input, "edge-list file")->required();
    dim->add_option("--dims", d_max, "largest dimension to try (default 3)");
    dim->add_option("--max-k", max_k, "decomposition width bound (default 9)");
    dim->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    dim->add_option("--out", out_path, "output path");

    auto* query = app.add_subcommand("query", "reachability through a drawing index");
    query->add_option("input", input, "edge-list file")->required();
    query->add_option("drawing", drawing_path, "drawing JSON file")->required();
    auto* qu_opt = query->add_option("u", qu, "source vertex");
    auto* qv_opt = query->add_option("v", qv, "target vertex");
    query->add_flag("--sweep", sweep, "query every ordered pair and report stats");
    query->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    query->add_option("--out", out_path, "output path");

    auto* render = app.add_subcommand("render", "svg of a two-dimensional drawing");
    render->add_option("input", input, "edge-list file")->required();
    render->add_option("drawing", drawing_path, "drawing JSON file")->required();
    render->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dims < 1 || d_max < 1) throw std::invalid_argument("dimension must be at least 1");
        if ((draw->parsed() || dim->parsed()) && max_k < 2)
            throw std::invalid_argument("the width bound must be at least 2");
        domdraw::SearchOptions opts;
        opts.max_vertices = max_k;

        if (gen->parsed()) {
            std::optional<std::uint64_t> s;
            if (gen_seed->count() > 0) s = seed;
            emit(out_path, domdraw::write_edge_list(parse_gen_spec(spec, s)));
        } else if (dec->parsed()) {
            Dag g = load_graph(input);
            auto r = domdraw::transitive_closure(g);
            auto tree = domdraw::md_tree(g, r);
            if (format == "text") {
                std::ostringstream text;
                text << "k = " << tree.k() << "\n";
                print_tree_text(tree.root, 0, text);
                emit(out_path, text.str());
            } else {
                emit(out_path, dump(json{{"k", tree.k()},
                                         {"tree", domdraw::md_node_to_json(tree.root)}}));
            }
        } else if (draw->parsed()) {
            Dag g = load_graph(input);
            auto res = domdraw::fpt_min_fips(g, dims, opts);
            if (format == "svg") {
                emit(out_path, domdraw::render_svg(g, res.drawing));
            } else if (format == "text") {
                std::ostringstream text;
                text << "cost = " << res.cost << "\nk = " << res.k
                     << "\nexplored = " << res.explored << "\n";
                for (int d = 0; d < res.drawing.dims(); ++d) {
                    text << "dim " << d << ":";
                    for (int v : res.drawing.orders[d]) text << " " << v;
                    text << "\n";
                }
                emit(out_path, text.str());
            } else {
                emit(out_path, dump(domdraw::opt_result_to_json(res)));
            }
        } else if (fipc->parsed()) {
            Dag g = load_graph(input);
            auto r = domdraw::transitive_closure(g);
            DrawingFile df = load_drawing(drawing_path);
            checked_drawing(g, df.drawing);
            auto report = domdraw::fips(r, df.drawing, df.costs);
            if (format == "text") {
                std::ostringstream text;
                text << "count = " << report.count << "\ncost = " << report.cost << "\n";
                for (auto [u, v] : report.fips) text << u << " " << v << "\n";
                emit(out_path, text.str());
            } else {
                emit(out_path, dump(domdraw::fip_report_to_json(report)));
            }
        } else if (dim->parsed()) {
            Dag g = load_graph(input);
            auto answer = domdraw::dominance_dimension(g, d_max, opts);
            if (format == "text") {
                emit(out_path, answer ? std::to_string(*answer) + "\n"
                                      : "unknown above " + std::to_string(d_max) + "\n");
            } else {
                json j{{"d_max", d_max}};
                if (answer)
                    j["dimension"] = *answer;
                else
                    j["dimension"] = nullptr;
                emit(out_path, dump(j));
            }
        } else if (query->parsed()) {
            Dag g = load_graph(input);
            DrawingFile df = load_drawing(drawing_path);
            domdraw::ReachIndex index(g, df.drawing);
            if (sweep) {
                if (qu_opt->count() || qv_opt->count())
                    throw std::invalid_argument("--sweep takes no vertex pair");
                auto stats = index.sweep_stats();
                if (format == "text") {
                    std::ostringstream text;
                    text << "queries = " << stats.queries
                         << "\ncertificates = " << stats.certificates
                         << "\nfallbacks = " << stats.fallbacks
                         << "\nfallback_fips = " << stats.fallback_fips << "\n";
                    emit(out_path, text.str());
                } else {
                    emit(out_path, dump(domdraw::index_stats_to_json(stats)));
                }
            } else {
                if (!qu_opt->count() || !qv_opt->count())
                    throw std::invalid_argument("query needs u and v (or --sweep)");
                auto res = index.query(qu, qv);
                const char* method =
                    res.method == domdraw::QueryMethod::certificate ? "certificate"
                                                                    : "fallback";
                if (format == "text") {
                    emit(out_path, std::string(res.reachable ? "reachable" : "not_reachable") +
                                       " (" + method + ")\n");
                } else {
                    emit(out_path, dump(json{{"reachable", res.reachable},
                                             {"method", method}}));
                }
            }
        } else if (render->parsed()) {
            Dag g = load_graph(input);
            DrawingFile df = load_drawing(drawing_path);
            domdraw::SvgOptions svg_opts;
            svg_opts.highlight_fips = true;
            emit(out_path, domdraw::render_svg(g, df.drawing, svg_opts));
        }
    } catch (const domdraw::bound_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
