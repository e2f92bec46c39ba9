// Command-line front end. Every command writes a JSON run report; see
// README.md for the command list and exit codes.

#include "stringgraph.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sg = stringgraph;

namespace {

enum Exit { ok = 0, other = 1, verification_failed = 2, precondition = 3, bad_input = 4, too_large = 5 };

struct Options {
    std::uint64_t seed = 0;
    std::string params_file;
    std::string strategy;
    std::string output;
    std::string verify = "on";
    bool inexact = false;
    bool timings = false;
};

Options opt;
std::string operation = "none";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sg::Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sg::Error("cannot write '" + path + "'");
    out << text;
}

sg::AlgorithmParams load_params() {
    sg::AlgorithmParams p;
    if (!opt.params_file.empty()) {
        const std::string text = read_file(opt.params_file);
        p = sg::parse_params(sg::io_detail::parse_json(text));
    }
    if (!opt.strategy.empty()) {
        auto s = sg::parse_strategy(opt.strategy);
        if (!s) throw sg::SchemaError("--strategy", "expected one of auto, exact, bfs_layer, degree_peel");
        p.strategy = *s;
    }
    return p;
}

bool verifying() { return opt.verify == "on"; }

struct Input {
    std::string digest;
    sg::Graph graph;
};

// A graph file is either a family (JSON, starting with '{') or an edge list.
Input load_graph(const std::string& path) {
    const std::string text = read_file(path);
    Input in{sg::fnv1a_digest(text), {}};
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        in.graph = sg::intersection_graph(sg::parse_family(text, opt.inexact));
    else
        in.graph = sg::parse_graph(text);
    return in;
}

std::pair<std::string, sg::Drawing> load_drawing(const std::string& path) {
    const std::string text = read_file(path);
    return {sg::fnv1a_digest(text), sg::parse_drawing(text, opt.inexact)};
}

sg::Verification witness_check(const sg::Graph& g, const sg::ExtractionWitness& w) {
    return sg::verify(g, w);
}

sg::Verification condition(bool ok, const std::string& what) {
    sg::Verification v;
    v.require(ok, what);
    return v;
}

int finish(sg::RunReport report, const std::chrono::steady_clock::time_point& start, bool report_to_stdout = false) {
    report.operation = operation;
    if (!verifying()) report.verification.reset();
    if (opt.timings)
        report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const std::string text = report.dump();
    if (report_to_stdout || opt.output.empty())
        std::cout << text;
    else
        write_file(opt.output, text);
    return report.failed() ? verification_failed : ok;
}

sg::GeneratorSpec build_spec(const std::string& spec_file, const std::string& kind, std::size_t count,
                             std::size_t bends, std::int64_t max_length, const std::vector<std::int64_t>& region) {
    sg::GeneratorSpec spec;
    if (!spec_file.empty()) {
        spec = sg::parse_generator_spec(sg::io_detail::parse_json(read_file(spec_file)));
    } else {
        auto k = sg::parse_generator_kind(kind);
        if (!k) throw sg::BadSpec("unknown generator kind '" + kind + "'");
        spec.kind = *k;
        spec.count = count;
        spec.seed = opt.seed;
        spec.bends = bends;
        spec.max_length = max_length;
        if (!region.empty()) {
            if (region.size() != 4) throw sg::BadSpec("--region takes xmin ymin xmax ymax");
            spec.region = {region[0], region[1], region[2], region[3]};
        }
    }
    sg::validate(spec);
    return spec;
}

sg::ReportJson error_json(const std::string& type, const std::string& message) {
    sg::ReportJson j;
    j["operation"] = operation;
    j["error"] = {{"type", type}, {"message", message}};
    return j;
}

int fail(const std::string& type, const std::string& message, int code,
         const std::optional<sg::VertexSet>& witness = std::nullopt) {
    auto j = error_json(type, message);
    if (witness) j["error"]["witness"] = *witness;
    std::cerr << "stringgraph: " << message << "\n";
    const std::string text = j.dump(2) + "\n";
    try {
        if (opt.output.empty() || operation == "gen" || operation == "build-graph")
            std::cout << text;
        else
            write_file(opt.output, text);
    } catch (const sg::Error&) {
        std::cout << text;
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"String graphs: construction, separators, extraction and quasiplanar drawings"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--seed", opt.seed, "Random seed for generators and surveys");
    app.add_option("--params", opt.params_file, "JSON file of algorithm parameters");
    app.add_option("--strategy", opt.strategy, "Separator strategy: auto, exact, bfs_layer, degree_peel");
    app.add_option("-o,--output", opt.output, "Output file");
    app.add_option("--verify", opt.verify, "Re-verify witnesses (on|off)")->check(CLI::IsMember({"on", "off"}));
    app.add_flag("--inexact", opt.inexact, "Accept floating-point coordinates at their binary value");
    app.add_flag("--timings", opt.timings, "Include wall-clock time in the report");

    const auto start = std::chrono::steady_clock::now();
    std::function<int()> run;

    // gen
    std::string gen_spec, gen_kind = "random_segments";
    std::size_t gen_count = 10, gen_bends = 2;
    std::int64_t gen_max_length = 0;
    std::vector<std::int64_t> gen_region;
    auto* gen = app.add_subcommand("gen", "Generate a string family or drawing");
    gen->add_option("--spec", gen_spec, "Generator spec JSON file");
    gen->add_option("--kind", gen_kind, "random_segments, random_polylines, convex_chords, grid_paths, "
                                        "disjoint_segments, all_crossing_segments");
    gen->add_option("--count,-n", gen_count, "Number of strings (vertices for convex_chords)");
    gen->add_option("--bends", gen_bends, "Bends per random polyline");
    gen->add_option("--max-length", gen_max_length, "Largest coordinate step (0: unbounded)");
    gen->add_option("--region", gen_region, "xmin ymin xmax ymax")->expected(4);
    gen->callback([&] {
        operation = "gen";
        run = [&] {
            const auto spec = build_spec(gen_spec, gen_kind, gen_count, gen_bends, gen_max_length, gen_region);
            const auto generated = sg::generate(spec);
            std::string data;
            sg::RunReport report;
            report.input_digest = sg::fnv1a_digest(sg::to_json(spec).dump());
            report.params = {{"spec", sg::to_json(spec)}};
            if (auto* fam = std::get_if<sg::StringFamily>(&generated)) {
                data = sg::emit_family(*fam);
                report.result = {{"type", "family"}, {"strings", fam->strings.size()}};
                report.verification = condition(sg::emit_family(sg::parse_family(data)) == data, "family round trip");
            } else {
                const auto& d = std::get<sg::Drawing>(generated);
                data = sg::emit_drawing(d);
                report.result = {{"type", "drawing"}, {"vertices", d.vertices.size()}, {"edges", d.edges.size()}};
                report.verification = condition(sg::emit_drawing(sg::parse_drawing(data)) == data, "drawing round trip");
            }
            report.result["digest"] = sg::fnv1a_digest(data);
            if (opt.output.empty()) {
                std::cout << data;
                return report.failed() && verifying() ? int(verification_failed) : int(ok);
            }
            write_file(opt.output, data);
            return finish(report, start, true);
        };
    });

    // build-graph
    std::string bg_input;
    bool bg_drawing = false;
    auto* bg = app.add_subcommand("build-graph", "Intersection graph of a family (or crossing graph of a drawing)");
    bg->add_option("input", bg_input, "Family or drawing JSON")->required();
    bg->add_flag("--drawing", bg_drawing, "Input is a drawing; build its crossing graph");
    bg->callback([&] {
        operation = "build-graph";
        run = [&] {
            const std::string text = read_file(bg_input);
            sg::Graph g = bg_drawing ? sg::crossing_graph(sg::parse_drawing(text, opt.inexact))
                                     : sg::intersection_graph(sg::parse_family(text, opt.inexact));
            const std::string data = sg::emit_graph(g);
            sg::RunReport report;
            report.input_digest = sg::fnv1a_digest(text);
            report.result = {{"n", g.n()}, {"m", g.m()}, {"labels", g.labels()}, {"digest", sg::fnv1a_digest(data)}};
            report.verification = condition(sg::parse_graph(data).edges() == g.edges(), "edge list round trip");
            if (opt.output.empty()) {
                std::cout << data;
                return report.failed() && verifying() ? int(verification_failed) : int(ok);
            }
            write_file(opt.output, data);
            return finish(report, start, true);
        };
    });

    // separator
    std::string sep_input;
    auto* sep = app.add_subcommand("separator", "Balanced separator of a graph");
    sep->add_option("input", sep_input, "Graph (edge list or family JSON)")->required();
    sep->callback([&] {
        operation = "separator";
        run = [&] {
            const auto params = load_params();
            auto in = load_graph(sep_input);
            auto part = sg::find_balanced_separator(in.graph, params.strategy);
            sg::RunReport report;
            report.input_digest = in.digest;
            report.params = {{"strategy", sg::to_string(params.strategy)}};
            report.result = sg::to_json(part);
            report.result["size"] = part.separator.size();
            report.result["cap"] = sg::balance_cap(in.graph.n());
            const std::string why = sg::separator_violation(in.graph, part);
            report.verification = condition(why.empty(), why);
            return finish(report, start);
        };
    });

    // extract
    auto* extract = app.add_subcommand("extract", "Extraction procedures");
    extract->require_subcommand(1);
    std::string ex_input;
    std::size_t ex_s = 2, ex_q = 1, ex_r = 3;
    double ex_eps = 0.0, ex_alpha = 0.0;
    auto add_extract = [&](const std::string& name, const std::string& help,
                           std::function<sg::ExtractionWitness(const sg::Graph&, const sg::AlgorithmParams&,
                                                               sg::ReportJson&)> body) {
        auto* sub = extract->add_subcommand(name, help);
        sub->add_option("input", ex_input, "Graph (edge list or family JSON)")->required();
        return std::make_pair(sub, [&, name, body] {
            operation = "extract " + name;
            run = [&, body] {
                const auto params = load_params();
                auto in = load_graph(ex_input);
                sg::RunReport report;
                report.input_digest = in.digest;
                report.params = sg::to_json(params);
                sg::ReportJson extra = sg::ReportJson::object();
                auto w = body(in.graph, params, extra);
                report.result = sg::to_json(w);
                for (auto& [k, v] : extra.items()) report.result[k] = v;
                report.verification = witness_check(in.graph, w);
                return finish(report, start);
            };
        });
    };
    {
        auto [sub, cb] = add_extract("independent", "Independent set of a K_{2^s}-free graph",
                                     [&](const sg::Graph& g, const sg::AlgorithmParams& p, sg::ReportJson& extra) {
                                         extra["s"] = ex_s;
                                         extra["floor"] = sg::independent_set_floor(g.n(), ex_s, p.c);
                                         return sg::independent_set(g, ex_s, p);
                                     });
        sub->add_option("--s", ex_s, "The graph is K_{2^s}-free")->required();
        sub->callback(cb);
    }
    {
        auto [sub, cb] = add_extract("qindep", "Set inducing no K_{2^q} in a K_{2^s}-free graph",
                                     [&](const sg::Graph& g, const sg::AlgorithmParams& p, sg::ReportJson& extra) {
                                         extra["s"] = ex_s;
                                         extra["q"] = ex_q;
                                         return sg::q_independent_set(g, ex_s, ex_q, p);
                                     });
        sub->add_option("--s", ex_s, "The graph is K_{2^s}-free")->required();
        sub->add_option("--q", ex_q, "Output is K_{2^q}-free")->required();
        sub->callback(cb);
    }
    {
        auto [sub, cb] = add_extract("kr1free", "K_{r-1}-free subgraph of a K_r-free graph",
                                     [&](const sg::Graph& g, const sg::AlgorithmParams& p, sg::ReportJson& extra) {
                                         extra["r"] = ex_r;
                                         return sg::kr1_free_subgraph(g, ex_r, p);
                                     });
        sub->add_option("--r", ex_r, "The graph is K_r-free")->required();
        sub->callback(cb);
    }
    {
        auto [sub, cb] = add_extract("halfclique", "K_{ceil(r/2)}-free subgraph of a K_r-free graph",
                                     [&](const sg::Graph& g, const sg::AlgorithmParams& p, sg::ReportJson& extra) {
                                         extra["r"] = ex_r;
                                         return sg::half_clique_free_subgraph(g, ex_r, p);
                                     });
        sub->add_option("--r", ex_r, "The graph is K_r-free")->required();
        sub->callback(cb);
    }
    {
        auto [sub, cb] = add_extract("densecore", "Dense induced subgraph",
                                     [&](const sg::Graph& g, const sg::AlgorithmParams& p, sg::ReportJson&) {
                                         return sg::dense_core(g, ex_eps > 0 ? ex_eps : p.epsilon, p);
                                     });
        sub->add_option("--epsilon", ex_eps, "Degree loss allowed (default: params epsilon)");
        sub->callback(cb);
    }
    {
        auto [sub, cb] = add_extract("multipartite", "Complete multipartite cover of a dense graph",
                                     [&](const sg::Graph& g, const sg::AlgorithmParams& p, sg::ReportJson& extra) {
                                         double alpha = ex_alpha;
                                         if (!(alpha > 0)) {
                                             // density of the input, so the precondition m >= alpha n^2 holds
                                             const double n = static_cast<double>(g.n());
                                             alpha = n > 0 ? static_cast<double>(g.m()) / (n * n) : 0.0;
                                         }
                                         extra["t"] = 0;
                                         auto cover = sg::multipartite_cover(g, alpha, p);
                                         extra["t"] = cover.t();
                                         return cover.witness();
                                     });
        sub->add_option("--alpha", ex_alpha, "Density threshold (default: m / n^2)");
        sub->callback(cb);
    }

    // color-or-clique
    std::string coc_input;
    double coc_eps = 0.0;
    auto* coc = app.add_subcommand("color-or-clique", "Colouring with n^eps classes or a clique of size n^delta");
    coc->add_option("input", coc_input, "Graph (edge list or family JSON)")->required();
    coc->add_option("--epsilon", coc_eps, "Colour exponent (default: params epsilon)");
    coc->callback([&] {
        operation = "color-or-clique";
        run = [&] {
            const auto params = load_params();
            auto in = load_graph(coc_input);
            const double eps = coc_eps > 0 ? coc_eps : params.epsilon;
            auto res = sg::color_or_clique(in.graph, eps, params);
            sg::RunReport report;
            report.input_digest = in.digest;
            report.params = sg::to_json(params);
            report.params["epsilon"] = eps;
            const auto w = res.witness();
            report.result = sg::to_json(w);
            report.result["branch"] = res.clique ? "clique" : "coloring";
            report.result["delta"] = res.delta;
            report.result["s"] = res.s;
            report.result["color_budget"] = res.color_budget;
            report.result["clique_threshold"] = res.clique_threshold;
            auto v = witness_check(in.graph, w);
            if (res.coloring) {
                v.require(sg::is_proper_coloring(in.graph, *res.coloring), "colouring is not proper");
                v.require(static_cast<double>(res.coloring->size()) <= res.color_budget * (1 + 1e-12),
                          "more than n^eps colours");
            } else {
                v.require(static_cast<double>(res.clique->size()) >= res.clique_threshold * (1 - 1e-12),
                          "clique smaller than n^delta");
            }
            report.verification = v;
            return finish(report, start);
        };
    });

    // qp
    auto* qp = app.add_subcommand("qp", "Quasiplanar drawings");
    qp->require_subcommand(1);
    std::string qp_input;
    std::size_t qp_r = 4, qp_s = 3, qp_n = 0;
    double qp_C = 1.0;
    auto* qp_check = qp->add_subcommand("check", "Is the drawing r-quasiplanar");
    qp_check->add_option("input", qp_input, "Drawing JSON")->required();
    qp_check->add_option("--r", qp_r, "No r pairwise crossing edges")->required();
    qp_check->callback([&] {
        operation = "qp check";
        run = [&] {
            auto [digest, d] = load_drawing(qp_input);
            auto res = sg::is_r_quasiplanar(d, qp_r);
            sg::RunReport report;
            report.input_digest = digest;
            report.params = {{"r", qp_r}};
            report.result = {{"quasiplanar", res.quasiplanar}};
            sg::Verification v;
            if (!res.quasiplanar) {
                sg::ReportJson ids = sg::ReportJson::array();
                for (auto e : res.crossing_edges) ids.push_back(d.edges[e].curve.id());
                report.result["crossing_edges"] = res.crossing_edges;
                report.result["crossing_ids"] = ids;
                v.require(sg::crossing_graph(d).is_clique(res.crossing_edges), "witness edges do not pairwise cross");
            }
            report.verification = v;
            return finish(report, start);
        };
    });
    auto* qp_sparse = qp->add_subcommand("sparse", "4-quasiplanar edge subset of a 2^s-quasiplanar drawing");
    qp_sparse->add_option("input", qp_input, "Drawing JSON")->required();
    qp_sparse->add_option("--s", qp_s, "The drawing is 2^s-quasiplanar")->required();
    qp_sparse->callback([&] {
        operation = "qp sparse";
        run = [&] {
            const auto params = load_params();
            auto [digest, d] = load_drawing(qp_input);
            auto res = sg::sparse_subgraph(d, qp_s, params);
            sg::RunReport report;
            report.input_digest = digest;
            report.params = sg::to_json(params);
            report.params["s"] = qp_s;
            sg::ReportJson ids = sg::ReportJson::array();
            for (auto e : res.edges) ids.push_back(d.edges[e].curve.id());
            report.result = {{"edges", res.edges},
                             {"edge_ids", ids},
                             {"kept", res.edges.size()},
                             {"total", d.edges.size()},
                             {"guarantee_fraction", res.guarantee}};
            if (!res.witness.events.empty()) report.result["events"] = res.witness.events;
            report.verification = condition(res.four_quasiplanar, "kept edges contain 4 pairwise crossing edges");
            return finish(report, start);
        };
    });
    auto* qp_bound = qp->add_subcommand("bound", "Edge bound n (C log n / s)^{2s-4}");
    qp_bound->add_option("--n", qp_n, "Vertices")->required();
    qp_bound->add_option("--s", qp_s, "The graph is 2^s-quasiplanar")->required();
    qp_bound->add_option("--C", qp_C, "Constant");
    qp_bound->callback([&] {
        operation = "qp bound";
        run = [&] {
            sg::RunReport report;
            report.input_digest = sg::fnv1a_digest("");
            report.params = {{"n", qp_n}, {"s", qp_s}, {"C", qp_C}};
            report.result = {{"edge_bound", sg::edge_bound(qp_n, qp_s, qp_C)}};
            report.verification = sg::Verification{};
            return finish(report, start);
        };
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exact exponential-time references");
    oracle->require_subcommand(1);
    std::string or_input;
    std::size_t or_p = 3, or_r = 3;
    auto add_oracle = [&](const std::string& name, const std::string& help,
                          std::function<void(const sg::Graph&, sg::RunReport&)> body) {
        auto* sub = oracle->add_subcommand(name, help);
        sub->add_option("input", or_input, "Graph (edge list or family JSON)")->required();
        sub->callback([&, name, body] {
            operation = "oracle " + name;
            run = [&, body] {
                auto in = load_graph(or_input);
                sg::RunReport report;
                report.input_digest = in.digest;
                body(in.graph, report);
                return finish(report, start);
            };
        });
        return sub;
    };
    add_oracle("mis", "Maximum independent set (n <= 40)", [](const sg::Graph& g, sg::RunReport& r) {
        auto s = sg::max_independent_set_exact(g);
        r.result = {{"size", s.size()}, {"vertices", s}};
        r.verification = condition(g.is_independent(s), "set has an internal edge");
    });
    add_oracle("clique", "Maximum clique (n <= 60)", [](const sg::Graph& g, sg::RunReport& r) {
        auto s = sg::max_clique_exact(g);
        r.result = {{"size", s.size()}, {"vertices", s}};
        r.verification = condition(g.is_clique(s), "set is not a clique");
    });
    add_oracle("kpfree", "Largest K_p-free induced subgraph (n <= 18)", [&](const sg::Graph& g, sg::RunReport& r) {
        auto s = sg::max_kp_free_subset_exact(g, or_p);
        r.params = {{"p", or_p}};
        r.result = {{"size", s.size()}, {"vertices", s}};
        r.verification = condition(!sg::find_clique(g, or_p, s), "set contains K_p");
    })->add_option("--p", or_p, "Forbidden clique size")->required();
    add_oracle("sep", "Minimum balanced separator (n <= 14)", [](const sg::Graph& g, sg::RunReport& r) {
        auto p = sg::min_balanced_separator_exact(g);
        r.result = sg::to_json(p);
        r.result["size"] = p.separator.size();
        const std::string why = sg::separator_violation(g, p);
        r.verification = condition(why.empty(), why);
    });
    add_oracle("biclique", "Maximum balanced biclique (n <= 16)", [](const sg::Graph& g, sg::RunReport& r) {
        auto b = sg::max_balanced_biclique_exact(g);
        r.result = sg::to_json(b);
        r.verification = condition(sg::is_biclique(g, b), "sides are not complete to each other");
    });
    auto* or_cross = oracle->add_subcommand("crossings", "r pairwise crossing edges of a drawing");
    or_cross->add_option("input", or_input, "Drawing JSON")->required();
    or_cross->add_option("--r", or_r, "Number of edges")->required();
    or_cross->callback([&] {
        operation = "oracle crossings";
        run = [&] {
            auto [digest, d] = load_drawing(or_input);
            auto res = sg::pairwise_crossing_exact(d, or_r);
            sg::RunReport report;
            report.input_digest = digest;
            report.params = {{"r", or_r}};
            report.result = {{"found", res.has_value()}};
            sg::Verification v;
            if (res) {
                report.result["edges"] = *res;
                v.require(sg::crossing_graph(d).is_clique(*res), "edges do not pairwise cross");
            }
            report.verification = v;
            return finish(report, start);
        };
    });

    // survey
    std::string sv_spec, sv_csv;
    std::vector<std::size_t> sv_sizes{50, 100, 200, 400};
    std::size_t sv_trials = 20;
    auto* survey = app.add_subcommand("survey", "Median separator size against m, with a power-law fit");
    survey->add_option("--spec", sv_spec, "Generator spec JSON (count is replaced by each size)");
    survey->add_option("--sizes", sv_sizes, "Family sizes")->delimiter(',');
    survey->add_option("--trials", sv_trials, "Trials per size (seed + trial index)");
    survey->add_option("--csv", sv_csv, "Write the per-size medians as CSV");
    survey->callback([&] {
        operation = "survey";
        run = [&] {
            const auto params = load_params();
            sg::GeneratorSpec spec = sg::default_survey_spec(opt.seed);
            if (!sv_spec.empty()) spec = sg::parse_generator_spec(sg::io_detail::parse_json(read_file(sv_spec)));
            auto res = sg::separator_size_survey(spec, sv_sizes, sv_trials, params.strategy);
            sg::RunReport report;
            report.input_digest = sg::fnv1a_digest(sg::to_json(spec).dump());
            report.params = {{"spec", sg::to_json(spec)},
                             {"sizes", sv_sizes},
                             {"trials", sv_trials},
                             {"strategy", sg::to_string(params.strategy)}};
            sg::ReportJson rows = sg::ReportJson::array();
            for (const auto& s : res.summary)
                rows.push_back({{"n", s.n}, {"median_m", s.median_m}, {"median_separator", s.median_separator}});
            report.result = {{"summary", rows}};
            report.result["beta"] = std::isnan(res.beta) ? sg::ReportJson(nullptr) : sg::ReportJson(res.beta);
            if (!sv_csv.empty()) write_file(sv_csv, sg::survey_csv(res));
            report.verification = condition(res.all_valid, "a separator failed validation");
            return finish(report, start);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        return run();
    } catch (const sg::PreconditionViolated& e) {
        return fail("PreconditionViolated", e.what(), precondition, e.witness());
    } catch (const sg::ParseError& e) {
        return fail("ParseError", e.what(), bad_input);
    } catch (const sg::SchemaError& e) {
        return fail("SchemaError", e.what(), bad_input);
    } catch (const sg::BadSpec& e) {
        return fail("BadSpec", e.what(), bad_input);
    } catch (const sg::DegenerateDrawing& e) {
        return fail("DegenerateDrawing", e.what(), precondition);
    } catch (const sg::TooLarge& e) {
        return fail("TooLarge", e.what(), too_large);
    } catch (const sg::Error& e) {
        return fail("Error", e.what(), other);
    } catch (const std::exception& e) {
        return fail("InternalError", e.what(), other);
    }
}
