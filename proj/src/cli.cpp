#include "strongcolor/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "strongcolor/coloring.hpp"
#include "strongcolor/concentration.hpp"
#include "strongcolor/graph.hpp"
#include "strongcolor/hadamard.hpp"
#include "strongcolor/strong.hpp"

namespace strongcolor {

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

// Raised when the retry loop of `color` gives up; mapped to exit code 4.
struct ExhaustionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_graph(ss.str());
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ":" + std::to_string(e.line()) + ": " + e.what());
    }
}

// path empty or "-" writes to the session stream, otherwise to the file.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

struct GenConfig {
    std::string kind;
    std::string out_path;
    int n = 0, k = 0, r = 0, a = 0, b = 0, leaves = 0;
    double p = 0;
    std::uint64_t seed = kDefaultSeed;
    CLI::Option* n_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* r_opt = nullptr;
    CLI::Option* a_opt = nullptr;
    CLI::Option* b_opt = nullptr;
    CLI::Option* leaves_opt = nullptr;
    CLI::Option* p_opt = nullptr;
};

void require_opt(const CLI::Option* opt, const char* flag, const std::string& kind) {
    if (opt == nullptr || opt->count() == 0)
        throw CLI::ValidationError("gen", std::string(flag) + " is required for --kind " + kind);
}

void run_gen(const GenConfig& cfg, std::ostream& out) {
    Graph g;
    bool randomized = false;
    if (cfg.kind == "cycle") {
        require_opt(cfg.n_opt, "--n", cfg.kind);
        g = make_cycle(cfg.n);
    } else if (cfg.kind == "complete") {
        require_opt(cfg.n_opt, "--n", cfg.kind);
        g = make_complete(cfg.n);
    } else if (cfg.kind == "complete_bipartite") {
        require_opt(cfg.a_opt, "--a", cfg.kind);
        require_opt(cfg.b_opt, "--b", cfg.kind);
        g = make_complete_bipartite(cfg.a, cfg.b);
    } else if (cfg.kind == "star") {
        require_opt(cfg.leaves_opt, "--leaves", cfg.kind);
        g = make_star(cfg.leaves);
    } else if (cfg.kind == "petersen") {
        g = make_petersen();
    } else if (cfg.kind == "blowup_c5") {
        require_opt(cfg.k_opt, "--k", cfg.kind);
        g = make_blowup_c5(cfg.k);
    } else if (cfg.kind == "random_regular") {
        require_opt(cfg.n_opt, "--n", cfg.kind);
        require_opt(cfg.r_opt, "--r", cfg.kind);
        g = make_random_regular(cfg.n, cfg.r, cfg.seed);
        randomized = true;
    } else if (cfg.kind == "gnp") {
        require_opt(cfg.n_opt, "--n", cfg.kind);
        require_opt(cfg.p_opt, "--p", cfg.kind);
        g = make_gnp(cfg.n, cfg.p, cfg.seed);
        randomized = true;
    } else if (cfg.kind == "extremal") {
        require_opt(cfg.k_opt, "--k", cfg.kind);
        g = build_extremal_graph(cfg.k);
    } else {
        throw CLI::ValidationError("gen", "unknown --kind " + cfg.kind);
    }
    std::string content;
    if (randomized) content += "# seed=" + std::to_string(cfg.seed) + "\n";
    content += write_graph(g);
    emit(cfg.out_path, content, out);
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strong edge coloring toolkit: structure census, density witnesses, "
                 "randomized coloring, Monte Carlo experiments"};
    app.require_subcommand(1);

    GenConfig gen;
    auto* gen_cmd = app.add_subcommand(
        "gen", "Generate a graph as an edge-list file (header line \"n m\", one "
               "\"u v\" pair per line)");
    gen_cmd->add_option("--kind", gen.kind, "One of: cycle, complete, complete_bipartite, "
                                            "star, petersen, blowup_c5, random_regular, gnp, extremal")
        ->required();
    gen.n_opt = gen_cmd->add_option("--n", gen.n, "Vertex count");
    gen.k_opt = gen_cmd->add_option("--k", gen.k, "Part size (blowup_c5) or order parameter (extremal)");
    gen.r_opt = gen_cmd->add_option("--r", gen.r, "Degree for random_regular");
    gen.a_opt = gen_cmd->add_option("--a", gen.a, "Left part size for complete_bipartite");
    gen.b_opt = gen_cmd->add_option("--b", gen.b, "Right part size for complete_bipartite");
    gen.leaves_opt = gen_cmd->add_option("--leaves", gen.leaves, "Leaf count for star");
    gen.p_opt = gen_cmd->add_option("--p", gen.p, "Edge probability for gnp");
    gen_cmd->add_option("--seed", gen.seed, "Seed for randomized kinds");
    gen_cmd->add_option("--out", gen.out_path, "Output path (default stdout)");
    gen_cmd->callback([&] { run_gen(gen, out); });

    std::string stats_input, stats_out;
    auto* stats_cmd = app.add_subcommand(
        "stats", "Per-edge census of the two-step edge neighborhood with density "
                 "bound verdicts, as CSV");
    stats_cmd->add_option("--input", stats_input, "Edge-list file")
        ->required()
        ->check(CLI::ExistingFile);
    stats_cmd->add_option("--out", stats_out, "Output path (default stdout)");
    stats_cmd->callback([&] { emit(stats_out, stats_csv(load_graph(stats_input)), out); });

    std::string clique_input, clique_out;
    std::uint64_t clique_budget = 50'000'000;
    auto* clique_cmd = app.add_subcommand(
        "clique", "Largest set of edges pairwise within distance one, by exact "
                  "branch and bound");
    clique_cmd->add_option("--input", clique_input, "Edge-list file")
        ->required()
        ->check(CLI::ExistingFile);
    clique_cmd->add_option("--budget", clique_budget, "Search node budget");
    clique_cmd->add_option("--out", clique_out, "Output path (default stdout)");
    clique_cmd->callback([&] {
        Graph g = load_graph(clique_input);
        CliqueResult res = strong_clique_exact(g, clique_budget);
        std::ostringstream ss;
        ss << "size,optimal,nodes\n"
           << res.size << ',' << (res.optimal ? 1 : 0) << ',' << res.nodes << '\n'
           << "# witness:";
        for (EdgeId e : res.witness) ss << ' ' << e;
        ss << '\n';
        emit(clique_out, ss.str(), out);
    });

    int ext_kmin = 2, ext_kmax = 5;
    std::string ext_out;
    auto* ext_cmd = app.add_subcommand(
        "extremal", "Density report for the Hadamard-code witness graphs, one CSV "
                    "row per order parameter");
    ext_cmd->add_option("--kmin", ext_kmin, "Smallest order parameter (>= 2)");
    ext_cmd->add_option("--kmax", ext_kmax, "Largest order parameter (<= 7)");
    ext_cmd->add_option("--out", ext_out, "Output path (default stdout)");
    ext_cmd->callback([&] {
        if (ext_kmin < 2 || ext_kmax < ext_kmin)
            throw CLI::ValidationError("extremal", "need 2 <= kmin <= kmax");
        std::ostringstream ss;
        ss << "k,delta,m_uv,ratio,xy_edges\n";
        for (int k = ext_kmin; k <= ext_kmax; ++k) {
            ExtremalReport rep = extremal_report(k);
            ss << rep.k << ',' << rep.delta << ',' << rep.m_uv << ',' << fmt(rep.ratio)
               << ',' << rep.xy_edges << '\n';
        }
        emit(ext_out, ss.str(), out);
    });

    std::string color_input, color_out, color_mode = "strong", color_order = "index";
    int color_colors = 0, color_retries = 100;
    std::uint64_t color_seed = kDefaultSeed;
    auto* color_cmd = app.add_subcommand(
        "color", "Randomized coloring with conflict uncoloring and greedy completion; "
                 "mode strong colors edges so same-colored edges sit at distance >= 2, "
                 "mode vertex colors the input graph directly");
    color_cmd->add_option("--input", color_input, "Edge-list file")
        ->required()
        ->check(CLI::ExistingFile);
    color_cmd->add_option("--colors", color_colors, "Palette size")->required();
    color_cmd->add_option("--retries", color_retries, "Attempt limit");
    color_cmd->add_option("--seed", color_seed, "Master seed");
    color_cmd->add_option("--mode", color_mode, "strong or vertex")
        ->check(CLI::IsMember({"strong", "vertex"}));
    color_cmd->add_option("--order", color_order, "Greedy completion order: index or degree")
        ->check(CLI::IsMember({"index", "degree"}));
    color_cmd->add_option("--out", color_out, "Output path (default stdout)");
    color_cmd->callback([&] {
        Graph g = load_graph(color_input);
        CompletionOrder ord = color_order == "degree" ? CompletionOrder::DegreeDescending
                                                      : CompletionOrder::IndexAscending;
        Graph target = color_mode == "strong" ? square_linegraph(g) : g;
        ColorRun run = color_until_success(target, color_colors, color_retries, color_seed, ord);
        if (!run.success)
            throw ExhaustionError("no proper coloring in " + std::to_string(run.attempts) +
                                  " attempts (best trial kept " +
                                  std::to_string(run.best_colored_after_trial) + " of " +
                                  std::to_string(target.vertex_count()) + " colored)");
        std::ostringstream ss;
        ss << "# seed=" << color_seed << "\n";
        ss << "edge_or_vertex_id,color\n";
        for (std::size_t i = 0; i < run.state.colors.size(); ++i)
            ss << i << ',' << run.state.colors[i] << '\n';
        emit(color_out, ss.str(), out);
    });

    std::string mc_input, mc_out;
    int mc_u = 0, mc_colors = 0, mc_threads = 1;
    long long mc_trials = 10000;
    std::uint64_t mc_seed = kDefaultSeed;
    double mc_r_xi = 0;
    auto* mc_cmd = app.add_subcommand(
        "mc", "Monte Carlo trials of the coloring procedure around one vertex: "
              "same-colored pair/triple counts, saved colors, tails, JSON report");
    mc_cmd->add_option("--input", mc_input, "Edge-list file")
        ->required()
        ->check(CLI::ExistingFile);
    mc_cmd->add_option("--u", mc_u, "Focus vertex");
    mc_cmd->add_option("--colors", mc_colors, "Palette size")->required();
    mc_cmd->add_option("--trials", mc_trials, "Trial count");
    mc_cmd->add_option("--seed", mc_seed, "Master seed");
    auto* mc_r_xi_opt = mc_cmd->add_option(
        "--r-xi", mc_r_xi, "Degree scale for the crowded-color event (default: max degree)");
    mc_cmd->add_option("--threads", mc_threads, "Worker thread cap");
    mc_cmd->add_option("--out", mc_out, "Output path (default stdout)");
    mc_cmd->callback([&] {
        Graph g = load_graph(mc_input);
        double r_xi = mc_r_xi_opt->count() ? mc_r_xi
                                           : std::max(2.0, static_cast<double>(g.max_degree()));
        TrialReport rep = run_trials(g, mc_u, mc_colors, mc_trials, mc_seed, r_xi, mc_threads);
        nlohmann::ordered_json j;
        j["trials"] = rep.trials;
        j["mean_pu"] = rep.mean_pu;
        j["var_pu"] = rep.var_pu;
        j["mean_tu"] = rep.mean_tu;
        j["var_tu"] = rep.var_tu;
        j["mean_saved"] = rep.mean_saved;
        j["tail_freq"] = nlohmann::ordered_json::array();
        for (const auto& [t, f] : rep.tail_freq) j["tail_freq"].push_back({t, f});
        j["exceptional_freq"] = rep.exceptional_freq;
        j["seed"] = mc_seed;
        j["u"] = mc_u;
        j["colors"] = mc_colors;
        j["r_xi"] = r_xi;
        emit(mc_out, j.dump(2) + "\n", out);
    });

    int tri_n = 0, tri_trials = 200, tri_threads = 1;
    double tri_p = 0;
    std::uint64_t tri_seed = kDefaultSeed;
    std::string tri_out;
    auto* tri_cmd = app.add_subcommand(
        "triangles", "Triangle counts over random graph samples against the "
                     "closed-form expectation");
    tri_cmd->add_option("--n", tri_n, "Vertex count")->required();
    tri_cmd->add_option("--p", tri_p, "Edge probability")->required();
    tri_cmd->add_option("--trials", tri_trials, "Sample count");
    tri_cmd->add_option("--seed", tri_seed, "Master seed");
    tri_cmd->add_option("--threads", tri_threads, "Worker thread cap");
    tri_cmd->add_option("--out", tri_out, "Output path (default stdout)");
    tri_cmd->callback([&] {
        TriangleExperiment ex = triangle_experiment(tri_n, tri_p, tri_trials, tri_seed, tri_threads);
        std::ostringstream ss;
        ss << "seed=" << tri_seed << "\n"
           << "trials=" << tri_trials << "\n"
           << "mean=" << fmt(ex.mean) << "\n"
           << "variance=" << fmt(ex.variance) << "\n"
           << "expected=" << fmt(ex.expected) << "\n";
        emit(tri_out, ss.str(), out);
    });

    double gam_delta = 0, gam_gamma = 0;
    auto* gam_cmd = app.add_subcommand(
        "gamma", "Palette-shaving margin: largest workable gamma for a given delta, "
                 "the closed-form approximation, and the condition margin");
    gam_cmd->add_option("--delta", gam_delta, "Density parameter in (0, 1]")->required();
    auto* gam_gamma_opt =
        gam_cmd->add_option("--gamma", gam_gamma, "Gamma to check (default: the approximation)");
    gam_cmd->callback([&] {
        double mg = max_gamma(gam_delta);
        double ag = approx_gamma(gam_delta);
        double gamma = gam_gamma_opt->count() ? gam_gamma : ag;
        double margin = gamma_condition_rhs(gamma, gam_delta) - gamma;
        std::ostringstream ss;
        ss << "delta=" << fmt(gam_delta) << "\n"
           << "max_gamma=" << fmt(mg) << "\n"
           << "approx_gamma=" << fmt(ag) << "\n"
           << "gamma=" << fmt(gamma) << "\n"
           << "margin=" << fmt(margin) << "\n"
           << "condition_holds=" << (margin > 0 ? 1 : 0) << "\n";
        emit("", ss.str(), out);
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("strongcolor");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* active = &app;
        while (!active->get_subcommands().empty()) active = active->get_subcommands().front();
        out << active->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ExhaustionError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace strongcolor
