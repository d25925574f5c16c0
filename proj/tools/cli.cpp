#include "cli.hpp"

#include "plot.hpp"
#include "swcol/dimacs.hpp"
#include "swcol/experiment.hpp"
#include "swcol/io_util.hpp"
#include "swcol/rewire.hpp"
#include "swcol/scaling.hpp"
#include "swcol/solver.hpp"
#include "swcol/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <map>
#include <sstream>

namespace swcol {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_uncolourable = 2;
constexpr int exit_budget = 3;
constexpr int exit_usage = 64;
constexpr int exit_data = 65;

std::string g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

LatticeFamily parse_family(const std::string& name) {
    const auto family = family_from_name(name);
    if (!family)
        throw std::runtime_error("unknown lattice family '" + name +
                                 "' (expected square|triangular|cubic6|cubic5)");
    return *family;
}

RngAlgorithm parse_rng(const std::string& name) {
    const auto alg = rng_from_name(name);
    if (!alg)
        throw std::runtime_error("unknown rng '" + name + "' (expected default|mitchell-moore)");
    return *alg;
}

void print_graph_stats(const Graph& g) {
    const Ratio mean = g.mean_degree();
    std::cout << "nodes=" << g.node_count() << " edges=" << g.edge_count() << " mean_degree=" << mean.num << "/"
              << mean.den << " (" << g12(mean.value()) << ")\n";
    std::map<std::uint32_t, std::uint64_t> histogram;
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
        ++histogram[g.degree(v)];
    std::cout << "degree histogram:";
    for (const auto& [degree, count] : histogram)
        std::cout << ' ' << degree << ':' << count;
    std::cout << '\n';
}

// ---------------------------------------------------------------------------

struct LatticeOpts {
    std::string family;
    std::uint32_t size = 0;
    std::string out;
    bool check = false;
};

int run_lattice(const LatticeOpts& opts) {
    const LatticeSpec spec{parse_family(opts.family), opts.size};
    const Graph g = generate(spec);
    if (opts.check) {
        std::cout << "family=" << family_name(spec.family) << " L=" << spec.L << " N=" << spec.node_count()
                  << " gamma=" << family_gamma(spec.family) << '\n';
        print_graph_stats(g);
    }
    if (!opts.out.empty()) {
        atomic_write_file(opts.out, dimacs_string(g));
        std::cout << "wrote " << opts.out << '\n';
    }
    return exit_ok;
}

struct RewireOpts {
    std::string in;
    double p = 0.0;
    std::uint64_t seed = 1;
    std::string rng = "default";
    std::string out;
};

int run_rewire(const RewireOpts& opts) {
    const Graph g = read_dimacs_file(opts.in);
    RewireParams params{opts.p, opts.seed, parse_rng(opts.rng)};
    const RewireResult result = rewire(g, params);
    atomic_write_file(opts.out, dimacs_string(result.graph));
    std::cout << "rewired=" << result.rewired << " skipped=" << result.skipped << " edges="
              << result.graph.edge_count() << '\n';
    std::cout << "wrote " << opts.out << '\n';
    return exit_ok;
}

struct SolveOpts {
    std::string in;
    int k = 3;
    std::uint64_t max_nodes = 0; // 0 = unlimited
    bool witness = false;
    bool no_fix_first = false;
};

int run_solve(const SolveOpts& opts) {
    const Graph g = read_dimacs_file(opts.in);
    SolveBudget budget;
    if (opts.max_nodes > 0)
        budget.max_nodes = opts.max_nodes;
    const SolveOutcome outcome = solve(g, opts.k, budget, !opts.no_fix_first);
    std::cout << "status=" << to_string(outcome.status) << " nodes_visited=" << outcome.nodes_visited
              << " first_vertex_fixed=" << (outcome.first_vertex_fixed ? "true" : "false") << '\n';
    if (opts.witness && outcome.witness) {
        std::cout << "witness=";
        for (std::size_t v = 0; v < outcome.witness->values.size(); ++v)
            std::cout << (v ? " " : "") << outcome.witness->values[v];
        std::cout << '\n';
    }
    switch (outcome.status) {
    case SolveStatus::Colourable: return exit_ok;
    case SolveStatus::Uncolourable: return exit_uncolourable;
    case SolveStatus::BudgetExhausted: return exit_budget;
    }
    return exit_data;
}

struct SweepOpts {
    std::string config;
    std::string out;
};

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::json manifest_json(const ExperimentConfig& cfg, const std::string& config_echo,
                             const std::string& out_csv) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& spec : cfg.lattices) {
        for (double p : cfg.p_grid) {
            cells.push_back({{"family", family_name(spec.family)},
                             {"L", spec.L},
                             {"N", spec.node_count()},
                             {"gamma", family_gamma(spec.family)},
                             {"p", p},
                             {"trials", cfg.trials}});
        }
    }
    nlohmann::json manifest{
        {"tool", "swcol"},
        {"version", version},
        {"created_utc", utc_timestamp()},
        {"output_csv", out_csv},
        {"master_seed", cfg.master_seed},
        {"rng", rng_name(cfg.rng)},
        {"k", cfg.k},
        {"trials_per_cell", cfg.trials},
        {"workers_requested", cfg.workers},
        {"solver", {{"fix_first_vertex", true}}},
        {"cells", std::move(cells)},
        {"config_echo", config_echo},
    };
    if (cfg.budget.max_nodes)
        manifest["max_nodes"] = *cfg.budget.max_nodes;
    else
        manifest["max_nodes"] = nullptr;
    return manifest;
}

std::string records_csv(std::span<const TrialRecord> records) {
    std::string out = "family,L,p,trial,status,nodes_visited,rewire_skips\n";
    for (const auto& r : records) {
        out += std::string(family_name(r.spec.family)) + "," + std::to_string(r.spec.L) + "," + g12(r.p) + "," +
               std::to_string(r.trial_index) + "," + std::string(to_string(r.status)) + "," +
               std::to_string(r.nodes_visited) + "," + std::to_string(r.rewire_skips) + "\n";
    }
    return out;
}

int run_sweep(const SweepOpts& opts) {
    const std::string config_echo = read_text_file(opts.config);
    std::istringstream config_stream(config_echo);
    ExperimentConfig cfg = parse_config(config_stream);

    if (const char* env = std::getenv("SWCOL_WORKERS")) {
        cfg.workers = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }

    const SweepResult result = run_sweep(cfg);
    atomic_write_file(opts.out, summary_csv(result.rows));

    const std::string manifest_path = opts.out + ".manifest.json";
    atomic_write_file(manifest_path, manifest_json(cfg, config_echo, opts.out).dump(2) + "\n");

    if (cfg.keep_records && !cfg.records_dir.empty()) {
        const std::size_t cell_count = result.records.size() / cfg.trials;
        for (std::size_t c = 0; c < cell_count; ++c) {
            char name[32];
            std::snprintf(name, sizeof name, "cell_%04zu.csv", c);
            const std::filesystem::path path = std::filesystem::path(cfg.records_dir) / name;
            atomic_write_file(path, records_csv({result.records.data() + c * cfg.trials, cfg.trials}));
        }
        std::cout << "wrote " << cell_count << " record files to " << cfg.records_dir << '\n';
    }

    std::cout << "wrote " << result.rows.size() << " rows to " << opts.out << " (manifest: " << manifest_path
              << ")\n";
    return exit_ok;
}

struct CollapseOpts {
    std::string in;
    std::string family;
    double a_min = -3.0;
    double a_max = 3.0;
    double step = 0.05;
    std::string out;
    std::string emit_rescaled;
};

int run_collapse(const CollapseOpts& opts) {
    const auto rows = read_summary_csv_file(opts.in);
    const auto curves = curves_from_summary(rows, parse_family(opts.family));
    if (curves.size() < 2)
        throw std::runtime_error("collapse: need at least 2 curves for family '" + opts.family + "', got " +
                                 std::to_string(curves.size()));

    const ExponentScan scan = find_best_exponent(curves, opts.a_min, opts.a_max, opts.step);

    std::string csv = "a,metric,is_best\n";
    for (const auto& [a, metric] : scan.points) {
        csv += g12(a);
        csv += ',';
        csv += std::isinf(metric) ? "inf" : g12(metric);
        csv += ',';
        csv += (a == scan.best_a) ? '1' : '0';
        csv += '\n';
    }
    atomic_write_file(opts.out, csv);

    if (!opts.emit_rescaled.empty()) {
        std::string rescaled_csv = "family,L,N,x,y,ci_half\n";
        for (const auto& curve : curves) {
            const Curve r = rescale(curve, scan.best_a);
            for (const auto& q : r.points)
                rescaled_csv += std::string(family_name(r.label.family)) + "," + std::to_string(r.label.L) + "," +
                                std::to_string(r.label.N) + "," + g12(q.x) + "," + g12(q.y) + "," +
                                g12(q.ci_half) + "\n";
        }
        atomic_write_file(opts.emit_rescaled, rescaled_csv);
    }

    std::cout << "best a=" << g12(scan.best_a) << " metric=" << g12(scan.best_metric) << " (grid ["
              << g12(opts.a_min) << "," << g12(opts.a_max) << "] step " << g12(opts.step) << ")\n";
    std::cout << "wrote " << opts.out << '\n';
    return exit_ok;
}

struct PlotOpts {
    std::string in;
    std::string kind;
    std::string out;
    std::string script;
    double exponent = 0.0;
    bool exponent_set = false;
    std::string cost_stat = "mean";
};

int run_plot(const PlotOpts& opts) {
    const auto rows = read_summary_csv_file(opts.in);

    PlotOptions options;
    if (opts.kind == "fraction") {
        options.kind = PlotKind::Fraction;
    } else if (opts.kind == "cost") {
        options.kind = PlotKind::Cost;
    } else if (opts.kind == "collapse") {
        options.kind = PlotKind::Collapse;
        if (!opts.exponent_set)
            throw std::runtime_error("plot: --a <exponent> is required for kind=collapse");
        options.collapse_exponent = opts.exponent;
    } else {
        throw std::runtime_error("plot: unknown kind '" + opts.kind + "' (expected fraction|cost|collapse)");
    }
    if (opts.cost_stat == "median")
        options.cost_median = true;
    else if (opts.cost_stat != "mean")
        throw std::runtime_error("plot: --cost-stat must be mean or median");

    atomic_write_file(opts.out, render_svg(rows, options));

    std::string script_path = opts.script;
    if (script_path.empty())
        script_path = std::filesystem::path(opts.out).replace_extension(".gp").string();
    atomic_write_file(script_path, render_gnuplot_script(opts.in, opts.out, rows, options));

    std::cout << "wrote " << opts.out << " and " << script_path << '\n';
    return exit_ok;
}

struct ExportOpts {
    std::string in;
    std::string out;
    bool check = false;
};

int run_export(const ExportOpts& opts) {
    const Graph g = read_dimacs_file(opts.in); // validates on the way in
    if (opts.check)
        print_graph_stats(g);
    if (!opts.out.empty()) {
        atomic_write_file(opts.out, dimacs_string(g));
        std::cout << "wrote " << opts.out << '\n';
    }
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"swcol: 3-colourability experiments on rewired lattice graphs"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);

    int exit_code = exit_ok;

    LatticeOpts lattice_opts;
    auto* lattice_cmd = app.add_subcommand("lattice", "generate a periodic lattice and export it as DIMACS");
    lattice_cmd->add_option("--family", lattice_opts.family, "square|triangular|cubic6|cubic5")->required();
    lattice_cmd->add_option("--size", lattice_opts.size, "linear size L")->required();
    lattice_cmd->add_option("--out", lattice_opts.out, "output DIMACS file");
    lattice_cmd->add_flag("--check", lattice_opts.check, "print N, M and the degree histogram");
    lattice_cmd->callback([&] {
        if (lattice_opts.out.empty() && !lattice_opts.check)
            throw CLI::ValidationError("lattice", "give --out and/or --check");
        exit_code = run_lattice(lattice_opts);
    });

    RewireOpts rewire_opts;
    auto* rewire_cmd = app.add_subcommand("rewire", "rewire a graph's edges into shortcuts with probability p");
    rewire_cmd->add_option("--in", rewire_opts.in, "input DIMACS file")->required();
    rewire_cmd->add_option("--p", rewire_opts.p, "rewiring probability in [0,1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    rewire_cmd->add_option("--seed", rewire_opts.seed, "rng seed (default 1)");
    rewire_cmd->add_option("--rng", rewire_opts.rng, "default|mitchell-moore");
    rewire_cmd->add_option("--out", rewire_opts.out, "output DIMACS file")->required();
    rewire_cmd->callback([&] { exit_code = run_rewire(rewire_opts); });

    SolveOpts solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "decide k-colourability of a DIMACS graph");
    solve_cmd->add_option("--in", solve_opts.in, "input DIMACS file")->required();
    solve_cmd->add_option("--k", solve_opts.k, "number of colours")->required()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--max-nodes", solve_opts.max_nodes, "search-tree node budget (0 = unlimited)");
    solve_cmd->add_flag("--witness", solve_opts.witness, "print the colouring when one exists");
    solve_cmd->add_flag("--no-fix-first", solve_opts.no_fix_first, "do not pin the first vertex's colour to 0");
    solve_cmd->callback([&] { exit_code = run_solve(solve_opts); });

    SweepOpts sweep_opts;
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo sweep over (lattice, p) cells");
    sweep_cmd->add_option("--config", sweep_opts.config, "sweep config file")->required();
    sweep_cmd->add_option("--out", sweep_opts.out, "output summary CSV")->required();
    sweep_cmd->callback([&] { exit_code = run_sweep(sweep_opts); });

    CollapseOpts collapse_opts;
    auto* collapse_cmd =
        app.add_subcommand("collapse", "finite-size-scaling exponent search over a sweep summary");
    collapse_cmd->add_option("--in", collapse_opts.in, "summary CSV from `sweep`")->required();
    collapse_cmd->add_option("--family", collapse_opts.family, "lattice family to collapse")->required();
    collapse_cmd->add_option("--a-min", collapse_opts.a_min, "exponent grid start (default -3)");
    collapse_cmd->add_option("--a-max", collapse_opts.a_max, "exponent grid end (default 3)");
    collapse_cmd->add_option("--step", collapse_opts.step, "exponent grid step (default 0.05)");
    collapse_cmd->add_option("--out", collapse_opts.out, "output CSV of (a, metric) pairs")->required();
    collapse_cmd->add_option("--emit-rescaled", collapse_opts.emit_rescaled,
                             "also write the curves rescaled at the best exponent");
    collapse_cmd->callback([&] { exit_code = run_collapse(collapse_opts); });

    PlotOpts plot_opts;
    auto* plot_cmd = app.add_subcommand("plot", "render a sweep summary as an SVG figure plus gnuplot script");
    plot_cmd->add_option("--in", plot_opts.in, "summary CSV from `sweep`")->required();
    plot_cmd->add_option("--kind", plot_opts.kind, "fraction|cost|collapse")->required();
    plot_cmd->add_option("--out", plot_opts.out, "output SVG file")->required();
    plot_cmd->add_option("--script", plot_opts.script, "gnuplot script path (default: <out>.gp)");
    plot_cmd->add_option("--a", plot_opts.exponent, "rescaling exponent for kind=collapse")
        ->each([&](const std::string&) { plot_opts.exponent_set = true; });
    plot_cmd->add_option("--cost-stat", plot_opts.cost_stat, "mean|median for kind=cost (default mean)");
    plot_cmd->callback([&] { exit_code = run_plot(plot_opts); });

    ExportOpts export_opts;
    auto* export_cmd = app.add_subcommand("export", "validate a DIMACS file and rewrite it canonically");
    export_cmd->add_option("--in", export_opts.in, "input DIMACS file")->required();
    export_cmd->add_option("--out", export_opts.out, "output DIMACS file");
    export_cmd->add_flag("--check", export_opts.check, "print N, M and the degree histogram");
    export_cmd->callback([&] {
        if (export_opts.out.empty() && !export_opts.check)
            throw CLI::ValidationError("export", "give --out and/or --check");
        exit_code = run_export(export_opts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_data;
    }
    return exit_code;
}

} // namespace swcol
