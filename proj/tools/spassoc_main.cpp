// Command-line front end: spatial association tests over panel CSV data.
//
// Subcommands: lisa (per-region tests), gisa (network-wide test),
// simulate (lattice power study), compare (agreement between two
// significance files), lag (k-step neighborhood graph).
//
// Every run is a pure function of its inputs, flags, and seed; a
// `<out>.manifest` sidecar records them together with input digests.

#include <CLI11.hpp>
#include <cstdint>
#include <exception>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spassoc/agreement.hpp"
#include "spassoc/fdr.hpp"
#include "spassoc/io.hpp"
#include "spassoc/kernel.hpp"
#include "spassoc/lisa.hpp"
#include "spassoc/mc.hpp"
#include "spassoc/panel.hpp"
#include "spassoc/parallel.hpp"
#include "spassoc/pvalue.hpp"
#include "spassoc/simulate.hpp"
#include "spassoc/version.hpp"
#include "spassoc/weight_graph.hpp"

namespace {

using namespace spassoc;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNumericError = 3;

struct TestOptions {
    std::string graph_file;
    std::string panel_file;
    std::string stat = "moran";
    int lag = 1;
    std::string metric_file;
    std::string fdr = "global";
    double alpha = 0.05;
    std::int64_t mc = 0;  // 0 = no Monte Carlo column
    std::uint64_t seed = 0;
    std::string out;
};

struct SimulateOptions {
    int rows = 0;
    int cols = 0;
    int time_count = 5;
    std::vector<double> c_values;
    int replicates = 200;
    double alpha = 0.05;
    std::string mode = "lisa";
    std::uint64_t seed = 0;
    std::string out;
};

struct CompareOptions {
    std::string file_a;
    std::string file_b;
    std::string out;
};

struct LagOptions {
    std::string graph_file;
    int k = 1;
    std::string out;
};

SimilarityKernel make_kernel(const TestOptions& opts) {
    if (!opts.metric_file.empty()) {
        if (opts.stat != "moran") {
            throw std::invalid_argument(
                "--metric-matrix applies only to --stat moran");
        }
        return SimilarityKernel::moran(io::read_metric_matrix(opts.metric_file));
    }
    return SimilarityKernel::parse(opts.stat);
}

/// Loads the panel, builds the lag-k graph sized to the panel's regions,
/// and returns both. Shared by the lisa and gisa subcommands.
std::pair<PanelMatrix, WeightGraph> load_test_inputs(const TestOptions& opts) {
    if (opts.lag < 1) {
        throw std::invalid_argument(
            "--lag must be at least 1; lag 0 is the identity relation, "
            "which has no neighbors to test against");
    }
    PanelMatrix panel = io::read_panel(opts.panel_file);
    const io::EdgeListFile edge_file = io::read_edge_list(opts.graph_file);
    const WeightGraph base =
        WeightGraph::from_edge_list(edge_file.edges, panel.region_count());
    WeightGraph lagged = lag_matrix(base, opts.lag);
    return {std::move(panel), std::move(lagged)};
}

void add_common_manifest(io::RunManifest& manifest, const TestOptions& opts) {
    manifest.add_input("graph_file", opts.graph_file);
    manifest.add_input("panel_file", opts.panel_file);
    if (!opts.metric_file.empty()) {
        manifest.add_input("metric_matrix", opts.metric_file);
    }
    manifest.set("stat", opts.stat);
    manifest.set("lag", static_cast<std::int64_t>(opts.lag));
    manifest.set("alpha", opts.alpha);
    if (opts.mc > 0) manifest.set("mc", static_cast<std::int64_t>(opts.mc));
    manifest.set("seed", opts.seed);
    manifest.set("version", version_string);
    manifest.set("output", opts.out);
}

void run_lisa(const TestOptions& opts) {
    const SimilarityKernel kernel = make_kernel(opts);
    const auto [panel, graph] = load_test_inputs(opts);
    const LisaVector lv = lisa(kernel, panel, graph);
    const LocalPValueReport report = local_pvalues(lv, graph);

    FdrMode mode = FdrMode::none;
    if (opts.fdr == "global") mode = FdrMode::global;
    if (opts.fdr == "spatial") mode = FdrMode::spatial;
    const SignificanceTable table =
        make_significance_table(report.p_raw, report.sign, mode, graph);

    io::SignificanceOutput output;
    output.statistic = kernel.name();
    output.centered_deviation = report.deviation;
    output.sign = report.sign;
    output.p_raw = report.p_raw;
    if (opts.mc > 0) {
        output.p_mc =
            mc_local_pvalues(kernel, panel, graph, opts.mc, opts.seed);
    }
    output.p_adj = table.p_adj;
    output.sig_05 = table.significant[0];
    output.sig_01 = table.significant[1];
    io::write_significance(opts.out, output);

    io::RunManifest manifest("lisa");
    add_common_manifest(manifest, opts);
    manifest.set("fdr", opts.fdr);
    manifest.write_sidecar(opts.out);
}

void run_gisa(const TestOptions& opts) {
    const SimilarityKernel kernel = make_kernel(opts);
    const auto [panel, graph] = load_test_inputs(opts);
    const LisaVector lv = lisa(kernel, panel, graph);
    const GlobalPValueReport report = global_pvalue(lv, graph);

    io::GlobalOutput output;
    output.statistic = kernel.name();
    output.gamma = report.gamma;
    output.center = report.center;
    output.deviation = report.deviation;
    output.upsilon_sq = report.upsilon_sq;
    output.p_raw = report.p;
    if (opts.mc > 0) {
        output.p_mc =
            mc_global_pvalue(kernel, panel, graph, opts.mc, opts.seed);
    }
    io::write_global(opts.out, output);

    io::RunManifest manifest("gisa");
    add_common_manifest(manifest, opts);
    manifest.write_sidecar(opts.out);
}

void run_simulate(const SimulateOptions& opts) {
    SimConfig cfg;
    cfg.grid = GridSpec{opts.rows, opts.cols};
    cfg.time_count = opts.time_count;
    cfg.c_values = opts.c_values;
    cfg.replicates = opts.replicates;
    cfg.alpha = opts.alpha;
    cfg.seed = opts.seed;
    const PowerMode mode =
        opts.mode == "gisa" ? PowerMode::gisa : PowerMode::lisa;
    const PowerCurve curve = power_curve(cfg, mode);
    io::write_power_curve(opts.out, curve);

    io::RunManifest manifest("simulate");
    manifest.set("rows", static_cast<std::int64_t>(opts.rows));
    manifest.set("cols", static_cast<std::int64_t>(opts.cols));
    manifest.set("t", static_cast<std::int64_t>(opts.time_count));
    std::string joined;
    for (const double c : opts.c_values) {
        if (!joined.empty()) joined += ',';
        joined += io::format_double(c);
    }
    manifest.set("c_list", joined);
    manifest.set("replicates", static_cast<std::int64_t>(opts.replicates));
    manifest.set("alpha", opts.alpha);
    manifest.set("mode", opts.mode);
    manifest.set("seed", opts.seed);
    manifest.set("version", version_string);
    manifest.set("output", opts.out);
    manifest.write_sidecar(opts.out);
}

void run_compare(const CompareOptions& opts) {
    const auto records_a = io::read_significance(opts.file_a);
    const auto records_b = io::read_significance(opts.file_b);
    if (records_a.size() != records_b.size()) {
        throw std::invalid_argument(
            "significance files disagree on region count: " +
            std::to_string(records_a.size()) + " vs " +
            std::to_string(records_b.size()));
    }
    std::vector<bool> labels_a(records_a.size());
    std::vector<bool> labels_b(records_b.size());
    for (std::size_t i = 0; i < records_a.size(); ++i) {
        if (records_a[i].region != records_b[i].region) {
            throw std::invalid_argument(
                "significance files disagree on region order at row " +
                std::to_string(i + 1));
        }
        labels_a[i] = records_a[i].sig_05;
        labels_b[i] = records_b[i].sig_05;
    }
    const AgreementTable table =
        AgreementTable::from_labels(labels_a, labels_b);
    io::write_compare_report(opts.out, table, mcc(table), rand_index(table));

    io::RunManifest manifest("compare");
    manifest.add_input("sig_file_a", opts.file_a);
    manifest.add_input("sig_file_b", opts.file_b);
    manifest.set("label_column", "sig_05");
    manifest.set("version", version_string);
    manifest.set("output", opts.out);
    manifest.write_sidecar(opts.out);
}

void run_lag(const LagOptions& opts) {
    const io::EdgeListFile edge_file = io::read_edge_list(opts.graph_file);
    const WeightGraph base =
        WeightGraph::from_edge_list(edge_file.edges, edge_file.max_vertex + 1);
    const WeightGraph lagged = lag_matrix(base, opts.k);
    io::write_edge_list(opts.out, lagged);

    io::RunManifest manifest("lag");
    manifest.add_input("graph_file", opts.graph_file);
    manifest.set("k", static_cast<std::int64_t>(opts.k));
    manifest.set("version", version_string);
    manifest.set("output", opts.out);
    manifest.write_sidecar(opts.out);
}

void add_test_options(CLI::App& cmd, TestOptions& opts, bool with_fdr) {
    cmd.add_option("graph-file", opts.graph_file,
                   "Edge-list CSV with header src,dst")
        ->required();
    cmd.add_option("panel-file", opts.panel_file,
                   "Panel CSV, wide (region_0,...) or long (region,time,value)")
        ->required();
    cmd.add_option("--stat", opts.stat, "Association statistic")
        ->check(CLI::IsMember({"moran", "geary-l2", "geary-l1", "binary"}))
        ->capture_default_str();
    cmd.add_option("--lag", opts.lag,
                   "Neighborhood order: exact graph distance k")
        ->capture_default_str();
    cmd.add_option("--metric-matrix", opts.metric_file,
                   "Headerless T x T inner-product matrix CSV (moran only)");
    if (with_fdr) {
        cmd.add_option("--fdr", opts.fdr,
                       "False-discovery-rate adjustment of the analytic "
                       "p-values")
            ->check(CLI::IsMember({"global", "spatial", "none"}))
            ->capture_default_str();
    }
    cmd.add_option("--alpha", opts.alpha,
                   "Nominal significance level, recorded in the manifest "
                   "(output columns report the fixed 0.05 and 0.01 levels)")
        ->capture_default_str();
    cmd.add_option("--mc", opts.mc,
                   "Also estimate p-values from this many Monte Carlo "
                   "permutations (fills the p_mc column)");
    cmd.add_option("--seed", opts.seed, "RNG seed for --mc")
        ->capture_default_str();
    cmd.add_option("--out", opts.out, "Output CSV path")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Spatial association tests for multivariate panel data: per-region "
        "and network-wide permutation tests with analytic tail bounds, "
        "Monte Carlo cross-checks, and a lattice power study."};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);
    app.footer(
        "Exit codes:\n"
        "  0  success\n"
        "  2  input error (unreadable or malformed files, invalid flags,\n"
        "     dimension mismatches)\n"
        "  3  numeric failure (simulated covariance not positive definite)");

    auto threads = std::make_shared<int>(0);
    app.add_option("--threads", *threads,
                   "Cap worker threads (0 = hardware); never affects output "
                   "bytes");
    // Subcommand callbacks run at the end of parse(), after --threads is
    // known, so each applies the cap before doing any work.

    auto test_opts = std::make_shared<TestOptions>();
    CLI::App* lisa_cmd = app.add_subcommand(
        "lisa", "Per-region association tests with FDR adjustment");
    add_test_options(*lisa_cmd, *test_opts, /*with_fdr=*/true);
    lisa_cmd->callback([test_opts, threads] {
        set_max_threads(*threads);
        run_lisa(*test_opts);
    });

    auto gisa_opts = std::make_shared<TestOptions>();
    CLI::App* gisa_cmd =
        app.add_subcommand("gisa", "Network-wide association test");
    add_test_options(*gisa_cmd, *gisa_opts, /*with_fdr=*/false);
    gisa_cmd->callback([gisa_opts, threads] {
        set_max_threads(*threads);
        run_gisa(*gisa_opts);
    });

    auto sim_opts = std::make_shared<SimulateOptions>();
    CLI::App* sim_cmd = app.add_subcommand(
        "simulate", "Power study on a rook-adjacency grid with Gaussian "
                    "panels of covariance I + c*A");
    sim_cmd->add_option("--rows", sim_opts->rows, "Grid rows")->required();
    sim_cmd->add_option("--cols", sim_opts->cols, "Grid columns")->required();
    sim_cmd->add_option("--t", sim_opts->time_count, "Panel length T")
        ->capture_default_str();
    sim_cmd->add_option("--c-list", sim_opts->c_values,
                        "Comma-separated spatial dependence values c")
        ->required()
        ->delimiter(',');
    sim_cmd->add_option("--replicates", sim_opts->replicates,
                        "Replicates per c")
        ->capture_default_str();
    sim_cmd->add_option("--alpha", sim_opts->alpha,
                        "Rejection threshold for raw analytic p-values")
        ->capture_default_str();
    sim_cmd->add_option("--mode", sim_opts->mode,
                        "lisa: mean fraction of significant regions; "
                        "gisa: fraction of replicates significant")
        ->check(CLI::IsMember({"lisa", "gisa"}))
        ->capture_default_str();
    sim_cmd->add_option("--seed", sim_opts->seed, "RNG seed")
        ->capture_default_str();
    sim_cmd->add_option("--out", sim_opts->out, "Output CSV path")->required();
    sim_cmd->callback([sim_opts, threads] {
        set_max_threads(*threads);
        run_simulate(*sim_opts);
    });

    auto cmp_opts = std::make_shared<CompareOptions>();
    CLI::App* cmp_cmd = app.add_subcommand(
        "compare", "Agreement (MCC, Rand index) between the sig_05 columns "
                   "of two significance files");
    cmp_cmd->add_option("sig-file-a", cmp_opts->file_a,
                        "First significance CSV (reference labeling)")
        ->required();
    cmp_cmd->add_option("sig-file-b", cmp_opts->file_b,
                        "Second significance CSV")
        ->required();
    cmp_cmd->add_option("--out", cmp_opts->out, "Output CSV path")->required();
    cmp_cmd->callback([cmp_opts] { run_compare(*cmp_opts); });

    auto lag_opts = std::make_shared<LagOptions>();
    CLI::App* lag_cmd = app.add_subcommand(
        "lag", "Write the order-k neighborhood graph (exact graph distance "
               "k) as an edge list");
    lag_cmd->add_option("graph-file", lag_opts->graph_file,
                        "Edge-list CSV with header src,dst")
        ->required();
    lag_cmd->add_option("--k", lag_opts->k, "Neighborhood order (k >= 0)")
        ->capture_default_str();
    lag_cmd->add_option("--out", lag_opts->out, "Output CSV path")->required();
    lag_cmd->callback([lag_opts] { run_lag(*lag_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumericError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
