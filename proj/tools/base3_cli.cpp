// Command-line benchmark driver: eval / sweep / stats.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "base3/harness.hpp"

namespace {

struct CliOptions {
    base3::RunConfig config;
    std::string model = "base3";
    std::string scheme = "multi_conf";
    std::string neg = "random";
    std::string tie_mode = "midrank";
    std::vector<double> split = {0.70, 0.15, 0.15};
    std::vector<double> weights;  // manual alpha,beta,delta
    std::string out;
};

void add_eval_options(CLI::App& cmd, CliOptions& opt) {
    cmd.add_option("--dataset", opt.config.dataset,
                   "Edge-list CSV or TGB-layout directory")
        ->required();
    cmd.add_option("--model", opt.model,
                   "edgebank|poptrack|tcomem|base3|cn|pa");
    cmd.add_option("--scheme", opt.scheme, "uniform|eb_conf|multi_conf");
    cmd.add_option("--weights", opt.weights,
                   "Manual alpha,beta,delta override (base3 only)")
        ->delimiter(',')
        ->expected(3);
    cmd.add_option("--span", opt.config.span_fraction,
                   "EdgeBank memory span fraction, (0,1]");
    cmd.add_option("--lambda", opt.config.lambda, "Co-occurrence weight");
    cmd.add_option("--tw", opt.config.tw, "t-CoMem time window");
    cmd.add_option("--tau-p", opt.config.tau_p,
                   "PopTrack decay constant (default: tw)");
    cmd.add_option("--k", opt.config.k, "PopTrack top-K size");
    cmd.add_option("--batch", opt.config.batch_size, "Batch size");
    cmd.add_option("--neg", opt.neg,
                   "random|historical|inductive|file:PATH");
    cmd.add_option("--n-neg", opt.config.negatives.n,
                   "Negatives per positive");
    cmd.add_option("--seed", opt.config.negatives.seed, "Sampling seed");
    cmd.add_option("--split", opt.split, "Train,val,test ratios")
        ->delimiter(',')
        ->expected(3);
    cmd.add_option("--tie-mode", opt.tie_mode,
                   "midrank|optimistic|pessimistic");
    cmd.add_option("--threads", opt.config.threads,
                   "Scoring threads per batch");
}

base3::RunConfig resolve(CliOptions& opt) {
    auto& c = opt.config;
    c.model = base3::model_from_string(opt.model);
    c.scheme = base3::scheme_from_string(opt.scheme);
    c.split_ratios = {opt.split[0], opt.split[1], opt.split[2]};
    if (!opt.weights.empty()) {
        c.manual_weights = base3::InterpolationWeights{
            opt.weights[0], opt.weights[1], opt.weights[2]};
        base3::validate(*c.manual_weights);
    }
    if (opt.tie_mode == "midrank")
        c.tie_mode = base3::TieMode::midrank;
    else if (opt.tie_mode == "optimistic")
        c.tie_mode = base3::TieMode::optimistic;
    else if (opt.tie_mode == "pessimistic")
        c.tie_mode = base3::TieMode::pessimistic;
    else
        throw CLI::ValidationError("--tie-mode", "unknown mode " + opt.tie_mode);

    if (opt.neg.rfind("file:", 0) == 0) {
        c.negatives.strategy = base3::NegStrategy::external;
        c.negatives.file = opt.neg.substr(5);
    } else if (opt.neg == "random") {
        c.negatives.strategy = base3::NegStrategy::random;
    } else if (opt.neg == "historical") {
        c.negatives.strategy = base3::NegStrategy::historical;
    } else if (opt.neg == "inductive") {
        c.negatives.strategy = base3::NegStrategy::inductive;
    } else {
        throw CLI::ValidationError("--neg", "unknown strategy " + opt.neg);
    }
    return c;
}

int run_eval_cmd(CliOptions& opt) {
    const base3::RunConfig config = resolve(opt);
    const auto t0 = std::chrono::steady_clock::now();
    const base3::MetricReport report = base3::run_eval(config);
    const auto t1 = std::chrono::steady_clock::now();

    // Wall-clock goes to stderr so the report itself is run-to-run
    // byte-identical.
    std::cerr << "wall_seconds="
              << std::chrono::duration<double>(t1 - t0).count() << "\n";

    const std::string text = base3::report_json(config, report).dump(2) + "\n";
    if (opt.out.empty())
        std::cout << text;
    else
        base3::write_text_file(opt.out, text);
    return 0;
}

int run_sweep_cmd(CliOptions& opt, const std::string& grid_path) {
    const base3::RunConfig base = resolve(opt);
    const base3::SweepGrid grid = base3::parse_grid_file(grid_path);
    const auto results = base3::run_sweep(grid, base);

    std::filesystem::path dir = opt.out.empty() ? "." : opt.out;
    std::filesystem::create_directories(dir);
    base3::write_text_file(dir / "sweep.csv", base3::sweep_csv(results));
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].ok) continue;
        base3::write_text_file(
            dir / ("report_" + std::to_string(i) + ".json"),
            base3::report_json(results[i].config, results[i].report).dump(2) +
                "\n");
    }
    std::size_t failed = 0;
    for (const auto& r : results)
        if (!r.ok) ++failed;
    std::cerr << results.size() << " grid points, " << failed << " failed\n";
    return 0;
}

int run_stats_cmd(const std::string& dataset,
                  const std::vector<double>& split) {
    const base3::ChronoSplit cs =
        base3::load_dataset(dataset, {split[0], split[1], split[2]});
    const base3::SplitStats stats = base3::split_stats(cs);
    nlohmann::ordered_json j{
        {"dataset", dataset},
        {"n_nodes", stats.n_nodes},
        {"n_edges", stats.n_edges},
        {"n_steps", stats.n_steps},
        {"surprise", stats.surprise},
        {"split",
         {{"train", cs.train.size()}, {"val", cs.val.size()},
          {"test", cs.test.size()}}},
    };
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Training-free temporal link prediction benchmark"};
    app.require_subcommand(1);

    CliOptions eval_opt;
    auto* eval_cmd = app.add_subcommand("eval", "Run one evaluation");
    add_eval_options(*eval_cmd, eval_opt);
    eval_cmd->add_option("--out", eval_opt.out, "Report JSON path (default stdout)");

    CliOptions sweep_opt;
    std::string grid_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a hyperparameter grid");
    add_eval_options(*sweep_cmd, sweep_opt);
    sweep_cmd->add_option("--grid", grid_path, "Grid config file")->required();
    sweep_cmd->add_option("--out", sweep_opt.out, "Output directory")
        ->required();

    std::string stats_dataset;
    std::vector<double> stats_split = {0.70, 0.15, 0.15};
    auto* stats_cmd = app.add_subcommand("stats", "Print dataset statistics");
    stats_cmd->add_option("--dataset", stats_dataset, "Dataset path")
        ->required();
    stats_cmd->add_option("--split", stats_split, "Train,val,test ratios")
        ->delimiter(',')
        ->expected(3);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) return run_eval_cmd(eval_opt);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_opt, grid_path);
        if (stats_cmd->parsed()) return run_stats_cmd(stats_dataset, stats_split);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
