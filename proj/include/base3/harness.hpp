#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "base3/ensemble.hpp"
#include "base3/evalmetrics.hpp"
#include "base3/graph_stream.hpp"
#include "base3/negsample.hpp"

namespace base3 {

enum class Model { edgebank, poptrack, tcomem, base3, cn, pa };

const char* to_string(Model m);
Model model_from_string(const std::string& s);

struct NegSpec {
    NegStrategy strategy = NegStrategy::random;
    std::size_t n = 100;
    std::uint64_t seed = 42;
    std::string file;  // used when strategy == external
};

struct RunConfig {
    std::string dataset;
    Model model = Model::base3;
    Scheme scheme = Scheme::multi_conf;
    std::optional<InterpolationWeights> manual_weights;  // overrides scheme
    double span_fraction = 0.1;
    double lambda = 1.0;
    double tw = 1'000'000.0;
    double tau_p = 0.0;  // 0 means "default to tw", disclosed in reports
    std::size_t k = 1000;
    std::size_t batch_size = 200;
    NegSpec negatives;
    std::array<double, 3> split_ratios{0.70, 0.15, 0.15};
    TieMode tie_mode = TieMode::midrank;
    std::size_t threads = 1;

    double effective_tau_p() const { return tau_p > 0 ? tau_p : tw; }
};

// Negative queries for the two evaluation splits, one query per positive.
struct QuerySet {
    std::vector<NegativeQuery> val;
    std::vector<NegativeQuery> test;
};

// Single CSV file (split by ratios) or TGB-layout directory.
ChronoSplit load_dataset(const std::string& path,
                         std::array<double, 3> ratios);

// Builds (or loads) the per-positive negative queries. Depends only on the
// dataset, strategy, count and seed, so a sweep can reuse one QuerySet.
QuerySet build_queries(const ChronoSplit& split, const NegSpec& spec);

// Streaming evaluation: train feeds the memories, then val and test are
// processed in batches scored against the memory state of the previous
// batch (score-then-update); memories keep updating across the val/test
// boundary.
MetricReport run_eval(const ChronoSplit& split, const QuerySet& queries,
                      const RunConfig& config);
MetricReport run_eval(const RunConfig& config);

struct SweepGrid {
    std::vector<double> spans;
    std::vector<double> lambdas;
    std::vector<std::size_t> ks;
    std::vector<Scheme> schemes;
    // Empty axes fall back to the base config's value.
};

struct SweepResult {
    RunConfig config;
    MetricReport report;
    bool ok = false;
    std::string error;
};

// One run_eval per grid point in deterministic (span, lambda, k, scheme)
// order; negatives are sampled once and shared. Failures are recorded per
// point without aborting the sweep.
std::vector<SweepResult> run_sweep(const SweepGrid& grid,
                                   const RunConfig& base);

// `key = v1, v2, ...` lines; keys span, lambda, k, scheme; '#' comments.
SweepGrid parse_grid_file(const std::filesystem::path& path);

nlohmann::ordered_json report_json(const RunConfig& config,
                                   const MetricReport& report);
std::string sweep_csv(const std::vector<SweepResult>& results);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace base3
