#include "base3/harness.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "base3/edgebank.hpp"
#include "base3/poptrack.hpp"
#include "base3/static_heuristics.hpp"
#include "base3/tcomem.hpp"

namespace base3 {

const char* to_string(Model m) {
    switch (m) {
        case Model::edgebank: return "edgebank";
        case Model::poptrack: return "poptrack";
        case Model::tcomem: return "tcomem";
        case Model::base3: return "base3";
        case Model::cn: return "cn";
        case Model::pa: return "pa";
    }
    return "?";
}

Model model_from_string(const std::string& s) {
    if (s == "edgebank") return Model::edgebank;
    if (s == "poptrack") return Model::poptrack;
    if (s == "tcomem") return Model::tcomem;
    if (s == "base3") return Model::base3;
    if (s == "cn") return Model::cn;
    if (s == "pa") return Model::pa;
    throw std::invalid_argument("unknown model '" + s + "'");
}

ChronoSplit load_dataset(const std::string& path,
                         std::array<double, 3> ratios) {
    if (std::filesystem::is_directory(path)) return load_tgb_dir(path);
    return chronological_split(load_edges(path), ratios);
}

namespace {

// Positives sharing one exact timestamp, for current-step exclusion.
using StepPairs = std::unordered_map<double, PairSet>;

StepPairs step_pairs_of(const EdgeStream& val, const EdgeStream& test) {
    StepPairs steps;
    for (const EdgeStream* s : {&val, &test})
        for (const auto& e : *s) steps[e.t].emplace(e.src, e.dst);
    return steps;
}

std::vector<NegativeQuery> match_external(
    const std::vector<NegativeQuery>& records, const EdgeStream& positives,
    std::size_t offset, const std::string& file) {
    std::vector<NegativeQuery> out;
    out.reserve(positives.size());
    for (std::size_t i = 0; i < positives.size(); ++i) {
        const auto& rec = records[offset + i];
        if (rec.positive != positives[i])
            throw std::runtime_error(
                file + ": record " + std::to_string(offset + i + 1) +
                " does not match the stream positive (expected " +
                std::to_string(positives[i].src) + "," +
                std::to_string(positives[i].dst) + ")");
        out.push_back(rec);
    }
    return out;
}

void run_workers(std::size_t n, std::size_t threads,
                 const std::function<void(std::size_t)>& work) {
    if (threads <= 1 || n < 2 * threads) {
        for (std::size_t i = 0; i < n; ++i) work(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += threads) work(i);
        });
    for (auto& th : pool) th.join();
}

void validate_config(const RunConfig& config) {
    if (config.span_fraction <= 0 || config.span_fraction > 1.0)
        throw std::invalid_argument("span_fraction must be in (0, 1]");
    if (config.lambda < 0 || config.lambda > 1.0)
        throw std::invalid_argument("lambda must be in [0, 1]");
    if (!(config.tw > 0)) throw std::invalid_argument("tw must be positive");
    if (config.tau_p < 0)
        throw std::invalid_argument("tau_p must be positive (or 0 for default)");
    if (config.k == 0) throw std::invalid_argument("K must be >= 1");
    if (config.batch_size == 0)
        throw std::invalid_argument("batch_size must be >= 1");
    if (config.negatives.n == 0)
        throw std::invalid_argument("n_neg must be >= 1");
    if (config.manual_weights) validate(*config.manual_weights);
}

}  // namespace

QuerySet build_queries(const ChronoSplit& split, const NegSpec& spec) {
    QuerySet out;

    if (spec.strategy == NegStrategy::external) {
        auto records = load_negatives(spec.file);
        const std::size_t expected = split.val.size() + split.test.size();
        if (records.size() != expected)
            throw std::runtime_error(
                spec.file + ": expected " + std::to_string(expected) +
                " records (val+test positives), got " +
                std::to_string(records.size()));
        out.val = match_external(records, split.val, 0, spec.file);
        out.test = match_external(records, split.test, split.val.size(),
                                  spec.file);
        return out;
    }

    EdgeStream full = split.train;
    full.insert(full.end(), split.val.begin(), split.val.end());
    full.insert(full.end(), split.test.begin(), split.test.end());
    const std::vector<NodeId> universe = node_universe(full);

    const PairSet train_pairs = distinct_pairs(split.train);
    StepPairs steps;
    SourceIndex train_index;
    SourceIndex test_only_index;
    if (spec.strategy != NegStrategy::random) {
        steps = step_pairs_of(split.val, split.test);
        train_index = SourceIndex(train_pairs);
        PairSet test_only;
        for (const EdgeStream* s : {&split.val, &split.test})
            for (const auto& e : *s) {
                NodePair p{e.src, e.dst};
                if (!train_pairs.contains(p)) test_only.insert(p);
            }
        test_only_index = SourceIndex(test_only);
    }

    std::uint64_t query_index = 0;
    auto make = [&](const TemporalEdge& pos) -> NegativeQuery {
        const std::uint64_t seed = spec.seed + query_index++;
        switch (spec.strategy) {
            case NegStrategy::random:
                return sample_random(universe, pos, spec.n, seed);
            case NegStrategy::historical:
                return sample_historical(train_index, steps.at(pos.t), pos,
                                         universe, spec.n, seed);
            case NegStrategy::inductive:
                return sample_inductive(test_only_index, steps.at(pos.t), pos,
                                        universe, spec.n, seed);
            case NegStrategy::external: break;
        }
        throw std::logic_error("unreachable");
    };

    out.val.reserve(split.val.size());
    for (const auto& e : split.val) out.val.push_back(make(e));
    out.test.reserve(split.test.size());
    for (const auto& e : split.test) out.test.push_back(make(e));
    return out;
}

MetricReport run_eval(const ChronoSplit& split, const QuerySet& queries,
                      const RunConfig& config) {
    if (queries.val.size() != split.val.size() ||
        queries.test.size() != split.test.size())
        throw std::invalid_argument("query set does not match the split");
    validate_config(config);

    const double train_start = split.train.front().t;
    const double train_end = split.train.back().t;

    EdgeBankMemory bank(config.span_fraction, train_start, train_end);
    PopularityTable pops(config.effective_tau_p(), config.k);
    CoMemState comem({config.tw, config.lambda});
    NeighborIndex nbrs;

    auto ingest = [&](std::span<const TemporalEdge> batch) {
        bank.update(batch);
        pops.update(batch);
        comem.update(batch);
        nbrs.update(batch);
    };

    for (auto batch : batches(split.train, config.batch_size)) ingest(batch);

    auto score_edge = [&](NodeId u, NodeId v, double t) -> double {
        switch (config.model) {
            case Model::edgebank:
                return bank.score(u, v, t);
            case Model::poptrack:
                return pops.score(v);
            case Model::tcomem:
                return comem.score(pops, u, v, t);
            case Model::base3: {
                ComponentScores s{bank.score(u, v, t), pops.score(v),
                                  comem.score(pops, u, v, t)};
                if (config.manual_weights)
                    return interpolate(s, *config.manual_weights);
                return ensemble_score(s, config.scheme);
            }
            case Model::cn:
                return static_cast<double>(nbrs.common_neighbors(u, v));
            case Model::pa:
                return static_cast<double>(nbrs.preferential_attachment(u, v));
        }
        throw std::logic_error("unreachable");
    };

    auto evaluate_split =
        [&](const EdgeStream& stream,
            const std::vector<NegativeQuery>& split_queries)
        -> std::vector<ScoredQuery> {
        std::vector<ScoredQuery> scored(split_queries.size());
        std::size_t offset = 0;
        for (auto batch : batches(stream, config.batch_size)) {
            // Score the whole batch against memory as of the previous
            // batch, then ingest its positives.
            run_workers(batch.size(), config.threads, [&](std::size_t i) {
                const auto& q = split_queries[offset + i];
                ScoredQuery& sq = scored[offset + i];
                sq.pos_score =
                    score_edge(q.positive.src, q.positive.dst, q.positive.t);
                sq.neg_scores.reserve(q.negatives.size());
                for (NodeId neg : q.negatives)
                    sq.neg_scores.push_back(
                        score_edge(q.positive.src, neg, q.positive.t));
            });
            ingest(batch);
            offset += batch.size();
        }
        return scored;
    };

    const auto scored_val = evaluate_split(split.val, queries.val);
    const auto scored_test = evaluate_split(split.test, queries.test);

    auto pooled_auroc = [](const std::vector<ScoredQuery>& scored) {
        std::vector<double> pos, neg;
        for (const auto& sq : scored) {
            pos.push_back(sq.pos_score);
            neg.insert(neg.end(), sq.neg_scores.begin(), sq.neg_scores.end());
        }
        return auroc(pos, neg);
    };
    auto total_fill = [](const std::vector<NegativeQuery>& qs) {
        std::size_t fills = 0;
        for (const auto& q : qs) fills += q.fill_count;
        return fills;
    };

    MetricReport report;
    report.mrr_val = mrr(scored_val, config.tie_mode);
    report.mrr_test = mrr(scored_test, config.tie_mode);
    report.auroc_val = pooled_auroc(scored_val);
    report.auroc_test = pooled_auroc(scored_test);
    report.n_queries_val = scored_val.size();
    report.n_queries_test = scored_test.size();
    report.fill_count_val = total_fill(queries.val);
    report.fill_count_test = total_fill(queries.test);
    return report;
}

MetricReport run_eval(const RunConfig& config) {
    validate_config(config);
    const ChronoSplit split = load_dataset(config.dataset, config.split_ratios);
    const QuerySet queries = build_queries(split, config.negatives);
    return run_eval(split, queries, config);
}

std::vector<SweepResult> run_sweep(const SweepGrid& grid,
                                   const RunConfig& base) {
    const ChronoSplit split = load_dataset(base.dataset, base.split_ratios);
    // Sampled once per (dataset, strategy, seed); grid points share the
    // same negatives so comparisons isolate hyperparameters.
    const QuerySet queries = build_queries(split, base.negatives);

    auto axis = [](auto values, auto fallback) {
        if (values.empty()) values.push_back(fallback);
        return values;
    };
    const auto spans = axis(grid.spans, base.span_fraction);
    const auto lambdas = axis(grid.lambdas, base.lambda);
    const auto ks = axis(grid.ks, base.k);
    const auto schemes = axis(grid.schemes, base.scheme);

    std::vector<SweepResult> results;
    for (double span : spans)
        for (double lambda : lambdas)
            for (std::size_t k : ks)
                for (Scheme scheme : schemes) {
                    SweepResult r;
                    r.config = base;
                    r.config.span_fraction = span;
                    r.config.lambda = lambda;
                    r.config.k = k;
                    r.config.scheme = scheme;
                    try {
                        r.report = run_eval(split, queries, r.config);
                        r.ok = true;
                    } catch (const std::exception& ex) {
                        r.error = ex.what();
                    }
                    results.push_back(std::move(r));
                }
    return results;
}

SweepGrid parse_grid_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    SweepGrid grid;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path.string() + ": line " +
                                     std::to_string(line_no) +
                                     ": expected `key = values`");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{}
                                          : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        std::stringstream vals(line.substr(eq + 1));
        std::string tok;
        while (std::getline(vals, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) continue;
            if (key == "span")
                grid.spans.push_back(std::stod(tok));
            else if (key == "lambda")
                grid.lambdas.push_back(std::stod(tok));
            else if (key == "k")
                grid.ks.push_back(static_cast<std::size_t>(std::stoull(tok)));
            else if (key == "scheme")
                grid.schemes.push_back(scheme_from_string(tok));
            else
                throw std::runtime_error(path.string() + ": line " +
                                         std::to_string(line_no) +
                                         ": unknown grid key '" + key + "'");
        }
    }
    return grid;
}

nlohmann::ordered_json report_json(const RunConfig& config,
                                   const MetricReport& report) {
    nlohmann::ordered_json j;
    j["config"] = {
        {"dataset", config.dataset},
        {"model", to_string(config.model)},
        {"scheme", to_string(config.scheme)},
        {"span_fraction", config.span_fraction},
        {"lambda", config.lambda},
        {"tw", config.tw},
        {"tau_p", config.effective_tau_p()},
        {"k", config.k},
        {"batch_size", config.batch_size},
        {"neg_strategy", to_string(config.negatives.strategy)},
        {"n_neg", config.negatives.n},
        {"seed", config.negatives.seed},
        {"split_ratios", config.split_ratios},
        {"tie_mode", to_string(config.tie_mode)},
    };
    if (config.manual_weights)
        j["config"]["manual_weights"] = {config.manual_weights->alpha,
                                         config.manual_weights->beta,
                                         config.manual_weights->delta};
    j["metrics"] = {
        {"mrr_val", report.mrr_val},
        {"mrr_test", report.mrr_test},
        {"auroc_val", report.auroc_val},
        {"auroc_test", report.auroc_test},
        {"n_queries_val", report.n_queries_val},
        {"n_queries_test", report.n_queries_test},
    };
    j["disclosures"] = {
        {"tau_p_defaulted_to_tw", config.tau_p <= 0},
        {"fill_count_val", report.fill_count_val},
        {"fill_count_test", report.fill_count_test},
        {"protocol", "score-then-update; memories keep updating through val "
                     "and test"},
    };
    return j;
}

std::string sweep_csv(const std::vector<SweepResult>& results) {
    std::ostringstream out;
    out << "dataset,model,scheme,span,lambda,tw,tau_p,tau_p_defaulted,k,"
           "batch_size,neg_strategy,n_neg,seed,tie_mode,"
           "mrr_val,mrr_test,auroc_val,auroc_test,"
           "n_queries_val,n_queries_test,fill_count_val,fill_count_test,"
           "error\n";
    out.precision(17);
    for (const auto& r : results) {
        const auto& c = r.config;
        out << c.dataset << ',' << to_string(c.model) << ','
            << to_string(c.scheme) << ',' << c.span_fraction << ','
            << c.lambda << ',' << c.tw << ',' << c.effective_tau_p() << ','
            << (c.tau_p <= 0 ? 1 : 0) << ',' << c.k << ',' << c.batch_size
            << ',' << to_string(c.negatives.strategy) << ',' << c.negatives.n
            << ',' << c.negatives.seed << ',' << to_string(c.tie_mode) << ',';
        if (r.ok) {
            out << r.report.mrr_val << ',' << r.report.mrr_test << ','
                << r.report.auroc_val << ',' << r.report.auroc_test << ','
                << r.report.n_queries_val << ',' << r.report.n_queries_test
                << ',' << r.report.fill_count_val << ','
                << r.report.fill_count_test << ',';
        } else {
            out << ",,,,,,,,";
        }
        std::string err = r.error;
        std::replace(err.begin(), err.end(), ',', ';');
        std::replace(err.begin(), err.end(), '\n', ' ');
        out << err << '\n';
    }
    return out.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace base3
