#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace base3 {

enum class TieMode { midrank, optimistic, pessimistic };

const char* to_string(TieMode m);

// One ranking query: the positive's score against its negatives' scores.
struct ScoredQuery {
    double pos_score{};
    std::vector<double> neg_scores;
};

// Metric values for one evaluation run.
struct MetricReport {
    double mrr_val{};
    double mrr_test{};
    double auroc_val{};
    double auroc_test{};
    std::size_t n_queries_val{};
    std::size_t n_queries_test{};
    std::size_t fill_count_val{};   // random-fill negatives, disclosed
    std::size_t fill_count_test{};
};

// rank = 1 + #{negatives above} + tie adjustment; returns 1/rank.
// midrank counts half of the tied negatives.
double reciprocal_rank(const ScoredQuery& q, TieMode mode = TieMode::midrank);

double mrr(std::span<const ScoredQuery> queries,
           TieMode mode = TieMode::midrank);

// Mann-Whitney AUROC via rank sums, ties counted half.
double auroc(std::span<const double> pos_scores,
             std::span<const double> neg_scores);

}  // namespace base3
