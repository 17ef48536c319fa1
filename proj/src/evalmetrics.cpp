#include "base3/evalmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace base3 {

const char* to_string(TieMode m) {
    switch (m) {
        case TieMode::midrank: return "midrank";
        case TieMode::optimistic: return "optimistic";
        case TieMode::pessimistic: return "pessimistic";
    }
    return "?";
}

double reciprocal_rank(const ScoredQuery& q, TieMode mode) {
    if (q.neg_scores.empty())
        throw std::invalid_argument("reciprocal_rank: no negatives");
    std::size_t above = 0;
    std::size_t tied = 0;
    for (double s : q.neg_scores) {
        if (!std::isfinite(s))
            throw std::invalid_argument("reciprocal_rank: non-finite score");
        if (s > q.pos_score)
            ++above;
        else if (s == q.pos_score)
            ++tied;
    }
    double rank = 1.0 + static_cast<double>(above);
    switch (mode) {
        case TieMode::midrank: rank += static_cast<double>(tied) / 2.0; break;
        case TieMode::optimistic: break;
        case TieMode::pessimistic: rank += static_cast<double>(tied); break;
    }
    return 1.0 / rank;
}

double mrr(std::span<const ScoredQuery> queries, TieMode mode) {
    if (queries.empty()) throw std::invalid_argument("mrr: no queries");
    // Kahan summation; keeps the mean order-insensitive in practice.
    double sum = 0.0, comp = 0.0;
    for (const auto& q : queries) {
        const double y = reciprocal_rank(q, mode) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(queries.size());
}

double auroc(std::span<const double> pos_scores,
             std::span<const double> neg_scores) {
    if (pos_scores.empty() || neg_scores.empty())
        throw std::invalid_argument("auroc: both score classes must be non-empty");

    struct Item {
        double score;
        bool positive;
    };
    std::vector<Item> items;
    items.reserve(pos_scores.size() + neg_scores.size());
    for (double s : pos_scores) items.push_back({s, true});
    for (double s : neg_scores) items.push_back({s, false});
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.score < b.score; });

    // Mid-rank assignment over tie groups, summed over positives.
    double rank_sum_pos = 0.0;
    std::size_t i = 0;
    while (i < items.size()) {
        std::size_t j = i;
        while (j < items.size() && items[j].score == items[i].score) ++j;
        const double mid_rank = (static_cast<double>(i + 1) +
                                 static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            if (items[k].positive) rank_sum_pos += mid_rank;
        i = j;
    }

    const auto p = static_cast<double>(pos_scores.size());
    const auto n = static_cast<double>(neg_scores.size());
    const double u = rank_sum_pos - p * (p + 1.0) / 2.0;
    return u / (p * n);
}

}  // namespace base3
