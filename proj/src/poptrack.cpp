#include "base3/poptrack.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace base3 {

PopularityTable::PopularityTable(double tau_p, std::size_t k)
    : tau_(tau_p), k_(k) {
    if (!(tau_p > 0)) throw std::invalid_argument("tau_p must be positive");
    if (k == 0) throw std::invalid_argument("K must be >= 1");
}

void PopularityTable::update(std::span<const TemporalEdge> batch) {
    if (batch.empty()) return;
    double batch_max = batch.front().t;
    for (const auto& e : batch) {
        auto& entry = table_[e.dst];
        if (e.t < entry.last_update)
            throw std::runtime_error("poptrack: out-of-order batch (t=" +
                                     std::to_string(e.t) + ")");
        entry.pop = entry.pop * std::exp(-(e.t - entry.last_update) / tau_) + 1.0;
        entry.last_update = e.t;
        batch_max = std::max(batch_max, e.t);
    }
    recompute_topk(batch_max);
}

double PopularityTable::popularity(NodeId v, double t) const {
    auto it = table_.find(v);
    if (it == table_.end()) return 0.0;
    return it->second.pop * std::exp(-(t - it->second.last_update) / tau_);
}

int PopularityTable::score(NodeId v) const {
    return topk_set_.contains(v) ? 1 : 0;
}

void PopularityTable::recompute_topk(double now) {
    // Rank by popularity decayed to a common reference time; the reference
    // only rescales all values so the ordering is time-independent.
    std::vector<std::pair<double, NodeId>> ranked;
    ranked.reserve(table_.size());
    for (const auto& [node, entry] : table_)
        ranked.emplace_back(
            entry.pop * std::exp(-(now - entry.last_update) / tau_), node);

    const auto by_pop_then_id = [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    };
    const std::size_t keep = std::min(k_, ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + keep, ranked.end(),
                      by_pop_then_id);

    topk_.clear();
    topk_set_.clear();
    for (std::size_t i = 0; i < keep; ++i) {
        topk_.push_back(ranked[i].second);
        topk_set_.insert(ranked[i].second);
    }
}

void PopularityTable::dump_csv(std::ostream& os) const {
    os << "node,popularity,last_update\n";
    for (const auto& [node, entry] : table_)
        os << node << ',' << entry.pop << ',' << entry.last_update << '\n';
}

}  // namespace base3
