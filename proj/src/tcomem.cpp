#include "base3/tcomem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace base3 {

CoMemState::CoMemState(CoMemConfig cfg)
    : cfg_(cfg), current_time_(-std::numeric_limits<double>::infinity()) {
    if (!(cfg.tw > 0)) throw std::invalid_argument("tw must be positive");
    if (cfg.lambda < 0.0 || cfg.lambda > 1.0)
        throw std::invalid_argument("lambda must be in [0, 1]");
    if (cfg.max_queue == 0) throw std::invalid_argument("max_queue must be >= 1");
}

void CoMemState::update(std::span<const TemporalEdge> batch) {
    for (const auto& e : batch) {
        if (e.t < current_time_)
            throw std::runtime_error("tcomem: out-of-order batch (t=" +
                                     std::to_string(e.t) + ")");
        auto& queue = recent_[e.src];
        queue.emplace_back(e.t, e.dst);
        while (!queue.empty() && e.t - queue.front().first > cfg_.tw)
            queue.pop_front();
        while (queue.size() > cfg_.max_queue) queue.pop_front();
        ++cooc_[unordered_pair(e.src, e.dst)];
        current_time_ = std::max(current_time_, e.t);
    }
}

double CoMemState::score(const PopularityTable& pops, NodeId u, NodeId v,
                         double t) const {
    double decayed_sum = 0.0;
    if (auto it = recent_.find(u); it != recent_.end()) {
        for (const auto& [t_i, n_i] : it->second) {
            const double age = t - t_i;
            if (age > cfg_.tw) continue;
            decayed_sum += std::exp(-age / cfg_.tw) * pops.popularity(n_i, t);
        }
    }
    double influence = 0.0;
    if (auto it = cooc_.find(unordered_pair(u, v)); it != cooc_.end()) {
        const auto c = static_cast<double>(it->second);
        influence = cfg_.lambda * c / (1.0 + c);
    }
    const double total = decayed_sum + influence;
    return total / (1.0 + total);
}

std::uint64_t CoMemState::cooccurrence(NodeId u, NodeId v) const {
    auto it = cooc_.find(unordered_pair(u, v));
    return it == cooc_.end() ? 0 : it->second;
}

std::size_t CoMemState::queue_length(NodeId u) const {
    auto it = recent_.find(u);
    return it == recent_.end() ? 0 : it->second.size();
}

}  // namespace base3
