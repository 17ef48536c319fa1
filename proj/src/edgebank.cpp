#include "base3/edgebank.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace base3 {

EdgeBankMemory::EdgeBankMemory(double span_fraction, double train_start,
                               double train_end)
    : span_fraction_(span_fraction),
      window_length_((train_end - train_start) * span_fraction),
      unbounded_(span_fraction >= 1.0),
      current_time_(-std::numeric_limits<double>::infinity()) {
    if (span_fraction <= 0.0 || span_fraction > 1.0)
        throw std::invalid_argument("span_fraction must be in (0, 1]");
    if (train_end < train_start)
        throw std::invalid_argument("train_end < train_start");
}

void EdgeBankMemory::update(std::span<const TemporalEdge> batch) {
    for (const auto& e : batch) {
        if (e.t < current_time_)
            throw std::runtime_error("edgebank: out-of-order batch (t=" +
                                     std::to_string(e.t) + " < current_time)");
        auto [it, inserted] = last_seen_.try_emplace({e.src, e.dst}, e.t);
        if (!inserted) it->second = std::max(it->second, e.t);
        current_time_ = std::max(current_time_, e.t);
    }
    if (!unbounded_) {
        // Entries expired as of current_time stay expired for any later
        // query, so pruning at batch boundaries never changes scores.
        std::erase_if(last_seen_, [&](const auto& kv) {
            return current_time_ - kv.second > window_length_;
        });
    }
}

int EdgeBankMemory::score(NodeId u, NodeId v, double t) const {
    auto it = last_seen_.find({u, v});
    if (it == last_seen_.end()) return 0;
    if (unbounded_) return 1;
    return (t - it->second <= window_length_) ? 1 : 0;
}

void EdgeBankMemory::dump_csv(std::ostream& os) const {
    os << "src,dst,last_seen\n";
    for (const auto& [pair, ts] : last_seen_)
        os << pair.first << ',' << pair.second << ',' << ts << '\n';
}

}  // namespace base3
