#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <unordered_map>

#include "base3/poptrack.hpp"
#include "base3/types.hpp"

namespace base3 {

struct CoMemConfig {
    double tw = 1'000'000.0;        // recency time window, raw timestamp units
    double lambda = 1.0;            // co-occurrence weight, in [0,1]
    std::size_t max_queue = 10'000; // hard cap per source, oldest evicted
};

// Temporal co-occurrence memory: per-source recency queues of recent
// destinations plus a symmetric co-occurrence counter.
//
// score(u, v, t) = S'/(1+S') where
//   S' = sum over recent (t_i, n_i) of exp(-(t-t_i)/tw) * popularity(n_i, t)
//      + lambda * c/(1+c),  c = co-occurrence count of {u,v}.
// S'/(1+S') equals 1/(1+1/S') for S' > 0 and extends it with 0 at S' = 0.
class CoMemState {
public:
    explicit CoMemState(CoMemConfig cfg = {});

    // Per edge (u,v,t): append (t,v) to recent[u], bump the symmetric
    // co-occurrence count of {u,v}, prune entries older than t - tw.
    void update(std::span<const TemporalEdge> batch);

    // Read-only; entries that aged past the window since the last update
    // are skipped, never mutated.
    double score(const PopularityTable& pops, NodeId u, NodeId v,
                 double t) const;

    std::uint64_t cooccurrence(NodeId u, NodeId v) const;
    std::size_t queue_length(NodeId u) const;
    const CoMemConfig& config() const { return cfg_; }
    double current_time() const { return current_time_; }

private:
    using RecencyQueue = std::deque<std::pair<double, NodeId>>;

    std::unordered_map<NodeId, RecencyQueue> recent_;
    std::unordered_map<NodePair, std::uint64_t, NodePairHash> cooc_;
    CoMemConfig cfg_;
    double current_time_;
};

}  // namespace base3
