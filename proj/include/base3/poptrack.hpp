#pragma once

#include <ostream>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "base3/types.hpp"

namespace base3 {

// Per-node exponentially decayed incoming-interaction counts, with a
// top-K snapshot refreshed once per batch.
//
// Decay is lazy: stored values are exact as of each node's last update and
// decayed on read, which is equivalent to decaying every node on every
// event.
class PopularityTable {
public:
    PopularityTable(double tau_p, std::size_t k);

    // pop[dst] <- pop[dst] * exp(-(t - last_update)/tau_p) + 1 per edge,
    // then one top-K recomputation at the batch's max timestamp.
    void update(std::span<const TemporalEdge> batch);

    // Decayed popularity of v at time t; 0 for unknown nodes. Read-only.
    double popularity(NodeId v, double t) const;

    // 1 iff v is in the current top-K snapshot.
    int score(NodeId v) const;

    // Popularity descending, ties broken by ascending node id.
    const std::vector<NodeId>& topk() const { return topk_; }

    double tau() const { return tau_; }
    std::size_t k() const { return k_; }

    // Debug snapshot: `node,popularity,last_update` rows.
    void dump_csv(std::ostream& os) const;

private:
    struct Entry {
        double pop{};
        double last_update{};
    };

    void recompute_topk(double now);

    std::unordered_map<NodeId, Entry> table_;
    std::vector<NodeId> topk_;
    std::unordered_set<NodeId> topk_set_;
    double tau_;
    std::size_t k_;
};

}  // namespace base3
