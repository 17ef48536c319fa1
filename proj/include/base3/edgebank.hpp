#pragma once

#include <ostream>
#include <span>
#include <unordered_map>

#include "base3/types.hpp"

namespace base3 {

// Memory of previously seen directed pairs, scored by windowed membership.
//
// The window length is a fraction of the train-split duration; with
// span_fraction = 1.0 the window is unbounded (the EdgeBank-infinity
// variant), so nothing ever expires.
class EdgeBankMemory {
public:
    // train_start/train_end bound the known history used to size the window.
    EdgeBankMemory(double span_fraction, double train_start, double train_end);

    // Ingest one batch. Batch timestamps must be >= current_time.
    void update(std::span<const TemporalEdge> batch);

    // 1 iff (u,v) was seen and t - last_seen <= window_length.
    int score(NodeId u, NodeId v, double t) const;

    double span_fraction() const { return span_fraction_; }
    double window_length() const { return window_length_; }
    bool unbounded() const { return unbounded_; }
    double current_time() const { return current_time_; }
    std::size_t size() const { return last_seen_.size(); }

    // Debug snapshot: `src,dst,last_seen` rows.
    void dump_csv(std::ostream& os) const;

private:
    std::unordered_map<NodePair, double, NodePairHash> last_seen_;
    double span_fraction_;
    double window_length_;
    bool unbounded_;
    double current_time_;
};

}  // namespace base3
