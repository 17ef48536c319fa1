#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <unordered_set>

#include "base3/types.hpp"

namespace base3 {

// Cumulative undirected neighborhood index for the classic heuristics.
class NeighborIndex {
public:
    void update(std::span<const TemporalEdge> batch);

    // |neighbors(u) intersect neighbors(v)|
    std::size_t common_neighbors(NodeId u, NodeId v) const;

    // degree(u) * degree(v)
    std::uint64_t preferential_attachment(NodeId u, NodeId v) const;

    std::size_t degree(NodeId u) const;

private:
    std::unordered_map<NodeId, std::unordered_set<NodeId>> nbrs_;
};

}  // namespace base3
