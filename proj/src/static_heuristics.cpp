#include "base3/static_heuristics.hpp"

namespace base3 {

void NeighborIndex::update(std::span<const TemporalEdge> batch) {
    for (const auto& e : batch) {
        nbrs_[e.src].insert(e.dst);
        nbrs_[e.dst].insert(e.src);
    }
}

std::size_t NeighborIndex::common_neighbors(NodeId u, NodeId v) const {
    auto iu = nbrs_.find(u);
    auto iv = nbrs_.find(v);
    if (iu == nbrs_.end() || iv == nbrs_.end()) return 0;
    const auto& small = iu->second.size() <= iv->second.size() ? iu->second
                                                               : iv->second;
    const auto& large = iu->second.size() <= iv->second.size() ? iv->second
                                                               : iu->second;
    std::size_t count = 0;
    for (NodeId n : small)
        if (large.contains(n)) ++count;
    return count;
}

std::uint64_t NeighborIndex::preferential_attachment(NodeId u, NodeId v) const {
    return static_cast<std::uint64_t>(degree(u)) *
           static_cast<std::uint64_t>(degree(v));
}

std::size_t NeighborIndex::degree(NodeId u) const {
    auto it = nbrs_.find(u);
    return it == nbrs_.end() ? 0 : it->second.size();
}

}  // namespace base3
