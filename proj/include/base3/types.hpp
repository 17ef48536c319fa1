#pragma once

#include <cstdint>
#include <functional>
#include <utility>

namespace base3 {

using NodeId = std::int64_t;

// One timestamped directed interaction.
struct TemporalEdge {
    NodeId src{};
    NodeId dst{};
    double t{};

    friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

using NodePair = std::pair<NodeId, NodeId>;

struct NodePairHash {
    std::size_t operator()(const NodePair& p) const noexcept {
        auto a = static_cast<std::uint64_t>(p.first);
        auto b = static_cast<std::uint64_t>(p.second);
        std::uint64_t h = a * 0x9e3779b97f4a7c15ULL;
        h ^= b + 0x517cc1b727220a95ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Canonical key for symmetric (unordered) pair maps.
inline NodePair unordered_pair(NodeId a, NodeId b) {
    return a <= b ? NodePair{a, b} : NodePair{b, a};
}

}  // namespace base3
