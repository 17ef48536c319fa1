#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "base3/graph_stream.hpp"
#include "base3/types.hpp"

namespace base3 {

enum class NegStrategy { random, historical, inductive, external };

const char* to_string(NegStrategy s);

// One ranking query: a positive edge plus its negative destinations.
// fill_count records how many negatives came from the random fallback.
struct NegativeQuery {
    TemporalEdge positive;
    std::vector<NodeId> negatives;
    NegStrategy strategy = NegStrategy::random;
    std::size_t fill_count = 0;
};

// Per-source destination lists, sorted ascending for deterministic pools.
class SourceIndex {
public:
    SourceIndex() = default;
    explicit SourceIndex(const PairSet& pairs);

    // Sorted destinations for src; empty for unknown sources.
    const std::vector<NodeId>& destinations(NodeId src) const;

private:
    std::unordered_map<NodeId, std::vector<NodeId>> by_src_;
};

// Sorted unique node ids of a stream; the sampling universe.
std::vector<NodeId> node_universe(const EdgeStream& stream);

// n distinct destinations drawn uniformly from universe \ {positive.dst}.
// universe must be sorted unique and strictly larger than n.
NegativeQuery sample_random(const std::vector<NodeId>& universe,
                            const TemporalEdge& positive, std::size_t n,
                            std::uint64_t seed);

// Pool: past partners of the source (train pairs) not active at the current
// step. Short pools are topped up from sample_random and the fill recorded.
NegativeQuery sample_historical(const SourceIndex& train_index,
                                const PairSet& current_step_pairs,
                                const TemporalEdge& positive,
                                const std::vector<NodeId>& universe,
                                std::size_t n, std::uint64_t seed);

// Pool: destinations seen with the source only at evaluation time (never in
// train), not active at the current step. Same fallback as historical.
NegativeQuery sample_inductive(const SourceIndex& test_only_index,
                               const PairSet& current_step_pairs,
                               const TemporalEdge& positive,
                               const std::vector<NodeId>& universe,
                               std::size_t n, std::uint64_t seed);

// CSV `src,dst,t,neg1;neg2;...;negN`, one record per positive; an optional
// `src,dst,t,negs` header line is skipped. Validates that negatives are
// distinct and exclude the positive destination.
std::vector<NegativeQuery> load_negatives(const std::filesystem::path& path);

void write_negatives(const std::filesystem::path& path,
                     const std::vector<NegativeQuery>& queries);

}  // namespace base3
