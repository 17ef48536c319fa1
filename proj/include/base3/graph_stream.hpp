#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <unordered_set>
#include <vector>

#include "base3/types.hpp"

namespace base3 {

// Chronologically ordered (non-decreasing t) sequence of edges.
using EdgeStream = std::vector<TemporalEdge>;

using PairSet = std::unordered_set<NodePair, NodePairHash>;

struct ChronoSplit {
    EdgeStream train;
    EdgeStream val;
    EdgeStream test;
    std::array<double, 3> ratios{0.70, 0.15, 0.15};
};

struct SplitStats {
    std::size_t n_nodes{};
    std::size_t n_edges{};
    std::size_t n_steps{};   // distinct timestamps
    double surprise{};       // fraction of distinct test pairs unseen in train
};

// Parse a CSV edge list with header `src,dst,t` (extra columns ignored).
// Returns the stream stably sorted by timestamp. Throws std::runtime_error
// with a line number on parse failure; empty files are an error.
EdgeStream load_edges(const std::filesystem::path& path);

// Count-based chronological split: floor(n*r0) train, floor(n*r1) val,
// remainder test. Edges sharing a boundary timestamp stay where their
// position puts them. Any empty split is an error.
ChronoSplit chronological_split(const EdgeStream& stream,
                                std::array<double, 3> ratios);

// TGB-layout directory: train.csv / val.csv / test.csv.
ChronoSplit load_tgb_dir(const std::filesystem::path& dir);

// Consecutive chunks of batch_size edges; the final chunk may be smaller.
std::vector<std::span<const TemporalEdge>> batches(const EdgeStream& stream,
                                                   std::size_t batch_size);

PairSet distinct_pairs(const EdgeStream& stream);

// |test pairs \ train pairs| / |test pairs|, over distinct directed pairs.
double surprise(const EdgeStream& train, const EdgeStream& test);

SplitStats split_stats(const ChronoSplit& split);

}  // namespace base3
