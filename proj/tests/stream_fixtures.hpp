#pragma once

// Shared test fixtures: deterministic synthetic streams and the
// independent full-replay oracles used to cross-check the incremental
// implementations. Everything here recomputes from scratch and must stay
// independent of the library's lazy-update code paths.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "base3/graph_stream.hpp"
#include "base3/types.hpp"

namespace fixtures {

using base3::EdgeStream;
using base3::NodeId;
using base3::TemporalEdge;

// Random stream with non-decreasing timestamps and tunable recurrence:
// with probability `repeat_prob` an edge repeats a previously seen pair.
inline EdgeStream random_stream(std::size_t n_edges, NodeId n_nodes,
                                std::uint64_t seed, double repeat_prob = 0.3,
                                double max_dt = 10.0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<NodeId> node(0, n_nodes - 1);
    std::uniform_real_distribution<double> dt(0.0, max_dt);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    EdgeStream edges;
    double t = 0.0;
    for (std::size_t i = 0; i < n_edges; ++i) {
        t += dt(rng);
        TemporalEdge e;
        if (!edges.empty() && unit(rng) < repeat_prob) {
            const auto& past = edges[rng() % edges.size()];
            e = {past.src, past.dst, t};
        } else {
            e = {node(rng), node(rng), t};
        }
        edges.push_back(e);
    }
    return edges;
}

// Brute-force decayed in-degree: sum of exp(-(t - t_i)/tau) over every
// in-edge (*, v, t_i <= t) in the prefix.
inline double popularity_oracle(const EdgeStream& prefix, NodeId v, double t,
                                double tau) {
    double sum = 0.0;
    for (const auto& e : prefix)
        if (e.dst == v && e.t <= t) sum += std::exp(-(t - e.t) / tau);
    return sum;
}

// Full-replay t-CoMem score: rebuilds the recency list and co-occurrence
// count from the prefix and evaluates the decayed-popularity sum, the
// saturating influence term, and the squash directly.
inline double comem_oracle(const EdgeStream& prefix, NodeId u, NodeId v,
                           double t, double tw, double lambda,
                           double tau_p) {
    double decayed = 0.0;
    for (const auto& e : prefix) {
        if (e.src != u) continue;
        const double age = t - e.t;
        if (age > tw) continue;
        decayed += std::exp(-age / tw) * popularity_oracle(prefix, e.dst, t, tau_p);
    }
    std::uint64_t c = 0;
    for (const auto& e : prefix)
        if ((e.src == u && e.dst == v) || (e.src == v && e.dst == u)) ++c;
    const double influence =
        lambda * static_cast<double>(c) / (1.0 + static_cast<double>(c));
    const double total = decayed + influence;
    return total / (1.0 + total);
}

// Pairwise Mann-Whitney AUROC, O(P*N).
inline double auroc_oracle(const std::vector<double>& pos,
                           const std::vector<double>& neg) {
    double wins = 0.0;
    for (double p : pos)
        for (double n : neg) {
            if (p > n)
                wins += 1.0;
            else if (p == n)
                wins += 0.5;
        }
    return wins / (static_cast<double>(pos.size()) *
                   static_cast<double>(neg.size()));
}

inline std::filesystem::path write_temp_csv(const std::string& name,
                                            const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

inline std::filesystem::path write_edge_csv(const std::string& name,
                                            const EdgeStream& edges) {
    std::string content = "src,dst,t\n";
    for (const auto& e : edges)
        content += std::to_string(e.src) + "," + std::to_string(e.dst) + "," +
                   std::to_string(e.t) + "\n";
    return write_temp_csv(name, content);
}

}  // namespace fixtures
