#include "base3/negsample.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace base3 {

const char* to_string(NegStrategy s) {
    switch (s) {
        case NegStrategy::random: return "random";
        case NegStrategy::historical: return "historical";
        case NegStrategy::inductive: return "inductive";
        case NegStrategy::external: return "external";
    }
    return "?";
}

SourceIndex::SourceIndex(const PairSet& pairs) {
    for (const auto& [src, dst] : pairs) by_src_[src].push_back(dst);
    for (auto& [src, dsts] : by_src_) std::sort(dsts.begin(), dsts.end());
}

const std::vector<NodeId>& SourceIndex::destinations(NodeId src) const {
    static const std::vector<NodeId> kEmpty;
    auto it = by_src_.find(src);
    return it == by_src_.end() ? kEmpty : it->second;
}

std::vector<NodeId> node_universe(const EdgeStream& stream) {
    std::vector<NodeId> nodes;
    nodes.reserve(stream.size() * 2);
    for (const auto& e : stream) {
        nodes.push_back(e.src);
        nodes.push_back(e.dst);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

namespace {

// Unbiased bounded draw, pinned to mt19937_64 output so results do not
// depend on the standard library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// Floyd's algorithm: k distinct indices in [0, m), insertion order kept.
std::vector<std::size_t> sample_indices(std::mt19937_64& rng, std::size_t m,
                                        std::size_t k) {
    std::vector<std::size_t> picked;
    std::unordered_set<std::size_t> seen;
    picked.reserve(k);
    for (std::size_t j = m - k; j < m; ++j) {
        const auto r = static_cast<std::size_t>(bounded(rng, j + 1));
        if (seen.insert(r).second) {
            picked.push_back(r);
        } else {
            seen.insert(j);
            picked.push_back(j);
        }
    }
    return picked;
}

// Draw from universe \ {excluded_dst} by index remapping around the
// excluded position.
void fill_random(std::mt19937_64& rng, const std::vector<NodeId>& universe,
                 NodeId excluded_dst, std::size_t n, NegativeQuery& out) {
    auto lb = std::lower_bound(universe.begin(), universe.end(), excluded_dst);
    const bool present = lb != universe.end() && *lb == excluded_dst;
    const auto pos_idx = static_cast<std::size_t>(lb - universe.begin());
    const std::size_t m = universe.size() - (present ? 1 : 0);
    if (n > m)
        throw std::runtime_error("negsample: universe too small (" +
                                 std::to_string(universe.size()) + " nodes, " +
                                 std::to_string(n) + " negatives requested)");

    std::unordered_set<NodeId> taken(out.negatives.begin(), out.negatives.end());
    std::size_t added = 0;
    while (added < n) {
        auto idx = static_cast<std::size_t>(bounded(rng, m));
        if (present && idx >= pos_idx) ++idx;
        const NodeId candidate = universe[idx];
        if (taken.insert(candidate).second) {
            out.negatives.push_back(candidate);
            ++added;
        }
    }
}

NegativeQuery sample_from_pool(const std::vector<NodeId>& pool_source,
                               const PairSet& current_step_pairs,
                               const TemporalEdge& positive,
                               const std::vector<NodeId>& universe,
                               std::size_t n, std::uint64_t seed,
                               NegStrategy strategy) {
    std::vector<NodeId> pool;
    pool.reserve(pool_source.size());
    for (NodeId d : pool_source) {
        if (d == positive.dst) continue;
        if (current_step_pairs.contains({positive.src, d})) continue;
        pool.push_back(d);
    }

    NegativeQuery q;
    q.positive = positive;
    q.strategy = strategy;
    std::mt19937_64 rng(seed);
    if (pool.size() >= n) {
        for (std::size_t idx : sample_indices(rng, pool.size(), n))
            q.negatives.push_back(pool[idx]);
    } else {
        q.negatives = pool;
        q.fill_count = n - pool.size();
        fill_random(rng, universe, positive.dst, q.fill_count, q);
    }
    return q;
}

}  // namespace

NegativeQuery sample_random(const std::vector<NodeId>& universe,
                            const TemporalEdge& positive, std::size_t n,
                            std::uint64_t seed) {
    NegativeQuery q;
    q.positive = positive;
    q.strategy = NegStrategy::random;
    std::mt19937_64 rng(seed);
    fill_random(rng, universe, positive.dst, n, q);
    return q;
}

NegativeQuery sample_historical(const SourceIndex& train_index,
                                const PairSet& current_step_pairs,
                                const TemporalEdge& positive,
                                const std::vector<NodeId>& universe,
                                std::size_t n, std::uint64_t seed) {
    return sample_from_pool(train_index.destinations(positive.src),
                            current_step_pairs, positive, universe, n, seed,
                            NegStrategy::historical);
}

NegativeQuery sample_inductive(const SourceIndex& test_only_index,
                               const PairSet& current_step_pairs,
                               const TemporalEdge& positive,
                               const std::vector<NodeId>& universe,
                               std::size_t n, std::uint64_t seed) {
    return sample_from_pool(test_only_index.destinations(positive.src),
                            current_step_pairs, positive, universe, n, seed,
                            NegStrategy::inductive);
}

std::vector<NegativeQuery> load_negatives(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    std::vector<NegativeQuery> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("src,", 0) == 0) continue;  // header

        std::stringstream ss(line);
        std::string f_src, f_dst, f_t, f_negs;
        if (!std::getline(ss, f_src, ',') || !std::getline(ss, f_dst, ',') ||
            !std::getline(ss, f_t, ',') || !std::getline(ss, f_negs))
            throw std::runtime_error(path.string() + ": line " +
                                     std::to_string(line_no) +
                                     ": expected src,dst,t,negs");
        NegativeQuery q;
        q.strategy = NegStrategy::external;
        try {
            q.positive.src = std::stoll(f_src);
            q.positive.dst = std::stoll(f_dst);
            q.positive.t = std::stod(f_t);
            std::stringstream ns(f_negs);
            std::string tok;
            while (std::getline(ns, tok, ';'))
                q.negatives.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw std::runtime_error(path.string() + ": line " +
                                     std::to_string(line_no) +
                                     ": malformed record");
        }

        std::unordered_set<NodeId> seen;
        for (NodeId neg : q.negatives) {
            if (neg == q.positive.dst)
                throw std::runtime_error(
                    path.string() + ": line " + std::to_string(line_no) +
                    ": negative equals the positive destination");
            if (!seen.insert(neg).second)
                throw std::runtime_error(path.string() + ": line " +
                                         std::to_string(line_no) +
                                         ": duplicate negative " +
                                         std::to_string(neg));
        }
        out.push_back(std::move(q));
    }
    return out;
}

void write_negatives(const std::filesystem::path& path,
                     const std::vector<NegativeQuery>& queries) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "src,dst,t,negs\n";
    for (const auto& q : queries) {
        out << q.positive.src << ',' << q.positive.dst << ',' << q.positive.t
            << ',';
        for (std::size_t i = 0; i < q.negatives.size(); ++i) {
            if (i) out << ';';
            out << q.negatives[i];
        }
        out << '\n';
    }
}

}  // namespace base3
