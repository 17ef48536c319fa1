#include "base3/graph_stream.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace base3 {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim surrounding whitespace
        auto b = field.find_first_not_of(" \t\r");
        auto e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? std::string{}
                                             : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_number(const std::string& s, const std::filesystem::path& path,
                    std::size_t line_no, const char* col) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(path.string() + ": line " +
                                 std::to_string(line_no) +
                                 ": cannot parse column '" + col + "' from '" +
                                 s + "'");
    }
}

}  // namespace

EdgeStream load_edges(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(path.string() + ": empty file");

    auto header = split_csv_line(line);
    auto col_of = [&](const std::string& name) -> std::size_t {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw std::runtime_error(path.string() + ": header missing column '" +
                                     name + "'");
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t c_src = col_of("src");
    const std::size_t c_dst = col_of("dst");
    const std::size_t c_t = col_of("t");
    const std::size_t need = std::max({c_src, c_dst, c_t}) + 1;

    EdgeStream edges;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() < need)
            throw std::runtime_error(path.string() + ": line " +
                                     std::to_string(line_no) +
                                     ": expected at least " +
                                     std::to_string(need) + " columns");
        TemporalEdge e;
        e.src = static_cast<NodeId>(parse_number(fields[c_src], path, line_no, "src"));
        e.dst = static_cast<NodeId>(parse_number(fields[c_dst], path, line_no, "dst"));
        e.t = parse_number(fields[c_t], path, line_no, "t");
        if (e.t < 0)
            throw std::runtime_error(path.string() + ": line " +
                                     std::to_string(line_no) +
                                     ": negative timestamp");
        edges.push_back(e);
    }
    if (edges.empty())
        throw std::runtime_error(path.string() + ": no edge records");

    std::stable_sort(edges.begin(), edges.end(),
                     [](const TemporalEdge& a, const TemporalEdge& b) {
                         return a.t < b.t;
                     });
    return edges;
}

ChronoSplit chronological_split(const EdgeStream& stream,
                                std::array<double, 3> ratios) {
    double sum = ratios[0] + ratios[1] + ratios[2];
    if (ratios[0] <= 0 || ratios[1] <= 0 || ratios[2] <= 0 ||
        std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("split ratios must be positive and sum to 1");

    const std::size_t n = stream.size();
    const auto n_train = static_cast<std::size_t>(
        std::floor(static_cast<double>(n) * ratios[0]));
    const auto n_val = static_cast<std::size_t>(
        std::floor(static_cast<double>(n) * ratios[1]));
    const std::size_t n_test = n - n_train - n_val;
    if (n_train == 0 || n_val == 0 || n_test == 0)
        throw std::runtime_error("chronological split produced an empty split (" +
                                 std::to_string(n_train) + "/" +
                                 std::to_string(n_val) + "/" +
                                 std::to_string(n_test) + ")");

    ChronoSplit out;
    out.ratios = ratios;
    out.train.assign(stream.begin(), stream.begin() + n_train);
    out.val.assign(stream.begin() + n_train, stream.begin() + n_train + n_val);
    out.test.assign(stream.begin() + n_train + n_val, stream.end());
    return out;
}

ChronoSplit load_tgb_dir(const std::filesystem::path& dir) {
    ChronoSplit out;
    out.train = load_edges(dir / "train.csv");
    out.val = load_edges(dir / "val.csv");
    out.test = load_edges(dir / "test.csv");
    if (out.train.back().t > out.val.front().t ||
        out.val.back().t > out.test.front().t)
        throw std::runtime_error(dir.string() +
                                 ": split files are not chronological");
    const double n = static_cast<double>(out.train.size() + out.val.size() +
                                         out.test.size());
    out.ratios = {out.train.size() / n, out.val.size() / n, out.test.size() / n};
    return out;
}

std::vector<std::span<const TemporalEdge>> batches(const EdgeStream& stream,
                                                   std::size_t batch_size) {
    if (batch_size == 0) throw std::invalid_argument("batch_size must be >= 1");
    std::vector<std::span<const TemporalEdge>> out;
    for (std::size_t i = 0; i < stream.size(); i += batch_size) {
        const std::size_t len = std::min(batch_size, stream.size() - i);
        out.emplace_back(stream.data() + i, len);
    }
    return out;
}

PairSet distinct_pairs(const EdgeStream& stream) {
    PairSet pairs;
    pairs.reserve(stream.size());
    for (const auto& e : stream) pairs.emplace(e.src, e.dst);
    return pairs;
}

double surprise(const EdgeStream& train, const EdgeStream& test) {
    if (train.empty() || test.empty())
        throw std::invalid_argument("surprise requires non-empty train and test");
    const PairSet train_pairs = distinct_pairs(train);
    const PairSet test_pairs = distinct_pairs(test);
    std::size_t novel = 0;
    for (const auto& p : test_pairs)
        if (!train_pairs.contains(p)) ++novel;
    return static_cast<double>(novel) / static_cast<double>(test_pairs.size());
}

SplitStats split_stats(const ChronoSplit& split) {
    SplitStats stats;
    std::unordered_set<NodeId> nodes;
    std::unordered_set<double> steps;
    for (const EdgeStream* s : {&split.train, &split.val, &split.test}) {
        for (const auto& e : *s) {
            nodes.insert(e.src);
            nodes.insert(e.dst);
            steps.insert(e.t);
        }
        stats.n_edges += s->size();
    }
    stats.n_nodes = nodes.size();
    stats.n_steps = steps.size();
    stats.surprise = surprise(split.train, split.test);
    return stats;
}

}  // namespace base3
