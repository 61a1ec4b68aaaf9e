#include "wssim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "wssim/error.hpp"

namespace wssim {

namespace {

std::size_t sorted_overlap_above(std::span<const NodeIndex> a, std::span<const NodeIndex> b,
                                 NodeIndex floor) {
    auto i = std::upper_bound(a.begin(), a.end(), floor);
    auto j = std::upper_bound(b.begin(), b.end(), floor);
    std::size_t n = 0;
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

// Unbiased integer in [0, bound) by rejection; spelled out so that a seed
// reproduces the same graphs with any standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Index k in [0, n(n-1)/2) to the pair (i, j), i < j, in row-major order.
Link decode_pair(std::uint64_t k, std::uint64_t n) {
    const auto row_start = [n](std::uint64_t i) { return i * (2 * n - i - 1) / 2; };
    const double b = 2.0 * static_cast<double>(n) - 1.0;
    auto i = static_cast<std::uint64_t>(
        std::max(0.0, std::floor((b - std::sqrt(b * b - 8.0 * static_cast<double>(k))) / 2.0)));
    while (i > 0 && row_start(i) > k) --i;
    while (row_start(i + 1) <= k) ++i;
    const auto j = i + 1 + (k - row_start(i));
    return {static_cast<NodeIndex>(i), static_cast<NodeIndex>(j)};
}

struct Moments {
    double mean = 0.0;
    double std = 0.0;
};

Moments moments(const std::vector<double>& xs) {
    Moments m;
    if (xs.empty()) return m;
    for (double x : xs) m.mean += x;
    m.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - m.mean) * (x - m.mean);
        m.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return m;
}

}  // namespace

std::optional<double> average_distance(const Graph& graph, PathMode mode) {
    const bool follow_direction = mode == PathMode::Directed && graph.directed();
    const auto n = graph.node_count();
    std::uint64_t total = 0;
    std::uint64_t pairs = 0;
    std::vector<std::size_t> dist(n);
    std::vector<NodeIndex> frontier;
    frontier.reserve(n);
    constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
    for (NodeIndex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        dist[s] = 0;
        frontier.clear();
        frontier.push_back(s);
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            const auto v = frontier[head];
            const auto next = follow_direction ? graph.out_neighbors(v) : graph.neighbors(v);
            for (auto w : next) {
                if (dist[w] != kUnseen) continue;
                dist[w] = dist[v] + 1;
                total += dist[w];
                ++pairs;
                frontier.push_back(w);
            }
        }
    }
    if (pairs == 0) return std::nullopt;
    return static_cast<double>(total) / static_cast<double>(pairs);
}

std::uint64_t triangle_count(const Graph& graph) {
    std::uint64_t triangles = 0;
    for (NodeIndex u = 0; u < graph.node_count(); ++u) {
        const auto nu = graph.neighbors(u);
        for (auto v : nu) {
            if (v <= u) continue;
            triangles += sorted_overlap_above(nu, graph.neighbors(v), v);
        }
    }
    return triangles;
}

std::uint64_t connected_triples(const Graph& graph) {
    std::uint64_t triples = 0;
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        const std::uint64_t d = graph.degree(v);
        triples += d * (d - (d > 0 ? 1 : 0)) / 2;
    }
    return triples;
}

double transitivity_global(const Graph& graph) {
    const auto triples = connected_triples(graph);
    if (triples == 0) return 0.0;
    return 3.0 * static_cast<double>(triangle_count(graph)) / static_cast<double>(triples);
}

double transitivity_local_mean(const Graph& graph) {
    double sum = 0.0;
    std::size_t counted = 0;
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        const auto nv = graph.neighbors(v);
        const std::size_t d = nv.size();
        if (d < 2) continue;
        std::size_t linked = 0;
        for (auto a : nv) linked += sorted_overlap_above(nv, graph.neighbors(a), a);
        sum += static_cast<double>(linked) / (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
        ++counted;
    }
    return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

std::vector<CoveragePoint> coverage_curve(const SimilarityNetwork& network) {
    const auto communities = components(network);
    const auto total_nodes = static_cast<double>(network.node_count());
    const auto total_links = static_cast<double>(network.link_count());
    std::vector<CoveragePoint> curve;
    curve.reserve(communities.size());
    std::size_t nodes = 0;
    std::size_t links = 0;
    for (const auto& c : communities) {
        nodes += c.members.size();
        links += c.internal_links;
        curve.push_back({c.ordinal, static_cast<double>(nodes) / total_nodes,
                         total_links > 0 ? static_cast<double>(links) / total_links : 0.0});
    }
    return curve;
}

std::optional<std::size_t> topk_coverage(const SimilarityNetwork& network, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw std::invalid_argument("coverage threshold must lie in (0, 1]");
    if (network.link_count() == 0) return std::nullopt;
    constexpr double kSlack = 1e-12;
    for (const auto& point : coverage_curve(network)) {
        if (point.node_fraction + kSlack >= threshold && point.link_fraction + kSlack >= threshold)
            return point.k;
    }
    return std::nullopt;  // unreachable: the full list covers everything
}

ComponentStats component_stats(const SimilarityNetwork& network, double threshold) {
    ComponentStats stats;
    for (const auto& c : components(network)) stats.ranked.push_back({c.members.size(), c.internal_links});
    stats.principal_count = topk_coverage(network, threshold).value_or(0);
    if (stats.principal_count > 0) {
        stats.principal_min = stats.ranked.front();
        for (std::size_t i = 0; i < stats.principal_count; ++i) {
            const auto& s = stats.ranked[i];
            stats.principal_max.nodes = std::max(stats.principal_max.nodes, s.nodes);
            stats.principal_max.links = std::max(stats.principal_max.links, s.links);
            stats.principal_min.nodes = std::min(stats.principal_min.nodes, s.nodes);
            stats.principal_min.links = std::min(stats.principal_min.links, s.links);
        }
    }
    return stats;
}

Graph sample_gnm(std::size_t nodes, std::size_t links, std::mt19937_64& rng) {
    const std::uint64_t n = nodes;
    const std::uint64_t capacity = n < 2 ? 0 : n * (n - 1) / 2;
    if (links > capacity) throw InfeasibleGraphError(nodes, links);

    // Floyd's sampling of `links` distinct pair indices out of `capacity`.
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(links * 2);
    std::vector<std::uint64_t> order;
    order.reserve(links);
    for (std::uint64_t j = capacity - links; j < capacity; ++j) {
        const auto t = uniform_below(rng, j + 1);
        const auto pick = chosen.insert(t).second ? t : j;
        if (pick == j) chosen.insert(j);
        order.push_back(pick);
    }
    std::vector<Link> sampled;
    sampled.reserve(links);
    for (auto k : order) sampled.push_back(decode_pair(k, n));
    return Graph(nodes, false, std::move(sampled));
}

ErBaseline er_baseline(std::size_t nodes, std::size_t links, std::size_t replicates,
                       std::uint64_t seed) {
    if (replicates == 0) throw std::invalid_argument("at least one replicate is required");
    std::mt19937_64 rng(seed);
    std::vector<double> distances;
    std::vector<double> transitivities;
    for (std::size_t r = 0; r < replicates; ++r) {
        const auto g = sample_gnm(nodes, links, rng);
        if (const auto d = average_distance(g, PathMode::Undirected)) distances.push_back(*d);
        transitivities.push_back(transitivity_global(g));
    }
    ErBaseline out{nodes, links, replicates, seed, std::nullopt, std::nullopt, 0.0, 0.0};
    if (!distances.empty()) {
        const auto m = moments(distances);
        out.average_distance_mean = m.mean;
        out.average_distance_std = m.std;
    }
    const auto t = moments(transitivities);
    out.transitivity_mean = t.mean;
    out.transitivity_std = t.std;
    return out;
}

NetworkReport full_report(const SimilarityNetwork& network, const ReportOptions& options) {
    NetworkReport report;
    report.kind = network.kind();
    report.directed = network.directed();
    report.total_nodes = network.node_count();

    const auto trimmed = trim(network);
    const auto& g = trimmed.graph();
    report.isolated_nodes = network.node_count() - trimmed.node_count();
    report.trimmed_nodes = trimmed.node_count();
    report.links = trimmed.link_count();
    report.average_distance = average_distance(g, PathMode::Directed);
    report.average_distance_undirected = average_distance(g, PathMode::Undirected);
    report.triangles = triangle_count(g);
    report.transitivity_global = transitivity_global(g);
    report.transitivity_local_mean = transitivity_local_mean(g);

    const auto stats = component_stats(trimmed, options.coverage_threshold);
    report.components = stats.ranked.size();
    for (const auto& s : stats.ranked) {
        report.largest_component_nodes = std::max(report.largest_component_nodes, s.nodes);
        report.largest_component_links = std::max(report.largest_component_links, s.links);
    }
    report.coverage_threshold = options.coverage_threshold;
    report.principal_components = stats.principal_count;
    report.principal_min_nodes = stats.principal_min.nodes;
    report.principal_min_links = stats.principal_min.links;
    report.topk_coverage = coverage_curve(trimmed);

    if (options.er_replicates > 0) {
        std::size_t pairs = 0;
        for (NodeIndex v = 0; v < g.node_count(); ++v) pairs += g.degree(v);
        report.er = er_baseline(report.trimmed_nodes, pairs / 2, options.er_replicates, options.seed);
    }
    return report;
}

}  // namespace wssim
