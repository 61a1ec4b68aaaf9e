#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wssim/graph.hpp"
#include "wssim/network.hpp"

namespace wssim {

enum class PathMode {
    /// Follow link direction on directed graphs.
    Directed,
    /// Treat every link as undirected.
    Undirected,
};

/// Mean shortest-path length over ordered pairs (u, v), u != v, joined by a
/// path. Unreachable pairs are skipped; nullopt when no pair is reachable.
std::optional<double> average_distance(const Graph& graph, PathMode mode = PathMode::Directed);

/// Triangles of the underlying undirected graph.
std::uint64_t triangle_count(const Graph& graph);

/// Paths of length two (a-b-c, a != c) centered anywhere, undirected.
std::uint64_t connected_triples(const Graph& graph);

/// 3 * triangles / connected triples; 0 without triples.
double transitivity_global(const Graph& graph);

/// Mean over nodes of degree >= 2 of their neighborhood link density; 0 without such nodes.
double transitivity_local_mean(const Graph& graph);

struct ComponentSize {
    std::size_t nodes = 0;
    std::size_t links = 0;

    friend bool operator==(const ComponentSize&, const ComponentSize&) = default;
};

struct CoveragePoint {
    std::size_t k = 0;
    double node_fraction = 0.0;
    double link_fraction = 0.0;
};

/// Cumulative share of nodes and links held by the first k communities, for
/// every k, in canonical community order.
std::vector<CoveragePoint> coverage_curve(const SimilarityNetwork& network);

/// Smallest k whose first k communities hold at least `threshold` of both the
/// nodes and the links. nullopt for a network without links.
/// Throws std::invalid_argument unless 0 < threshold <= 1.
std::optional<std::size_t> topk_coverage(const SimilarityNetwork& network, double threshold);

struct ComponentStats {
    std::vector<ComponentSize> ranked;  // canonical community order
    std::size_t principal_count = 0;    // topk_coverage at the threshold, 0 if undefined
    ComponentSize principal_max;        // per-field maxima over the principal communities
    ComponentSize principal_min;        // per-field minima over the principal communities
};

ComponentStats component_stats(const SimilarityNetwork& network, double threshold = 0.9);

struct ErBaseline {
    std::size_t nodes = 0;
    std::size_t links = 0;
    std::size_t replicates = 0;
    std::uint64_t seed = 0;
    std::optional<double> average_distance_mean;
    std::optional<double> average_distance_std;
    double transitivity_mean = 0.0;
    double transitivity_std = 0.0;
};

/// Uniform sample from G(n, m): a simple undirected graph with exactly
/// `links` distinct links. Throws InfeasibleGraphError when links > n(n-1)/2.
Graph sample_gnm(std::size_t nodes, std::size_t links, std::mt19937_64& rng);

/// Mean and sample standard deviation of average distance and global
/// transitivity over `replicates` G(n, m) draws from one seeded generator.
ErBaseline er_baseline(std::size_t nodes, std::size_t links, std::size_t replicates,
                       std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20100901;
inline constexpr double kDefaultCoverageThreshold = 0.9;

/// Network properties. Everything except total and isolated counts is
/// measured on the trimmed network.
struct NetworkReport {
    SimilarityKind kind = SimilarityKind::Full;
    bool directed = false;
    std::size_t total_nodes = 0;
    std::size_t isolated_nodes = 0;
    std::size_t trimmed_nodes = 0;
    std::size_t components = 0;
    std::size_t links = 0;
    std::optional<double> average_distance;
    std::optional<double> average_distance_undirected;
    std::uint64_t triangles = 0;
    double transitivity_global = 0.0;
    double transitivity_local_mean = 0.0;
    std::size_t largest_component_nodes = 0;
    std::size_t largest_component_links = 0;
    double coverage_threshold = kDefaultCoverageThreshold;
    std::size_t principal_components = 0;
    std::size_t principal_min_nodes = 0;
    std::size_t principal_min_links = 0;
    std::vector<CoveragePoint> topk_coverage;
    std::optional<ErBaseline> er;
};

struct ReportOptions {
    double coverage_threshold = kDefaultCoverageThreshold;
    std::size_t er_replicates = 0;  // 0 skips the random baseline
    std::uint64_t seed = kDefaultSeed;
};

NetworkReport full_report(const SimilarityNetwork& network, const ReportOptions& options = {});

}  // namespace wssim
