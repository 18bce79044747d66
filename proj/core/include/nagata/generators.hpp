#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "nagata/metric_space.hpp"

namespace nagata {

using GeneratorParams = std::map<std::string, std::string>;

/// Deterministic test spaces with points named p0..p{n-1}.
///   line               length in [1, 4096]          |i - j|
///   cycle              length in [1, 4096]          cycle graph metric
///   grid2d             width, height in [1, 256]    grid graph (L1) metric
///   random_graph       n in [1, 2048], p in (0, 1]  G(n, p) shortest paths;
///                      components are chained so the metric is finite
///   ultrametric_random n in [1, 2048]               random merge-tree heights
/// Throws InputError on unknown names or out-of-range parameters.
FiniteMetricSpace generate_space(const std::string& name, const GeneratorParams& params,
                                 std::uint64_t seed = 0);

FiniteMetricSpace line_space(std::size_t length);
FiniteMetricSpace cycle_space(std::size_t length);
FiniteMetricSpace grid2d_space(std::size_t width, std::size_t height);
FiniteMetricSpace random_graph_space(std::size_t n, double p, std::uint64_t seed);
FiniteMetricSpace ultrametric_random_space(std::size_t n, std::uint64_t seed);

/// Unweighted all-pairs shortest paths by BFS; unreachable pairs get -1.
DistanceMatrix graph_distances(const std::vector<std::vector<std::uint32_t>>& adjacency);

}  // namespace nagata
