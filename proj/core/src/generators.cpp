#include "nagata/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <random>
#include <string>

#include "nagata/errors.hpp"

namespace nagata {
namespace {

constexpr std::size_t kMaxPoints = 1024;

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

void require_range(const std::string& what, std::size_t v, std::size_t lo, std::size_t hi) {
  if (v < lo || v > hi) {
    throw InputError(what + " = " + std::to_string(v) + " is outside [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "]");
  }
}

std::size_t int_param(const GeneratorParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw InputError("missing generator parameter '" + key + "'");
  const std::string& s = it->second;
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0' || v < 0)
    throw InputError("generator parameter " + key + "='" + s + "' is not a nonnegative integer");
  return static_cast<std::size_t>(v);
}

double real_param(const GeneratorParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw InputError("missing generator parameter '" + key + "'");
  const std::string& s = it->second;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') throw InputError("generator parameter " + key + "='" + s + "' is not a number");
  return v;
}

void reject_unknown(const GeneratorParams& params, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const char* k : known) ok |= key == k;
    if (!ok) throw InputError("unknown generator parameter '" + key + "'");
  }
}

// Uniform double in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

FiniteMetricSpace from_adjacency(const std::vector<std::vector<std::uint32_t>>& adj) {
  return FiniteMetricSpace(default_names(adj.size()), graph_distances(adj));
}

}  // namespace

DistanceMatrix graph_distances(const std::vector<std::vector<std::uint32_t>>& adjacency) {
  const std::size_t n = adjacency.size();
  DistanceMatrix d(n, -1);
  std::vector<std::uint32_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    queue.assign(1, static_cast<std::uint32_t>(s));
    d(s, s) = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      for (auto v : adjacency[u]) {
        if (d(s, v) >= 0) continue;
        d(s, v) = d(s, u) + 1;
        queue.push_back(v);
      }
    }
  }
  return d;
}

FiniteMetricSpace line_space(std::size_t length) {
  require_range("line length", length, 1, kMaxPoints);
  DistanceMatrix d(length);
  for (std::size_t i = 0; i < length; ++i)
    for (std::size_t j = 0; j < length; ++j)
      d(i, j) = static_cast<Distance>(i > j ? i - j : j - i);
  return FiniteMetricSpace(default_names(length), std::move(d));
}

FiniteMetricSpace cycle_space(std::size_t length) {
  require_range("cycle length", length, 1, kMaxPoints);
  DistanceMatrix d(length);
  for (std::size_t i = 0; i < length; ++i) {
    for (std::size_t j = 0; j < length; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      d(i, j) = static_cast<Distance>(std::min(gap, length - gap));
    }
  }
  return FiniteMetricSpace(default_names(length), std::move(d));
}

FiniteMetricSpace grid2d_space(std::size_t width, std::size_t height) {
  require_range("grid width", width, 1, 256);
  require_range("grid height", height, 1, 256);
  require_range("grid points", width * height, 1, kMaxPoints);
  const std::size_t n = width * height;
  DistanceMatrix d(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ra = a / width, ca = a % width, rb = b / width, cb = b % width;
      d(a, b) = static_cast<Distance>((ra > rb ? ra - rb : rb - ra) + (ca > cb ? ca - cb : cb - ca));
    }
  }
  return FiniteMetricSpace(default_names(n), std::move(d));
}

FiniteMetricSpace random_graph_space(std::size_t n, double p, std::uint64_t seed) {
  require_range("random_graph n", n, 1, kMaxPoints);
  if (!(p > 0.0 && p <= 1.0)) throw InputError("random_graph p must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (unit(rng) < p) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  // Chain components by their least vertices so every pair is at finite distance.
  std::vector<int> component(n, -1);
  std::vector<std::uint32_t> roots;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    roots.push_back(s);
    std::queue<std::uint32_t> q;
    q.push(s);
    component[s] = static_cast<int>(roots.size() - 1);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : adj[u])
        if (component[v] < 0) {
          component[v] = component[s];
          q.push(v);
        }
    }
  }
  for (std::size_t c = 1; c < roots.size(); ++c) {
    adj[roots[c - 1]].push_back(roots[c]);
    adj[roots[c]].push_back(roots[c - 1]);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return from_adjacency(adj);
}

FiniteMetricSpace ultrametric_random_space(std::size_t n, std::uint64_t seed) {
  require_range("ultrametric_random n", n, 1, kMaxPoints);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> clusters(n);
  for (std::size_t i = 0; i < n; ++i) clusters[i] = {i};
  DistanceMatrix d(n);
  Distance height = 0;
  while (clusters.size() > 1) {
    const std::size_t a = rng() % clusters.size();
    std::size_t b = rng() % (clusters.size() - 1);
    if (b >= a) ++b;
    height += 1 + static_cast<Distance>(rng() % 3);
    for (auto p : clusters[a])
      for (auto q : clusters[b]) d(p, q) = d(q, p) = height;
    const std::size_t keep = std::min(a, b), drop = std::max(a, b);
    clusters[keep].insert(clusters[keep].end(), clusters[drop].begin(), clusters[drop].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  return FiniteMetricSpace(default_names(n), std::move(d));
}

FiniteMetricSpace generate_space(const std::string& name, const GeneratorParams& params,
                                 std::uint64_t seed) {
  if (name == "line") {
    reject_unknown(params, {"length"});
    return line_space(int_param(params, "length"));
  }
  if (name == "cycle") {
    reject_unknown(params, {"length"});
    return cycle_space(int_param(params, "length"));
  }
  if (name == "grid2d") {
    reject_unknown(params, {"width", "height"});
    return grid2d_space(int_param(params, "width"), int_param(params, "height"));
  }
  if (name == "random_graph") {
    reject_unknown(params, {"n", "p"});
    return random_graph_space(int_param(params, "n"), real_param(params, "p"), seed);
  }
  if (name == "ultrametric_random") {
    reject_unknown(params, {"n"});
    return ultrametric_random_space(int_param(params, "n"), seed);
  }
  throw InputError("unknown generator '" + name +
                   "' (expected line, cycle, grid2d, random_graph, ultrametric_random)");
}

}  // namespace nagata
