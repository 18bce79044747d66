#pragma once

// Brute-force oracles and random inputs for the test suites. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <vector>

#include "nagata/covers.hpp"
#include "nagata/generators.hpp"
#include "nagata/metric_space.hpp"
#include "nagata/nagata_space.hpp"
#include "nagata/nesting.hpp"

namespace oracle {

using nagata::Distance;
using nagata::DistanceMatrix;
using nagata::FiniteMetricSpace;
using nagata::PointIndex;

inline std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("q" + std::to_string(i));
  return out;
}

/// BFS from every vertex of an explicit adjacency list.
inline DistanceMatrix bfs_all_pairs(const std::vector<std::vector<int>>& adj) {
  const std::size_t n = adj.size();
  DistanceMatrix d(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(static_cast<int>(s));
    d(s, s) = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (d(s, v) < 0) {
          d(s, v) = d(s, u) + 1;
          q.push(v);
        }
    }
  }
  return d;
}

inline std::vector<std::vector<int>> cycle_adjacency(int n) {
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    adj[i].push_back((i + 1) % n);
    adj[(i + 1) % n].push_back(i);
  }
  return adj;
}

inline Distance min_distance(const FiniteMetricSpace& s, const std::vector<PointIndex>& u,
                             const std::vector<PointIndex>& v) {
  Distance best = -1;
  for (auto a : u)
    for (auto b : v)
      if (best < 0 || s.dist(a, b) < best) best = s.dist(a, b);
  return best;
}

inline Distance max_pairwise(const FiniteMetricSpace& s, const std::vector<PointIndex>& u) {
  Distance best = 0;
  for (auto a : u)
    for (auto b : u) best = std::max(best, s.dist(a, b));
  return best;
}

inline bool contains(const std::vector<PointIndex>& v, PointIndex p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

/// Every closed r-ball inside some member, by direct scan.
inline bool lebesgue_scan(const FiniteMetricSpace& s,
                          const std::vector<std::vector<PointIndex>>& cover, Distance r) {
  for (PointIndex x = 0; x < s.size(); ++x) {
    bool found = false;
    for (const auto& u : cover) {
      bool all = true;
      for (PointIndex y = 0; y < s.size() && all; ++y)
        if (s.dist(x, y) <= r && !contains(u, y)) all = false;
      if (all) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

inline Distance max_lebesgue_linear(const FiniteMetricSpace& s,
                                    const std::vector<std::vector<PointIndex>>& cover) {
  Distance best = 0;
  for (Distance r = 0; r <= s.diameter(); ++r)
    if (lebesgue_scan(s, cover, r)) best = r;
  return best;
}

inline std::vector<std::vector<PointIndex>> raw(const nagata::Family& f) {
  std::vector<std::vector<PointIndex>> out;
  for (const auto& u : f) out.push_back(u.members());
  return out;
}

/// D by rescanning every level for every pair.
inline DistanceMatrix level_scan_D(std::size_t n, const nagata::NestedCoverSequence& seq) {
  DistanceMatrix d(n, -1);
  for (PointIndex a = 0; a < n; ++a) {
    for (PointIndex b = 0; b < n; ++b) {
      if (a == b) {
        d(a, b) = 0;
        continue;
      }
      for (std::size_t k = 0; k < seq.levels.size() && d(a, b) < 0; ++k)
        for (const auto& u : seq.levels[k].cover.members())
          if (contains(u.members(), a) && contains(u.members(), b)) {
            d(a, b) = static_cast<Distance>(k + 1);
            break;
          }
    }
  }
  return d;
}

/// (N2)_n over all ordered tuples with repeats: |X|^(n+3) cases.
inline bool n2_brute(const DistanceMatrix& d, std::size_t n) {
  const std::size_t k = n + 2, size = d.size();
  std::vector<std::size_t> ys(k, 0);
  for (std::size_t x = 0; x < size; ++x) {
    std::fill(ys.begin(), ys.end(), 0);
    for (;;) {
      bool ok = false;
      for (std::size_t i = 0; i < k && !ok; ++i)
        for (std::size_t j = 0; j < k && !ok; ++j)
          if (i != j && d(ys[i], ys[j]) <= d(x, ys[i])) ok = true;
      if (!ok) return false;
      std::size_t pos = 0;
      while (pos < k && ++ys[pos] == size) ys[pos++] = 0;
      if (pos == k) break;
    }
  }
  return true;
}

/// (N1)_n over all ordered tuples with repeats, for each radius.
inline bool n1_brute(const DistanceMatrix& d, std::size_t n, const std::vector<Distance>& radii) {
  const std::size_t k = n + 2, size = d.size();
  for (Distance r : radii) {
    for (std::size_t x = 0; x < size; ++x) {
      std::vector<bool> near(size, false);
      for (std::size_t y = 0; y < size; ++y)
        for (std::size_t z = 0; z < size; ++z)
          if (d(x, z) <= r && d(y, z) < 2 * r) near[y] = true;
      std::vector<std::size_t> ys(k, 0);
      for (;;) {
        bool all_near = true;
        for (auto y : ys) all_near = all_near && near[y];
        if (all_near) {
          bool ok = false;
          for (std::size_t i = 0; i < k && !ok; ++i)
            for (std::size_t j = 0; j < k && !ok; ++j)
              if (i != j && d(ys[i], ys[j]) < 2 * r) ok = true;
          if (!ok) return false;
        }
        std::size_t pos = 0;
        while (pos < k && ++ys[pos] == size) ys[pos++] = 0;
        if (pos == k) break;
      }
    }
  }
  return true;
}

inline bool quasi_ultrametric_brute(const DistanceMatrix& d) {
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y)
      for (std::size_t z = 0; z < d.size(); ++z)
        if (d(x, y) > std::max(d(x, z), d(y, z)) + 1) return false;
  return true;
}

/// Random planar point cloud with the L1 metric (distinct points).
inline FiniteMetricSpace random_l1_space(std::size_t n, int span, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pts;
  while (pts.size() < n) {
    std::pair<int, int> p{static_cast<int>(rng() % span), static_cast<int>(rng() % span)};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d(i, j) = std::abs(pts[i].first - pts[j].first) + std::abs(pts[i].second - pts[j].second);
  return FiniteMetricSpace(names(n), std::move(d));
}

/// Random partition into nearest-of-random-centers clusters, colored
/// greedily (in random order, unbounded colors) so that each color class is
/// sep-disjoint. Built without the library's cover constructors.
inline std::vector<nagata::Family> random_disjoint_classes(const FiniteMetricSpace& s,
                                                           Distance sep, std::mt19937_64& rng) {
  const std::size_t n = s.size();
  const std::size_t centers_wanted = 1 + rng() % std::max<std::size_t>(1, n / 3);
  std::vector<PointIndex> centers;
  while (centers.size() < centers_wanted) {
    auto c = static_cast<PointIndex>(rng() % n);
    if (!contains(centers, c)) centers.push_back(c);
  }
  std::vector<std::vector<PointIndex>> clusters(centers.size());
  for (PointIndex p = 0; p < n; ++p) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < centers.size(); ++c)
      if (s.dist(p, centers[c]) < s.dist(p, centers[best])) best = c;
    clusters[best].push_back(p);
  }
  std::vector<std::size_t> order(clusters.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<std::size_t>> colors;
  for (std::size_t c : order) {
    bool placed = false;
    for (auto& cls : colors) {
      bool fits = true;
      for (std::size_t other : cls)
        if (min_distance(s, clusters[c], clusters[other]) <= sep) fits = false;
      if (fits) {
        cls.push_back(c);
        placed = true;
        break;
      }
    }
    if (!placed) colors.push_back({c});
  }
  std::vector<nagata::Family> out;
  for (const auto& cls : colors) {
    nagata::Family fam;
    for (std::size_t c : cls) fam.emplace_back(clusters[c]);
    out.push_back(std::move(fam));
  }
  return out;
}

}  // namespace oracle
