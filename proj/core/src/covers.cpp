#include "nagata/covers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "nagata/errors.hpp"
#include "nagata/geometry.hpp"

namespace nagata {
namespace {

// Keeps the first occurrence of each member.
Family dedup(const FiniteMetricSpace& space, Family family) {
  Family out;
  std::set<PointSet> seen;
  for (auto& u : family) {
    if (u.empty()) throw InputError("cover member is empty");
    space.require_point(u.members().back());
    if (seen.insert(u).second) out.push_back(std::move(u));
  }
  return out;
}

Distance mesh_of(const FiniteMetricSpace& space, const std::vector<Family>& classes) {
  Distance m = 0;
  for (const auto& c : classes)
    for (const auto& u : c) m = std::max(m, diameter(space, u));
  return m;
}

void require_line(const FiniteMetricSpace& line) {
  if (!is_line_metric(line))
    throw InputError("interval_cover needs the line metric d(i,j) = |i-j|");
}

}  // namespace

ColoredCover ColoredCover::make(const FiniteMetricSpace& space, std::vector<Family> classes,
                                Distance scale_r) {
  if (classes.empty()) throw InputError("colored cover needs at least one color class");
  if (scale_r < 0) throw InputError("cover scale must be nonnegative");
  Family all;
  for (auto& c : classes) {
    c = dedup(space, std::move(c));
    all.insert(all.end(), c.begin(), c.end());
  }
  require_cover(space, all);
  for (std::size_t color = 0; color < classes.size(); ++color) {
    auto report = is_r_disjoint(space, classes[color], scale_r);
    if (!report.ok()) {
      auto payload = report.witness;
      payload["color"] = color;
      throw InputError("color class " + std::to_string(color) + " is not " +
                           std::to_string(scale_r) + "-disjoint: " + report.note,
                       payload);
    }
  }
  const Distance m = mesh_of(space, classes);
  return ColoredCover(std::move(classes), scale_r, m);
}

ColoredCover ColoredCover::unchecked(const FiniteMetricSpace& space,
                                     std::vector<Family> classes, Distance scale_r) {
  for (auto& c : classes) c = dedup(space, std::move(c));
  const Distance m = mesh_of(space, classes);
  return ColoredCover(std::move(classes), scale_r, m);
}

Family ColoredCover::members() const {
  Family out;
  for (const auto& c : classes_) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::size_t ColoredCover::member_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : classes_) n += c.size();
  return n;
}

bool is_line_metric(const FiniteMetricSpace& space) {
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      const auto expected = static_cast<Distance>(i > j ? i - j : j - i);
      if (space.dist(static_cast<PointIndex>(i), static_cast<PointIndex>(j)) != expected)
        return false;
    }
  }
  return true;
}

Distance interval_cover_lebesgue(Distance r) { return (3 * r + 1) / 4; }

ColoredCover interval_cover(const FiniteMetricSpace& line, Distance r) {
  if (r < 1) throw InputError("interval_cover needs r >= 1");
  require_line(line);
  const auto length = static_cast<Distance>(line.size());
  const Distance width = 4 * r;
  const Distance period = 5 * r + 1;
  const Distance shift = r + 2 * interval_cover_lebesgue(r);

  auto blocks_from = [&](Distance offset) {
    Family out;
    for (Distance start = offset; start < length; start += period) {
      std::vector<PointIndex> block;
      for (Distance p = start; p <= std::min(start + width, length - 1); ++p)
        block.push_back(static_cast<PointIndex>(p));
      out.emplace_back(std::move(block));
    }
    return out;
  };
  return ColoredCover::make(line, {blocks_from(0), blocks_from(shift)}, r);
}

GreedyOutcome greedy_colored_cover(const FiniteMetricSpace& space, Distance r,
                                   std::size_t max_colors, Distance bound_b) {
  if (r < 1) throw InputError("greedy_colored_cover needs r >= 1");
  if (max_colors < 1) throw InputError("greedy_colored_cover needs max_colors >= 1");
  if (bound_b < r) {
    throw InputError("greedy_colored_cover needs bound_B >= r (bound_B = " +
                     std::to_string(bound_b) + ", r = " + std::to_string(r) + ")");
  }
  const std::size_t n = space.size();

  std::vector<PointIndex> centers;
  for (std::size_t p = 0; p < n; ++p) {
    const bool far = std::all_of(centers.begin(), centers.end(), [&](PointIndex c) {
      return 2 * space.dist(static_cast<PointIndex>(p), c) > bound_b;
    });
    if (far) centers.push_back(static_cast<PointIndex>(p));
  }

  std::vector<std::vector<PointIndex>> cluster_points(centers.size());
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < centers.size(); ++c)
      if (space.dist(static_cast<PointIndex>(p), centers[c]) <
          space.dist(static_cast<PointIndex>(p), centers[best]))
        best = c;
    cluster_points[best].push_back(static_cast<PointIndex>(p));
  }
  Family clusters;
  for (auto& pts : cluster_points) clusters.emplace_back(std::move(pts));

  const std::size_t k = clusters.size();
  std::vector<std::vector<bool>> conflict(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      conflict[a][b] = conflict[b][a] = set_distance(space, clusters[a], clusters[b]) <= r;

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (clusters[a].size() != clusters[b].size())
      return clusters[a].size() > clusters[b].size();
    return clusters[a].front() < clusters[b].front();
  });

  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> color(k, kNone);
  std::size_t used = 0;
  for (std::size_t a : order) {
    std::vector<bool> taken(used + 1, false);
    for (std::size_t b = 0; b < k; ++b)
      if (conflict[a][b] && color[b] != kNone) taken[color[b]] = true;
    std::size_t c = 0;
    while (taken[c]) ++c;
    color[a] = c;
    used = std::max(used, c + 1);
  }

  GreedyOutcome outcome;
  outcome.colors_used = used;
  outcome.clusters = k;
  if (used > max_colors) return outcome;

  std::vector<Family> classes(max_colors);
  for (std::size_t a = 0; a < k; ++a) classes[color[a]].push_back(clusters[a]);
  outcome.cover = ColoredCover::make(space, std::move(classes), r);
  return outcome;
}

ColoredCover fatten_cover(const FiniteMetricSpace& space, const ColoredCover& cover,
                          Distance r) {
  if (r < 1) throw InputError("fatten_cover needs r >= 1");
  std::vector<Family> out(cover.n_colors());
  for (std::size_t color = 0; color < cover.n_colors(); ++color) {
    const auto& cls = cover.color_class(color);
    auto report = is_r_disjoint(space, cls, 3 * r);
    if (!report.ok()) {
      auto payload = report.witness;
      payload["color"] = color;
      throw InputError("fatten_cover input class " + std::to_string(color) + " is not " +
                           std::to_string(3 * r) + "-disjoint: " + report.note,
                       payload);
    }
    for (const auto& v : cls) out[color].push_back(neighborhood(space, v, r));
  }
  // V is inside N(V, r), so the output covers whenever the input does.
  if (covers(space, cover.members())) return ColoredCover::make(space, std::move(out), r);
  return ColoredCover::unchecked(space, std::move(out), r);
}

CoverProvider interval_provider(const FiniteMetricSpace& line, std::size_t n_colors) {
  if (n_colors < 2) throw InputError("interval provider needs at least two colors");
  require_line(line);
  return [line, n_colors](Distance scale, int attempt) -> std::optional<ColoredCover> {
    // Least R with interval_cover_lebesgue(R) >= scale.
    const Distance r = std::max<Distance>(1, (4 * scale - 1 + 2) / 3) + attempt;
    auto cover = interval_cover(line, r);
    auto classes = cover.classes();
    classes.resize(n_colors);
    return ColoredCover::make(line, std::move(classes), cover.scale_r());
  };
}

CoverProvider greedy_provider(const FiniteMetricSpace& space, std::size_t n_colors) {
  if (n_colors < 1) throw InputError("greedy provider needs at least one color");
  return [space, n_colors](Distance scale, int attempt) -> std::optional<ColoredCover> {
    const Distance fat = scale + 1;
    const Distance separation = 3 * fat;
    const Distance bound = separation << attempt;
    auto outcome = greedy_colored_cover(space, separation, n_colors, bound);
    if (!outcome.ok()) return std::nullopt;
    return fatten_cover(space, *outcome.cover, fat);
  };
}

}  // namespace nagata
