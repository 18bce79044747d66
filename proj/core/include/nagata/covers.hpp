#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "nagata/metric_space.hpp"
#include "nagata/point_set.hpp"

namespace nagata {

/// A cover of X split into n_colors classes, each class scale_r-disjoint.
/// Classes may be empty. Members within a class are deduplicated and sorted.
class ColoredCover {
 public:
  /// Validates that the union covers `space` and every class is
  /// scale_r-disjoint; throws InputError with a witness otherwise.
  static ColoredCover make(const FiniteMetricSpace& space, std::vector<Family> classes,
                           Distance scale_r);

  /// Builds without checking disjointness or covering (used to ingest
  /// possibly-invalid data that a verifier will then reject).
  static ColoredCover unchecked(const FiniteMetricSpace& space,
                                std::vector<Family> classes, Distance scale_r);

  std::size_t n_colors() const noexcept { return classes_.size(); }
  Distance scale_r() const noexcept { return scale_r_; }
  Distance mesh() const noexcept { return mesh_; }
  const std::vector<Family>& classes() const noexcept { return classes_; }
  const Family& color_class(std::size_t i) const { return classes_.at(i); }

  /// All members, class by class.
  Family members() const;
  std::size_t member_count() const noexcept;

  friend bool operator==(const ColoredCover&, const ColoredCover&) = default;

 private:
  ColoredCover(std::vector<Family> classes, Distance scale_r, Distance mesh)
      : classes_(std::move(classes)), scale_r_(scale_r), mesh_(mesh) {}

  std::vector<Family> classes_;
  Distance scale_r_ = 0;
  Distance mesh_ = 0;
};

/// True iff d(i, j) = |i - j| in point order.
bool is_line_metric(const FiniteMetricSpace& space);

/// Largest Lebesgue number interval_cover guarantees at scale r on long lines.
Distance interval_cover_lebesgue(Distance r);

/// Two-colored cover of the line {0..length-1} (point i has index i).
/// Blocks of diameter 4r repeat with period 5r+1; the second color is
/// shifted by r + 2L where L = interval_cover_lebesgue(r), so each class is
/// r-disjoint and every closed L-ball sits in one block.
ColoredCover interval_cover(const FiniteMetricSpace& line, Distance r);

struct GreedyOutcome {
  std::optional<ColoredCover> cover;
  std::size_t colors_used = 0;
  std::size_t clusters = 0;
  bool ok() const noexcept { return cover.has_value(); }
};

/// Net-and-color heuristic: centers pairwise > bound_b / 2 apart, nearest-
/// center clusters (ties to the earlier center), conflict edges when
/// clusters are within r, greedy coloring by decreasing size. Failure is a
/// value carrying the color count reached.
GreedyOutcome greedy_colored_cover(const FiniteMetricSpace& space, Distance r,
                                   std::size_t max_colors, Distance bound_b);

/// Replaces each member V by N(V, r). Requires every class to be
/// 3r-disjoint (InputError with the offending pair otherwise). A family that
/// does not cover X is fattened all the same (built unchecked).
ColoredCover fatten_cover(const FiniteMetricSpace& space, const ColoredCover& cover,
                          Distance r);

/// Supplies candidate covers for a requested scale. `attempt` counts retries
/// after a rejected candidate; providers widen their search on each retry.
/// Returning nullopt means no candidate at this attempt.
using CoverProvider =
    std::function<std::optional<ColoredCover>(Distance scale, int attempt)>;

/// Uses interval_cover at the least scale whose Lebesgue guarantee reaches
/// the request. Only valid for line spaces; colors beyond two stay empty.
CoverProvider interval_provider(const FiniteMetricSpace& line, std::size_t n_colors = 2);

/// greedy_colored_cover at 3(scale+1) with bound_b = 3(scale+1) * 2^attempt,
/// then fatten_cover by scale+1 so closed scale-balls fit in one member.
CoverProvider greedy_provider(const FiniteMetricSpace& space, std::size_t n_colors);

}  // namespace nagata
