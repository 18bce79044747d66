#pragma once

#include <cstddef>
#include <vector>

#include "nagata/covers.hpp"
#include "nagata/report.hpp"

namespace nagata {

struct NestingLevel {
  Distance d_k = 0;
  ColoredCover cover;
  Distance m_k = 0;
  /// Scale the provider was asked for (D_k) and the mesh of its raw cover
  /// before merging. Recorded so the mesh recurrence can be re-checked.
  Distance provider_scale = 0;
  Distance provider_mesh = 0;

  friend bool operator==(const NestingLevel&, const NestingLevel&) = default;
};

struct NestedCoverSequence {
  std::vector<NestingLevel> levels;
  bool saturated = false;

  std::size_t n_colors() const { return levels.empty() ? 0 : levels.front().cover.n_colors(); }

  friend bool operator==(const NestedCoverSequence&, const NestedCoverSequence&) = default;
};

struct NestingOptions {
  std::size_t num_levels = 1;
  /// Keep adding levels until one member equals X (bounded by max_levels).
  bool saturate = false;
  std::size_t max_levels = 64;
  Distance d_1 = 1;
  /// Provider calls per level = 1 + max_retries.
  int max_retries = 6;
};

/// Inductive merge construction. Each level t+1 uses
/// d_{t+1} = max(2 m_t + 1, d_t + 1) and asks the provider for scale
/// d_{t+1} + 2 m_t, then absorbs every earlier same-color member that meets
/// each new set. Provider output is verified (scale-disjoint per class and
/// Lebesgue >= scale); rejected candidates are retried. Stops early once a
/// level contains X as a member.
NestedCoverSequence build_nested_sequence(const FiniteMetricSpace& space,
                                          const CoverProvider& provider,
                                          const NestingOptions& options);

/// Exhaustively checks disjointness (1), Lebesgue (2), scale separation (3),
/// same-color containment (4), strict increase of d_k, and that each m_k is
/// the cover's mesh. Witness carries "condition", levels, color and sets.
CheckReport verify_nesting(const FiniteMetricSpace& space,
                           const NestedCoverSequence& seq);

/// m_{t+1} <= 2 m_t + provider_mesh_{t+1} for every level.
CheckReport check_mesh_recurrence(const NestedCoverSequence& seq);

}  // namespace nagata
