#pragma once

#include "nagata/metric_space.hpp"
#include "nagata/point_set.hpp"
#include "nagata/report.hpp"

namespace nagata {

/// Closed ball {y : d(x, y) <= r}.
PointSet ball(const FiniteMetricSpace& space, PointIndex x, Distance r);

/// min over u in U, v in V of d(u, v). Throws InputError on an empty set.
Distance set_distance(const FiniteMetricSpace& space, const PointSet& u,
                      const PointSet& v);

/// N(V, r) = {x : d(x, V) < r}; the inequality is strict.
PointSet neighborhood(const FiniteMetricSpace& space, const PointSet& v, Distance r);

Distance diameter(const FiniteMetricSpace& space, const PointSet& u);
/// Max member diameter. Throws InputError on an empty family or member.
Distance mesh(const FiniteMetricSpace& space, const Family& family);

/// True iff every point lies in some member.
bool covers(const FiniteMetricSpace& space, const Family& family);
/// Throws InputError carrying the least uncovered point.
void require_cover(const FiniteMetricSpace& space, const Family& family);

/// Pass iff every unordered pair of distinct members is more than r apart.
/// Witness: {"members": [i, j], "sets": [...], "distance": d, "r": r}.
CheckReport is_r_disjoint(const FiniteMetricSpace& space, const Family& family,
                          Distance r);

/// Pass iff every closed ball of radius r lies inside one member.
/// Witness: {"x": x, "r": r, "ball": [...]}.
CheckReport lebesgue_at_least(const FiniteMetricSpace& space, const Family& cover,
                              Distance r);

/// Largest r in [0, diameter] passing lebesgue_at_least.
Distance max_lebesgue(const FiniteMetricSpace& space, const Family& cover);

}  // namespace nagata
