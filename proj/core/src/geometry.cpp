#include "nagata/geometry.hpp"

#include <limits>
#include <string>

#include "nagata/errors.hpp"

namespace nagata {
namespace {

void require_members(const FiniteMetricSpace& space, const PointSet& s, const char* what) {
  if (s.empty()) throw InputError(std::string(what) + " is empty");
  if (s.members().back() >= space.size()) space.require_point(s.members().back());
}

nlohmann::json to_json(const PointSet& s) { return s.members(); }

}  // namespace

PointSet ball(const FiniteMetricSpace& space, PointIndex x, Distance r) {
  space.require_point(x);
  std::vector<PointIndex> out;
  const auto row = space.matrix().row(x);
  for (std::size_t y = 0; y < row.size(); ++y)
    if (row[y] <= r) out.push_back(static_cast<PointIndex>(y));
  return PointSet(std::move(out));
}

Distance set_distance(const FiniteMetricSpace& space, const PointSet& u, const PointSet& v) {
  require_members(space, u, "first set");
  require_members(space, v, "second set");
  Distance best = std::numeric_limits<Distance>::max();
  for (PointIndex a : u) {
    const auto row = space.matrix().row(a);
    for (PointIndex b : v) best = std::min(best, row[b]);
    if (best == 0) break;
  }
  return best;
}

PointSet neighborhood(const FiniteMetricSpace& space, const PointSet& v, Distance r) {
  require_members(space, v, "neighborhood core");
  std::vector<PointIndex> out;
  for (std::size_t x = 0; x < space.size(); ++x) {
    const auto row = space.matrix().row(x);
    for (PointIndex b : v) {
      if (row[b] < r) {
        out.push_back(static_cast<PointIndex>(x));
        break;
      }
    }
  }
  return PointSet(std::move(out));
}

Distance diameter(const FiniteMetricSpace& space, const PointSet& u) {
  require_members(space, u, "set");
  Distance best = 0;
  for (PointIndex a : u) {
    const auto row = space.matrix().row(a);
    for (PointIndex b : u) best = std::max(best, row[b]);
  }
  return best;
}

Distance mesh(const FiniteMetricSpace& space, const Family& family) {
  if (family.empty()) throw InputError("mesh of an empty family");
  Distance best = 0;
  for (const auto& u : family) best = std::max(best, diameter(space, u));
  return best;
}

bool covers(const FiniteMetricSpace& space, const Family& family) {
  std::vector<bool> hit(space.size(), false);
  for (const auto& u : family)
    for (PointIndex p : u)
      if (p < hit.size()) hit[p] = true;
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

void require_cover(const FiniteMetricSpace& space, const Family& family) {
  std::vector<bool> hit(space.size(), false);
  for (const auto& u : family) {
    require_members(space, u, "cover member");
    for (PointIndex p : u) hit[p] = true;
  }
  auto it = std::find(hit.begin(), hit.end(), false);
  if (it != hit.end()) {
    const auto p = static_cast<std::size_t>(it - hit.begin());
    throw InputError("family does not cover point " + std::to_string(p),
                     {{"uncovered", p}});
  }
}

CheckReport is_r_disjoint(const FiniteMetricSpace& space, const Family& family, Distance r) {
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      ++checked;
      const Distance d = set_distance(space, family[i], family[j]);
      if (d <= r) {
        return CheckReport::failed(
            checked,
            {{"members", {i, j}},
             {"sets", {to_json(family[i]), to_json(family[j])}},
             {"distance", d},
             {"r", r}},
            "members " + std::to_string(i) + " and " + std::to_string(j) +
                " are at distance " + std::to_string(d) + " <= " + std::to_string(r));
      }
    }
  }
  return CheckReport::passed(checked);
}

CheckReport lebesgue_at_least(const FiniteMetricSpace& space, const Family& cover,
                              Distance r) {
  require_cover(space, cover);
  for (std::size_t x = 0; x < space.size(); ++x) {
    const PointSet b = ball(space, static_cast<PointIndex>(x), r);
    bool inside = false;
    for (const auto& u : cover) {
      if (u.size() >= b.size() && u.includes(b)) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      return CheckReport::failed(x + 1, {{"x", x}, {"r", r}, {"ball", to_json(b)}},
                                 "ball(" + std::to_string(x) + ", " + std::to_string(r) +
                                     ") lies in no member");
    }
  }
  return CheckReport::passed(space.size());
}

Distance max_lebesgue(const FiniteMetricSpace& space, const Family& cover) {
  require_cover(space, cover);
  // Pass at lo is guaranteed (radius-0 balls are singletons of a cover).
  Distance lo = 0;
  Distance hi = space.diameter();
  while (lo < hi) {
    const Distance mid = lo + (hi - lo + 1) / 2;
    if (lebesgue_at_least(space, cover, mid).ok()) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace nagata
