#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "nagata/metric_space.hpp"

namespace nagata {

/// Sorted, duplicate-free set of point indices into one FiniteMetricSpace.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::initializer_list<PointIndex> members);
  explicit PointSet(std::vector<PointIndex> members);

  static PointSet all(std::size_t n);

  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<PointIndex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  PointIndex front() const { return members_.front(); }

  bool contains(PointIndex p) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), p);
  }
  bool includes(const PointSet& other) const noexcept {
    return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                         other.members_.end());
  }
  bool intersects(const PointSet& other) const noexcept;

  PointSet united(const PointSet& other) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend auto operator<=>(const PointSet&, const PointSet&) = default;

 private:
  std::vector<PointIndex> members_;
};

using Family = std::vector<PointSet>;

}  // namespace nagata
