#include "nagata/point_set.hpp"

#include <numeric>

namespace nagata {

PointSet::PointSet(std::initializer_list<PointIndex> members)
    : PointSet(std::vector<PointIndex>(members)) {}

PointSet::PointSet(std::vector<PointIndex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

PointSet PointSet::all(std::size_t n) {
  std::vector<PointIndex> v(n);
  std::iota(v.begin(), v.end(), PointIndex{0});
  PointSet s;
  s.members_ = std::move(v);
  return s;
}

bool PointSet::intersects(const PointSet& other) const noexcept {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

PointSet PointSet::united(const PointSet& other) const {
  PointSet out;
  out.members_.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

}  // namespace nagata
