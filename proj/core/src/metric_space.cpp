#include "nagata/metric_space.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "nagata/errors.hpp"

namespace nagata {

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<Distance>>& rows) {
  DistanceMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw InputError("matrix is not square: row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(rows.size()),
                       {{"axiom", "square"}, {"indices", {i}}});
    }
    std::copy(rows[i].begin(), rows[i].end(), m.values_.begin() + i * m.n_);
  }
  return m;
}

std::vector<std::vector<Distance>> DistanceMatrix::to_rows() const {
  std::vector<std::vector<Distance>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << axiom << " violated at (";
  for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? ", " : "") << indices[i];
  os << ")";
  return os.str();
}

std::vector<AxiomViolation> find_axiom_violations(const DistanceMatrix& m,
                                                  std::size_t limit) {
  std::vector<AxiomViolation> out;
  const std::size_t n = m.size();
  auto full = [&] { return out.size() >= limit; };

  for (std::size_t i = 0; i < n && !full(); ++i)
    for (std::size_t j = 0; j < n && !full(); ++j)
      if (m(i, j) < 0) out.push_back({"negative", {i, j}});
  if (!out.empty()) return out;

  for (std::size_t i = 0; i < n && !full(); ++i)
    if (m(i, i) != 0) out.push_back({"zero-diagonal", {i}});
  if (!out.empty()) return out;

  for (std::size_t i = 0; i < n && !full(); ++i)
    for (std::size_t j = i + 1; j < n && !full(); ++j)
      if (m(i, j) != m(j, i)) out.push_back({"symmetry", {i, j}});
  if (!out.empty()) return out;

  for (std::size_t i = 0; i < n && !full(); ++i)
    for (std::size_t j = i + 1; j < n && !full(); ++j)
      if (m(i, j) == 0) out.push_back({"positivity", {i, j}});
  if (!out.empty()) return out;

  // d(i,k) <= d(i,j) + d(j,k); reported as (i, j, k).
  for (std::size_t i = 0; i < n && !full(); ++i) {
    const auto ri = m.row(i);
    for (std::size_t j = 0; j < n && !full(); ++j) {
      const auto rj = m.row(j);
      const Distance dij = ri[j];
      bool bad = false;
      for (std::size_t k = 0; k < n; ++k) bad |= ri[k] > dij + rj[k];
      if (!bad) continue;
      for (std::size_t k = 0; k < n && !full(); ++k)
        if (ri[k] > dij + rj[k]) out.push_back({"triangle", {i, j, k}});
    }
  }
  return out;
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> names, DistanceMatrix dist)
    : names_(std::move(names)), dist_(std::move(dist)) {
  if (names_.size() != dist_.size()) {
    throw InputError("point list has " + std::to_string(names_.size()) +
                     " identifiers but the matrix has " + std::to_string(dist_.size()) +
                     " rows");
  }
  if (names_.empty()) throw InputError("metric space has no points");
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    auto [it, fresh] = seen.emplace(names_[i], i);
    if (!fresh) {
      throw InputError("duplicate point identifier '" + names_[i] + "' at indices " +
                           std::to_string(it->second) + " and " + std::to_string(i),
                       {{"axiom", "unique-identifiers"}, {"indices", {it->second, i}}});
    }
  }
  auto violations = find_axiom_violations(dist_);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw InputError("metric " + v.describe(), {{"axiom", v.axiom}, {"indices", v.indices}});
  }
  for (std::size_t i = 0; i < size(); ++i)
    for (Distance d : dist_.row(i)) diameter_ = std::max(diameter_, d);
}

PointIndex FiniteMetricSpace::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown point identifier '" + name + "'");
  return static_cast<PointIndex>(it - names_.begin());
}

void FiniteMetricSpace::require_point(std::size_t i) const {
  if (i >= size()) {
    throw InputError("point index " + std::to_string(i) + " out of range for a space of " +
                     std::to_string(size()) + " points");
  }
}

}  // namespace nagata
