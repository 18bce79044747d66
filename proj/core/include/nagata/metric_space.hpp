#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nagata {

using Distance = std::int64_t;
using PointIndex = std::uint32_t;

/// Dense symmetric matrix of integer distances. No axioms are enforced here;
/// checkers accept any matrix so they can be pointed at raw or derived
/// metrics alike.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n, Distance fill = 0)
      : n_(n), values_(n * n, fill) {}

  /// Throws InputError if `rows` is not square.
  static DistanceMatrix from_rows(const std::vector<std::vector<Distance>>& rows);

  std::size_t size() const noexcept { return n_; }

  Distance operator()(std::size_t i, std::size_t j) const noexcept {
    return values_[i * n_ + j];
  }
  Distance& operator()(std::size_t i, std::size_t j) noexcept {
    return values_[i * n_ + j];
  }
  std::span<const Distance> row(std::size_t i) const noexcept {
    return {values_.data() + i * n_, n_};
  }

  std::vector<std::vector<Distance>> to_rows() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> values_;
};

/// The first violated metric axiom, if any. Indices refer to matrix order.
struct AxiomViolation {
  std::string axiom;  // "negative", "zero-diagonal", "symmetry", "positivity", "triangle"
  std::vector<std::size_t> indices;
  std::string describe() const;
};

/// Scans axioms in a fixed order and returns the lexicographically least
/// violation of the first failing axiom.
std::vector<AxiomViolation> find_axiom_violations(const DistanceMatrix& m,
                                                  std::size_t limit = 1);

/// (X, d): named points with an exact integer metric. Immutable.
class FiniteMetricSpace {
 public:
  /// Validates every metric axiom and name uniqueness; throws InputError
  /// naming the axiom and indices otherwise.
  FiniteMetricSpace(std::vector<std::string> names, DistanceMatrix dist);

  std::size_t size() const noexcept { return names_.size(); }
  Distance dist(PointIndex a, PointIndex b) const noexcept { return dist_(a, b); }
  const DistanceMatrix& matrix() const noexcept { return dist_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(PointIndex i) const { return names_.at(i); }

  /// Throws InputError for unknown identifiers.
  PointIndex index_of(const std::string& name) const;
  /// Throws InputError if `i` is out of range.
  void require_point(std::size_t i) const;

  Distance diameter() const noexcept { return diameter_; }

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return a.names_ == b.names_ && a.dist_ == b.dist_;
  }

 private:
  std::vector<std::string> names_;
  DistanceMatrix dist_;
  Distance diameter_ = 0;
};

}  // namespace nagata
