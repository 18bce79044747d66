#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nagata/metric_space.hpp"
#include "nagata/nesting.hpp"
#include "nagata/report.hpp"

namespace nagata {

/// Where D(a, b) comes from: the first level co-containing both points and
/// the first such member (class order, then member order).
struct Provenance {
  PointIndex a = 0;
  PointIndex b = 0;
  std::size_t level = 0;  // 1-based
  std::size_t color = 0;
  PointSet witness_set;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// X with D(x, y) = least level k such that some member of the level-k
/// cover contains both x and y; D(x, x) = 0.
class NagataSpace {
 public:
  NagataSpace(std::size_t levels_used, DistanceMatrix d, std::vector<Provenance> provenance);

  std::size_t size() const noexcept { return d_.size(); }
  std::size_t levels_used() const noexcept { return levels_used_; }
  const DistanceMatrix& matrix() const noexcept { return d_; }
  Distance operator()(PointIndex a, PointIndex b) const noexcept { return d_(a, b); }

  /// Provenance for the unordered pair {a, b}, a != b.
  const Provenance& provenance(PointIndex a, PointIndex b) const;
  const std::vector<Provenance>& provenance() const noexcept { return provenance_; }

  friend bool operator==(const NagataSpace&, const NagataSpace&) = default;

 private:
  std::size_t pair_slot(PointIndex a, PointIndex b) const;

  std::size_t levels_used_ = 0;
  DistanceMatrix d_;
  std::vector<Provenance> provenance_;  // pairs (a < b) in row-major order
};

/// Throws ConstructionError naming the least pair that no level co-contains.
NagataSpace build_nagata_space(const FiniteMetricSpace& base,
                               const NestedCoverSequence& seq);

/// Checks the NagataSpace invariants against its sequence: zero diagonal,
/// symmetry, 1 <= D <= levels_used off the diagonal, and provenance (both
/// points in the witness set, the set belongs to that level and color, no
/// earlier level co-contains the pair).
CheckReport check_provenance(const NagataSpace& ns, const NestedCoverSequence& seq);

struct ControlRow {
  Distance argument = 0;            // k for rho_plus, delta for rho_minus
  Distance value = 0;               // realized rho
  std::optional<Distance> bound;    // m_k, or min{r : d_r >= delta}
  bool ok = true;
};

struct ControlReport {
  std::vector<ControlRow> rho_plus;   // k = 1..levels_used
  std::vector<ControlRow> rho_minus;  // every realized d-distance
  CheckReport summary;
};

/// Tabulates rho_plus(k) = max{d(x,y) : D(x,y) <= k} and
/// rho_minus(delta) = max{D(x,y) : d(x,y) <= delta} and asserts
/// rho_plus(k) <= m_k and rho_minus(delta) <= min{r : d_r >= delta}.
/// A delta beyond every d_r has no bound and is reported unbounded.
ControlReport coarse_control(const FiniteMetricSpace& base, const NagataSpace& ns,
                             const NestedCoverSequence& seq);

struct PigeonholeTrace {
  bool ok = false;
  std::string diagnostic;
  std::vector<Distance> r;                  // r(i) = D(y_i, x)
  std::vector<std::optional<std::size_t>> color;   // k(i)
  std::vector<std::optional<PointSet>> witness;    // V_i
  std::size_t i = 0, j = 0;                 // 0-based monochromatic pair
  bool i_in_j = false;                      // V_i subset of V_j
  bool j_in_i = false;                      // V_j subset of V_i
  /// Each concluded inequality D(lhs) <= D(rhs), as
  /// {"lhs":[a,b],"rhs":[c,e],"lhs_value":..,"rhs_value":..}.
  nlohmann::json conclusions = nlohmann::json::array();

  nlohmann::json to_json() const;
};

/// Replays the pigeonhole step for one (x, y_1..y_{n+2}) instance.
/// Requires ys.size() == n_colors + 1.
PigeonholeTrace pigeonhole_trace(const NagataSpace& ns, const NestedCoverSequence& seq,
                                 PointIndex x, const std::vector<PointIndex>& ys);

}  // namespace nagata
