#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "nagata/metric_space.hpp"
#include "nagata/report.hpp"

namespace nagata {

struct Exhaustive {};
struct Sampled {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};
using CheckMode = std::variant<Exhaustive, Sampled>;

struct CheckOptions {
  CheckMode mode = Exhaustive{};
  unsigned workers = 1;
};

/// D(x,y) <= max{D(x,z), D(y,z)} + 1 over all ordered triples.
/// Witness: {"x","y","z","d_xy","d_xz","d_yz"}.
CheckReport check_quasi_ultrametric(const DistanceMatrix& d, unsigned workers = 1);

/// Metric axioms on an arbitrary matrix; witness names axiom and indices.
CheckReport check_metric_axioms(const DistanceMatrix& d);

/// (N2)_n: for every x and y_1..y_{n+2} some ordered pair i != j has
/// d(y_i, y_j) <= d(x, y_i). Exhaustive mode enumerates unordered
/// (n+2)-subsets; tuples with a repeated point always satisfy the condition
/// and the order of the y_i does not matter. Witness: {"x", "y": [...]}.
CheckReport check_n2(const DistanceMatrix& d, std::size_t n, const CheckOptions& opts = {});

/// (N1)_n for each radius: whenever all d(y_i, B(x,r)) < 2r, some pair has
/// d(y_i, y_j) < 2r. Witness: {"r", "x", "y": [...], "ball": [...]}.
CheckReport check_n1(const DistanceMatrix& d, std::size_t n,
                     const std::vector<Distance>& radii, const CheckOptions& opts = {});

/// Re-evaluates a witness produced by check_n2 / check_n1 /
/// check_quasi_ultrametric; true iff it really violates the inequality.
bool recheck_n2_witness(const DistanceMatrix& d, const nlohmann::json& witness);
bool recheck_n1_witness(const DistanceMatrix& d, const nlohmann::json& witness);
bool recheck_quasi_ultrametric_witness(const DistanceMatrix& d,
                                       const nlohmann::json& witness);

}  // namespace nagata
