#include "nagata/checkers.hpp"

#include <algorithm>
#include <string>

#include "nagata/errors.hpp"
#include "parallel.hpp"

namespace nagata {
namespace {

using detail::binomial;
using detail::combination_rank;
using detail::first_hit;
using detail::saturating_add;
using detail::saturating_mul;

// Lexicographically least k-combination of `pool` (positions into pool)
// whose members are pairwise "bad". Prunes prefixes that already contain a
// good pair, since every extension of them passes.
template <class Bad>
bool least_bad_combination(std::size_t pool, std::size_t k, Bad bad,
                           std::vector<std::size_t>& combo) {
  combo.assign(k, 0);
  auto extend = [&](auto& self, std::size_t depth, std::size_t from) -> bool {
    if (depth == k) return true;
    for (std::size_t c = from; c + (k - depth) <= pool; ++c) {
      bool ok = true;
      for (std::size_t t = 0; t < depth && ok; ++t) ok = bad(combo[t], c);
      if (!ok) continue;
      combo[depth] = c;
      if (self(self, depth + 1, c + 1)) return true;
    }
    return false;
  };
  return extend(extend, 0, 0);
}

std::size_t tuple_size(std::size_t n) { return n + 2; }

void require_square(const DistanceMatrix& d) {
  if (d.size() == 0) throw InputError("checker needs a nonempty matrix");
}

const Sampled* sampled(const CheckOptions& opts) { return std::get_if<Sampled>(&opts.mode); }

// (N2)_n fails on {a, b} iff neither ordered pair satisfies
// d(y_i, y_j) <= d(x, y_i).
bool n2_pair_fails(const DistanceMatrix& d, std::size_t x, std::size_t a, std::size_t b) {
  const Distance dab = d(a, b);
  return dab > d(x, a) && d(b, a) > d(x, b);
}

bool n2_tuple_fails(const DistanceMatrix& d, std::size_t x, const std::vector<std::size_t>& ys) {
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (i != j && d(ys[i], ys[j]) <= d(x, ys[i])) return false;
  return true;
}

std::vector<std::size_t> ball_indices(const DistanceMatrix& d, std::size_t x, Distance r) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < d.size(); ++y)
    if (d(x, y) <= r) out.push_back(y);
  return out;
}

// {y : d(y, B(x, r)) < 2r}
std::vector<std::size_t> n1_near(const DistanceMatrix& d, const std::vector<std::size_t>& ball,
                                 Distance r) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < d.size(); ++y)
    for (std::size_t z : ball)
      if (d(y, z) < 2 * r) {
        out.push_back(y);
        break;
      }
  return out;
}

bool n1_tuple_fails(const DistanceMatrix& d, const std::vector<std::size_t>& ys, Distance r) {
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (i != j && d(ys[i], ys[j]) < 2 * r) return false;
  return true;
}

const char* kRepeatsNote =
    "exhaustive over unordered (n+2)-subsets; tuples with a repeated point satisfy the "
    "condition through the zero-distance pair, and the condition is invariant under "
    "reordering the y_i";

}  // namespace

CheckReport check_quasi_ultrametric(const DistanceMatrix& d, unsigned workers) {
  require_square(d);
  const std::size_t n = d.size();
  std::vector<std::size_t> hit_y(n), hit_z(n);
  auto fails = [&](std::size_t x) {
    const auto rx = d.row(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ry = d.row(y);
      for (std::size_t z = 0; z < n; ++z) {
        if (rx[y] > std::max(rx[z], ry[z]) + 1) {
          hit_y[x] = y;
          hit_z[x] = z;
          return true;
        }
      }
    }
    return false;
  };
  const auto total = saturating_mul(saturating_mul(n, n), n);
  auto x = first_hit(n, workers, fails);
  if (!x) return CheckReport::passed(total, "all ordered triples");
  const std::size_t y = hit_y[*x], z = hit_z[*x];
  const std::uint64_t checked = (*x * n + y) * n + z + 1;
  return CheckReport::failed(
      checked,
      {{"x", *x}, {"y", y}, {"z", z}, {"d_xy", d(*x, y)}, {"d_xz", d(*x, z)}, {"d_yz", d(y, z)}},
      "D(x,y) > max{D(x,z), D(y,z)} + 1");
}

CheckReport check_metric_axioms(const DistanceMatrix& d) {
  auto v = find_axiom_violations(d);
  const auto n = d.size();
  if (v.empty()) return CheckReport::passed(saturating_mul(saturating_mul(n, n), n));
  return CheckReport::failed(0, {{"axiom", v.front().axiom}, {"indices", v.front().indices}},
                             v.front().describe());
}

CheckReport check_n2(const DistanceMatrix& d, std::size_t n, const CheckOptions& opts) {
  require_square(d);
  const std::size_t size = d.size();
  const std::size_t k = tuple_size(n);

  if (const auto* s = sampled(opts)) {
    auto draw = [&](std::uint64_t sample, std::size_t& x, std::vector<std::size_t>& ys) {
      detail::SampleStream rng(s->seed, sample);
      x = rng.below(size);
      ys.resize(k);
      for (auto& y : ys) y = rng.below(size);
    };
    auto fails = [&](std::size_t sample) {
      std::size_t x;
      std::vector<std::size_t> ys;
      draw(sample, x, ys);
      return n2_tuple_fails(d, x, ys);
    };
    auto hit = first_hit(s->count, opts.workers, fails);
    if (!hit) {
      CheckReport r = CheckReport::passed(s->count, "sampled " + std::to_string(s->count) +
                                                        " ordered tuples, seed " +
                                                        std::to_string(s->seed));
      r.verdict = Verdict::sampled_pass;
      return r;
    }
    std::size_t x;
    std::vector<std::size_t> ys;
    draw(*hit, x, ys);
    return CheckReport::failed(*hit + 1, {{"x", x}, {"y", ys}, {"sample", *hit}},
                               "no pair i != j with d(y_i, y_j) <= d(x, y_i)");
  }

  if (k > size) {
    throw InputError("exhaustive (N2)_" + std::to_string(n) + " needs at least " +
                     std::to_string(k) + " points; the space has " + std::to_string(size));
  }
  std::vector<std::vector<std::size_t>> found(size);
  auto fails = [&](std::size_t x) {
    return least_bad_combination(
        size, k, [&](std::size_t a, std::size_t b) { return n2_pair_fails(d, x, a, b); },
        found[x]);
  };
  const std::uint64_t per_x = binomial(size, k);
  auto x = first_hit(size, opts.workers, fails);
  if (!x) return CheckReport::passed(saturating_mul(per_x, size), kRepeatsNote);
  const auto checked =
      saturating_add(saturating_mul(per_x, *x), combination_rank(found[*x], size) + 1);
  return CheckReport::failed(checked, {{"x", *x}, {"y", found[*x]}},
                             "no pair i != j with d(y_i, y_j) <= d(x, y_i)");
}

CheckReport check_n1(const DistanceMatrix& d, std::size_t n, const std::vector<Distance>& radii,
                     const CheckOptions& opts) {
  require_square(d);
  if (radii.empty()) throw InputError("(N1) check needs at least one radius");
  for (Distance r : radii)
    if (r < 1) throw InputError("(N1) radii must be positive");
  const std::size_t size = d.size();
  const std::size_t k = tuple_size(n);

  if (const auto* s = sampled(opts)) {
    struct Draw {
      Distance r;
      std::size_t x;
      std::vector<std::size_t> ys, ball;
    };
    auto draw = [&](std::uint64_t sample) {
      detail::SampleStream rng(s->seed, sample);
      Draw out;
      out.r = radii[rng.below(radii.size())];
      out.x = rng.below(size);
      out.ball = ball_indices(d, out.x, out.r);
      const auto near = n1_near(d, out.ball, out.r);
      out.ys.resize(k);
      for (auto& y : out.ys) y = near[rng.below(near.size())];
      return out;
    };
    auto hit = first_hit(s->count, opts.workers, [&](std::size_t sample) {
      auto dr = draw(sample);
      return n1_tuple_fails(d, dr.ys, dr.r);
    });
    if (!hit) {
      CheckReport r = CheckReport::passed(s->count, "sampled " + std::to_string(s->count) +
                                                        " (r, x, tuple) draws with all y_i "
                                                        "within 2r of B(x, r), seed " +
                                                        std::to_string(s->seed));
      r.verdict = Verdict::sampled_pass;
      return r;
    }
    auto dr = draw(*hit);
    return CheckReport::failed(
        *hit + 1,
        {{"r", dr.r}, {"x", dr.x}, {"y", dr.ys}, {"ball", dr.ball}, {"sample", *hit}},
        "all y_i lie within 2r of B(x, r) but every pair is at least 2r apart");
  }

  if (k > size) {
    throw InputError("exhaustive (N1)_" + std::to_string(n) + " needs at least " +
                     std::to_string(k) + " points; the space has " + std::to_string(size));
  }
  const std::size_t tasks = radii.size() * size;
  std::vector<std::vector<std::size_t>> near(tasks), found(tasks);
  for (std::size_t t = 0; t < tasks; ++t)
    near[t] = n1_near(d, ball_indices(d, t % size, radii[t / size]), radii[t / size]);

  auto fails = [&](std::size_t t) {
    const Distance r = radii[t / size];
    const auto& pool = near[t];
    return least_bad_combination(
        pool.size(), k,
        [&](std::size_t a, std::size_t b) { return d(pool[a], pool[b]) >= 2 * r; }, found[t]);
  };
  auto hit = first_hit(tasks, opts.workers, fails);
  std::uint64_t checked = 0;
  const std::size_t upto = hit ? *hit : tasks;
  for (std::size_t t = 0; t < upto; ++t) checked = saturating_add(checked, binomial(near[t].size(), k));
  if (!hit) {
    return CheckReport::passed(
        checked, std::string(kRepeatsNote) +
                     "; only tuples with every d(y_i, B(x, r)) < 2r constrain the property");
  }
  const std::size_t t = *hit;
  checked = saturating_add(checked, combination_rank(found[t], near[t].size()) + 1);
  std::vector<std::size_t> ys;
  for (std::size_t pos : found[t]) ys.push_back(near[t][pos]);
  const Distance r = radii[t / size];
  const std::size_t x = t % size;
  return CheckReport::failed(checked,
                             {{"r", r}, {"x", x}, {"y", ys}, {"ball", ball_indices(d, x, r)}},
                             "all y_i lie within 2r of B(x, r) but every pair is at least 2r apart");
}

namespace {

bool index_ok(const DistanceMatrix& d, const nlohmann::json& v) {
  if (!v.is_number_integer()) return false;
  const auto i = v.get<std::int64_t>();
  return i >= 0 && static_cast<std::size_t>(i) < d.size();
}

std::optional<std::vector<std::size_t>> read_points(const DistanceMatrix& d,
                                                    const nlohmann::json& v) {
  if (!v.is_array()) return std::nullopt;
  std::vector<std::size_t> out;
  for (const auto& e : v) {
    if (!index_ok(d, e)) return std::nullopt;
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

}  // namespace

bool recheck_n2_witness(const DistanceMatrix& d, const nlohmann::json& w) {
  if (!w.is_object() || !w.contains("x") || !index_ok(d, w["x"]) || !w.contains("y")) return false;
  auto ys = read_points(d, w["y"]);
  return ys && ys->size() >= 2 && n2_tuple_fails(d, w["x"].get<std::size_t>(), *ys);
}

bool recheck_n1_witness(const DistanceMatrix& d, const nlohmann::json& w) {
  if (!w.is_object() || !w.contains("x") || !index_ok(d, w["x"]) || !w.contains("y") ||
      !w.contains("r") || !w["r"].is_number_integer())
    return false;
  auto ys = read_points(d, w["y"]);
  const Distance r = w["r"].get<Distance>();
  if (!ys || ys->size() < 2 || r < 1) return false;
  const auto ball = ball_indices(d, w["x"].get<std::size_t>(), r);
  const auto near = n1_near(d, ball, r);
  for (std::size_t y : *ys)
    if (!std::binary_search(near.begin(), near.end(), y)) return false;
  return n1_tuple_fails(d, *ys, r);
}

bool recheck_quasi_ultrametric_witness(const DistanceMatrix& d, const nlohmann::json& w) {
  if (!w.is_object()) return false;
  for (const char* key : {"x", "y", "z"})
    if (!w.contains(key) || !index_ok(d, w[key])) return false;
  const auto x = w["x"].get<std::size_t>(), y = w["y"].get<std::size_t>(),
             z = w["z"].get<std::size_t>();
  return d(x, y) > std::max(d(x, z), d(y, z)) + 1;
}

}  // namespace nagata
