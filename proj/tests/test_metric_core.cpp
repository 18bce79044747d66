#include <doctest.h>

#include <random>

#include "nagata/errors.hpp"
#include "nagata/generators.hpp"
#include "nagata/geometry.hpp"
#include "support.hpp"

using namespace nagata;

namespace {

std::vector<PointIndex> v(std::initializer_list<PointIndex> l) { return l; }

Family random_family(std::size_t n, std::size_t members, std::mt19937_64& rng) {
  Family f;
  for (std::size_t m = 0; m < members; ++m) {
    std::vector<PointIndex> s;
    for (std::size_t p = 0; p < n; ++p)
      if (rng() % 3 == 0) s.push_back(static_cast<PointIndex>(p));
    if (s.empty()) s.push_back(static_cast<PointIndex>(rng() % n));
    f.emplace_back(s);
  }
  return f;
}

// Random cover: random members plus a singleton patch for any uncovered point.
Family random_cover(const FiniteMetricSpace& s, std::mt19937_64& rng) {
  Family f = random_family(s.size(), 1 + rng() % 5, rng);
  for (PointIndex p = 0; p < s.size(); ++p) {
    bool hit = false;
    for (const auto& u : f) hit = hit || u.contains(p);
    if (!hit) f.push_back(ball(s, p, static_cast<Distance>(rng() % 4)));
  }
  return f;
}

}  // namespace

TEST_SUITE("metric space validation") {
  TEST_CASE("rejects asymmetric matrices naming the indices") {
    auto m = DistanceMatrix::from_rows({{0, 1, 2}, {1, 0, 1}, {2, 3, 0}});
    try {
      FiniteMetricSpace({"a", "b", "c"}, m);
      FAIL("expected InputError");
    } catch (const InputError& e) {
      CHECK(e.payload()["axiom"] == "symmetry");
      CHECK(e.payload()["indices"] == nlohmann::json({1, 2}));
    }
  }

  TEST_CASE("rejects triangle violations, zero distances, bad diagonals, duplicate names") {
    CHECK_THROWS_AS(FiniteMetricSpace({"a", "b", "c"},
                                      DistanceMatrix::from_rows({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}})),
                    InputError);
    CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, DistanceMatrix::from_rows({{0, 0}, {0, 0}})),
                    InputError);
    CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, DistanceMatrix::from_rows({{1, 1}, {1, 0}})),
                    InputError);
    CHECK_THROWS_AS(FiniteMetricSpace({"a", "a"}, DistanceMatrix::from_rows({{0, 1}, {1, 0}})),
                    InputError);
    CHECK_THROWS_AS(DistanceMatrix::from_rows({{0, 1}, {1}}), InputError);
  }

  TEST_CASE("triangle witness is (i, j, k) with d(i,k) > d(i,j) + d(j,k)") {
    auto m = DistanceMatrix::from_rows({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
    auto v = find_axiom_violations(m);
    REQUIRE(v.size() == 1);
    CHECK(v[0].axiom == "triangle");
    CHECK(v[0].indices == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("index_of and require_point reject unknown points") {
    auto s = line_space(3);
    CHECK(s.index_of("p2") == 2);
    CHECK_THROWS_AS(s.index_of("nope"), InputError);
    CHECK_THROWS_AS(ball(s, 7, 1), InputError);
  }
}

TEST_SUITE("ball") {
  TEST_CASE("line examples") {
    auto s = line_space(4);
    CHECK(ball(s, 1, 1).members() == v({0, 1, 2}));
    for (PointIndex x = 0; x < 4; ++x) CHECK(ball(s, x, 0).members() == v({x}));
  }

  TEST_CASE("8-cycle ball against BFS distances") {
    auto bfs = oracle::bfs_all_pairs(oracle::cycle_adjacency(8));
    FiniteMetricSpace s(oracle::names(8), bfs);
    CHECK(ball(s, 0, 2).members() == v({0, 1, 2, 6, 7}));
    CHECK(cycle_space(8).matrix() == bfs);
  }

  TEST_CASE("ball is monotone in r") {
    auto s = random_graph_space(25, 0.15, 3);
    for (PointIndex x = 0; x < s.size(); ++x)
      for (Distance r = 0; r < s.diameter(); ++r) CHECK(ball(s, x, r + 1).includes(ball(s, x, r)));
  }
}

TEST_SUITE("set_distance") {
  TEST_CASE("forced values") {
    auto s = line_space(6);
    CHECK(set_distance(s, {0}, {3, 4}) == 3);
    CHECK(set_distance(s, {1, 2}, {2, 5}) == 0);
    CHECK_THROWS_AS(set_distance(s, PointSet{}, {1}), InputError);
  }

  TEST_CASE("random subsets match the exhaustive minimum; zero iff intersecting") {
    std::mt19937_64 rng(11);
    auto s = oracle::random_l1_space(20, 30, rng);
    for (int trial = 0; trial < 200; ++trial) {
      auto f = random_family(s.size(), 2, rng);
      const Distance d = set_distance(s, f[0], f[1]);
      CHECK(d == oracle::min_distance(s, f[0].members(), f[1].members()));
      CHECK(d == set_distance(s, f[1], f[0]));
      CHECK((d == 0) == f[0].intersects(f[1]));
    }
  }
}

TEST_SUITE("neighborhood") {
  TEST_CASE("strict inequality") {
    auto s = line_space(6);
    CHECK(neighborhood(s, {2}, 1).members() == v({2}));
    CHECK(neighborhood(s, {2}, 2).members() == v({1, 2, 3}));
    CHECK(neighborhood(s, PointSet::all(6), 3) == PointSet::all(6));
  }
}

TEST_SUITE("diameter and mesh") {
  TEST_CASE("forced values") {
    auto s = line_space(6);
    CHECK(diameter(s, {4}) == 0);
    CHECK(mesh(s, {{0, 1}, {3, 4, 5}}) == 2);
    CHECK_THROWS_AS(mesh(s, {}), InputError);
  }

  TEST_CASE("random families match max-of-max") {
    std::mt19937_64 rng(5);
    auto s = oracle::random_l1_space(30, 40, rng);
    for (int trial = 0; trial < 50; ++trial) {
      auto f = random_family(s.size(), 1 + rng() % 6, rng);
      Distance expected = 0;
      for (const auto& u : f) expected = std::max(expected, oracle::max_pairwise(s, u.members()));
      CHECK(mesh(s, f) == expected);
    }
  }
}

TEST_SUITE("is_r_disjoint") {
  TEST_CASE("examples") {
    auto s = line_space(10);
    CHECK(is_r_disjoint(s, {{3, 4}}, 100).ok());
    CHECK(is_r_disjoint(s, {{0, 1}, {5, 6}}, 3).ok());
    auto fail = is_r_disjoint(s, {{0, 1}, {5, 6}}, 4);
    REQUIRE_FALSE(fail.ok());
    CHECK(fail.witness["members"] == nlohmann::json({0, 1}));
    CHECK(fail.witness["sets"] == nlohmann::json({{0, 1}, {5, 6}}));
    CHECK(fail.witness["distance"] == 4);
  }

  TEST_CASE("empty family is vacuously disjoint") { CHECK(is_r_disjoint(line_space(3), {}, 5).ok()); }
}

TEST_SUITE("lebesgue") {
  TEST_CASE("examples") {
    auto s = line_space(6);
    for (Distance r = 0; r < 8; ++r) CHECK(lebesgue_at_least(s, {PointSet::all(6)}, r).ok());
    Family halves{{0, 1, 2}, {3, 4, 5}};
    auto fail = lebesgue_at_least(s, halves, 1);
    REQUIRE_FALSE(fail.ok());
    CHECK(fail.witness["x"] == 2);
    CHECK(lebesgue_at_least(s, halves, 0).ok());
    CHECK_THROWS_AS(lebesgue_at_least(s, {{0, 1}}, 0), InputError);
  }

  TEST_CASE("max_lebesgue examples") {
    auto s = line_space(6);
    CHECK(max_lebesgue(s, {PointSet::all(6)}) == 5);
    CHECK(max_lebesgue(s, {{0, 1, 2}, {3, 4, 5}}) == 0);
  }

  TEST_CASE("max_lebesgue equals the linear-scan oracle; predicate is monotone") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      auto s = trial % 2 ? oracle::random_l1_space(30, 12, rng)
                         : random_graph_space(30, 0.12, trial);
      auto cover = random_cover(s, rng);
      const Distance best = max_lebesgue(s, cover);
      CHECK(best == oracle::max_lebesgue_linear(s, oracle::raw(cover)));
      for (Distance r = 0; r <= best; ++r) CHECK(lebesgue_at_least(s, cover, r).ok());
      if (best < s.diameter()) CHECK_FALSE(lebesgue_at_least(s, cover, best + 1).ok());
    }
  }
}
