#include <doctest.h>

#include <random>

#include "nagata/checkers.hpp"
#include "nagata/errors.hpp"
#include "nagata/generators.hpp"
#include "nagata/nagata_space.hpp"
#include "nagata/nesting.hpp"
#include "support.hpp"

using namespace nagata;

namespace {

struct Built {
  FiniteMetricSpace base;
  NestedCoverSequence seq;
  NagataSpace ns;
};

Built build(FiniteMetricSpace base, std::size_t n) {
  NestingOptions o;
  o.saturate = true;
  auto provider = (n >= 1 && is_line_metric(base)) ? interval_provider(base, n + 1)
                                                    : greedy_provider(base, n + 1);
  auto seq = build_nested_sequence(base, provider, o);
  auto ns = build_nagata_space(base, seq);
  return {std::move(base), std::move(seq), std::move(ns)};
}

const Built& line256() {
  static const Built b = build(line_space(256), 1);
  return b;
}

// Two points 100 apart, kept apart for two levels and joined at the third.
NestedCoverSequence late_join(const FiniteMetricSpace& s) {
  NestedCoverSequence seq;
  auto apart = ColoredCover::unchecked(s, {{{0}, {1}}}, 0);
  auto joined = ColoredCover::unchecked(s, {{{0, 1}}}, 0);
  seq.levels.push_back({1, apart, 0, 1, 0});
  seq.levels.push_back({2, apart, 0, 2, 0});
  seq.levels.push_back({3, joined, 100, 3, 100});
  return seq;
}

FiniteMetricSpace far_pair() {
  return FiniteMetricSpace(oracle::names(2), DistanceMatrix::from_rows({{0, 100}, {100, 0}}));
}

}  // namespace

TEST_SUITE("build_nagata_space") {
  TEST_CASE("one point") {
    auto s = line_space(1);
    auto b = build(s, 0);
    CHECK(b.ns.size() == 1);
    CHECK(b.ns(0, 0) == 0);
    CHECK(b.ns.provenance().empty());
    CHECK(check_metric_axioms(b.ns.matrix()).ok());
  }

  TEST_CASE("first co-contained at level 3 gives D = 3") {
    auto s = far_pair();
    auto seq = late_join(s);
    auto ns = build_nagata_space(s, seq);
    CHECK(ns(0, 1) == 3);
    CHECK(ns(1, 0) == 3);
    CHECK(ns.provenance(1, 0).level == 3);
    CHECK(ns.provenance(0, 1).witness_set == PointSet{0, 1});
    CHECK(check_provenance(ns, seq).ok());
  }

  TEST_CASE("a pair never co-contained is a construction error naming it") {
    auto s = far_pair();
    auto seq = late_join(s);
    seq.levels.pop_back();
    try {
      build_nagata_space(s, seq);
      FAIL("expected ConstructionError");
    } catch (const ConstructionError& e) {
      CHECK(e.payload()["pair"] == nlohmann::json({0, 1}));
    }
  }

  TEST_CASE("D equals the per-pair level rescan on pipeline outputs") {
    std::vector<Built> cases;
    cases.push_back(line256());
    cases.push_back(build(cycle_space(64), 1));
    cases.push_back(build(grid2d_space(8, 8), 1));
    cases.push_back(build(random_graph_space(40, 0.3, 2), 1));
    cases.push_back(build(line_space(40), 0));
    for (const auto& b : cases) {
      CHECK(b.ns.matrix() == oracle::level_scan_D(b.base.size(), b.seq));
      CHECK(check_provenance(b.ns, b.seq).ok());
      CHECK(check_metric_axioms(b.ns.matrix()).ok());
      CHECK(b.ns.levels_used() == b.seq.levels.size());
    }
  }

  TEST_CASE("check_provenance catches a tampered value") {
    auto s = far_pair();
    auto seq = late_join(s);
    auto good = build_nagata_space(s, seq);
    auto d = good.matrix();
    d(0, 1) = d(1, 0) = 2;
    auto prov = good.provenance();
    prov[0].level = 2;
    NagataSpace bad(3, d, prov);
    CHECK_FALSE(check_provenance(bad, seq).ok());
  }
}

TEST_SUITE("check_quasi_ultrametric") {
  TEST_CASE("constructed violation reports the triple and values") {
    auto d = DistanceMatrix::from_rows({{0, 5, 2}, {5, 0, 2}, {2, 2, 0}});
    auto r = check_quasi_ultrametric(d);
    REQUIRE_FALSE(r.ok());
    CHECK(r.witness["x"] == 0);
    CHECK(r.witness["y"] == 1);
    CHECK(r.witness["z"] == 2);
    CHECK(r.witness["d_xy"] == 5);
    CHECK(r.witness["d_xz"] == 2);
    CHECK(r.witness["d_yz"] == 2);
    CHECK(recheck_quasi_ultrametric_witness(d, r.witness));
  }

  TEST_CASE("pipeline outputs pass and match the brute scan") {
    for (const auto& b : {line256(), build(cycle_space(128), 1), build(grid2d_space(11, 11), 1)}) {
      auto r = check_quasi_ultrametric(b.ns.matrix(), 2);
      CHECK(r.ok());
      CHECK(r.checked == b.ns.size() * b.ns.size() * b.ns.size());
    }
  }

  TEST_CASE("agrees with the brute scan on random small matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 2 + rng() % 6;
      DistanceMatrix d(n, 0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) d(a, b) = d(b, a) = 1 + static_cast<Distance>(rng() % 4);
      auto r = check_quasi_ultrametric(d, 1 + trial % 3);
      CHECK(r.ok() == oracle::quasi_ultrametric_brute(d));
      if (!r.ok()) CHECK(recheck_quasi_ultrametric_witness(d, r.witness));
    }
  }
}

TEST_SUITE("check_n2") {
  TEST_CASE("integers -1, 0, 1 fail for n = 0") {
    auto d = line_space(3).matrix();
    auto r = check_n2(d, 0);
    REQUIRE((r.verdict == Verdict::fail));
    CHECK(r.witness["x"] == 1);
    CHECK(r.witness["y"] == nlohmann::json({0, 2}));
    CHECK(recheck_n2_witness(d, r.witness));
    CHECK_FALSE(recheck_n2_witness(d, {{"x", 0}, {"y", {1, 2}}}));
  }

  TEST_CASE("ultrametric spaces pass for n = 0") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto s = ultrametric_random_space(24, seed);
      CHECK(check_n2(s.matrix(), 0).ok());
    }
  }

  TEST_CASE("main property on pipeline outputs") {
    CHECK(check_n2(build(line_space(64), 1).ns.matrix(), 1).ok());
    CHECK(check_n2(line256().ns.matrix(), 1, {Exhaustive{}, 2}).ok());
    CHECK(check_n2(build(line_space(64), 0).ns.matrix(), 0).ok());
    CHECK(check_n2(build(grid2d_space(6, 6), 2).ns.matrix(), 2).ok());
  }

  TEST_CASE("agrees with ordered-tuple brute force") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
      const std::size_t size = 3 + rng() % 5;
      auto s = oracle::random_l1_space(size, 6, rng);
      for (std::size_t n : {0u, 1u}) {
        if (n + 2 > size) continue;
        auto r = check_n2(s.matrix(), n);
        CHECK(r.ok() == oracle::n2_brute(s.matrix(), n));
        if (!r.ok()) CHECK(recheck_n2_witness(s.matrix(), r.witness));
      }
    }
    for (int trial = 0; trial < 20; ++trial) {
      auto b = build(oracle::random_l1_space(7, 5, rng), 0);
      CHECK(check_n2(b.ns.matrix(), 0).ok() == oracle::n2_brute(b.ns.matrix(), 0));
    }
  }

  TEST_CASE("worker count does not change the result") {
    auto d = line_space(40).matrix();
    auto one = check_n2(d, 1, {Exhaustive{}, 1});
    auto four = check_n2(d, 1, {Exhaustive{}, 4});
    CHECK(one.witness == four.witness);
    CHECK(one.checked == four.checked);
    CHECK(one.verdict == four.verdict);
  }

  TEST_CASE("sampled mode") {
    auto good = line256().ns.matrix();
    auto r = check_n2(good, 1, {Sampled{500, 3}});
    CHECK(r.verdict == Verdict::sampled_pass);
    CHECK(r.checked == 500);
    auto bad = line_space(30).matrix();
    auto f = check_n2(bad, 0, {Sampled{2000, 9}});
    REQUIRE((f.verdict == Verdict::fail));
    CHECK(recheck_n2_witness(bad, f.witness));
    CHECK(f.witness.contains("sample"));
    auto again = check_n2(bad, 0, {Sampled{2000, 9}, 3});
    CHECK(again.witness == f.witness);
  }

  TEST_CASE("too many points for exhaustive mode") {
    CHECK_THROWS_AS(check_n2(line_space(2).matrix(), 1), InputError);
  }
}

TEST_SUITE("check_n1") {
  TEST_CASE("integers 0..4, n = 0, r = 1 fail") {
    auto d = line_space(5).matrix();
    auto r = check_n1(d, 0, {1});
    REQUIRE((r.verdict == Verdict::fail));
    CHECK(r.witness["r"] == 1);
    CHECK(recheck_n1_witness(d, r.witness));
    nlohmann::json stated = {{"r", 1}, {"x", 2}, {"y", {0, 4}}, {"ball", {1, 2, 3}}};
    CHECK(recheck_n1_witness(d, stated));
    CHECK_FALSE(recheck_n1_witness(d, {{"r", 1}, {"x", 2}, {"y", {1, 2}}}));
  }

  TEST_CASE("repeated points are never a witness") {
    auto d = line_space(5).matrix();
    CHECK_FALSE(recheck_n1_witness(d, {{"r", 1}, {"x", 2}, {"y", {0, 0}}}));
  }

  TEST_CASE("ultrametric spaces pass with radii 1, 2, 4") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto s = ultrametric_random_space(20, seed);
      CHECK(check_n1(s.matrix(), 0, {1, 2, 4}).ok());
    }
  }

  TEST_CASE("agrees with ordered-tuple brute force") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t size = 3 + rng() % 4;
      auto s = oracle::random_l1_space(size, 6, rng);
      std::vector<Distance> radii{1 + static_cast<Distance>(rng() % 3), 4};
      for (std::size_t n : {0u, 1u}) {
        if (n + 2 > size) continue;
        auto r = check_n1(s.matrix(), n, radii);
        CHECK(r.ok() == oracle::n1_brute(s.matrix(), n, radii));
        if (!r.ok()) CHECK(recheck_n1_witness(s.matrix(), r.witness));
      }
    }
  }

  TEST_CASE("empty radii is an input error") {
    CHECK_THROWS_AS(check_n1(line_space(4).matrix(), 0, {}), InputError);
  }
}

TEST_SUITE("coarse_control") {
  TEST_CASE("line 256 satisfies both bounds; rows match a direct tabulation") {
    const auto& b = line256();
    auto c = coarse_control(b.base, b.ns, b.seq);
    CHECK(c.summary.ok());
    REQUIRE(c.rho_plus.size() == b.seq.levels.size());
    for (std::size_t k = 1; k <= b.seq.levels.size(); ++k) {
      Distance expect = 0;
      for (PointIndex x = 0; x < 256; ++x)
        for (PointIndex y = 0; y < 256; ++y)
          if (b.ns(x, y) <= static_cast<Distance>(k)) expect = std::max(expect, b.base.dist(x, y));
      CHECK(c.rho_plus[k - 1].value == expect);
      CHECK(*c.rho_plus[k - 1].bound == b.seq.levels[k - 1].m_k);
    }
    CHECK(c.rho_minus.size() == 256);  // realized distances 0..255
    for (const auto& row : c.rho_minus) {
      Distance expect = 0;
      for (PointIndex x = 0; x < 256; ++x)
        for (PointIndex y = 0; y < 256; ++y)
          if (b.base.dist(x, y) <= row.argument) expect = std::max(expect, b.ns(x, y));
      CHECK(row.value == expect);
      CHECK(row.ok);
    }
    CHECK(c.rho_minus.front().argument == 0);
    CHECK(c.rho_minus.front().value == 0);
  }

  TEST_CASE("one-level saturated sequence") {
    auto s = line_space(6);
    NestedCoverSequence seq;
    seq.levels.push_back({1, ColoredCover::make(s, {{PointSet::all(6)}}, 1), 5, 1, 5});
    auto ns = build_nagata_space(s, seq);
    auto c = coarse_control(s, ns, seq);
    CHECK(c.summary.ok());
    CHECK(c.rho_plus.at(0).value == 5);
  }

  TEST_CASE("bounds are violated by a tampered mesh record") {
    auto s = far_pair();
    auto seq = late_join(s);
    auto ns = build_nagata_space(s, seq);
    seq.levels[2].m_k = 50;
    auto c = coarse_control(s, ns, seq);
    REQUIRE_FALSE(c.summary.ok());
    CHECK(c.summary.witness["bound"] == "rho_plus");
    CHECK(c.summary.witness["k"] == 3);
  }

  TEST_CASE("a delta beyond every d_r is unbounded") {
    auto s = far_pair();
    auto seq = late_join(s);
    auto c = coarse_control(s, build_nagata_space(s, seq), seq);
    CHECK(c.summary.ok());
    CHECK_FALSE(c.rho_minus.back().bound.has_value());
  }

  TEST_CASE("mismatched inputs are input errors") {
    auto s = far_pair();
    auto seq = late_join(s);
    auto ns = build_nagata_space(s, seq);
    CHECK_THROWS_AS(coarse_control(line_space(3), ns, seq), InputError);
    seq.levels.pop_back();
    CHECK_THROWS_AS(coarse_control(s, ns, seq), InputError);
  }
}

TEST_SUITE("pigeonhole_trace") {
  TEST_CASE("one color: direct containment") {
    auto b = build(line_space(30), 0);
    auto t = pigeonhole_trace(b.ns, b.seq, 3, {0, 20});
    CHECK(t.ok);
    CHECK((t.i_in_j || t.j_in_i));
    CHECK(t.color[0] == 0);
    CHECK(t.color[1] == 0);
  }

  TEST_CASE("repeated point short-circuits") {
    const auto& b = line256();
    auto t = pigeonhole_trace(b.ns, b.seq, 5, {9, 9, 100});
    CHECK(t.ok);
    CHECK(t.i == 0);
    CHECK(t.j == 1);
    CHECK(t.conclusions.at(0)["lhs_value"] == 0);
  }

  TEST_CASE("wrong tuple length is a diagnostic, not an exception") {
    const auto& b = line256();
    auto t = pigeonhole_trace(b.ns, b.seq, 5, {1, 2});
    CHECK_FALSE(t.ok);
    CHECK_FALSE(t.diagnostic.empty());
  }

  TEST_CASE("random instances re-check against D") {
    std::mt19937_64 rng(23);
    std::vector<Built> cases{line256(), build(grid2d_space(7, 7), 2), build(cycle_space(50), 1)};
    for (const auto& b : cases) {
      const auto k = b.seq.n_colors() + 1;
      for (int trial = 0; trial < 400; ++trial) {
        const PointIndex x = rng() % b.ns.size();
        std::vector<PointIndex> ys(k);
        for (auto& y : ys) y = rng() % b.ns.size();
        auto t = pigeonhole_trace(b.ns, b.seq, x, ys);
        REQUIRE_MESSAGE(t.ok, t.to_json().dump());
        for (const auto& c : t.conclusions) {
          auto lhs = c["lhs"], rhs = c["rhs"];
          CHECK(b.ns(lhs[0].get<PointIndex>(), lhs[1].get<PointIndex>()) <=
                b.ns(rhs[0].get<PointIndex>(), rhs[1].get<PointIndex>()));
        }
        // The concluded pair satisfies the (N2) inequality for D.
        CHECK(t.i < t.j);
      }
    }
  }

  TEST_CASE("to_json shape") {
    const auto& b = line256();
    auto j = pigeonhole_trace(b.ns, b.seq, 0, {10, 200, 250}).to_json();
    for (const char* key : {"ok", "diagnostic", "r", "color", "witness_sets", "pair", "conclusions"})
      CHECK(j.contains(key));
  }
}
