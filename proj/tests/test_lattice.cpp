#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crescent/error.hpp"
#include "crescent/lattice.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace crescent;

TEST_CASE("sq_norm") {
  CHECK(sq_norm({1, 0}) == 1);
  CHECK(sq_norm({1, 1}) == 3);
  CHECK(sq_norm({2, -1}) == 3);
  CHECK(sq_norm({0, 0}) == 0);
  CHECK(sq_norm({3, 4}, {3, 4}) == 0);
}

TEST_CASE("sq_norm symmetries on H(3)") {
  const auto pts = enumerate_region({3});
  const LatticePoint shift{5, -2};
  for (const auto& p : pts)
    for (const auto& q : pts) {
      const auto d = sq_norm(p, q);
      CHECK(d == sq_norm(q, p));
      CHECK(d == sq_norm(p + shift, q + shift));
      for (std::size_t g = 0; g < kPointGroupOrder; ++g)
        CHECK(d == sq_norm(apply_point_group(g, p), apply_point_group(g, q)));
      // agrees with the Cartesian embedding
      const auto cp = oracle::cartesian(p), cq = oracle::cartesian(q);
      const double e = (cp[0] - cq[0]) * (cp[0] - cq[0]) + (cp[1] - cq[1]) * (cp[1] - cq[1]);
      CHECK(std::abs(e - static_cast<double>(d)) < 1e-9);
    }
}

TEST_CASE("point group has 12 distinct elements") {
  std::set<LatticePoint> images;
  for (std::size_t g = 0; g < kPointGroupOrder; ++g) images.insert(apply_point_group(g, {2, 1}));
  CHECK(images.size() == 12);
  CHECK(apply_point_group(1, {1, 0}) == LatticePoint{0, 1});  // u -> v under 60 degrees
  for (std::size_t g = 0; g < kPointGroupOrder; ++g) CHECK(apply_point_group(g, {0, 0}) == LatticePoint{0, 0});
  CHECK_THROWS_AS((void)apply_point_group(12, {1, 0}), Error);
}

TEST_CASE("enumerate_region") {
  CHECK(enumerate_region({0}) == std::vector<LatticePoint>{{0, 0}});
  CHECK(enumerate_region({1}).size() == 7);
  CHECK(enumerate_region({5}).size() == 91);
  for (std::int64_t r = 0; r <= 8; ++r) {
    const auto pts = enumerate_region({r});
    CHECK(pts.size() == static_cast<std::size_t>(3 * r * r + 3 * r + 1));
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
    for (const auto& p : pts) CHECK(in_region({r}, p));
  }
  const auto shifted = enumerate_region({1, {10, -3}});
  CHECK(shifted.front() == LatticePoint{9, -3});
  CHECK(shifted.size() == 7);
}

TEST_CASE("collinear") {
  CHECK(collinear({0, 0}, {1, 0}, {2, 0}));
  CHECK_FALSE(collinear({0, 0}, {1, 0}, {0, 1}));
  CHECK(collinear({0, 0}, {1, 1}, {2, 2}));
  CHECK(collinear({0, 0}, {1, -1}, {-3, 3}));
}

TEST_CASE("concyclic examples") {
  // unit rhombus with 60/120 degree angles
  CHECK_FALSE(concyclic({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  // four of the six unit neighbours of the origin
  CHECK(concyclic({1, 0}, {0, 1}, {-1, 1}, {-1, 0}));
  // three collinear: false by convention
  CHECK_FALSE(concyclic({0, 0}, {1, 0}, {2, 0}, {0, 1}));
  CHECK_FALSE(concyclic({0, 0}, {0, 0}, {1, 0}, {0, 1}));
  // (0,0),(1,0),(2,1),(-1,2): decided by the floating oracle
  CHECK(concyclic({0, 0}, {1, 0}, {2, 1}, {-1, 2}) == oracle::float_concyclic({0, 0}, {1, 0}, {2, 1}, {-1, 2}));
}

TEST_CASE("concyclic agrees with the floating circumcircle oracle") {
  const auto h2 = enumerate_region({2});
  int positives = 0;
  for_each_subset(h2.size(), 4, [&](std::span<const Index> s) {
    const bool got = concyclic(h2[s[0]], h2[s[1]], h2[s[2]], h2[s[3]]);
    CHECK(got == oracle::float_concyclic(h2[s[0]], h2[s[1]], h2[s[2]], h2[s[3]]));
    positives += got;
    return true;
  });
  CHECK(positives > 0);

  const auto h8 = enumerate_region({8});
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, h8.size() - 1);
  for (int trial = 0; trial < 10000; ++trial) {
    const LatticePoint p = h8[pick(rng)], q = h8[pick(rng)], r = h8[pick(rng)], s = h8[pick(rng)];
    CHECK(concyclic(p, q, r, s) == oracle::float_concyclic(p, q, r, s));
  }
}

TEST_CASE("to_exact_config") {
  const LatticePoint seg[] = {{0, 0}, {1, 0}};
  CHECK(to_exact_config(seg)(0, 1) == Rational(1));
  const LatticePoint tri[] = {{0, 0}, {1, 0}, {0, 1}};
  const auto t = to_exact_config(tri);
  CHECK(t.dim() == 2);
  CHECK(spectrum(t) == Spectrum{{Rational(1), 3}});
  CHECK_FALSE(general_position(t).has_value());
  const LatticePoint dup[] = {{0, 0}, {1, 0}, {0, 0}};
  CHECK_THROWS_AS((void)to_exact_config(dup), Error);
}

TEST_CASE("lattice and exact predicates agree") {
  const auto h2 = enumerate_region({2});
  for_each_subset(h2.size(), 4, [&](std::span<const Index> s) {
    const LatticePoint q[] = {h2[s[0]], h2[s[1]], h2[s[2]], h2[s[3]]};
    const bool any_collinear = collinear(q[0], q[1], q[2]) || collinear(q[0], q[1], q[3]) ||
                               collinear(q[0], q[2], q[3]) || collinear(q[1], q[2], q[3]);
    const auto v = general_position(to_exact_config(q));
    if (any_collinear) {
      REQUIRE(v.has_value());
      CHECK(v->kind == ViolationKind::HyperplaneDegeneracy);
    } else if (concyclic(q[0], q[1], q[2], q[3])) {
      CHECK(v == Violation{ViolationKind::Cosphericity, {0, 1, 2, 3}});
    } else {
      CHECK_FALSE(v.has_value());
    }
    return true;
  });
}

TEST_CASE("eight-point lattice fixture") {
  CHECK(from_half_units(0, 2) == LatticePoint{1, 0});
  CHECK(from_half_units(2, 0) == LatticePoint{-1, 2});
  CHECK_THROWS_AS((void)from_half_units(1, 2), Error);

  const auto pts = figure1_lattice_points();
  const std::vector<LatticePoint> pinned{{1, 0}, {-1, 2}, {-2, 4}, {0, 5}, {3, 3}, {3, 1}, {2, 3}, {1, 2}};
  CHECK(pts == pinned);

  // Congruent to the Cartesian points (p sqrt3/2, q/2): squared distance 3dp^2/4 + dq^2/4.
  const std::int64_t half[8][2] = {{0, 2}, {2, 0}, {4, 0}, {5, 5}, {3, 9}, {1, 7}, {3, 7}, {2, 4}};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const std::int64_t dp = half[i][0] - half[j][0], dq = half[i][1] - half[j][1];
      CHECK(Rational(3 * dp * dp + dq * dq, 4) == Rational(sq_norm(pts[i], pts[j])));
    }

  const auto c = to_exact_config(pts);
  CHECK(spectrum(c) == Spectrum{{Rational(1), 1}, {Rational(3), 4}, {Rational(4), 5}, {Rational(7), 6},
                                {Rational(13), 7}, {Rational(19), 2}, {Rational(21), 3}});
  CHECK(is_crescent_spectrum(spectrum(c), 8));
  CHECK_FALSE(verify_crescent(c).has_value());
}

TEST_CASE("bounding_hex") {
  const auto pts = figure1_lattice_points();
  const HexRegion h = bounding_hex(pts);
  CHECK(h.radius == 3);
  for (const auto& p : pts) CHECK(in_region(h, p));
  const LatticePoint one[] = {{4, -7}};
  CHECK(bounding_hex(one).radius == 0);
  CHECK(bounding_hex(one).center == LatticePoint{4, -7});
}
