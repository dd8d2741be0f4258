#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "tvdw/space.hpp"

using namespace tvdw;

namespace {
double u01(std::mt19937_64& rng) { return std::ldexp(static_cast<double>(rng() >> 11), -53); }
}  // namespace

TEST_CASE("distance formulas per kind") {
  auto iv = MetricSpace::interval(0, 1, 1e-4);
  CHECK(iv.distance(PointRef::at(0.2), PointRef::at(0.7)) == doctest::Approx(0.5));
  CHECK(iv.distance(PointRef::at(0.3), PointRef::at(0.3)) == 0.0);

  auto c2 = MetricSpace::cantor(2);
  CHECK(c2.distance(PointRef::at(0.0), PointRef::at(2.0 / 3)) == doctest::Approx(2.0 / 3));

  auto fm = MetricSpace::finite_matrix({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}});
  CHECK(fm.distance(PointRef::row(0), PointRef::row(2)) == 3);
  CHECK_THROWS_AS(fm.distance(PointRef::row(0), PointRef::row(5)), tvdw::domain_error);

  auto bx = MetricSpace::box({0, 0}, {1, 1}, 0.01);
  CHECK(bx.distance(PointRef::at(0, 0), PointRef::at(3.0 / 5, 4.0 / 5)) == doctest::Approx(1.0));
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937_64 rng(23);
  auto iv = MetricSpace::interval(0, 1, 1e-4);
  auto bx = MetricSpace::box({0, 0, 0}, {1, 2, 1}, 0.05);
  for (int t = 0; t < 10000; ++t) {
    PointRef u = PointRef::at(u01(rng)), v = PointRef::at(u01(rng)), w = PointRef::at(u01(rng));
    CHECK(iv.distance(u, v) == iv.distance(v, u));
    CHECK(iv.distance(u, w) <= iv.distance(u, v) + iv.distance(v, w));
    PointRef a = PointRef::at(u01(rng), 2 * u01(rng), u01(rng));
    PointRef b = PointRef::at(u01(rng), 2 * u01(rng), u01(rng));
    PointRef c = PointRef::at(u01(rng), 2 * u01(rng), u01(rng));
    CHECK(bx.distance(a, b) == bx.distance(b, a));
    CHECK(bx.distance(a, c) <= bx.distance(a, b) + bx.distance(b, c) + 1e-15);
  }
  auto fm = MetricSpace::finite_matrix({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(fm.distance(PointRef::row(i), PointRef::row(k)) <=
              fm.distance(PointRef::row(i), PointRef::row(j)) +
                  fm.distance(PointRef::row(j), PointRef::row(k)));
}

TEST_CASE("ball_sample on the unit interval") {
  auto iv = MetricSpace::interval(0, 1, 0);  // continuum
  auto pts = iv.ball_sample(PointRef::at(0.5), 0.1, 4);
  REQUIRE(pts.size() == 4);
  std::vector<double> xs;
  for (auto& p : pts) xs.push_back(p.x());
  std::sort(xs.begin(), xs.end());
  CHECK(xs[0] == doctest::Approx(0.45));
  CHECK(xs[1] == doctest::Approx(0.475));
  CHECK(xs[2] == doctest::Approx(0.525));
  CHECK(xs[3] == doctest::Approx(0.55));
  // distance-descending order
  for (std::size_t i = 1; i < pts.size(); ++i)
    CHECK(std::abs(pts[i - 1].x() - 0.5) >= std::abs(pts[i].x() - 0.5));
}

TEST_CASE("ball_sample respects strictness, budget monotonicity, determinism") {
  std::mt19937_64 rng(29);
  auto iv = MetricSpace::interval(0, 1, 1e-4);
  for (int t = 0; t < 50; ++t) {
    double x = 0.1 + 0.8 * u01(rng);
    double r = 0.001 + 0.2 * u01(rng);
    auto small = iv.ball_sample(PointRef::at(x), r, 8);
    auto large = iv.ball_sample(PointRef::at(x), r, 64);
    std::set<double> large_set;
    for (auto& p : large) large_set.insert(p.x());
    for (auto& p : small) {
      CHECK(large_set.count(p.x()) == 1);  // enlarging the budget keeps points
      CHECK(iv.distance(PointRef::at(x), p) < r);
      CHECK(iv.distance(PointRef::at(x), p) > 0);
    }
    auto again = iv.ball_sample(PointRef::at(x), r, 8);
    REQUIRE(again.size() == small.size());
    for (std::size_t i = 0; i < small.size(); ++i) CHECK(again[i].x() == small[i].x());
    // sorted by distance descending
    for (std::size_t i = 1; i < large.size(); ++i)
      CHECK(std::abs(large[i - 1].x() - x) >= std::abs(large[i].x() - x));
  }
}

TEST_CASE("ball_sample on finite carriers") {
  auto single = MetricSpace::finite_matrix({{0.0}});
  CHECK(single.ball_sample(PointRef::row(0), 10.0, 16).empty());

  auto c3 = MetricSpace::cantor(3);
  auto pts = c3.ball_sample(PointRef::at(0.0), 0.04, 16);
  // Level-3 endpoints below 0.04: only 1/27 (2/27 = 0.074 is outside).
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].x() == doctest::Approx(1.0 / 27));

  auto closed = c3.ball_sample_closed(PointRef::at(0.0), 1.0 / 27, 16);
  REQUIRE(closed.size() == 1);  // boundary point included
  CHECK(closed[0].x() == doctest::Approx(1.0 / 27));
  CHECK(c3.ball_sample(PointRef::at(0.0), 1.0 / 27, 16).empty());  // open: excluded
}

TEST_CASE("min_positive_gap") {
  auto fm = MetricSpace::finite_matrix({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}});
  CHECK(fm.min_positive_gap() == 1);
  auto c2 = MetricSpace::cantor(2);
  CHECK(c2.min_positive_gap() == doctest::Approx(1.0 / 9));
  auto iv = MetricSpace::interval(0, 1, 0.01);
  CHECK(iv.min_positive_gap() == doctest::Approx(0.01));
  auto lone = MetricSpace::finite_matrix({{0.0}});
  CHECK(std::isinf(lone.min_positive_gap()));
}

TEST_CASE("cantor carrier structure") {
  auto c8 = MetricSpace::cantor(8);
  CHECK(c8.carrier_size() == 512);  // both endpoints of 2^8 intervals
  // contains all 2^8 left endpoints, pairwise at least 3^-8 apart
  CHECK(c8.min_positive_gap() == doctest::Approx(std::pow(3.0, -8)));
  CHECK(c8.contains(PointRef::at(2.0 / 3)));
  CHECK(c8.contains(PointRef::at(1.0 / 3)));   // right endpoint
  CHECK(!c8.contains(PointRef::at(0.5)));
}

TEST_CASE("isolation at working scale") {
  auto fm = MetricSpace::finite_matrix({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}});
  CHECK(fm.isolated_at_scale(PointRef::row(0)));
  auto iv = MetricSpace::interval(0, 1, 1e-4);
  CHECK(!iv.isolated_at_scale(PointRef::at(0.5)));
  auto c8 = MetricSpace::cantor(8);
  CHECK(!c8.isolated_at_scale(PointRef::at(0.0)));
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(MetricSpace::interval(1, 0, 0.1), tvdw::domain_error);
  CHECK_THROWS_AS(MetricSpace::finite_matrix({{0, 1}, {2, 0}}), tvdw::domain_error);  // asymmetric
  auto iv = MetricSpace::interval(0, 1, 1e-4);
  CHECK_THROWS_AS(iv.ball_sample(PointRef::at(0.5), -1.0, 4), tvdw::domain_error);
  CHECK_THROWS_AS(iv.distance(PointRef::at(2.5), PointRef::at(0.5)), tvdw::domain_error);
}

TEST_CASE("ball_sup_distance is exact on grids") {
  auto iv = MetricSpace::interval(0, 1, 0.01);
  // farthest grid point strictly inside r = 0.095 of x = 0.5 is 0.09 away
  CHECK(iv.ball_sup_distance(PointRef::at(0.5), 0.095) == doctest::Approx(0.09));
  CHECK(iv.ball_sup_distance(PointRef::at(0.5), 0.0999) == doctest::Approx(0.09));
  auto c2 = MetricSpace::cantor(2);
  CHECK(c2.ball_sup_distance(PointRef::at(0.0), 0.2) == doctest::Approx(1.0 / 9));
}

TEST_CASE("box and cloud ball samples") {
  auto bx = MetricSpace::box({0, 0}, {1, 1}, 0.01);
  PointRef c = PointRef::at(0.5, 0.5);
  auto open_pts = bx.ball_sample(c, 0.1, 64);
  CHECK(!open_pts.empty());
  for (auto& p : open_pts) {
    CHECK(bx.distance(c, p) < 0.1);
    CHECK(bx.distance(c, p) > 0.0);
  }
  auto closed_pts = bx.ball_sample_closed(c, 0.1, 64);
  for (auto& p : closed_pts) CHECK(bx.distance(c, p) <= 0.1);

  auto cloud = MetricSpace::point_cloud(
      {PointRef::at(0.1), PointRef::at(0.42), PointRef::at(0.44), PointRef::at(0.9)}, 0.0);
  auto near = cloud.ball_sample(PointRef::at(0.42), 0.05, 8);
  REQUIRE(near.size() == 1);
  CHECK(near[0].x() == doctest::Approx(0.44));
  CHECK(cloud.min_positive_gap() == doctest::Approx(0.02));
}

TEST_CASE("lattice_line with a positive grid") {
  auto ll = MetricSpace::lattice_line(0.25);
  CHECK(ll.min_positive_gap() == 0.25);
  auto pts = ll.ball_sample(PointRef::at(0.0), 0.6, 16);
  for (auto& p : pts) {
    CHECK(std::abs(p.x() - std::round(p.x() / 0.25) * 0.25) <= 1e-12);
    CHECK(std::abs(p.x()) < 0.6);
  }
  CHECK(!pts.empty());
}
