#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tvdw/space.hpp"

namespace tvdw::lip {

using RealFn = std::function<double(const PointRef&)>;

enum class Functional {
  lip_r_ball,    // sup over B(x,r) of |f(u)-f(x)|/r
  lip_r_closed,  // same over B[x,r]
  lip_big_r,     // sup over rho < r of lip_r_ball
  lip_small_r,   // inf over rho < r of lip_r_ball
  lip_limsup,    // limsup_{r->0+} proxy
  lip_liminf,    // liminf_{r->0+} proxy
  llip_local,    // pairwise local Lipschitz constant
};

std::string to_string(Functional f);

// A sampled estimate of one Lipschitz functional at one point. Finite
// sampling yields lower bounds of the underlying suprema; sup over an
// empty sampled ball is 0.
struct Estimate {
  Functional functional = Functional::lip_r_ball;
  PointRef point;
  double radius = 0;               // single radius, or
  double r_min = 0, r_max = 0;     // radius window for limit proxies
  double value = 0;
  bool diverged = false;           // exceeded `threshold` and not collapsing
  double threshold = 0;
  enum class Bound { lower, upper, two_sided } bound_side = Bound::lower;
  PointRef witness;
  PointRef witness2;  // second point of a pairwise witness
  bool has_witness = false;
  bool has_pair = false;
};

// Strictly descending radius schedule.
struct Schedule {
  std::vector<double> radii;
  static Schedule geometric(double r0, double ratio, int count);
  // Ratio 1/a, matching the natural scales of a type-(a,b) function.
  static Schedule for_tw(double a, double r0, int count);
};

Estimate lip_r_ball(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                    int budget);
Estimate lip_r_closed(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                      int budget);

// sup / inf of lip_r_ball over an explicit rho grid inside (0, r). Nested
// grids across r keep the sampled monotonicity in r exact.
Estimate lip_big_r(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                   std::span<const double> rho_grid, int budget);
Estimate lip_small_r(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                     std::span<const double> rho_grid, int budget);

// Pairwise sup over sampled points of B(x,r); the pooled overload unions
// the per-rho samples (plus x itself) so it dominates every lip_r_ball
// estimate taken on the same grid.
Estimate llip_r_pairwise(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                         int budget);
Estimate llip_r_pairwise(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                         std::span<const double> rho_grid, int budget);

// Limit proxies along a descending schedule. Values are reported as
// estimates with a bound side, never as exact limits; blow-up is flagged
// when the tail exceeds `threshold` without collapsing.
Estimate estimate_Lip(const MetricSpace& space, const RealFn& f, const PointRef& x,
                      const Schedule& schedule, int budget, double threshold = 1e3);
Estimate estimate_lip(const MetricSpace& space, const RealFn& f, const PointRef& x,
                      const Schedule& schedule, int budget, double threshold = 1e3);
Estimate estimate_llip(const MetricSpace& space, const RealFn& f, const PointRef& x,
                       const Schedule& schedule, int budget, double threshold = 1e3);

// Shared divergence rule for per-radius value sequences (radii descending):
// the value at the smallest radius exceeds the threshold and is at least
// half the maximum over the three smallest radii.
bool divergence_flag(std::span<const double> values, double threshold);

}  // namespace tvdw::lip
