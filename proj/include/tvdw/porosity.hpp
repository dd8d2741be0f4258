#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tvdw/space.hpp"

namespace tvdw::por {

// Hermeticity H(X,x) = liminf_{r->0+} sup{|u-x| : u in B(x,r)} / r and the
// dual shell porosity p^s(X,x) = 1 - H(X,x), sampled over a radius grid.
// liminf / limsup are proxied by running extrema over the smaller-radius
// half of the grid, matching the conventions of the derivative estimators.
struct HermeticityReport {
  PointRef point;
  bool isolated = false;
  std::vector<double> r_grid;       // descending
  std::vector<double> ratio_per_r;  // each in [0,1]
  double H_estimate = 0;
  double p_s_estimate = 0;
  std::vector<std::pair<double, double>> RH_table;  // (lambda, RH_lambda)
};

// Radius grid for hermeticity scans. Cantor carriers get a base-3 grid with
// eight subdivisions per scale that lands just below the extremal radii
// 2*3^-k; other kinds get a geometric grid. rmin/rmax of 0 pick defaults
// that stay above the discreteness scale of the materialization.
std::vector<double> default_r_grid(const MetricSpace& space, const PointRef& x, double rmin = 0,
                                   double rmax = 0);

HermeticityReport hermeticity_at(const MetricSpace& space, const PointRef& x,
                                 std::span<const double> r_grid, int budget = 512);

// Largest grid radius r with lip_r d_x(x) > lambda (grid value, never
// interpolated). Throws domain_error when lambda >= H_estimate.
double radius_of_hermeticity(const MetricSpace& space, const PointRef& x, double lambda,
                             std::span<const double> r_grid, int budget = 512);

// Direct estimate via empty-shell scanning; must match 1 - H_estimate
// within grid tolerance.
double shell_porosity_at(const MetricSpace& space, const PointRef& x,
                         std::span<const double> r_grid, int budget = 512);

struct SpaceHermeticity {
  double value = 0;
  bool vacuous = false;  // no non-isolated sample points
  int tested = 0;
};

// min over non-isolated samples; an upper estimate of H(X).
SpaceHermeticity hermeticity_of_space(const MetricSpace& space,
                                      std::span<const PointRef> samples,
                                      std::span<const double> r_grid, int budget = 512);

}  // namespace tvdw::por
