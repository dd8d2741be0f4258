#include "tvdw/porosity.hpp"

#include <algorithm>
#include <cmath>

#include "tvdw/lipschitz.hpp"

namespace tvdw::por {

namespace {

double sup_ratio(const MetricSpace& space, const PointRef& x, double r) {
  return space.ball_sup_distance(x, r) / r;
}

// Largest empty open shell (t, t+h) with t+h <= r, relative to r. The
// inner gap counts with t -> 0+ and the outer gap ends at r.
double max_gap_ratio(const MetricSpace& space, const PointRef& x, double r) {
  if (space.continuum()) {
    // Distances fill [0, sup] with no interior gaps; only the truncated
    // outer shell can be empty.
    double sup = space.ball_sup_distance(x, r);
    return std::max(0.0, (r - sup) / r);
  }
  auto d = space.ball_distances(x, r, 200000);
  if (d.empty()) return 1.0;
  double best = d.front();  // shell (t, d_1), t -> 0+
  for (std::size_t i = 1; i < d.size(); ++i) best = std::max(best, d[i] - d[i - 1]);
  best = std::max(best, r - d.back());
  return best / r;
}

std::size_t tail_start(std::size_t n) { return n / 2; }

}  // namespace

std::vector<double> default_r_grid(const MetricSpace& space, const PointRef& x, double rmin,
                                   double rmax) {
  std::vector<double> grid;
  if (space.kind() == SpaceKind::cantor) {
    const int level = space.as_cantor().level;
    // Scales 2*3^-k shaved by 1e-9 so the extremal point at distance
    // exactly 2*3^-k stays outside the open ball; eight subdivisions
    // per scale in between.
    if (rmax <= 0) rmax = 2.0 / 3.0;
    if (rmin <= 0) rmin = 2.0 * std::pow(3.0, -(level - 1)) * (1 - 1e-9);
    const double step = std::pow(3.0, -1.0 / 8.0);
    for (int k = 1; k < 8 * (level + 2); ++k) {
      double r = (2.0 / 3.0) * (1 - 1e-9) * std::pow(step, k - 1);
      if (r > rmax) continue;
      if (r < rmin) break;
      grid.push_back(r);
    }
    return grid;
  }
  const double res = space.resolution();
  if (rmax <= 0) {
    double diam = space.diameter();
    rmax = std::isfinite(diam) ? diam / 4 : 1.0;
  }
  if (rmin <= 0) {
    rmin = rmax * 1e-6;
    if (res > 0) rmin = std::max(rmin, 200 * res);
    double gap = space.min_positive_gap();
    if (std::isfinite(gap) && gap > 0 && res <= 0) rmin = std::max(rmin, 2 * gap);
  }
  if (rmin >= rmax) rmin = rmax / 8;
  const double ratio = 0.98;
  for (double r = rmax; r >= rmin; r *= ratio) grid.push_back(r);
  (void)x;
  return grid;
}

HermeticityReport hermeticity_at(const MetricSpace& space, const PointRef& x,
                                 std::span<const double> r_grid, int budget) {
  HermeticityReport rep;
  rep.point = x;
  rep.r_grid.assign(r_grid.begin(), r_grid.end());
  if (space.isolated_at_scale(x)) {
    rep.isolated = true;
    rep.ratio_per_r.assign(r_grid.size(), 0.0);
    rep.H_estimate = 0.0;
    rep.p_s_estimate = 1.0;
    return rep;
  }
  if (r_grid.empty()) throw domain_error("hermeticity_at: empty radius grid");
  rep.ratio_per_r.reserve(r_grid.size());
  for (double r : r_grid) rep.ratio_per_r.push_back(sup_ratio(space, x, r));
  double h = kInf;
  for (std::size_t i = tail_start(r_grid.size()); i < r_grid.size(); ++i)
    h = std::min(h, rep.ratio_per_r[i]);
  rep.H_estimate = std::min(h, 1.0);
  rep.p_s_estimate = shell_porosity_at(space, x, r_grid, budget);
  for (double lambda : {0.25, 0.5, 0.75}) {
    if (lambda < rep.H_estimate)
      rep.RH_table.emplace_back(lambda,
                                radius_of_hermeticity(space, x, lambda, r_grid, budget));
  }
  return rep;
}

double shell_porosity_at(const MetricSpace& space, const PointRef& x,
                         std::span<const double> r_grid, int /*budget*/) {
  if (space.isolated_at_scale(x)) return 1.0;
  if (r_grid.empty()) throw domain_error("shell_porosity_at: empty radius grid");
  double p = 0;
  for (std::size_t i = tail_start(r_grid.size()); i < r_grid.size(); ++i)
    p = std::max(p, max_gap_ratio(space, x, r_grid[i]));
  return std::min(p, 1.0);
}

double radius_of_hermeticity(const MetricSpace& space, const PointRef& x, double lambda,
                             std::span<const double> r_grid, int budget) {
  if (r_grid.empty()) throw domain_error("radius_of_hermeticity: empty radius grid");
  if (!(lambda > 0)) throw domain_error("radius_of_hermeticity: lambda must be positive");

  double h = kInf;
  for (std::size_t i = tail_start(r_grid.size()); i < r_grid.size(); ++i)
    h = std::min(h, sup_ratio(space, x, r_grid[i]));
  h = std::min(h, 1.0);
  if (!(lambda < h))
    throw domain_error("radius_of_hermeticity: lambda >= hermeticity estimate at x");

  // lip_r d_x(x) = inf over rho < r of the sampled Lip^rho of u -> |u-x|.
  // Each Lip^rho is computed once; lip_r over the nested grids is the
  // suffix minimum.
  const lip::RealFn dx = [&space, &x](const PointRef& u) { return space.distance(u, x); };
  std::vector<double> v(r_grid.size());
  for (std::size_t i = 0; i < r_grid.size(); ++i)
    v[i] = lip::lip_r_ball(space, dx, x, r_grid[i], budget).value;
  std::vector<double> suffix_min(r_grid.size() + 1, kInf);
  for (std::size_t i = r_grid.size(); i-- > 0;)
    suffix_min[i] = std::min(v[i], suffix_min[i + 1]);
  // lip_{r_i} uses rho strictly below r_i, i.e. grid entries after i.
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    double lip_r = i + 1 < r_grid.size() ? suffix_min[i + 1] : v[i];
    if (lip_r > lambda) return r_grid[i];
  }
  return 0.0;
}

SpaceHermeticity hermeticity_of_space(const MetricSpace& space,
                                      std::span<const PointRef> samples,
                                      std::span<const double> r_grid, int budget) {
  SpaceHermeticity out;
  out.value = kInf;
  for (const auto& x : samples) {
    if (space.isolated_at_scale(x)) continue;
    ++out.tested;
    auto rep = hermeticity_at(space, x, r_grid, budget);
    out.value = std::min(out.value, rep.H_estimate);
  }
  if (out.tested == 0) {
    out.vacuous = true;
    out.value = kInf;
  }
  return out;
}

}  // namespace tvdw::por
