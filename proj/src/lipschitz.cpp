#include "tvdw/lipschitz.hpp"

#include <algorithm>
#include <cmath>

namespace tvdw::lip {

namespace {

Estimate sup_over_points(const RealFn& f, const PointRef& x, double r,
                         const std::vector<PointRef>& pts, Functional tag) {
  Estimate e;
  e.functional = tag;
  e.point = x;
  e.radius = r;
  const double fx = f(x);
  for (const auto& u : pts) {
    double v = std::abs(f(u) - fx) / r;
    if (v > e.value) {
      e.value = v;
      e.witness = u;
      e.has_witness = true;
    }
  }
  return e;
}

}  // namespace

std::string to_string(Functional f) {
  switch (f) {
    case Functional::lip_r_ball: return "Lip^r";
    case Functional::lip_r_closed: return "Lip^r_+";
    case Functional::lip_big_r: return "Lip_r";
    case Functional::lip_small_r: return "lip_r";
    case Functional::lip_limsup: return "Lip";
    case Functional::lip_liminf: return "lip";
    case Functional::llip_local: return "LLip";
  }
  return "?";
}

Schedule Schedule::geometric(double r0, double ratio, int count) {
  if (!(r0 > 0) || !(ratio > 0) || !(ratio < 1) || count < 1)
    throw domain_error("Schedule::geometric: need r0 > 0, 0 < ratio < 1, count >= 1");
  Schedule s;
  s.radii.reserve(static_cast<std::size_t>(count));
  double r = r0;
  for (int i = 0; i < count; ++i) {
    s.radii.push_back(r);
    r *= ratio;
  }
  return s;
}

Schedule Schedule::for_tw(double a, double r0, int count) {
  return geometric(r0, 1.0 / a, count);
}

Estimate lip_r_ball(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                    int budget) {
  if (!(r > 0)) throw domain_error("lip_r_ball: radius must be positive");
  return sup_over_points(f, x, r, space.ball_sample(x, r, budget), Functional::lip_r_ball);
}

Estimate lip_r_closed(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                      int budget) {
  if (!(r > 0)) throw domain_error("lip_r_closed: radius must be positive");
  return sup_over_points(f, x, r, space.ball_sample_closed(x, r, budget),
                         Functional::lip_r_closed);
}

Estimate lip_big_r(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                   std::span<const double> rho_grid, int budget) {
  Estimate e;
  e.functional = Functional::lip_big_r;
  e.point = x;
  e.radius = r;
  bool any = false;
  for (double rho : rho_grid) {
    if (!(rho > 0) || rho >= r) continue;
    any = true;
    Estimate sub = lip_r_ball(space, f, x, rho, budget);
    if (sub.value >= e.value) {
      e.value = sub.value;
      e.witness = sub.witness;
      e.has_witness = sub.has_witness;
    }
  }
  if (!any) throw domain_error("lip_big_r: empty rho grid inside (0, r)");
  return e;
}

Estimate lip_small_r(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                     std::span<const double> rho_grid, int budget) {
  Estimate e;
  e.functional = Functional::lip_small_r;
  e.point = x;
  e.radius = r;
  e.bound_side = Estimate::Bound::two_sided;
  e.value = kInf;
  bool any = false;
  for (double rho : rho_grid) {
    if (!(rho > 0) || rho >= r) continue;
    any = true;
    Estimate sub = lip_r_ball(space, f, x, rho, budget);
    if (sub.value <= e.value) {
      e.value = sub.value;
      e.witness = sub.witness;
      e.has_witness = sub.has_witness;
    }
  }
  if (!any) throw domain_error("lip_small_r: empty rho grid inside (0, r)");
  return e;
}

namespace {

Estimate pairwise_over(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                       std::vector<PointRef> pool) {
  pool.push_back(x);
  Estimate e;
  e.functional = Functional::llip_local;
  e.point = x;
  e.radius = r;
  std::vector<double> fv(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) fv[i] = f(pool[i]);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      double d = space.distance(pool[i], pool[j]);
      if (d <= 0) continue;
      double v = std::abs(fv[i] - fv[j]) / d;
      if (v > e.value) {
        e.value = v;
        e.witness = pool[i];
        e.witness2 = pool[j];
        e.has_pair = true;
      }
    }
  return e;
}

}  // namespace

Estimate llip_r_pairwise(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                         int budget) {
  if (!(r > 0)) throw domain_error("llip_r_pairwise: radius must be positive");
  if (budget > 4096) throw domain_error("llip_r_pairwise: budget too large for pairwise scan");
  return pairwise_over(space, f, x, r, space.ball_sample(x, r, budget));
}

Estimate llip_r_pairwise(const MetricSpace& space, const RealFn& f, const PointRef& x, double r,
                         std::span<const double> rho_grid, int budget) {
  if (!(r > 0)) throw domain_error("llip_r_pairwise: radius must be positive");
  std::vector<PointRef> pool = space.ball_sample(x, r, budget);
  for (double rho : rho_grid) {
    if (!(rho > 0) || rho >= r) continue;
    auto sub = space.ball_sample(x, rho, budget);
    pool.insert(pool.end(), sub.begin(), sub.end());
  }
  std::sort(pool.begin(), pool.end(), [](const PointRef& a, const PointRef& b) {
    if (a.index != b.index) return a.index < b.index;
    if (a.c[0] != b.c[0]) return a.c[0] < b.c[0];
    if (a.c[1] != b.c[1]) return a.c[1] < b.c[1];
    return a.c[2] < b.c[2];
  });
  pool.erase(std::unique(pool.begin(), pool.end(),
                         [](const PointRef& a, const PointRef& b) {
                           return a.index == b.index && a.c == b.c;
                         }),
             pool.end());
  if (pool.size() > 4096) pool.resize(4096);
  return pairwise_over(space, f, x, r, std::move(pool));
}

bool divergence_flag(std::span<const double> values, double threshold) {
  if (values.empty()) return false;
  const double last = values.back();
  double tail_max = 0;
  const std::size_t k = values.size() >= 3 ? values.size() - 3 : 0;
  for (std::size_t i = k; i < values.size(); ++i) tail_max = std::max(tail_max, values[i]);
  return last > threshold && last >= 0.5 * tail_max;
}

namespace {

std::vector<double> per_radius_values(const MetricSpace& space, const RealFn& f,
                                      const PointRef& x, const Schedule& schedule, int budget,
                                      std::vector<Estimate>* subs) {
  if (schedule.radii.empty()) throw domain_error("estimate: empty schedule");
  std::vector<double> v;
  v.reserve(schedule.radii.size());
  for (double r : schedule.radii) {
    Estimate e = lip_r_ball(space, f, x, r, budget);
    v.push_back(e.value);
    if (subs) subs->push_back(std::move(e));
  }
  return v;
}

}  // namespace

Estimate estimate_Lip(const MetricSpace& space, const RealFn& f, const PointRef& x,
                      const Schedule& schedule, int budget, double threshold) {
  std::vector<Estimate> subs;
  const auto v = per_radius_values(space, f, x, schedule, budget, &subs);
  Estimate e;
  e.functional = Functional::lip_limsup;
  e.point = x;
  e.r_min = schedule.radii.back();
  e.r_max = schedule.radii.front();
  e.threshold = threshold;
  // inf over r of sup over rho < r; with nested grids this reduces to the
  // value at the smallest radius.
  e.value = v.back();
  e.witness = subs.back().witness;
  e.has_witness = subs.back().has_witness;
  e.diverged = divergence_flag(v, threshold);
  return e;
}

Estimate estimate_lip(const MetricSpace& space, const RealFn& f, const PointRef& x,
                      const Schedule& schedule, int budget, double threshold) {
  std::vector<Estimate> subs;
  const auto v = per_radius_values(space, f, x, schedule, budget, &subs);
  Estimate e;
  e.functional = Functional::lip_liminf;
  e.point = x;
  e.r_min = schedule.radii.back();
  e.r_max = schedule.radii.front();
  e.threshold = threshold;
  // Running minimum over the tail half of the schedule.
  const std::size_t start = v.size() / 2;
  e.value = kInf;
  for (std::size_t i = start; i < v.size(); ++i) {
    if (v[i] <= e.value) {
      e.value = v[i];
      e.witness = subs[i].witness;
      e.has_witness = subs[i].has_witness;
    }
  }
  e.diverged = divergence_flag(v, threshold);
  return e;
}

Estimate estimate_llip(const MetricSpace& space, const RealFn& f, const PointRef& x,
                       const Schedule& schedule, int budget, double threshold) {
  if (schedule.radii.empty()) throw domain_error("estimate_llip: empty schedule");
  std::vector<double> v;
  v.reserve(schedule.radii.size());
  Estimate best;
  for (std::size_t i = 0; i < schedule.radii.size(); ++i) {
    const double r = schedule.radii[i];
    std::vector<double> sub(schedule.radii.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                            schedule.radii.end());
    Estimate e = llip_r_pairwise(space, f, x, r, sub, budget);
    v.push_back(e.value);
    best = std::move(e);  // pairwise sup is nondecreasing in r; keep smallest radius
  }
  best.functional = Functional::llip_local;
  best.r_min = schedule.radii.back();
  best.r_max = schedule.radii.front();
  best.threshold = threshold;
  best.diverged = divergence_flag(v, threshold);
  return best;
}

}  // namespace tvdw::lip
