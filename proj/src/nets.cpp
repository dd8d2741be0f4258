#include "tvdw/nets.hpp"

#include <algorithm>
#include <cmath>

#include "tvdw/dyadic.hpp"

namespace tvdw {

namespace {

bool one_dimensional(SpaceKind k) {
  return k == SpaceKind::interval || k == SpaceKind::cantor || k == SpaceKind::lattice_line ||
         k == SpaceKind::point_cloud;
}

// Interval bounds as lattice indices when lo/hi sit on the lattice; empty
// otherwise (then the caller falls back to clamped arithmetic).
struct LatticeClip {
  bool bounded = false;
  bool aligned = false;
  double lo = 0, hi = 0;
};

LatticeClip clip_for(const MetricSpace& space, const ImplicitLattice& lat) {
  LatticeClip c;
  if (space.kind() != SpaceKind::interval) return c;
  c.bounded = true;
  c.lo = space.as_interval().lo;
  c.hi = space.as_interval().hi;
  auto on_lattice = [&](double v) {
    if (lat.base >= 2)
      return dyadic::lattice_frac_dist(v, static_cast<std::uint64_t>(lat.base), lat.level) == 0.0;
    double k = std::round(v / lat.scale);
    return std::abs(v - k * lat.scale) <= 1e-12 * lat.scale;
  };
  c.aligned = on_lattice(c.lo) && on_lattice(c.hi);
  return c;
}

double implicit_distance(const PointRef& x, const Net& net) {
  const auto& lat = *net.lattice;
  const LatticeClip clip = clip_for(*net.space, lat);
  const double v = x.c[0];
  if (!clip.bounded || (clip.aligned && v >= clip.lo && v <= clip.hi)) {
    if (lat.base >= 2)
      return lat.scale *
             dyadic::lattice_frac_dist(v, static_cast<std::uint64_t>(lat.base), lat.level);
    return std::abs(v - std::round(v / lat.scale) * lat.scale);
  }
  // Clamp the nearest lattice index into the interval.
  double k = std::round(v / lat.scale);
  double klo = std::ceil(clip.lo / lat.scale - 1e-9);
  double khi = std::floor(clip.hi / lat.scale + 1e-9);
  if (khi < klo) return kInf;  // no lattice point inside
  k = std::clamp(k, klo, khi);
  return std::abs(v - k * lat.scale);
}

PointRef implicit_nearest(const PointRef& x, const Net& net) {
  const auto& lat = *net.lattice;
  const LatticeClip clip = clip_for(*net.space, lat);
  double k = std::round(x.c[0] / lat.scale);
  if (clip.bounded) {
    double klo = std::ceil(clip.lo / lat.scale - 1e-9);
    double khi = std::floor(clip.hi / lat.scale + 1e-9);
    if (khi < klo) throw resolution_error("implicit lattice has no points inside the interval");
    k = std::clamp(k, klo, khi);
  }
  return PointRef::at(k * lat.scale);
}

}  // namespace

std::size_t Net::size() const { return implicit() ? 0 : points.size(); }

Net greedy_maximal_net(SpacePtr space, double epsilon, const std::vector<PointRef>& seed) {
  if (!(epsilon > 0)) throw domain_error("greedy_maximal_net: epsilon must be positive");
  if (!space) throw domain_error("greedy_maximal_net: null space");
  if (space->kind() == SpaceKind::lattice_line || space->continuum())
    throw resource_error(
        "greedy_maximal_net: space has no finite carrier; use an implicit hierarchy");

  for (std::size_t i = 0; i < seed.size(); ++i)
    for (std::size_t j = i + 1; j < seed.size(); ++j)
      if (space->distance(seed[i], seed[j]) < epsilon)
        throw domain_error("greedy_maximal_net: seed is not epsilon-separated");

  Net net;
  net.space = space;
  net.epsilon = epsilon;

  const bool oned = one_dimensional(space->kind()) && space->kind() != SpaceKind::point_cloud;
  if (oned) {
    // Sorted accepted coordinates; nearest accepted via binary search.
    std::vector<double> acc;
    for (const auto& s : seed) acc.push_back(s.c[0]);
    std::sort(acc.begin(), acc.end());
    auto near_enough = [&](double v) {
      auto it = std::lower_bound(acc.begin(), acc.end(), v);
      if (it != acc.end() && *it - v < epsilon) return true;
      if (it != acc.begin() && v - *(it - 1) < epsilon) return true;
      return false;
    };
    space->for_each_carrier([&](const PointRef& p) {
      if (!near_enough(p.c[0]))
        acc.insert(std::lower_bound(acc.begin(), acc.end(), p.c[0]), p.c[0]);
      return true;
    });
    net.points.reserve(acc.size());
    for (double v : acc) net.points.push_back(PointRef::at(v));
    return net;
  }

  std::vector<PointRef> acc = seed;
  space->for_each_carrier([&](const PointRef& p) {
    for (const auto& q : acc)
      if (space->distance(p, q) < epsilon) return true;
    acc.push_back(p);
    return true;
  });
  if (space->kind() == SpaceKind::finite_matrix)
    std::sort(acc.begin(), acc.end(),
              [](const PointRef& a, const PointRef& b) { return a.index < b.index; });
  else
    std::sort(acc.begin(), acc.end(), [](const PointRef& a, const PointRef& b) {
      if (a.c[0] != b.c[0]) return a.c[0] < b.c[0];
      if (a.c[1] != b.c[1]) return a.c[1] < b.c[1];
      return a.c[2] < b.c[2];
    });
  net.points = std::move(acc);
  return net;
}

SeparationReport check_separated(const Net& net) {
  SeparationReport rep;
  if (net.implicit()) return rep;  // spacing equals epsilon by construction
  const auto& pts = net.points;
  const auto& space = *net.space;
  if (pts.size() < 2) return rep;
  const bool oned = one_dimensional(space.kind()) && space.kind() != SpaceKind::point_cloud;
  if (oned) {
    for (std::size_t i = 1; i < pts.size(); ++i) {
      double d = pts[i].c[0] - pts[i - 1].c[0];
      if (d < net.epsilon) return {false, pts[i - 1], pts[i], d};
    }
    return rep;
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double d = space.distance(pts[i], pts[j]);
      if (d < net.epsilon) return {false, pts[i], pts[j], d};
    }
  return rep;
}

DensityReport check_dense(const Net& net, double /*probe_resolution*/) {
  DensityReport rep;
  if (net.implicit() && net.space->continuum()) {
    // Every real sits within scale/2 of the lattice.
    rep.dist = net.lattice->scale / 2;
    rep.probe = PointRef::at(net.lattice->scale / 2);
    rep.dense = rep.dist < net.epsilon;
    return rep;
  }
  double worst = -1.0;
  PointRef worst_probe;
  net.space->for_each_carrier([&](const PointRef& p) {
    double d = dist_to_net(p, net);
    if (d > worst) {
      worst = d;
      worst_probe = p;
    }
    return true;
  });
  rep.dist = worst < 0 ? 0 : worst;
  rep.probe = worst_probe;
  rep.dense = rep.dist < net.epsilon;
  return rep;
}

double dist_to_net(const PointRef& x, const Net& net) {
  if (net.implicit()) return implicit_distance(x, net);
  const auto& pts = net.points;
  if (pts.empty()) return kInf;
  const auto& space = *net.space;
  const bool oned = one_dimensional(space.kind()) && space.kind() != SpaceKind::point_cloud;
  if (oned) {
    auto it = std::lower_bound(pts.begin(), pts.end(), x.c[0],
                               [](const PointRef& p, double v) { return p.c[0] < v; });
    double best = kInf;
    if (it != pts.end()) best = std::min(best, std::abs(it->c[0] - x.c[0]));
    if (it != pts.begin()) best = std::min(best, std::abs((it - 1)->c[0] - x.c[0]));
    return best;
  }
  double best = kInf;
  for (const auto& p : pts) best = std::min(best, space.distance(x, p));
  return best;
}

PointRef nearest_net_point(const PointRef& x, const Net& net) {
  if (net.implicit()) return implicit_nearest(x, net);
  const auto& pts = net.points;
  if (pts.empty()) throw resolution_error("nearest_net_point: empty net");
  const auto& space = *net.space;
  const bool oned = one_dimensional(space.kind()) && space.kind() != SpaceKind::point_cloud;
  if (oned) {
    auto it = std::lower_bound(pts.begin(), pts.end(), x.c[0],
                               [](const PointRef& p, double v) { return p.c[0] < v; });
    const PointRef* best = nullptr;
    double bd = kInf;
    if (it != pts.end() && std::abs(it->c[0] - x.c[0]) < bd) {
      best = &*it;
      bd = std::abs(it->c[0] - x.c[0]);
    }
    if (it != pts.begin() && std::abs((it - 1)->c[0] - x.c[0]) < bd) best = &*(it - 1);
    return *best;
  }
  const PointRef* best = &pts.front();
  double bd = space.distance(x, pts.front());
  for (const auto& p : pts) {
    double d = space.distance(x, p);
    if (d < bd) {
      bd = d;
      best = &p;
    }
  }
  return *best;
}

Net NetHierarchy::net_at(int n) const {
  if (n < 0) throw domain_error("net_at: negative level");
  if (implicit_) {
    Net net;
    net.space = space;
    net.epsilon = std::pow(static_cast<double>(base_), -n);
    net.lattice = ImplicitLattice{net.epsilon, base_, n};
    return net;
  }
  if (n >= static_cast<int>(levels_.size()))
    throw resource_error(
        "net_at: hierarchy depth exceeded; rebuild deeper or use an implicit lattice hierarchy");
  return levels_[static_cast<std::size_t>(n)];
}

NetHierarchy build_hierarchy(SpacePtr space, double a, int depth, bool monotone) {
  if (!(a > 1)) throw domain_error("build_hierarchy: a must be > 1");
  if (depth < 0) throw domain_error("build_hierarchy: negative depth");
  if (!space) throw domain_error("build_hierarchy: null space");
  if (space->kind() == SpaceKind::lattice_line) {
    double ai;
    if (a >= 2 && std::modf(a, &ai) == 0.0)
      return implicit_hierarchy(space, static_cast<std::int64_t>(a));
    throw domain_error("build_hierarchy: lattice_line requires an integer a >= 2");
  }
  if (std::pow(a, -depth) == 0.0)
    throw resource_error("build_hierarchy: scale underflows at the requested depth");

  NetHierarchy h;
  h.space = space;
  h.a = a;
  h.monotone = monotone;
  std::vector<PointRef> seed;
  for (int n = 0; n <= depth; ++n) {
    const double eps = std::pow(a, -n);
    Net net = greedy_maximal_net(space, eps, monotone ? seed : std::vector<PointRef>{});
    if (monotone) seed = net.points;
    h.levels_.push_back(std::move(net));
  }
  return h;
}

NetHierarchy implicit_hierarchy(SpacePtr space, std::int64_t a) {
  if (a < 2) throw domain_error("implicit_hierarchy: a must be an integer >= 2");
  if (!space) throw domain_error("implicit_hierarchy: null space");
  if (space->kind() != SpaceKind::interval && space->kind() != SpaceKind::lattice_line)
    throw domain_error("implicit_hierarchy: only interval and lattice_line spaces");
  NetHierarchy h;
  h.space = space;
  h.a = static_cast<double>(a);
  h.monotone = true;  // a^-n Z is nested for integer a
  h.implicit_ = true;
  h.base_ = a;
  return h;
}

}  // namespace tvdw
