#include "tvdw/space.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace tvdw {

namespace {

double sq(double v) { return v * v; }

double euclid(const PointRef& a, const PointRef& b) {
  return std::sqrt(sq(a.c[0] - b.c[0]) + sq(a.c[1] - b.c[1]) + sq(a.c[2] - b.c[2]));
}

// Canonical order for coordinate points: lexicographic ascending.
bool coord_less(const PointRef& a, const PointRef& b) {
  if (a.c[0] != b.c[0]) return a.c[0] < b.c[0];
  if (a.c[1] != b.c[1]) return a.c[1] < b.c[1];
  return a.c[2] < b.c[2];
}

}  // namespace

std::string to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::interval: return "interval";
    case SpaceKind::box: return "box";
    case SpaceKind::point_cloud: return "point_cloud";
    case SpaceKind::finite_matrix: return "finite_matrix";
    case SpaceKind::cantor: return "cantor";
    case SpaceKind::lattice_line: return "lattice_line";
  }
  return "?";
}

MetricSpace MetricSpace::interval(double lo, double hi, double resolution) {
  if (!(hi > lo)) throw domain_error("interval: hi < lo");
  if (resolution < 0) throw domain_error("interval: resolution must be >= 0 (0 = continuum)");
  if (resolution > 0 && (hi - lo) / resolution > 9e15)
    throw domain_error("interval: resolution too fine for an indexed grid; use 0 for continuum sampling");
  MetricSpace s;
  s.kind_ = SpaceKind::interval;
  s.data_ = IntervalData{lo, hi, resolution};
  return s;
}

MetricSpace MetricSpace::box(const std::vector<double>& lo, const std::vector<double>& hi,
                             double resolution) {
  if (lo.size() != hi.size() || lo.empty() || lo.size() > 3)
    throw domain_error("box: dimension must be 1..3 and lo/hi sizes must match");
  if (!(resolution > 0)) throw domain_error("box: resolution must be positive");
  BoxData d{};
  d.dim = static_cast<int>(lo.size());
  d.res = resolution;
  for (int i = 0; i < d.dim; ++i) {
    if (!(hi[i] > lo[i])) throw domain_error("box: hi < lo");
    d.lo[i] = lo[i];
    d.hi[i] = hi[i];
  }
  MetricSpace s;
  s.kind_ = SpaceKind::box;
  s.data_ = d;
  return s;
}

MetricSpace MetricSpace::point_cloud(std::vector<PointRef> pts, double resolution) {
  if (pts.empty()) throw domain_error("point_cloud: needs at least one point");
  std::sort(pts.begin(), pts.end(), coord_less);
  MetricSpace s;
  s.kind_ = SpaceKind::point_cloud;
  s.data_ = CloudData{std::move(pts), resolution};
  return s;
}

MetricSpace MetricSpace::finite_matrix(std::vector<std::vector<double>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw domain_error("finite_matrix: empty table");
  MatrixData d;
  d.n = n;
  d.d.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw domain_error("finite_matrix: table is not square");
    for (std::size_t j = 0; j < n; ++j) d.d[i * n + j] = table[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d.d[i * n + i] != 0.0) throw domain_error("finite_matrix: nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (d.d[i * n + j] < 0) throw domain_error("finite_matrix: negative entry");
      if (d.d[i * n + j] != d.d[j * n + i]) throw domain_error("finite_matrix: not symmetric");
      if (i != j && d.d[i * n + j] == 0.0)
        throw domain_error("finite_matrix: zero distance off the diagonal");
    }
  }
  MetricSpace s;
  s.kind_ = SpaceKind::finite_matrix;
  s.data_ = std::move(d);
  return s;
}

MetricSpace MetricSpace::cantor(int level) {
  if (level < 0 || level > 20) throw domain_error("cantor: level must be in 0..20");
  // Both endpoints of every level-k interval of the ternary construction.
  std::vector<double> lefts{0.0};
  double len = 1.0;
  for (int i = 0; i < level; ++i) {
    len /= 3.0;
    std::vector<double> next;
    next.reserve(lefts.size() * 2);
    for (double l : lefts) {
      next.push_back(l);
      next.push_back(l + 2.0 * len);
    }
    lefts.swap(next);
  }
  std::vector<double> pts;
  pts.reserve(lefts.size() * 2);
  for (double l : lefts) {
    pts.push_back(l);
    pts.push_back(l + len);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  CantorData d{level, std::move(pts)};
  MetricSpace s;
  s.kind_ = SpaceKind::cantor;
  s.data_ = std::move(d);
  return s;
}

MetricSpace MetricSpace::lattice_line(double resolution) {
  if (resolution < 0) throw domain_error("lattice_line: resolution must be >= 0");
  MetricSpace s;
  s.kind_ = SpaceKind::lattice_line;
  s.data_ = LatticeData{resolution};
  return s;
}

double MetricSpace::resolution() const {
  switch (kind_) {
    case SpaceKind::interval: return as_interval().res;
    case SpaceKind::box: return as_box().res;
    case SpaceKind::point_cloud: return as_cloud().res;
    case SpaceKind::finite_matrix: return 0.0;
    case SpaceKind::cantor: return std::pow(3.0, -as_cantor().level);
    case SpaceKind::lattice_line: return as_lattice().res;
  }
  return 0.0;
}

int MetricSpace::dim() const { return kind_ == SpaceKind::box ? as_box().dim : 1; }

void MetricSpace::check_point(const PointRef& p) const {
  if (kind_ == SpaceKind::finite_matrix) {
    if (p.index < 0 || static_cast<std::size_t>(p.index) >= as_matrix().n)
      throw domain_error("point index out of range");
    return;
  }
  if (!contains(p)) throw domain_error("point outside the space carrier");
}

bool MetricSpace::contains(const PointRef& p) const {
  switch (kind_) {
    case SpaceKind::interval: {
      const auto& d = as_interval();
      const double tol = d.res > 0 ? d.res : 0.0;
      return p.c[0] >= d.lo - tol && p.c[0] <= d.hi + tol;
    }
    case SpaceKind::box: {
      const auto& d = as_box();
      for (int i = 0; i < d.dim; ++i)
        if (p.c[i] < d.lo[i] - d.res || p.c[i] > d.hi[i] + d.res) return false;
      return true;
    }
    case SpaceKind::point_cloud: {
      const double tol = std::max(as_cloud().res, 1e-12);
      for (const auto& q : as_cloud().pts)
        if (euclid(p, q) <= tol) return true;
      return false;
    }
    case SpaceKind::finite_matrix:
      return p.index >= 0 && static_cast<std::size_t>(p.index) < as_matrix().n;
    case SpaceKind::cantor: {
      const auto& e = as_cantor().endpoints;
      auto it = std::lower_bound(e.begin(), e.end(), p.c[0] - 1e-12);
      return it != e.end() && std::abs(*it - p.c[0]) <= 1e-12;
    }
    case SpaceKind::lattice_line:
      return true;
  }
  return false;
}

double MetricSpace::distance(const PointRef& u, const PointRef& v) const {
  check_point(u);
  check_point(v);
  switch (kind_) {
    case SpaceKind::interval:
    case SpaceKind::cantor:
    case SpaceKind::lattice_line:
      return std::abs(u.c[0] - v.c[0]);
    case SpaceKind::box: {
      double s = 0;
      for (int i = 0; i < as_box().dim; ++i) s += sq(u.c[i] - v.c[i]);
      return std::sqrt(s);
    }
    case SpaceKind::point_cloud:
      return euclid(u, v);
    case SpaceKind::finite_matrix:
      return as_matrix().d[static_cast<std::size_t>(u.index) * as_matrix().n +
                           static_cast<std::size_t>(v.index)];
  }
  return 0.0;
}

PointRef MetricSpace::snap(const PointRef& p) const {
  switch (kind_) {
    case SpaceKind::interval: {
      const auto& d = as_interval();
      if (d.res <= 0) return PointRef::at(std::clamp(p.c[0], d.lo, d.hi));
      double jmax = std::floor((d.hi - d.lo) / d.res + 0.5);
      double j = std::clamp(std::round((p.c[0] - d.lo) / d.res), 0.0, jmax);
      return PointRef::at(d.lo + (d.hi - d.lo) * (j / jmax));
    }
    case SpaceKind::box: {
      const auto& d = as_box();
      PointRef q = p;
      for (int i = 0; i < d.dim; ++i) {
        double j = std::round((p.c[i] - d.lo[i]) / d.res);
        double jmax = std::floor((d.hi[i] - d.lo[i]) / d.res + 0.5);
        q.c[i] = d.lo[i] + std::clamp(j, 0.0, jmax) * d.res;
      }
      return q;
    }
    case SpaceKind::lattice_line: {
      const auto& d = as_lattice();
      if (d.res <= 0) return p;
      return PointRef::at(std::round(p.c[0] / d.res) * d.res);
    }
    case SpaceKind::cantor: {
      const auto& e = as_cantor().endpoints;
      auto it = std::lower_bound(e.begin(), e.end(), p.c[0]);
      if (it == e.end()) return PointRef::at(e.back());
      if (it == e.begin()) return PointRef::at(e.front());
      double above = *it, below = *(it - 1);
      return PointRef::at(p.c[0] - below <= above - p.c[0] ? below : above);
    }
    default:
      return p;
  }
}

bool MetricSpace::is_grid_backed() const {
  return kind_ == SpaceKind::interval || kind_ == SpaceKind::box ||
         kind_ == SpaceKind::lattice_line;
}

std::size_t MetricSpace::carrier_size() const {
  switch (kind_) {
    case SpaceKind::interval: {
      const auto& d = as_interval();
      if (d.res <= 0) throw resource_error("continuum interval has no finite carrier");
      return static_cast<std::size_t>(std::floor((d.hi - d.lo) / d.res + 0.5)) + 1;
    }
    case SpaceKind::box: {
      const auto& d = as_box();
      std::size_t n = 1;
      for (int i = 0; i < d.dim; ++i)
        n *= static_cast<std::size_t>(std::floor((d.hi[i] - d.lo[i]) / d.res + 0.5)) + 1;
      return n;
    }
    case SpaceKind::point_cloud: return as_cloud().pts.size();
    case SpaceKind::finite_matrix: return as_matrix().n;
    case SpaceKind::cantor: return as_cantor().endpoints.size();
    case SpaceKind::lattice_line:
      throw resource_error("lattice_line has no finite carrier");
  }
  return 0;
}

void MetricSpace::for_each_carrier(const std::function<bool(const PointRef&)>& fn) const {
  switch (kind_) {
    case SpaceKind::interval: {
      const auto& d = as_interval();
      if (d.res <= 0) throw resource_error("continuum interval has no finite carrier");
      const std::size_t n = carrier_size();
      const double segs = static_cast<double>(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        double x = d.lo + (d.hi - d.lo) * (static_cast<double>(j) / segs);
        if (x > d.hi) x = d.hi;
        if (!fn(PointRef::at(x))) return;
      }
      return;
    }
    case SpaceKind::box: {
      const auto& d = as_box();
      std::array<std::size_t, 3> n{1, 1, 1};
      for (int i = 0; i < d.dim; ++i)
        n[i] = static_cast<std::size_t>(std::floor((d.hi[i] - d.lo[i]) / d.res + 0.5)) + 1;
      for (std::size_t i = 0; i < n[0]; ++i)
        for (std::size_t j = 0; j < n[1]; ++j)
          for (std::size_t k = 0; k < n[2]; ++k) {
            PointRef p = PointRef::at(d.lo[0] + i * d.res,
                                      d.dim > 1 ? d.lo[1] + j * d.res : 0.0,
                                      d.dim > 2 ? d.lo[2] + k * d.res : 0.0);
            if (!fn(p)) return;
          }
      return;
    }
    case SpaceKind::point_cloud:
      for (const auto& p : as_cloud().pts)
        if (!fn(p)) return;
      return;
    case SpaceKind::finite_matrix:
      for (std::size_t i = 0; i < as_matrix().n; ++i)
        if (!fn(PointRef::row(static_cast<std::int64_t>(i)))) return;
      return;
    case SpaceKind::cantor:
      for (double e : as_cantor().endpoints)
        if (!fn(PointRef::at(e))) return;
      return;
    case SpaceKind::lattice_line:
      throw resource_error("lattice_line has no finite carrier");
  }
}

double MetricSpace::min_positive_gap() const {
  switch (kind_) {
    case SpaceKind::interval: return as_interval().res;
    case SpaceKind::box: return as_box().res;
    case SpaceKind::lattice_line: return as_lattice().res;
    case SpaceKind::cantor: {
      const auto& e = as_cantor().endpoints;
      if (e.size() < 2) return kInf;
      double m = kInf;
      for (std::size_t i = 1; i < e.size(); ++i) m = std::min(m, e[i] - e[i - 1]);
      return m;
    }
    case SpaceKind::point_cloud: {
      const auto& pts = as_cloud().pts;
      if (pts.size() < 2) return kInf;
      double m = kInf;
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          double d = distance(pts[i], pts[j]);
          if (d > 0) m = std::min(m, d);
        }
      return m;
    }
    case SpaceKind::finite_matrix: {
      const auto& d = as_matrix();
      if (d.n < 2) return kInf;
      double m = kInf;
      for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t j = i + 1; j < d.n; ++j)
          if (d.d[i * d.n + j] > 0) m = std::min(m, d.d[i * d.n + j]);
      return m;
    }
  }
  return kInf;
}

double MetricSpace::nearest_carrier_distance(const PointRef& x) const {
  switch (kind_) {
    case SpaceKind::interval: {
      const auto& d = as_interval();
      if (d.res <= 0) return 0.0;
      if (d.hi - d.lo < d.res) return kInf;
      return d.res;
    }
    case SpaceKind::box: return as_box().res;
    case SpaceKind::lattice_line: return as_lattice().res > 0 ? as_lattice().res : 0.0;
    case SpaceKind::cantor: {
      const auto& e = as_cantor().endpoints;
      double best = kInf;
      for (double v : e) {
        double d = std::abs(v - x.c[0]);
        if (d > 1e-15) best = std::min(best, d);
      }
      return best;
    }
    case SpaceKind::point_cloud: {
      double best = kInf;
      for (const auto& q : as_cloud().pts) {
        double d = distance(x, q);
        if (d > 0) best = std::min(best, d);
      }
      return best;
    }
    case SpaceKind::finite_matrix: {
      const auto& m = as_matrix();
      check_point(x);
      double best = kInf;
      for (std::size_t j = 0; j < m.n; ++j) {
        double d = m.d[static_cast<std::size_t>(x.index) * m.n + j];
        if (d > 0) best = std::min(best, d);
      }
      return best;
    }
  }
  return kInf;
}

bool MetricSpace::isolated_at_scale(const PointRef& x) const {
  // Continuum-backed kinds approximate spaces without isolated points.
  if (kind_ == SpaceKind::lattice_line) return false;
  const double res = resolution();
  const double nn = nearest_carrier_distance(x);
  if (res <= 0) return nn > 0;
  return nn > 8 * res;
}

double MetricSpace::diameter() const {
  switch (kind_) {
    case SpaceKind::interval: return as_interval().hi - as_interval().lo;
    case SpaceKind::box: {
      const auto& d = as_box();
      double s = 0;
      for (int i = 0; i < d.dim; ++i) s += sq(d.hi[i] - d.lo[i]);
      return std::sqrt(s);
    }
    case SpaceKind::point_cloud: {
      const auto& pts = as_cloud().pts;
      double m = 0;
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) m = std::max(m, distance(pts[i], pts[j]));
      return m;
    }
    case SpaceKind::finite_matrix: {
      const auto& d = as_matrix();
      return *std::max_element(d.d.begin(), d.d.end());
    }
    case SpaceKind::cantor: return 1.0;
    case SpaceKind::lattice_line: return kInf;
  }
  return 0;
}

// Dyadic offset hierarchy for continuum-backed carriers. Level L holds the
// odd multiples of r/2^L, so deeper levels refine without moving earlier
// points and a larger budget can only extend the list.
std::vector<PointRef> MetricSpace::sample_grid_ball(const PointRef& x, double r, int budget,
                                                    bool closed) const {
  const double res = resolution();
  double lo = -kInf, hi = kInf;
  if (kind_ == SpaceKind::interval) {
    lo = as_interval().lo;
    hi = as_interval().hi;
  }
  std::vector<PointRef> out;
  std::unordered_set<std::int64_t> seen_idx;
  std::unordered_set<double> seen_val;
  auto push = [&](double u) -> bool {
    if (u < lo || u > hi) return false;
    PointRef p = snap(PointRef::at(u));
    double d = std::abs(p.c[0] - x.c[0]);
    if (d <= 0) return false;
    if (closed ? d > r : d >= r) return false;
    if (res > 0) {
      auto j = static_cast<std::int64_t>(std::llround((p.c[0] - (lo == -kInf ? 0.0 : lo)) / res));
      if (!seen_idx.insert(j).second) return false;
    } else {
      if (!seen_val.insert(p.c[0]).second) return false;
    }
    out.push_back(p);
    return true;
  };

  if (closed) {
    push(x.c[0] - r);
    push(x.c[0] + r);
  }
  int stagnant = 0;
  for (int level = 1; level <= 60; ++level) {
    const double h = std::ldexp(r, -level);
    if (res > 0 && h < res * 0.25) break;
    if (h < std::abs(x.c[0]) * 1e-17 + 1e-300) break;
    std::size_t added = 0;
    const std::int64_t kmax = (std::int64_t{1} << std::min(level, 62)) - 1;
    for (std::int64_t k = 1; k <= kmax && static_cast<std::int64_t>(out.size()) < budget;
         k += 2) {
      const double off = static_cast<double>(k) * h;
      added += push(x.c[0] - off);
      if (static_cast<std::int64_t>(out.size()) >= budget) break;
      added += push(x.c[0] + off);
    }
    if (static_cast<std::int64_t>(out.size()) >= budget) break;
    stagnant = added == 0 ? stagnant + 1 : 0;
    if (stagnant >= 2) break;
  }

  std::sort(out.begin(), out.end(), [&](const PointRef& a, const PointRef& b) {
    double da = std::abs(a.c[0] - x.c[0]), db = std::abs(b.c[0] - x.c[0]);
    if (da != db) return da > db;
    return a.c[0] < b.c[0];
  });
  return out;
}

std::vector<PointRef> MetricSpace::sample_finite_ball(const PointRef& x, double r, int budget,
                                                      bool closed) const {
  std::vector<PointRef> out;
  for_each_carrier([&](const PointRef& p) {
    double d = distance(x, p);
    if (d > 0 && (closed ? d <= r : d < r)) out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end(), [&](const PointRef& a, const PointRef& b) {
    double da = distance(x, a), db = distance(x, b);
    if (da != db) return da > db;
    if (a.index != b.index) return a.index < b.index;
    return coord_less(a, b);
  });
  if (out.size() > static_cast<std::size_t>(budget)) out.resize(static_cast<std::size_t>(budget));
  return out;
}

// Axis-aligned grid at dyadic spacings; small dimensions only. Grid points
// are identified by their exact lattice indices.
std::vector<PointRef> MetricSpace::sample_box_ball(const PointRef& x, double r, int budget,
                                                   bool closed) const {
  const auto& d = as_box();
  std::vector<PointRef> out;
  const double res = d.res;
  double h = r / 2;
  std::unordered_set<std::string> seen;
  auto key_of = [&](const PointRef& p) {
    std::string key;
    for (int axis = 0; axis < d.dim; ++axis) {
      key += std::to_string(std::llround((p.c[axis] - d.lo[axis]) / res));
      key += ',';
    }
    return key;
  };
  while (static_cast<std::int64_t>(out.size()) < budget && h >= res * 0.25) {
    const auto steps = static_cast<std::int64_t>(std::floor(r / h));
    for (std::int64_t i = -steps; i <= steps; ++i)
      for (std::int64_t j = d.dim > 1 ? -steps : 0; j <= (d.dim > 1 ? steps : 0); ++j)
        for (std::int64_t k = d.dim > 2 ? -steps : 0; k <= (d.dim > 2 ? steps : 0); ++k) {
          PointRef p = snap(PointRef::at(x.c[0] + i * h, x.c[1] + j * h, x.c[2] + k * h));
          double dd = distance(x, p);
          if (dd <= 0) continue;
          if (closed ? dd > r : dd >= r) continue;
          if (!seen.insert(key_of(p)).second) continue;
          out.push_back(p);
          if (static_cast<std::int64_t>(out.size()) >= budget) break;
        }
    h /= 2;
  }
  std::sort(out.begin(), out.end(), [&](const PointRef& a, const PointRef& b) {
    double da = distance(x, a), db = distance(x, b);
    if (da != db) return da > db;
    return coord_less(a, b);
  });
  return out;
}

std::vector<PointRef> MetricSpace::ball_sample(const PointRef& x, double r, int budget) const {
  if (!(r > 0)) throw domain_error("ball_sample: radius must be positive");
  if (budget < 1) throw domain_error("ball_sample: budget must be positive");
  check_point(x);
  if (kind_ == SpaceKind::interval || kind_ == SpaceKind::lattice_line)
    return sample_grid_ball(x, r, budget, /*closed=*/false);
  if (kind_ == SpaceKind::box) return sample_box_ball(x, r, budget, /*closed=*/false);
  return sample_finite_ball(x, r, budget, /*closed=*/false);
}

std::vector<PointRef> MetricSpace::ball_sample_closed(const PointRef& x, double r,
                                                      int budget) const {
  if (!(r > 0)) throw domain_error("ball_sample: radius must be positive");
  if (budget < 1) throw domain_error("ball_sample: budget must be positive");
  check_point(x);
  if (kind_ == SpaceKind::interval || kind_ == SpaceKind::lattice_line)
    return sample_grid_ball(x, r, budget, /*closed=*/true);
  if (kind_ == SpaceKind::box) return sample_box_ball(x, r, budget, /*closed=*/true);
  return sample_finite_ball(x, r, budget, /*closed=*/true);
}

double MetricSpace::ball_sup_distance(const PointRef& x, double r) const {
  check_point(x);
  if (!(r > 0)) throw domain_error("ball_sup_distance: radius must be positive");
  switch (kind_) {
    case SpaceKind::interval: {
      const auto& d = as_interval();
      double best = 0;
      for (int side = -1; side <= 1; side += 2) {
        double reach = side < 0 ? x.c[0] - d.lo : d.hi - x.c[0];
        if (reach <= 0) continue;
        if (d.res <= 0) {
          best = std::max(best, reach < r ? reach : r * (1 - 1e-12));
          continue;
        }
        // Largest on-grid offset strictly below r on this side.
        double off = std::min(reach, r);
        auto j = static_cast<std::int64_t>(std::floor(off / d.res));
        double cand = j * d.res;
        while (cand >= r && j > 0) cand = --j * d.res;
        if (cand > 0 && cand < r) best = std::max(best, std::min(cand, reach));
      }
      return best;
    }
    case SpaceKind::lattice_line: {
      const auto& d = as_lattice();
      if (d.res <= 0) return r * (1.0 - 1e-12);
      auto j = static_cast<std::int64_t>(std::floor(r / d.res));
      double cand = j * d.res;
      while (cand >= r && j > 0) cand = --j * d.res;
      return std::max(cand, 0.0);
    }
    case SpaceKind::cantor:
    case SpaceKind::point_cloud:
    case SpaceKind::finite_matrix: {
      double best = 0;
      for_each_carrier([&](const PointRef& p) {
        double dd = distance(x, p);
        if (dd > 0 && dd < r) best = std::max(best, dd);
        return true;
      });
      return best;
    }
    case SpaceKind::box: {
      auto pts = ball_sample(x, r, 512);
      return pts.empty() ? 0.0 : distance(x, pts.front());
    }
  }
  return 0;
}

std::vector<double> MetricSpace::ball_distances(const PointRef& x, double r,
                                                std::size_t cap) const {
  check_point(x);
  std::vector<double> out;
  switch (kind_) {
    case SpaceKind::interval: {
      const auto& d = as_interval();
      if (d.res <= 0) throw resource_error("ball_distances: continuum interval");
      for (int side = -1; side <= 1; side += 2) {
        double reach = side < 0 ? x.c[0] - d.lo : d.hi - x.c[0];
        for (std::int64_t j = 1;; ++j) {
          double dd = j * d.res;
          if (dd >= r || dd > reach + d.res * 0.5) break;
          out.push_back(std::min(dd, reach));
          if (out.size() > cap) throw resource_error("ball_distances: too many carrier points");
        }
      }
      break;
    }
    case SpaceKind::lattice_line: {
      const auto& d = as_lattice();
      if (d.res <= 0) throw resource_error("ball_distances: continuum lattice_line");
      for (std::int64_t j = 1;; ++j) {
        double dd = j * d.res;
        if (dd >= r) break;
        out.push_back(dd);
        out.push_back(dd);
        if (out.size() > cap) throw resource_error("ball_distances: too many carrier points");
      }
      break;
    }
    default: {
      for_each_carrier([&](const PointRef& p) {
        double dd = distance(x, p);
        if (dd > 0 && dd < r) {
          out.push_back(dd);
          if (out.size() > cap) throw resource_error("ball_distances: too many carrier points");
        }
        return true;
      });
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tvdw
