#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tvdw/space.hpp"

namespace tvdw {

using SpacePtr = std::shared_ptr<const MetricSpace>;

// Analytic lattice s*Z. For base >= 2 the scale is base^-level and
// distances are computed exactly from the binary representation of the
// query point; base 0 marks a generic scale served by plain arithmetic.
struct ImplicitLattice {
  double scale = 1.0;
  std::int64_t base = 0;
  int level = 0;
};

// An epsilon-separated point set, explicit or analytic. Immutable after
// construction; nearest-point queries on explicit nets binary-search the
// canonical order.
struct Net {
  SpacePtr space;
  double epsilon = 0;
  std::vector<PointRef> points;
  std::optional<ImplicitLattice> lattice;

  bool implicit() const { return lattice.has_value(); }
  std::size_t size() const;
};

struct SeparationReport {
  bool separated = true;
  PointRef a, b;  // violating pair when !separated
  double dist = 0;
};

struct DensityReport {
  bool dense = true;
  PointRef probe;  // worst probe (violating when !dense)
  double dist = 0;
};

// Greedy scan of the carrier in canonical order, accepting every point at
// distance >= epsilon from all accepted points. The result contains the
// seed, is epsilon-separated and epsilon-dense over the materialized
// carrier (maximal at the working scale).
Net greedy_maximal_net(SpacePtr space, double epsilon, const std::vector<PointRef>& seed = {});

SeparationReport check_separated(const Net& net);

// Density over the materialized carrier. probe_resolution records the
// scale at which maximality is certified; finite carriers are probed
// exhaustively regardless.
DensityReport check_dense(const Net& net, double probe_resolution);

// d(x, S). Returns +inf for an empty net.
double dist_to_net(const PointRef& x, const Net& net);

// Nearest net point (throws resolution_error for an empty net).
PointRef nearest_net_point(const PointRef& x, const Net& net);

// Nets at scales a^-n, optionally nested (S_n built with seed S_{n-1}).
class NetHierarchy {
 public:
  NetHierarchy() = default;

  SpacePtr space;
  double a = 2;
  bool monotone = true;

  bool implicit() const { return implicit_; }
  std::int64_t base() const { return base_; }
  int depth() const { return static_cast<int>(levels_.size()) - 1; }

  // Level-n net; implicit hierarchies generate any level on demand.
  Net net_at(int n) const;

  const std::vector<Net>& levels() const { return levels_; }

  friend NetHierarchy build_hierarchy(SpacePtr space, double a, int depth, bool monotone);
  friend NetHierarchy implicit_hierarchy(SpacePtr space, std::int64_t a);

 private:
  bool implicit_ = false;
  std::int64_t base_ = 0;
  std::vector<Net> levels_;
};

// Greedy hierarchy over a materialized carrier.
NetHierarchy build_hierarchy(SpacePtr space, double a, int depth, bool monotone);

// Exact nested hierarchy a^-n Z for interval / lattice_line spaces with an
// integer base; the only representation that stays valid below the
// materialization resolution.
NetHierarchy implicit_hierarchy(SpacePtr space, std::int64_t a);

}  // namespace tvdw
