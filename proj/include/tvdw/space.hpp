#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "tvdw/common.hpp"

namespace tvdw {

// A point of a concrete space: coordinates for grid-backed kinds, a row
// index for table-backed kinds.
struct PointRef {
  std::array<double, 3> c{0.0, 0.0, 0.0};
  std::int64_t index = -1;

  static PointRef at(double x) {
    PointRef p;
    p.c[0] = x;
    return p;
  }
  static PointRef at(double x, double y, double z = 0.0) {
    PointRef p;
    p.c = {x, y, z};
    return p;
  }
  static PointRef row(std::int64_t i) {
    PointRef p;
    p.index = i;
    return p;
  }
  double x() const { return c[0]; }
};

enum class SpaceKind { interval, box, point_cloud, finite_matrix, cantor, lattice_line };

std::string to_string(SpaceKind k);

// Uniform wrapper over the concrete metric spaces the tool understands.
// Immutable after construction; all queries are const and deterministic.
class MetricSpace {
 public:
  static MetricSpace interval(double lo, double hi, double resolution);
  static MetricSpace box(const std::vector<double>& lo, const std::vector<double>& hi,
                         double resolution);
  static MetricSpace point_cloud(std::vector<PointRef> pts, double resolution);
  static MetricSpace finite_matrix(std::vector<std::vector<double>> table);
  static MetricSpace cantor(int level);
  static MetricSpace lattice_line(double resolution = 0.0);

  SpaceKind kind() const { return kind_; }
  double resolution() const;
  int dim() const;

  // |u - v|_X per the kind's formula. Throws domain_error for invalid refs.
  double distance(const PointRef& u, const PointRef& v) const;

  bool contains(const PointRef& p) const;

  // Deterministic sample of the open ball B(x,r) minus {x}: a dyadic offset
  // hierarchy anchored at x, snapped to the carrier, truncated to `budget`
  // in generation order, then sorted by distance to x descending (ties by
  // ascending coordinate/index). Every returned point satisfies
  // distance(x,p) < r strictly, so suprema over the list are lower bounds
  // of suprema over the true ball. Enlarging the budget never removes a
  // point. Finite carriers are enumerated exactly instead.
  std::vector<PointRef> ball_sample(const PointRef& x, double r, int budget) const;

  // Same with the closed ball B[x,r]: points at distance exactly r are
  // eligible and are generated first.
  std::vector<PointRef> ball_sample_closed(const PointRef& x, double r, int budget) const;

  // Smallest positive pairwise distance among materialized points;
  // +inf when fewer than two points exist.
  double min_positive_gap() const;

  // Distance from x to the nearest other carrier point (+inf if none).
  double nearest_carrier_distance(const PointRef& x) const;

  // True when x has no carrier neighbour within a few resolution steps,
  // i.e. the point is isolated at the working scale.
  bool isolated_at_scale(const PointRef& x) const;

  double diameter() const;  // +inf for lattice_line

  // Exact sup of distance(x,u) over the open ball (0 when empty). For box
  // spaces this falls back to the sampled lower bound.
  double ball_sup_distance(const PointRef& x, double r) const;

  // Sorted distances of carrier points u != x with distance(x,u) < r.
  // Throws resource_error past `cap` entries.
  std::vector<double> ball_distances(const PointRef& x, double r, std::size_t cap) const;

  // Canonical carrier scan (ascending coordinates / index). The callback
  // returns false to stop early. Throws resource_error for lattice_line.
  void for_each_carrier(const std::function<bool(const PointRef&)>& fn) const;
  std::size_t carrier_size() const;

  // Snap a coordinate point to the nearest carrier point (identity for
  // index-based kinds and continuum kinds).
  PointRef snap(const PointRef& p) const;

  bool is_grid_backed() const;  // interval / box / lattice_line

  // Grid-backed kind with resolution 0: samples live on the full continuum.
  bool continuum() const { return is_grid_backed() && resolution() <= 0; }

  struct IntervalData {
    double lo, hi, res;
  };
  struct BoxData {
    int dim;
    std::array<double, 3> lo, hi;
    double res;
  };
  struct CloudData {
    std::vector<PointRef> pts;  // sorted canonically
    double res;
  };
  struct MatrixData {
    std::vector<double> d;  // row-major n x n
    std::size_t n;
  };
  struct CantorData {
    int level;
    std::vector<double> endpoints;  // sorted, both endpoints of level-k intervals
  };
  struct LatticeData {
    double res;
  };

  const IntervalData& as_interval() const { return std::get<IntervalData>(data_); }
  const CantorData& as_cantor() const { return std::get<CantorData>(data_); }
  const MatrixData& as_matrix() const { return std::get<MatrixData>(data_); }
  const CloudData& as_cloud() const { return std::get<CloudData>(data_); }
  const BoxData& as_box() const { return std::get<BoxData>(data_); }
  const LatticeData& as_lattice() const { return std::get<LatticeData>(data_); }

 private:
  MetricSpace() = default;
  SpaceKind kind_ = SpaceKind::interval;
  std::variant<IntervalData, BoxData, CloudData, MatrixData, CantorData, LatticeData> data_;

  void check_point(const PointRef& p) const;
  std::vector<PointRef> sample_grid_ball(const PointRef& x, double r, int budget,
                                         bool closed) const;
  std::vector<PointRef> sample_finite_ball(const PointRef& x, double r, int budget,
                                           bool closed) const;
  std::vector<PointRef> sample_box_ball(const PointRef& x, double r, int budget,
                                        bool closed) const;
};

}  // namespace tvdw
