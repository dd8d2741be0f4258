#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvdw/lipschitz.hpp"
#include "tvdw/theorems.hpp"
#include "tvdw/tw.hpp"

namespace tvdw::synth {

// An open subset of a one-dimensional carrier as a finite union of open
// intervals, kept disjoint and sorted. Components may overhang the carrier
// ends to express open sets that contain an endpoint of the interval.
struct RegionSpec {
  std::vector<std::pair<double, double>> G;

  bool contains(double x) const;
  static RegionSpec parse(const std::string& text);  // "(0.2,0.8);(0.9,0.95)"
  std::string str() const;
};

// alpha * min(1, d(x, F)) with F the complement of G in the carrier; the
// zero set is exactly F, and g is alpha-Lipschitz. F empty gives the
// constant alpha.
lip::RealFn cutoff(SpacePtr space, const RegionSpec& region, double alpha);

// Distance to the complement (+inf when F is empty).
double dist_to_complement(const MetricSpace& space, const RegionSpec& region, double x);

// f = g * h with g the cutoff at alpha = (a-b)/a and h a type-(a,b)
// function over the implicit lattice hierarchy: the scaled oscillation of
// f blows up exactly on G, stays pointwise bounded on F, and stays locally
// bounded on the interior of F.
struct SynthFunction {
  SpacePtr space;
  RegionSpec region;
  thm::Params params;
  double alpha = 0;
  TWFunction h;

  double g(const PointRef& p) const;
  double f(const PointRef& p, double tol) const;
  lip::RealFn as_fn(double tol) const;
};

SynthFunction synthesize(SpacePtr space, const RegionSpec& G,
                         std::optional<thm::Params> params = std::nullopt, double H_est = 1.0);

struct PointFailure {
  PointRef x;
  std::string what;
};

struct VerifyReport {
  double collar = 0;
  double F_max_Lip = 0;       // over F samples, must stay <= 1 + tol
  double IntF_max_LLip = 0;   // over Int F samples, must stay <= 1 + tol
  double G_min_growth = 0;    // min over G samples of the flagged tail value
  int F_tested = 0, IntF_tested = 0, G_tested = 0;
  std::vector<PointFailure> failures;
  bool pass() const { return failures.empty(); }
};

// Checks the three prescribed regimes on given sample sets. Samples within
// `collar` of the boundary of G are skipped and reported: the blow-up
// margin g(x) * bound - 1 vanishes at the boundary, so finite sampling
// cannot resolve it there.
VerifyReport verify_prescribed_sets(const SynthFunction& sf, std::span<const PointRef> samples_F,
                                    std::span<const PointRef> samples_G,
                                    std::span<const PointRef> samples_IntF, double threshold,
                                    double collar = 1e-3, double tol = 1e-6);

}  // namespace tvdw::synth
