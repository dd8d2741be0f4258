#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tvdw/tw.hpp"

namespace tvdw::thm {

// Parameters satisfying 2b/(a-b) + 1/(b-1) < H/8 with gamma > 0.
struct Params {
  long long a = 0;
  long long b = 0;
  double lambda = 0;
  double gamma = 0;
  double lhs = 0;  // 2b/(a-b) + 1/(b-1)
};

// Smallest integer b with 1/(b-1) <= H/16, then smallest integer a with
// 2b/(a-b) < H/16; lambda = 0.99 H when that leaves gamma positive,
// otherwise the midpoint of (8*lhs, H).
Params choose_params(double H_est);

double hypothesis_lhs(double a, double b);
double gamma_for(double a, double b, double lambda);

enum class WitnessCase { net_point, off_net };

struct WitnessRecord {
  int n = 0;
  PointRef u;
  double rho = 0;               // |u - x|
  double ratio = 0;             // |f(u) - f(x)| / rho  (or / r for the lip variant)
  double guaranteed_bound = 0;  // alpha b^n, beta b^n, or (gamma/a) b^n
  WitnessCase case_tag = WitnessCase::off_net;
  bool pass = false;
  double margin = 0;  // ratio - guaranteed_bound
};

// Blow-up witnesses for the pointwise derivative of a monotonic-type
// function with b > 2: at each scale either a near point of a net
// containing x (bound (b-2)/(b-1) * b^n) or the nearest net point
// (bound (b-2)/(b(b-1)) * b^n).
std::vector<WitnessRecord> big_lip_witnesses(const TWFunction& f, const PointRef& x, int n_min,
                                             int n_max, int budget = 64);

struct Displacement {
  bool ok = false;
  PointRef u;
  double delta = 0;     // |phi(u) - phi(x)|
  double required = 0;  // lambda * epsilon / 8
  double phi_x = 0;
  int branch = 0;  // 1: phi(x) already large, 2: shell point
};

// Search B[x, eps] for a point moving d(., S) by at least lambda*eps/8.
// Preconditions (lambda below the hermeticity at x, eps below the radius
// of hermeticity) are the caller's responsibility; the returned record
// reports failure instead of throwing so tests can surface it.
Displacement net_displacement_witness(const MetricSpace& space, const Net& net,
                                      const PointRef& x, double lambda, int budget = 4096);

// Per-radius certified lower bounds (gamma/a) b^{n(r)} for the scaled ball
// oscillation, n(r) the scale index with a^-n <= r < a^-(n-1). Throws
// domain_error when the hypothesis inequality fails at the given H.
std::vector<WitnessRecord> little_lip_bounds(const TWFunction& f, const PointRef& x,
                                             std::span<const double> r_list, double lambda,
                                             double H_est, int budget = 4096);

}  // namespace tvdw::thm
