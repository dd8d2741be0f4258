#pragma once

#include <functional>

#include "tvdw/nets.hpp"

namespace tvdw {

struct EvalResult {
  double value = 0;
  int terms_used = 0;  // first omitted index n
  double error_bound = 0;
};

// Tail bound b^n / ((a-b) a^(n-1)); at n = 0 this is the global bound
// a / (a-b) on the function itself.
double remainder_bound(double a, double b, int n);

// f(x) = sum_{n >= index_start} b^n d(x, S_n) over a hierarchy of maximal
// a^-n-separated nets. index_start 0 follows the general definition,
// 1 the displayed standard form; both conventions are in circulation so
// the choice is an explicit knob rather than a silent default.
class TWFunction {
 public:
  TWFunction(double a, double b, NetHierarchy hierarchy, int index_start = 0);

  double a() const { return a_; }
  double b() const { return b_; }
  int index_start() const { return index_start_; }
  const NetHierarchy& hierarchy() const { return hierarchy_; }
  bool monotonic_type() const { return hierarchy_.monotone; }

  // s_n(x): exact finite sum of b^k d(x, S_k) for index_start <= k < n.
  double partial_sum(const PointRef& x, int n) const;

  // Truncated evaluation: smallest n with remainder_bound(a,b,n) <= tol,
  // so |value - f(x)| <= tol.
  EvalResult eval(const PointRef& x, double tol) const;

  // Convenience evaluator for the derivative estimators.
  std::function<double(const PointRef&)> as_fn(double tol) const;

 private:
  double a_, b_;
  int index_start_;
  NetHierarchy hierarchy_;
};

// Independent evaluation of the standard lattice form
// f_{a,b}(x) = sum (b/a)^n d(a^n x, Z), same truncation rule as eval.
// Serves as an oracle for eval over implicit lattice hierarchies.
EvalResult eval_standard_lattice(double a, double b, double x, double tol, int index_start);

}  // namespace tvdw
