#include "tvdw/tw.hpp"

#include <cmath>

#include "tvdw/dyadic.hpp"

namespace tvdw {

namespace {

constexpr int kMaxTerms = 100000;

int terms_for_tolerance(double a, double b, double tol) {
  if (!(tol > 0)) throw domain_error("eval: tolerance must be positive");
  int n = 0;
  while (remainder_bound(a, b, n) > tol) {
    if (++n > kMaxTerms) throw resource_error("eval: tolerance unreachable");
  }
  return n;
}

struct Kahan {
  double sum = 0, comp = 0;
  void add(double v) {
    double y = v - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double remainder_bound(double a, double b, int n) {
  if (!(a > b) || !(b > 0)) throw domain_error("remainder_bound: requires a > b > 0");
  if (n < 0) throw domain_error("remainder_bound: negative index");
  return std::pow(b / a, n) * a / (a - b);
}

TWFunction::TWFunction(double a, double b, NetHierarchy hierarchy, int index_start)
    : a_(a), b_(b), index_start_(index_start), hierarchy_(std::move(hierarchy)) {
  if (!(a > b) || !(b > 0)) throw domain_error("TWFunction: requires a > b > 0");
  if (index_start != 0 && index_start != 1)
    throw domain_error("TWFunction: index_start must be 0 or 1");
  if (hierarchy_.a != a) throw domain_error("TWFunction: hierarchy scale base differs from a");
}

double TWFunction::partial_sum(const PointRef& x, int n) const {
  if (n < index_start_) throw domain_error("partial_sum: n below index_start");
  Kahan acc;
  double weight = std::pow(b_, index_start_);
  for (int k = index_start_; k < n; ++k) {
    const Net net = hierarchy_.net_at(k);
    acc.add(weight * dist_to_net(x, net));
    weight *= b_;
  }
  return acc.sum;
}

EvalResult TWFunction::eval(const PointRef& x, double tol) const {
  const int n = std::max(terms_for_tolerance(a_, b_, tol), index_start_);
  if (!hierarchy_.implicit() && n - 1 > hierarchy_.depth())
    throw resource_error(
        "eval: required depth exceeds the explicit hierarchy; use an implicit lattice hierarchy");
  EvalResult r;
  r.terms_used = n;
  r.error_bound = remainder_bound(a_, b_, n);
  r.value = partial_sum(x, n);
  return r;
}

std::function<double(const PointRef&)> TWFunction::as_fn(double tol) const {
  return [f = *this, tol](const PointRef& p) { return f.eval(p, tol).value; };
}

EvalResult eval_standard_lattice(double a, double b, double x, double tol, int index_start) {
  if (!(a > b) || !(b > 0)) throw domain_error("eval_standard_lattice: requires a > b > 0");
  if (index_start != 0 && index_start != 1)
    throw domain_error("eval_standard_lattice: index_start must be 0 or 1");
  const int n = std::max(terms_for_tolerance(a, b, tol), index_start);

  EvalResult r;
  r.terms_used = n;
  r.error_bound = remainder_bound(a, b, n);

  Kahan acc;
  double ai;
  const bool integral_base = a >= 2 && std::modf(a, &ai) == 0.0 && a < 9.2e18;
  double weight = std::pow(b / a, index_start);
  if (integral_base) {
    dyadic::FracStream stream(x, static_cast<std::uint64_t>(a), index_start);
    for (int k = index_start; k < n; ++k) {
      acc.add(weight * stream.dist());
      weight *= b / a;
      stream.advance();
    }
  } else {
    // Non-integer base: plain arithmetic, adequate for shallow depths only.
    for (int k = index_start; k < n; ++k) {
      long double t = powl(static_cast<long double>(a), k) * static_cast<long double>(x);
      if (!std::isfinite(static_cast<double>(t)) && !(t == 0.0L))
        throw resource_error(
            "eval_standard_lattice: depth exceeds the range of the non-integer-base fallback");
      long double fr = t - std::floor(t);
      double d = static_cast<double>(std::min(fr, 1.0L - fr));
      acc.add(weight * d);
      weight *= b / a;
    }
  }
  r.value = acc.sum;
  return r;
}

}  // namespace tvdw
