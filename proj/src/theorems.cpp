#include "tvdw/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tvdw::thm {

double hypothesis_lhs(double a, double b) { return 2 * b / (a - b) + 1 / (b - 1); }

double gamma_for(double a, double b, double lambda) {
  return lambda / 8 - hypothesis_lhs(a, b);
}

Params choose_params(double H_est) {
  if (!(H_est > 0) || !(H_est <= 1)) throw domain_error("choose_params: H must be in (0, 1]");
  Params p;
  p.b = static_cast<long long>(std::ceil(16.0 / H_est)) + 1;
  const double need = 32.0 * static_cast<double>(p.b) / H_est;  // a - b > need
  p.a = p.b + static_cast<long long>(std::floor(need)) + 1;
  p.lhs = hypothesis_lhs(static_cast<double>(p.a), static_cast<double>(p.b));
  if (!(p.lhs < H_est / 8)) throw domain_error("choose_params: construction failed");
  p.lambda = 0.99 * H_est;
  p.gamma = gamma_for(static_cast<double>(p.a), static_cast<double>(p.b), p.lambda);
  if (p.gamma <= 0) {
    p.lambda = (8 * p.lhs + H_est) / 2;
    p.gamma = gamma_for(static_cast<double>(p.a), static_cast<double>(p.b), p.lambda);
  }
  if (p.gamma <= 0) throw domain_error("choose_params: gamma not positive");
  return p;
}

std::vector<WitnessRecord> big_lip_witnesses(const TWFunction& f, const PointRef& x, int n_min,
                                             int n_max, int budget) {
  const double a = f.a(), b = f.b();
  if (!(b > 2)) throw domain_error("big_lip_witnesses: hypothesis b > 2");
  if (!f.monotonic_type())
    throw domain_error("big_lip_witnesses: requires a monotonic-type hierarchy");
  if (n_min < std::max(1, f.index_start()) || n_max < n_min)
    throw domain_error("big_lip_witnesses: bad scale range");
  const MetricSpace& space = *f.hierarchy().space;
  if (space.isolated_at_scale(x))
    throw domain_error("big_lip_witnesses: x is isolated at the working scale");

  const double alpha = (b - 2) / (b - 1);
  const double beta = (b - 2) / (b * (b - 1));

  std::vector<WitnessRecord> out;
  for (int n = n_min; n <= n_max; ++n) {
    const Net net = f.hierarchy().net_at(n);
    const double phi = dist_to_net(x, net);
    WitnessRecord rec;
    rec.n = n;
    const double bn = std::pow(b, n);
    if (phi < 1e-12) {
      rec.case_tag = WitnessCase::net_point;
      rec.guaranteed_bound = alpha * bn;
      const double r = 0.5 * std::pow(a, -n);
      auto pts = space.ball_sample(x, r, budget);
      if (pts.empty()) {
        std::ostringstream msg;
        msg << "big_lip_witnesses: no point of B(x, a^-" << n
            << "/2) at the materialized resolution";
        throw resolution_error(msg.str());
      }
      rec.u = pts.front();
    } else {
      rec.case_tag = WitnessCase::off_net;
      rec.guaranteed_bound = beta * bn;
      rec.u = nearest_net_point(x, net);  // rho = phi_n(x) < (b/2) phi_n(x)
    }
    rec.rho = space.distance(x, rec.u);
    if (!(rec.rho > 0)) throw resolution_error("big_lip_witnesses: degenerate witness");
    const double tol = std::max(1e-15, 1e-9 * rec.guaranteed_bound * rec.rho);
    const double fu = f.eval(rec.u, tol).value;
    const double fx = f.eval(x, tol).value;
    rec.ratio = std::abs(fu - fx) / rec.rho;
    rec.margin = rec.ratio - rec.guaranteed_bound;
    rec.pass = rec.ratio >= rec.guaranteed_bound - 1e-6 * bn;
    out.push_back(rec);
  }
  return out;
}

Displacement net_displacement_witness(const MetricSpace& space, const Net& net,
                                      const PointRef& x, double lambda, int budget) {
  if (!(lambda > 0) || !(lambda < 1))
    throw domain_error("net_displacement_witness: lambda must be in (0, 1)");
  const double eps = net.epsilon;
  Displacement d;
  d.required = lambda * eps / 8;
  d.phi_x = dist_to_net(x, net);

  if (d.phi_x >= d.required) {
    d.branch = 1;
    d.u = nearest_net_point(x, net);  // phi(u) = 0, displacement = phi(x)
    d.delta = std::abs(dist_to_net(d.u, net) - d.phi_x);
    d.ok = d.delta >= d.required * (1 - 1e-12);
    return d;
  }

  d.branch = 2;
  auto consider = [&](const PointRef& u) {
    if (!space.contains(u)) return;
    if (space.distance(x, u) > eps * (1 + 1e-12)) return;
    double delta = std::abs(dist_to_net(u, net) - d.phi_x);
    if (delta > d.delta) {
      d.delta = delta;
      d.u = u;
      d.ok = true;
    }
  };
  // Shell targets at radius ~ 3 eps / 8 on both sides, then a general
  // closed-ball sweep.
  for (double t : {3 * eps / 8, lambda * 3 * eps / 8, eps / 2, eps / 4}) {
    consider(space.snap(PointRef::at(x.c[0] + t)));
    consider(space.snap(PointRef::at(x.c[0] - t)));
  }
  for (const auto& u : space.ball_sample_closed(x, eps, budget)) consider(u);
  d.ok = d.delta >= d.required;
  return d;
}

std::vector<WitnessRecord> little_lip_bounds(const TWFunction& f, const PointRef& x,
                                             std::span<const double> r_list, double lambda,
                                             double H_est, int budget) {
  const double a = f.a(), b = f.b();
  if (!(b > 1)) throw domain_error("little_lip_bounds: requires b > 1");
  const double lhs = hypothesis_lhs(a, b);
  if (!(lhs < H_est / 8)) {
    std::ostringstream msg;
    msg << "little_lip_bounds: hypothesis 2b/(a-b) + 1/(b-1) < H/8 fails: " << lhs
        << " >= " << H_est / 8;
    throw domain_error(msg.str());
  }
  if (!(lambda > 0) || !(lambda < H_est))
    throw domain_error("little_lip_bounds: lambda must be in (0, H)");
  const double gamma = gamma_for(a, b, lambda);
  if (!(gamma > 0)) throw domain_error("little_lip_bounds: gamma not positive for this lambda");

  const MetricSpace& space = *f.hierarchy().space;
  std::vector<WitnessRecord> out;
  for (double r : r_list) {
    if (!(r > 0) || !(r < 1)) throw domain_error("little_lip_bounds: r must be in (0, 1)");
    // n(r): a^-n <= r < a^-(n-1), with slack for radii given as a^-k.
    int n = std::max(1, static_cast<int>(std::ceil(-std::log(r) / std::log(a) - 1e-9)));
    while (std::pow(a, -n) > r * (1 + 1e-12)) ++n;

    const Net net = f.hierarchy().net_at(n);
    Displacement disp = net_displacement_witness(space, net, x, lambda, budget);
    WitnessRecord rec;
    rec.n = n;
    rec.case_tag = disp.branch == 1 ? WitnessCase::net_point : WitnessCase::off_net;
    rec.guaranteed_bound = (gamma / a) * std::pow(b, n);
    if (!disp.ok) {
      rec.pass = false;
      out.push_back(rec);
      continue;
    }
    rec.u = disp.u;
    rec.rho = space.distance(x, rec.u);
    const double tol = std::max(1e-16, 1e-4 * gamma * std::pow(b / a, n));
    const double fu = f.eval(rec.u, tol).value;
    const double fx = f.eval(x, tol).value;
    rec.ratio = std::abs(fu - fx) / r;
    rec.margin = rec.ratio - rec.guaranteed_bound;
    rec.pass = rec.ratio >= rec.guaranteed_bound * (1 - 1e-6);
    out.push_back(rec);
  }
  return out;
}

}  // namespace tvdw::thm
