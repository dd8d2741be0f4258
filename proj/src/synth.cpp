#include "tvdw/synth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tvdw::synth {

namespace {

std::pair<double, double> carrier_bounds(const MetricSpace& space) {
  switch (space.kind()) {
    case SpaceKind::interval:
      return {space.as_interval().lo, space.as_interval().hi};
    case SpaceKind::lattice_line:
      return {-kInf, kInf};
    default:
      throw domain_error("synth: only interval and lattice_line carriers are supported");
  }
}

}  // namespace

bool RegionSpec::contains(double x) const {
  for (const auto& [lo, hi] : G)
    if (x > lo && x < hi) return true;
  return false;
}

RegionSpec RegionSpec::parse(const std::string& text) {
  RegionSpec r;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t open = text.find('(', pos);
    if (open == std::string::npos) break;
    std::size_t close = text.find(')', open);
    if (close == std::string::npos) throw domain_error("region: unbalanced parenthesis");
    std::string body = text.substr(open + 1, close - open - 1);
    std::size_t comma = body.find(',');
    if (comma == std::string::npos) throw domain_error("region: expected \"(lo,hi)\"");
    double lo = std::stod(body.substr(0, comma));
    double hi = std::stod(body.substr(comma + 1));
    if (!(hi > lo)) throw domain_error("region: interval with hi <= lo");
    r.G.emplace_back(lo, hi);
    pos = close + 1;
  }
  if (r.G.empty()) throw domain_error("region: no intervals parsed");
  std::sort(r.G.begin(), r.G.end());
  for (std::size_t i = 1; i < r.G.size(); ++i)
    if (r.G[i].first < r.G[i - 1].second) throw domain_error("region: overlapping intervals");
  return r;
}

std::string RegionSpec::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (i) os << ";";
    os << "(" << G[i].first << "," << G[i].second << ")";
  }
  return os.str();
}

double dist_to_complement(const MetricSpace& space, const RegionSpec& region, double x) {
  const auto [lo, hi] = carrier_bounds(space);
  for (const auto& [gl, gh] : region.G) {
    if (x > gl && x < gh) {
      double d = kInf;
      if (gl >= lo) d = std::min(d, x - gl);  // edge inside the carrier
      if (gh <= hi) d = std::min(d, gh - x);
      return d;  // +inf means F is empty on this side: G covers the carrier
    }
  }
  return 0.0;  // x in F
}

lip::RealFn cutoff(SpacePtr space, const RegionSpec& region, double alpha) {
  if (!(alpha > 0)) throw domain_error("cutoff: alpha must be positive");
  return [space, region, alpha](const PointRef& p) {
    double d = dist_to_complement(*space, region, p.c[0]);
    return alpha * std::min(1.0, d);
  };
}

double SynthFunction::g(const PointRef& p) const {
  double d = dist_to_complement(*space, region, p.c[0]);
  return alpha * std::min(1.0, d);
}

double SynthFunction::f(const PointRef& p, double tol) const {
  const double gv = g(p);
  if (gv == 0.0) return 0.0;
  return gv * h.eval(p, tol).value;
}

lip::RealFn SynthFunction::as_fn(double tol) const {
  return [sf = *this, tol](const PointRef& p) { return sf.f(p, tol); };
}

SynthFunction synthesize(SpacePtr space, const RegionSpec& G, std::optional<thm::Params> params,
                         double H_est) {
  if (!space) throw domain_error("synthesize: null space");
  carrier_bounds(*space);  // validates the kind
  // G must avoid points isolated at the working scale.
  for (const auto& [gl, gh] : G.G) {
    PointRef mid = PointRef::at((std::max(gl, -1e300) + std::min(gh, 1e300)) / 2);
    if (space->contains(mid) && space->isolated_at_scale(mid))
      throw domain_error("synthesize: G contains points isolated at the working scale");
  }
  thm::Params p = params ? *params : thm::choose_params(H_est);
  const auto a = static_cast<double>(p.a);
  const auto b = static_cast<double>(p.b);
  SynthFunction sf{space,
                   G,
                   p,
                   (a - b) / a,
                   TWFunction(a, b, implicit_hierarchy(space, p.a), /*index_start=*/1)};
  return sf;
}

VerifyReport verify_prescribed_sets(const SynthFunction& sf, std::span<const PointRef> samples_F,
                                    std::span<const PointRef> samples_G,
                                    std::span<const PointRef> samples_IntF, double threshold,
                                    double collar, double tol) {
  const MetricSpace& space = *sf.space;
  VerifyReport rep;
  rep.collar = collar;
  rep.G_min_growth = kInf;

  auto boundary_distance = [&](double x) {
    double d = kInf;
    for (const auto& [gl, gh] : sf.region.G) {
      d = std::min(d, std::abs(x - gl));
      d = std::min(d, std::abs(x - gh));
    }
    return d;
  };

  const double eval_tol = 1e-14;
  const lip::RealFn f = sf.as_fn(eval_tol);

  // Pointwise regime on F: scaled ball oscillations never exceed slope 1,
  // at every sampled scale, including balls that reach into G.
  const auto sched_F = lip::Schedule::geometric(1.0 / 8, 0.5, 14);
  for (const auto& x : samples_F) {
    if (sf.region.contains(x.c[0])) continue;
    if (boundary_distance(x.c[0]) < collar) continue;
    ++rep.F_tested;
    double worst = 0;
    for (double r : sched_F.radii)
      worst = std::max(worst, lip::lip_r_ball(space, f, x, r, 256).value);
    rep.F_max_Lip = std::max(rep.F_max_Lip, worst);
    if (worst > 1 + tol) rep.failures.push_back({x, "F: pointwise bound exceeded"});
  }

  // Locally-bounded regime on Int F: pairwise slopes collapse at small radii.
  const auto sched_I = lip::Schedule::geometric(1.0 / 64, 0.5, 10);
  for (const auto& x : samples_IntF) {
    if (sf.region.contains(x.c[0])) continue;
    if (boundary_distance(x.c[0]) < collar) continue;
    ++rep.IntF_tested;
    auto est = lip::estimate_llip(space, f, x, sched_I, 128, threshold);
    rep.IntF_max_LLip = std::max(rep.IntF_max_LLip, est.value);
    if (est.value > 1 + tol || est.diverged)
      rep.failures.push_back({x, "Int F: local bound exceeded"});
  }

  // Blow-up regime on G. The schedule descends through the natural scales
  // a^-n and finishes just below the last scale the double grid around x
  // can resolve, where the slopes of the partial sums act coherently.
  const double a = static_cast<double>(sf.params.a);
  std::vector<double> radii;
  double r = 1.0 / a;
  const auto ulp_of = [](double v) { return std::nextafter(std::abs(v) + 1e-300, kInf) - std::abs(v); };
  for (int n = 1; n <= 40; ++n) {
    double next = std::pow(a, -n);
    if (next < 64 * ulp_of(0.5)) break;
    radii.push_back(next);
    r = next;
  }
  radii.push_back(r / 2);
  radii.push_back(r / 4);
  lip::Schedule sched_G{radii};

  for (const auto& x : samples_G) {
    if (!sf.region.contains(x.c[0])) continue;
    if (boundary_distance(x.c[0]) < collar) continue;
    ++rep.G_tested;
    auto est = lip::estimate_lip(space, f, x, sched_G, 512, threshold);
    rep.G_min_growth = std::min(rep.G_min_growth, est.value);
    if (!est.diverged) rep.failures.push_back({x, "G: divergence flag not raised"});
  }
  return rep;
}

}  // namespace tvdw::synth
