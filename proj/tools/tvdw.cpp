// Command line frontend: spaces, nets, function evaluation, derivative
// estimators, theorem verification, and prescribed-set synthesis.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tvdw/io.hpp"
#include "tvdw/synth.hpp"

using namespace tvdw;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

double u01(std::mt19937_64& rng) { return std::ldexp(static_cast<double>(rng() >> 11), -53); }

SpacePtr load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open space spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return std::make_shared<MetricSpace>(io::parse_space_spec(ss.str()));
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw domain_error("cannot open output file: " + out_path);
  out << j.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw domain_error("cannot open output file: " + out_path);
  out << text;
}

int thread_count(int flag_value) {
  if (flag_value > 0) return std::min(flag_value, 256);
  if (const char* env = std::getenv("TVDW_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, 256);
  }
  return 1;
}

// Deterministic parallel map: results land in input order.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct FnSpec {
  std::string text;
  lip::RealFn fn;
  std::optional<TWFunction> tw;
};

FnSpec parse_function(const std::string& text, const SpacePtr& space, double tol) {
  FnSpec spec;
  spec.text = text;
  if (text.rfind("tw:", 0) == 0) {
    std::string body = text.substr(3);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream is(body);
    double a = 0, b = 0;
    int start = 0;
    if (!(is >> a >> b)) throw domain_error("function spec: expected tw:a,b[,index_start]");
    if (!(is >> start)) start = 0;
    spec.tw.emplace(a, b, implicit_hierarchy(space, static_cast<std::int64_t>(a)), start);
    spec.fn = spec.tw->as_fn(tol);
    return spec;
  }
  if (text == "builtin:identity") {
    spec.fn = [](const PointRef& p) { return p.x(); };
    return spec;
  }
  if (text == "builtin:const") {
    spec.fn = [](const PointRef&) { return 1.0; };
    return spec;
  }
  if (text == "builtin:abs") {
    // centered kink |x - 1/2|
    spec.fn = [](const PointRef& p) { return std::abs(p.x() - 0.5); };
    return spec;
  }
  throw domain_error("function spec: expected tw:a,b[,i] or builtin:identity|const|abs");
}

json net_report(const Net& net) {
  json j;
  j["epsilon"] = net.epsilon;
  j["implicit"] = net.implicit();
  if (!net.implicit()) j["size"] = net.points.size();
  auto sep = check_separated(net);
  j["separated"] = sep.separated;
  auto dens = check_dense(net, net.space->resolution());
  j["dense"] = dens.dense;
  j["max_gap"] = dens.dist;
  return j;
}

int cmd_net(const std::string& space_path, double epsilon, const std::vector<double>& seed,
            const std::string& out) {
  auto space = load_space(space_path);
  std::vector<PointRef> seed_pts;
  for (double v : seed) seed_pts.push_back(PointRef::at(v));
  Net net = greedy_maximal_net(space, epsilon, seed_pts);
  json j = net_report(net);
  j["net"] = io::net_to_json(net);
  emit(j, out);
  return kExitOk;
}

int cmd_hierarchy(const std::string& space_path, double a, int depth, bool monotone,
                  bool implicit, const std::string& out) {
  auto space = load_space(space_path);
  NetHierarchy h;
  if (implicit || space->kind() == SpaceKind::lattice_line) {
    double ai;
    if (std::modf(a, &ai) != 0.0 || a < 2)
      throw domain_error("implicit hierarchies need an integer a >= 2");
    h = implicit_hierarchy(space, static_cast<std::int64_t>(a));
  } else {
    h = build_hierarchy(space, a, depth, monotone);
  }
  json levels = json::array();
  for (int n = 0; n <= depth; ++n) {
    json j = net_report(h.net_at(n));
    j["n"] = n;
    levels.push_back(j);
  }
  json j;
  j["a"] = a;
  j["monotone"] = h.monotone;
  j["implicit"] = h.implicit();
  j["levels"] = levels;
  emit(j, out);
  return kExitOk;
}

int cmd_eval(const std::string& space_path, double a, double b, int index_start, double x,
             double tol, bool standard, const std::string& out) {
  auto space = load_space(space_path);
  EvalResult r;
  if (standard) {
    r = eval_standard_lattice(a, b, x, tol, index_start);
  } else {
    TWFunction f(a, b, implicit_hierarchy(space, static_cast<std::int64_t>(a)), index_start);
    r = f.eval(PointRef::at(x), tol);
  }
  json j;
  j["value"] = r.value;
  j["terms_used"] = r.terms_used;
  j["error_bound"] = r.error_bound;
  emit(j, out);
  return kExitOk;
}

lip::Estimate run_functional(const MetricSpace& space, const FnSpec& fs,
                             const std::string& functional, const PointRef& x, double r,
                             double rmax, int count, int budget, double threshold) {
  using namespace tvdw::lip;
  const lip::RealFn& fn = fs.fn;
  if (functional == "Lip^r") return lip_r_ball(space, fn, x, r, budget);
  if (functional == "Lip^r+") return lip_r_closed(space, fn, x, r, budget);
  // Geometric schedules: ratio 1/2 by default, 1/a along the natural
  // scales of a type-(a,b) function.
  const double ratio = fs.tw ? 1.0 / fs.tw->a() : 0.5;
  std::vector<double> grid;
  double v = r;
  for (int i = 0; i < count; ++i) {
    v *= ratio;
    grid.push_back(v);
  }
  if (functional == "Lip_r") return lip_big_r(space, fn, x, r, grid, budget);
  if (functional == "lip_r") return lip_small_r(space, fn, x, r, grid, budget);
  if (functional == "LLip^r") return llip_r_pairwise(space, fn, x, r, grid, budget);
  Schedule sched = Schedule::geometric(rmax, ratio, count);
  if (functional == "Lip") return estimate_Lip(space, fn, x, sched, budget, threshold);
  if (functional == "lip") return estimate_lip(space, fn, x, sched, budget, threshold);
  if (functional == "LLip") return estimate_llip(space, fn, x, sched, budget, threshold);
  throw domain_error("unknown functional \"" + functional +
                     "\" (use Lip^r, Lip^r+, Lip_r, lip_r, LLip^r, Lip, lip, LLip)");
}

// Deterministic sample points inside the carrier.
std::vector<PointRef> sample_points(const MetricSpace& space, int n, std::uint64_t seed) {
  std::vector<PointRef> pts;
  std::mt19937_64 rng(seed);
  switch (space.kind()) {
    case SpaceKind::interval: {
      double lo = space.as_interval().lo, hi = space.as_interval().hi;
      for (int i = 0; i < n; ++i)
        pts.push_back(space.snap(PointRef::at(lo + (hi - lo) * (0.02 + 0.96 * u01(rng)))));
      break;
    }
    case SpaceKind::lattice_line:
      for (int i = 0; i < n; ++i) pts.push_back(space.snap(PointRef::at(u01(rng))));
      break;
    default:
      space.for_each_carrier([&](const PointRef& p) {
        pts.push_back(p);
        return static_cast<int>(pts.size()) < n;
      });
      break;
  }
  return pts;
}

int cmd_lip(const std::string& space_path, const std::string& function, const std::string& funcl,
            std::optional<double> x, double r, double rmax, int count, int budget,
            double threshold, double tol, int samples, std::uint64_t seed, int threads,
            const std::string& csv_path, const std::string& out) {
  auto space = load_space(space_path);
  FnSpec fn = parse_function(function, space, tol);
  if (samples <= 0) {
    if (!x) throw domain_error("lip: provide --x or --samples");
    auto est =
        run_functional(*space, fn, funcl, PointRef::at(*x), r, rmax, count, budget, threshold);
    emit(io::estimate_to_json(est), out);
    return kExitOk;
  }
  auto xs = sample_points(*space, samples, seed);
  std::vector<lip::Estimate> results(xs.size());
  parallel_for(xs.size(), threads, [&](std::size_t i) {
    results[i] = run_functional(*space, fn, funcl, xs[i], r, rmax, count, budget, threshold);
  });
  io::CsvWriter csv({"x", "functional", "r", "value", "diverged", "witness"});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto& e = results[i];
    csv.add_row({io::fmt(xs[i].x()), lip::to_string(e.functional),
                 io::fmt(e.radius > 0 ? e.radius : e.r_min), io::fmt(e.value),
                 e.diverged ? "1" : "0", e.has_witness ? io::fmt(e.witness.x()) : ""});
  }
  emit_text(csv.str(), csv_path);
  return kExitOk;
}

int cmd_hermeticity(const std::string& space_path, std::optional<double> x, double rmin,
                    double rmax, int budget, bool all, int samples, std::uint64_t seed,
                    int threads, const std::string& csv_path, const std::string& out) {
  auto space = load_space(space_path);
  if (!all) {
    if (!x) throw domain_error("hermeticity: provide --x or --all");
    PointRef p = space->kind() == SpaceKind::finite_matrix
                     ? PointRef::row(static_cast<std::int64_t>(*x))
                     : PointRef::at(*x);
    auto grid = por::default_r_grid(*space, p, rmin, rmax);
    auto rep = por::hermeticity_at(*space, p, grid, budget);
    emit(io::hermeticity_to_json(rep), out);
    return kExitOk;
  }
  std::vector<PointRef> pts;
  if (space->kind() == SpaceKind::interval) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i)
      pts.push_back(PointRef::at(space->as_interval().lo +
                                 (space->as_interval().hi - space->as_interval().lo) *
                                     (0.05 + 0.9 * u01(rng))));
  } else {
    space->for_each_carrier([&](const PointRef& p) {
      pts.push_back(p);
      return static_cast<int>(pts.size()) < samples;
    });
  }
  std::vector<por::HermeticityReport> reps(pts.size());
  parallel_for(pts.size(), threads, [&](std::size_t i) {
    auto grid = por::default_r_grid(*space, pts[i], rmin, rmax);
    reps[i] = por::hermeticity_at(*space, pts[i], grid, budget);
  });
  io::CsvWriter csv({"x", "H", "p_s", "isolated"});
  for (const auto& rep : reps)
    csv.add_row({rep.point.index >= 0 ? io::fmt(static_cast<double>(rep.point.index))
                                      : io::fmt(rep.point.x()),
                 io::fmt(rep.H_estimate), io::fmt(rep.p_s_estimate), rep.isolated ? "1" : "0"});
  emit_text(csv.str(), csv_path);
  return kExitOk;
}

int cmd_verify(const std::string& space_path, const std::string& theorem, double a, double b,
               double lambda, double H_est, int points, int nmax, std::optional<double> x0,
               std::uint64_t seed, int threads, const std::string& csv_path,
               const std::string& out) {
  auto space = load_space(space_path);
  if (theorem == "biglip" && !(b > 2))
    throw domain_error("verify: the pointwise blow-up requires hypothesis b > 2");

  TWFunction f(a, b, implicit_hierarchy(space, static_cast<std::int64_t>(a)), 0);
  std::mt19937_64 rng(seed);
  std::vector<PointRef> xs;
  if (x0) xs.push_back(PointRef::at(*x0));
  double lo = 0.0, hi = 1.0;
  if (space->kind() == SpaceKind::interval) {
    lo = space->as_interval().lo;
    hi = space->as_interval().hi;
  }
  while (static_cast<int>(xs.size()) < points)
    xs.push_back(PointRef::at(lo + (hi - lo) * (0.05 + 0.9 * u01(rng))));

  std::vector<std::vector<thm::WitnessRecord>> rows(xs.size());
  if (theorem == "biglip") {
    parallel_for(xs.size(), threads, [&](std::size_t i) {
      rows[i] = thm::big_lip_witnesses(f, xs[i], 1, nmax);
    });
  } else if (theorem == "littlelip") {
    std::vector<double> rs;
    for (int n = 1; n <= nmax; ++n) rs.push_back(std::pow(a, -n));
    parallel_for(xs.size(), threads, [&](std::size_t i) {
      rows[i] = thm::little_lip_bounds(f, xs[i], rs, lambda, H_est);
    });
  } else {
    throw domain_error("verify: unknown theorem \"" + theorem + "\" (biglip|littlelip)");
  }

  io::CsvWriter csv({"x", "n", "case", "rho", "ratio", "bound", "margin", "pass"});
  int tested = 0, passed = 0;
  double min_margin = kInf;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (const auto& rec : rows[i]) {
      ++tested;
      passed += rec.pass ? 1 : 0;
      min_margin = std::min(min_margin, rec.margin);
      csv.add_row({io::fmt(xs[i].x()), std::to_string(rec.n),
                   rec.case_tag == thm::WitnessCase::net_point ? "net_point" : "off_net",
                   io::fmt(rec.rho), io::fmt(rec.ratio), io::fmt(rec.guaranteed_bound),
                   io::fmt(rec.margin), rec.pass ? "1" : "0"});
    }
  }
  if (!csv_path.empty()) emit_text(csv.str(), csv_path);
  json j;
  j["theorem"] = theorem;
  j["tested"] = tested;
  j["passed"] = passed;
  j["min_margin"] = min_margin;
  emit(j, out);
  return passed == tested ? kExitOk : kExitVerifyFail;
}

int cmd_synth(const std::string& space_path, const std::string& region_text, double a, double b,
              double lambda, bool verify, int samples, double collar, double threshold,
              std::uint64_t seed, const std::string& out) {
  auto space = load_space(space_path);
  auto region = synth::RegionSpec::parse(region_text);
  std::optional<thm::Params> params;
  if (a > 0 && b > 0) {
    thm::Params p;
    p.a = static_cast<long long>(a);
    p.b = static_cast<long long>(b);
    p.lambda = lambda;
    p.lhs = thm::hypothesis_lhs(a, b);
    p.gamma = thm::gamma_for(a, b, lambda);
    if (p.gamma <= 0) throw domain_error("synth: gamma <= 0 for the given a, b, lambda");
    params = p;
  }
  auto sf = synth::synthesize(space, region, params);
  json j;
  j["G"] = sf.region.str();
  j["a"] = sf.params.a;
  j["b"] = sf.params.b;
  j["lambda"] = sf.params.lambda;
  j["gamma"] = sf.params.gamma;
  j["alpha"] = sf.alpha;
  if (!verify) {
    emit(j, out);
    return kExitOk;
  }

  std::mt19937_64 rng(seed);
  std::vector<PointRef> fs, gs, ifs;
  double lo = 0.0, hi = 1.0;
  if (space->kind() == SpaceKind::interval) {
    lo = space->as_interval().lo;
    hi = space->as_interval().hi;
  }
  int guard = 0;
  while ((static_cast<int>(fs.size()) < samples || static_cast<int>(gs.size()) < samples) &&
         ++guard < 1000000) {
    double v = lo + (hi - lo) * u01(rng);
    double bd = kInf;
    for (const auto& [gl, gh] : region.G) bd = std::min({bd, std::abs(v - gl), std::abs(v - gh)});
    if (bd < collar) continue;
    if (region.contains(v)) {
      if (static_cast<int>(gs.size()) < samples) gs.push_back(PointRef::at(v));
    } else {
      if (static_cast<int>(fs.size()) < samples) fs.push_back(PointRef::at(v));
    }
  }
  auto rep = synth::verify_prescribed_sets(sf, fs, gs, fs, threshold, collar);
  j["collar"] = rep.collar;
  j["F_max_Lip"] = rep.F_max_Lip;
  j["IntF_max_LLip"] = rep.IntF_max_LLip;
  j["G_min_growth"] = rep.G_min_growth;
  j["F_tested"] = rep.F_tested;
  j["IntF_tested"] = rep.IntF_tested;
  j["G_tested"] = rep.G_tested;
  json fails = json::array();
  for (const auto& pf : rep.failures) fails.push_back({{"x", pf.x.c[0]}, {"what", pf.what}});
  j["failures"] = fails;
  emit(j, out);
  return rep.pass() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scaled-oscillation toolkit: nets, self-similar functions, blow-up checks"};
  app.require_subcommand(1);

  std::string space_path, out, csv_path;
  int threads_flag = 0;
  app.add_option("--threads", threads_flag, "worker threads (default 1; env TVDW_THREADS)");
  app.fallthrough();

  auto* net = app.add_subcommand("net", "build and certify a greedy maximal net");
  double epsilon = 0.1;
  std::vector<double> seed_pts;
  net->add_option("--space", space_path, "space spec JSON file")->required();
  net->add_option("--epsilon", epsilon, "separation scale")->required();
  net->add_option("--seed-points", seed_pts, "seed coordinates")->delimiter(',');
  net->add_option("--out", out, "output JSON path (default stdout)");

  auto* hier = app.add_subcommand("hierarchy", "build nets at scales a^-n");
  double ha = 2;
  int hdepth = 4;
  bool hmono = false, himpl = false;
  hier->add_option("--space", space_path)->required();
  hier->add_option("--a", ha, "scale base > 1")->required();
  hier->add_option("--depth", hdepth, "last level N");
  hier->add_flag("--monotone", hmono, "nest levels (seeded greedy)");
  hier->add_flag("--implicit", himpl, "analytic lattice nets (integer a)");
  hier->add_option("--out", out);

  auto* ev = app.add_subcommand("eval", "evaluate a type-(a,b) function");
  double ea = 5, eb = 3, ex = 0, etol = 1e-8;
  int estart = 0;
  bool estd = false;
  ev->add_option("--space", space_path)->required();
  ev->add_option("--a", ea)->required();
  ev->add_option("--b", eb)->required();
  ev->add_option("--x", ex)->required();
  ev->add_option("--tol", etol, "absolute tolerance");
  ev->add_option("--index-start", estart, "first series index (0 or 1)");
  ev->add_flag("--standard", estd, "use the standard lattice form directly");
  ev->add_option("--out", out);

  auto* lp = app.add_subcommand("lip", "sampled Lipschitz functionals");
  std::string function = "builtin:identity", functional = "Lip";
  std::optional<double> lx;
  double lr = 0.1, lrmax = 0.25, lthresh = 1e3, ltol = 1e-10;
  int lcount = 12, lbudget = 512, lsamples = 0;
  std::uint64_t lseed = 1;
  lp->add_option("--space", space_path)->required();
  lp->add_option("--function", function, "tw:a,b[,i] or builtin:identity|const|abs");
  lp->add_option("--functional", functional, "Lip^r Lip^r+ Lip_r lip_r LLip^r Lip lip LLip");
  lp->add_option("--x", lx, "evaluation point");
  lp->add_option("--r", lr, "radius for fixed-r functionals");
  lp->add_option("--rmax", lrmax, "largest radius of the schedule");
  lp->add_option("--count", lcount, "schedule length");
  lp->add_option("--budget", lbudget, "ball sample budget");
  lp->add_option("--threshold", lthresh, "divergence threshold");
  lp->add_option("--tol", ltol, "function evaluation tolerance");
  lp->add_option("--samples", lsamples, "batch mode: number of random points");
  lp->add_option("--sample-seed", lseed, "batch mode RNG seed");
  lp->add_option("--csv", csv_path, "batch CSV output path (default stdout)");
  lp->add_option("--out", out);

  auto* hm = app.add_subcommand("hermeticity", "hermeticity and shell porosity");
  std::optional<double> hx;
  double hrmin = 0, hrmax = 0;
  int hbudget = 512, hsamples = 100;
  bool hall = false;
  std::uint64_t hseed = 1;
  hm->add_option("--space", space_path)->required();
  hm->add_option("--x", hx, "point (coordinate, or row index for tables)");
  hm->add_option("--rmin", hrmin, "smallest radius (0 = auto)");
  hm->add_option("--rmax", hrmax, "largest radius (0 = auto)");
  hm->add_option("--budget", hbudget);
  hm->add_flag("--all", hall, "sweep sample points, emit CSV");
  hm->add_option("--samples", hsamples, "sweep size");
  hm->add_option("--sample-seed", hseed);
  hm->add_option("--csv", csv_path, "sweep CSV output path (default stdout)");
  hm->add_option("--out", out);

  auto* vf = app.add_subcommand("verify", "certify blow-up bounds with witnesses");
  std::string theorem = "biglip";
  double va = 5, vb = 3, vlambda = 0.99, vH = 1.0;
  int vpoints = 20, vnmax = 8;
  std::optional<double> vx0;
  std::uint64_t vseed = 1;
  vf->add_option("--theorem", theorem, "biglip | littlelip")->required();
  vf->add_option("--space", space_path)->required();
  vf->add_option("--a", va)->required();
  vf->add_option("--b", vb)->required();
  vf->add_option("--lambda", vlambda, "hermeticity fraction (littlelip)");
  vf->add_option("--H", vH, "hermeticity of the space (littlelip hypothesis)");
  vf->add_option("--points", vpoints, "random evaluation points");
  vf->add_option("--nmax", vnmax, "deepest scale index");
  vf->add_option("--x0", vx0, "include this point first");
  vf->add_option("--sample-seed", vseed);
  vf->add_option("--csv", csv_path, "witness CSV output path");
  vf->add_option("--out", out);

  auto* sy = app.add_subcommand("synth", "prescribed blow-up set construction");
  std::string region_text = "(0.2,0.8)";
  double sa = 0, sb = 0, slambda = 0.99, scollar = 1e-3, sthresh = 1e3;
  int ssamples = 100;
  bool sverify = false;
  std::uint64_t sseed = 1;
  sy->add_option("--space", space_path)->required();
  sy->add_option("--G", region_text, "open set, e.g. \"(0.2,0.8)\" or \"(0,0.1);(0.5,0.6)\"")
      ->required();
  sy->add_option("--a", sa, "series base (0 = derive from hermeticity)");
  sy->add_option("--b", sb, "series weight");
  sy->add_option("--lambda", slambda);
  sy->add_flag("--verify", sverify, "check the three regimes on samples");
  sy->add_option("--samples", ssamples, "samples per region");
  sy->add_option("--collar", scollar, "excluded width around the boundary of G");
  sy->add_option("--threshold", sthresh, "divergence threshold");
  sy->add_option("--sample-seed", sseed);
  sy->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const int threads = thread_count(threads_flag);
  try {
    if (net->parsed()) return cmd_net(space_path, epsilon, seed_pts, out);
    if (hier->parsed()) return cmd_hierarchy(space_path, ha, hdepth, hmono, himpl, out);
    if (ev->parsed()) return cmd_eval(space_path, ea, eb, estart, ex, etol, estd, out);
    if (lp->parsed())
      return cmd_lip(space_path, function, functional, lx, lr, lrmax, lcount, lbudget, lthresh,
                     ltol, lsamples, lseed, threads, csv_path, out);
    if (hm->parsed())
      return cmd_hermeticity(space_path, hx, hrmin, hrmax, hbudget, hall, hsamples, hseed,
                             threads, csv_path, out);
    if (vf->parsed())
      return cmd_verify(space_path, theorem, va, vb, vlambda, vH, vpoints, vnmax, vx0, vseed,
                        threads, csv_path, out);
    if (sy->parsed())
      return cmd_synth(space_path, region_text, sa, sb, slambda, sverify, ssamples, scollar,
                       sthresh, sseed, out);
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resolution_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
