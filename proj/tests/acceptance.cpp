// Acceptance suite: one verdict line per criterion, nonzero exit on any
// failure. The whole battery runs twice and the emitted reports must match
// byte for byte (criterion 10).

#include <chrono>
#include <cmath>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <vector>

#include "tvdw/io.hpp"
#include "tvdw/lipschitz.hpp"
#include "tvdw/porosity.hpp"
#include "tvdw/synth.hpp"
#include "tvdw/theorems.hpp"
#include "tvdw/tw.hpp"

using namespace tvdw;

namespace {

double u01(std::mt19937_64& rng) { return std::ldexp(static_cast<double>(rng() >> 11), -53); }

struct Criterion {
  std::string name;
  bool pass = true;
  double seconds = 0;
  std::string detail;
};

struct Battery {
  std::vector<Criterion> results;
  std::ostringstream report;  // compared byte-for-byte across runs

  void record(Criterion c) {
    // Stable artifact only: timings stay on the console.
    report << "[" << c.name << "] " << (c.pass ? "ok" : "FAIL") << " " << c.detail << "\n";
    results.push_back(std::move(c));
  }
};

SpacePtr unit_grid() {
  return std::make_shared<MetricSpace>(MetricSpace::interval(0, 1, 1e-4));
}
SpacePtr unit_cont() { return std::make_shared<MetricSpace>(MetricSpace::interval(0, 1, 0)); }

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// 1. Greedy hierarchies on [0,1] at resolution 1e-4, a in {2,3,5}, depth 6:
//    exact separation, density margin strictly below epsilon, < 5 s.
void criterion_nets(Battery& bat) {
  Timer t;
  Criterion c;
  c.name = "1 net certification";
  auto space = unit_grid();
  std::ostringstream os;
  for (double a : {2.0, 3.0, 5.0}) {
    NetHierarchy h = build_hierarchy(space, a, 6, /*monotone=*/true);
    for (int n = 0; n <= 6; ++n) {
      Net net = h.net_at(n);
      auto sep = check_separated(net);
      auto dens = check_dense(net, 1e-4);
      const bool ok = sep.separated && dens.dense && dens.dist < net.epsilon;
      c.pass = c.pass && ok;
      if (n == 6)
        os << " a=" << a << ":levels=7,top_size=" << net.points.size()
           << ",top_gap=" << io::fmt(dens.dist);
    }
  }
  c.seconds = t.seconds();
  c.pass = c.pass && c.seconds < 5.0;
  c.detail = os.str();
  bat.record(std::move(c));
}

// 2. Bounds 0 <= f <= a/(a-b) + tol and truncation certificates against a
//    twice-deeper partial sum, 1000 random x, tol 1e-12, < 10 s.
void criterion_tw_bounds(Battery& bat) {
  Timer t;
  Criterion c;
  c.name = "2 tw bounds";
  auto space = unit_cont();
  const double tol = 1e-12;
  std::ostringstream os;
  for (auto [a, b] : {std::pair{4.0, 2.0}, std::pair{5.0, 3.0}, std::pair{10.0, 1.0}}) {
    TWFunction f(a, b, implicit_hierarchy(space, static_cast<std::int64_t>(a)), 0);
    std::mt19937_64 rng(101);
    double vmax = 0;
    for (int i = 0; i < 1000; ++i) {
      double x = u01(rng);
      auto r = f.eval(PointRef::at(x), tol);
      vmax = std::max(vmax, r.value);
      c.pass = c.pass && r.value >= 0 && r.value <= a / (a - b) + tol;
      for (int n : {0, 1, 2, 4, 8, 12}) {
        double gap = f.partial_sum(PointRef::at(x), 2 * n + 10) - f.partial_sum(PointRef::at(x), n);
        c.pass = c.pass && gap >= -1e-15 && gap <= remainder_bound(a, b, n) + tol;
      }
    }
    os << " (" << a << "," << b << "):max=" << io::fmt(vmax) << "<=" << io::fmt(a / (a - b));
  }
  c.seconds = t.seconds();
  c.pass = c.pass && c.seconds < 10.0;
  c.detail = os.str();
  bat.record(std::move(c));
}

// 3. Hierarchy evaluation vs the standard lattice form within 2 tol.
void criterion_oracle_equivalence(Battery& bat) {
  Timer t;
  Criterion c;
  c.name = "3 oracle equivalence";
  auto space = unit_cont();
  const double tol = 1e-10;
  double worst = 0;
  for (auto [a, b] : {std::pair{2.0, 1.0}, std::pair{5.0, 3.0}}) {
    TWFunction f(a, b, implicit_hierarchy(space, static_cast<std::int64_t>(a)), 0);
    std::mt19937_64 rng(103);
    for (int i = 0; i < 1000; ++i) {
      double x = u01(rng);
      double va = f.eval(PointRef::at(x), tol).value;
      double vb = eval_standard_lattice(a, b, x, tol, 0).value;
      worst = std::max(worst, std::abs(va - vb));
      c.pass = c.pass && std::abs(va - vb) <= 2 * tol;
    }
  }
  c.seconds = t.seconds();
  c.detail = " max|diff|=" + io::fmt(worst) + " limit=" + io::fmt(2 * tol);
  bat.record(std::move(c));
}

// 4. Pointwise blow-up for (5,3): net-point case at x = 0 and 20 random
//    off-net points, scales 1..8, ratio >= bound - 1e-6 b^n, < 30 s.
void criterion_big_lip(Battery& bat) {
  Timer t;
  Criterion c;
  c.name = "4 big-lip theorem";
  auto space = unit_cont();
  TWFunction f(5, 3, implicit_hierarchy(space, 5), 0);
  int tested = 0, passed = 0;
  double min_margin = kInf;
  io::CsvWriter csv({"x", "n", "case", "ratio", "bound", "pass"});
  auto run_point = [&](const PointRef& x) {
    auto recs = thm::big_lip_witnesses(f, x, 1, 8);
    for (const auto& rec : recs) {
      ++tested;
      passed += rec.pass ? 1 : 0;
      min_margin = std::min(min_margin, rec.margin / std::pow(3.0, rec.n));
      csv.add_row({io::fmt(x.x()), std::to_string(rec.n),
                   rec.case_tag == thm::WitnessCase::net_point ? "net_point" : "off_net",
                   io::fmt(rec.ratio), io::fmt(rec.guaranteed_bound), rec.pass ? "1" : "0"});
    }
  };
  run_point(PointRef::at(0.0));
  std::mt19937_64 rng(107);
  for (int i = 0; i < 20; ++i) run_point(PointRef::at(0.02 + 0.96 * u01(rng)));
  c.pass = tested == 21 * 8 && passed == tested;
  c.seconds = t.seconds();
  c.pass = c.pass && c.seconds < 30.0;
  c.detail = " witnesses=" + std::to_string(tested) + " passed=" + std::to_string(passed) +
             " min_scaled_margin=" + io::fmt(min_margin);
  bat.report << csv.str();
  bat.record(std::move(c));
}

// 5. Scaled-oscillation blow-up for (600,17), lambda 0.99: hypothesis
//    inequality, witness bounds at r = a^-1..a^-4, and direct sampled
//    sups exceeding (gamma/a) 17^n, 10 random x, < 60 s.
void criterion_little_lip(Battery& bat) {
  Timer t;
  Criterion c;
  c.name = "5 little-lip theorem";
  auto space = unit_cont();
  TWFunction f(600, 17, implicit_hierarchy(space, 600), 0);
  const double lambda = 0.99;
  const double lhs = thm::hypothesis_lhs(600, 17);
  const double gamma = thm::gamma_for(600, 17, lambda);
  c.pass = lhs < 1.0 / 8 && gamma > 0;

  std::vector<double> rs;
  for (int n = 1; n <= 4; ++n) rs.push_back(std::pow(600.0, -n));
  auto fn = f.as_fn(1e-14);
  std::mt19937_64 rng(109);
  int tested = 0, passed = 0, sup_ok = 0;
  io::CsvWriter csv({"x", "n", "ratio", "bound", "sampled_sup", "pass"});
  for (int i = 0; i < 10; ++i) {
    PointRef x = PointRef::at(0.05 + 0.9 * u01(rng));
    auto recs = thm::little_lip_bounds(f, x, rs, lambda, 1.0);
    for (std::size_t k = 0; k < recs.size(); ++k) {
      const auto& rec = recs[k];
      ++tested;
      passed += rec.pass ? 1 : 0;
      double sup = lip::lip_r_ball(*space, fn, x, rs[k], 2048).value;
      const double bound = (gamma / 600.0) * std::pow(17.0, rec.n);
      sup_ok += sup > bound ? 1 : 0;
      csv.add_row({io::fmt(x.x()), std::to_string(rec.n), io::fmt(rec.ratio), io::fmt(bound),
                   io::fmt(sup), rec.pass && sup > bound ? "1" : "0"});
    }
  }
  c.pass = c.pass && tested == 40 && passed == tested && sup_ok == tested;
  c.seconds = t.seconds();
  c.pass = c.pass && c.seconds < 60.0;
  c.detail = " lhs=" + io::fmt(lhs) + "<0.125 gamma=" + io::fmt(gamma) +
             " witnesses=" + std::to_string(passed) + "/" + std::to_string(tested) +
             " sampled_sup_ok=" + std::to_string(sup_ok);
  bat.report << csv.str();
  bat.record(std::move(c));
}

// 6. Hermeticity: interval interior in [0.99, 1]; cantor(8) at 0 in
//    [0.48, 0.52] with porosity dual within 0.02; isolated points 0 / 1.
void criterion_hermeticity(Battery& bat) {
  Timer t;
  Criterion c;
  c.name = "6 hermeticity";
  std::ostringstream os;

  auto iv = MetricSpace::interval(0, 1, 1e-4);
  double hmin = 1, hmax = 0;
  for (double x : {0.2, 0.35, 0.5, 0.65, 0.8}) {
    auto grid = por::default_r_grid(iv, PointRef::at(x), 0, 0.1);
    auto rep = por::hermeticity_at(iv, PointRef::at(x), grid);
    hmin = std::min(hmin, rep.H_estimate);
    hmax = std::max(hmax, rep.H_estimate);
    c.pass = c.pass && rep.H_estimate >= 0.99 && rep.H_estimate <= 1.0 &&
             std::abs(rep.p_s_estimate - (1 - rep.H_estimate)) <= 0.02;
  }
  os << " interval:H=[" << io::fmt(hmin) << "," << io::fmt(hmax) << "]";

  auto cs = MetricSpace::cantor(8);
  auto grid = por::default_r_grid(cs, PointRef::at(0.0));
  auto rep = por::hermeticity_at(cs, PointRef::at(0.0), grid);
  double ps = por::shell_porosity_at(cs, PointRef::at(0.0), grid);
  c.pass = c.pass && rep.H_estimate >= 0.48 && rep.H_estimate <= 0.52 &&
           std::abs(ps - (1 - rep.H_estimate)) <= 0.02;
  os << " cantor:H=" << io::fmt(rep.H_estimate) << ",p_s=" << io::fmt(ps);

  auto fm = MetricSpace::finite_matrix({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}});
  std::vector<double> fgrid{0.5, 0.25, 0.125};
  auto iso = por::hermeticity_at(fm, PointRef::row(1), fgrid);
  c.pass = c.pass && iso.H_estimate == 0.0 && iso.p_s_estimate == 1.0;
  os << " isolated:H=" << io::fmt(iso.H_estimate) << ",p_s=" << io::fmt(iso.p_s_estimate);

  c.seconds = t.seconds();
  c.detail = os.str();
  bat.record(std::move(c));
}

// 7. Ordering of the functionals at shared grids and in the limit, zero
//    violations over 100 random (f, x, r) triples.
void criterion_ordering(Battery& bat) {
  Timer t;
  Criterion c;
  c.name = "7 functional ordering";
  auto space = unit_cont();
  TWFunction t42(4, 2, implicit_hierarchy(space, 4), 0);
  TWFunction t53(5, 3, implicit_hierarchy(space, 5), 0);
  TWFunction t101(10, 1, implicit_hierarchy(space, 10), 0);
  std::vector<lip::RealFn> fns{
      [](const PointRef& p) { return p.x(); },
      [](const PointRef&) { return 1.0; },
      [](const PointRef& p) { return std::abs(p.x() - 0.5); },
      t42.as_fn(1e-11), t53.as_fn(1e-11), t101.as_fn(1e-11)};
  std::mt19937_64 rng(113);
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& fn = fns[i % fns.size()];
    PointRef x = PointRef::at(0.05 + 0.9 * u01(rng));
    double r = 0.01 + 0.2 * u01(rng);
    std::vector<double> grid;
    for (double v = r * 0.6; grid.size() < 10; v *= 0.6) grid.push_back(v);
    auto small = lip::lip_small_r(*space, fn, x, r, grid, 96);
    auto big = lip::lip_big_r(*space, fn, x, r, grid, 96);
    auto pair = lip::llip_r_pairwise(*space, fn, x, r, grid, 96);
    if (!(small.value <= big.value + 1e-12 && big.value <= pair.value + 1e-12)) ++violations;
    auto sched = lip::Schedule::geometric(r, 0.5, 8);
    auto lo = lip::estimate_lip(*space, fn, x, sched, 96);
    auto hi = lip::estimate_Lip(*space, fn, x, sched, 96);
    auto loc = lip::estimate_llip(*space, fn, x, sched, 64);
    if (!(lo.value <= hi.value + 1e-12 && hi.value <= loc.value + 1e-12)) ++violations;
    if ((lo.diverged && !hi.diverged) || (hi.diverged && !loc.diverged)) ++violations;
  }
  c.pass = violations == 0;
  c.seconds = t.seconds();
  c.detail = " violations=" + std::to_string(violations) + "/200";
  bat.record(std::move(c));
}

// 8. Open vs closed ball sups agree within 1e-3 for continuous functions.
void criterion_open_closed(Battery& bat) {
  Timer t;
  Criterion c;
  c.name = "8 open/closed agreement";
  auto space = unit_cont();
  std::vector<lip::RealFn> fns{[](const PointRef& p) { return p.x(); },
                               [](const PointRef& p) { return std::abs(p.x() - 0.5); },
                               [](const PointRef& p) { return p.x() * p.x(); }};
  std::mt19937_64 rng(127);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const auto& fn = fns[i % fns.size()];
    PointRef x = PointRef::at(0.15 + 0.7 * u01(rng));
    double r = 0.01 + 0.1 * u01(rng);
    double sup_open = 0, sup_closed = 0;
    double rho = r;
    for (int k = 0; k < 10; ++k) {
      rho *= 0.75;
      sup_open = std::max(sup_open, lip::lip_r_ball(*space, fn, x, rho, 8192).value);
      sup_closed = std::max(sup_closed, lip::lip_r_closed(*space, fn, x, rho, 8192).value);
    }
    worst = std::max(worst, std::abs(sup_open - sup_closed));
  }
  c.pass = worst <= 1e-3;
  c.seconds = t.seconds();
  c.detail = " max|open-closed|=" + io::fmt(worst);
  bat.record(std::move(c));
}

// 9. Synthesis for G = (0.2, 0.8): bounded regimes on F and Int F, the
//    divergence flag on all G samples outside the collar, < 2 min.
void criterion_synthesis(Battery& bat) {
  Timer t;
  Criterion c;
  c.name = "9 synthesis";
  auto space = unit_cont();
  thm::Params p;
  p.a = 600;
  p.b = 17;
  p.lambda = 0.99;
  p.lhs = thm::hypothesis_lhs(600, 17);
  p.gamma = thm::gamma_for(600, 17, 0.99);
  auto sf = synth::synthesize(space, synth::RegionSpec::parse("(0.2,0.8)"), p);
  const double collar = 1e-3;

  std::mt19937_64 rng(131);
  std::vector<PointRef> fs, gs;
  while (static_cast<int>(gs.size()) < 100) {
    double v = 0.2 + collar + (0.6 - 2 * collar) * u01(rng);
    gs.push_back(PointRef::at(v));
  }
  while (static_cast<int>(fs.size()) < 100) {
    double v = u01(rng) * 0.4;
    v = v < 0.2 ? v : 0.6 + v;  // split across both components of F
    double bd = std::min(std::abs(v - 0.2), std::abs(v - 0.8));
    if (bd < collar) continue;
    fs.push_back(PointRef::at(v));
  }
  auto rep = synth::verify_prescribed_sets(sf, fs, gs, fs, 1e3, collar, 1e-6);
  c.pass = rep.pass() && rep.F_tested == 100 && rep.G_tested == 100 &&
           rep.F_max_Lip <= 1 + 1e-6 && rep.IntF_max_LLip <= 1 + 1e-6;
  c.seconds = t.seconds();
  c.pass = c.pass && c.seconds < 120.0;
  c.detail = " F_max_Lip=" + io::fmt(rep.F_max_Lip) +
             " IntF_max_LLip=" + io::fmt(rep.IntF_max_LLip) +
             " G_min_growth=" + io::fmt(rep.G_min_growth) +
             " failures=" + std::to_string(rep.failures.size());
  bat.record(std::move(c));
}

std::string run_battery(std::vector<Criterion>& results) {
  Battery bat;
  criterion_nets(bat);
  criterion_tw_bounds(bat);
  criterion_oracle_equivalence(bat);
  criterion_big_lip(bat);
  criterion_little_lip(bat);
  criterion_hermeticity(bat);
  criterion_ordering(bat);
  criterion_open_closed(bat);
  criterion_synthesis(bat);
  results = bat.results;
  return bat.report.str();
}

}  // namespace

int main() {
  std::vector<Criterion> first, second;
  const std::string report1 = run_battery(first);
  const std::string report2 = run_battery(second);

  bool all = true;
  for (const auto& c : first) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.name << ":" << c.detail
              << " time=" << io::fmt(c.seconds) << "s\n";
    all = all && c.pass;
  }
  const bool deterministic = report1 == report2;
  std::cout << (deterministic ? "PASS" : "FAIL")
            << "  criterion 10 determinism: two consecutive runs "
            << (deterministic ? "byte-identical" : "DIFFER") << " (" << report1.size()
            << " bytes)\n";
  all = all && deterministic;

  std::cout << (all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}
