#include "suites.hpp"

#include <algorithm>

#include "rothkit/almost_period.hpp"
#include "rothkit/error.hpp"
#include "rothkit/moments.hpp"
#include "rothkit/r3.hpp"
#include "rothkit/rng.hpp"

namespace rothkit::cli {

namespace {

struct Tally {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string first;

  void add(bool ok, const std::string& what) {
    ++total;
    if (!ok && failed++ == 0) first = what;
  }
  Check check(const std::string& id) const {
    std::string detail = std::to_string(total - failed) + "/" + std::to_string(total) + " passed";
    if (failed) detail += "; first failure: " + first;
    return {id, failed == 0 && total > 0, detail};
  }
};

BohrSet random_bohr(const Group& g, Rng& rng) {
  const std::size_t rank = 1 + rng.below(3);
  std::vector<Index> freqs;
  for (std::size_t i = 0; i < rank; ++i) freqs.push_back(1 + rng.below(g.size() - 1));
  return BohrSet::build(g, freqs, 0.3 + 1.7 * rng.uniform());
}

Group pick_group(Rng& rng) {
  static const std::vector<std::vector<std::int64_t>> choices = {
      {13}, {101}, {243}, {9, 9}, {3, 3, 3, 3}, {5, 25}, {401}};
  return Group::make(choices[rng.below(choices.size())]);
}

void moments_suite(std::vector<Check>& out, int budget) {
  const int nmax = 8 + 2 * budget;
  Tally rec, nu, st, mono, grid;
  for (int n = 1; n <= nmax; ++n) {
    for (int k = 1; k <= 9; ++k) {
      const BinomialSpec spec{n, Rational(k, 10)};
      for (int r = 0; r <= 8; ++r) {
        const Rational a = central_moment(spec, r, MomentMethod::Direct);
        const Rational b = central_moment(spec, r, MomentMethod::Recurrence);
        rec.add(a == b, "n=" + std::to_string(n) + " p=" + std::to_string(k) + "/10 r=" + std::to_string(r));
        if (k <= 5 && r >= 2) {
          mono.add(b <= nu_polynomial(r)(spec.npq()),
                   "n=" + std::to_string(n) + " p=" + std::to_string(k) + "/10 r=" + std::to_string(r));
        }
      }
      if (n <= 10) {
        for (int m = 1; m <= std::min(5, 2 + budget); ++m) {
          grid.add(moment_bound_report(spec, m).pass,
                   "n=" + std::to_string(n) + " p=" + std::to_string(k) + "/10 m=" + std::to_string(m));
        }
      }
    }
  }
  for (int r = 0; r <= 14; ++r) nu.add(nu_polynomial(r) == nu_polynomial_stirling(r), "r=" + std::to_string(r));
  for (int r = 0; r <= 9; ++r) {
    for (int k = 0; k <= r; ++k) {
      st.add(assoc_stirling2(r, k) == assoc_stirling2_enumerated(r, k),
             "r=" + std::to_string(r) + " k=" + std::to_string(k));
    }
  }
  const BoundReport edge = moment_bound_report(BinomialSpec{4, Rational(1, 2)}, 1);
  out.push_back(rec.check("moments.recurrence_vs_direct"));
  out.push_back(nu.check("moments.nu_vs_stirling"));
  out.push_back(st.check("moments.stirling_vs_enumeration"));
  out.push_back(mono.check("moments.mu_le_nu"));
  out.push_back(grid.check("moments.bound_grid"));
  out.push_back({"moments.edge_equality", edge.pass && edge.lhs == edge.rhs_lower,
                 "n=4 p=1/2 m=1: lhs " + to_string(edge.lhs) + " rhs " + to_string(edge.rhs_lower)});
}

void bohr_suite(std::vector<Check>& out, int budget, std::uint64_t seed) {
  Rng rng = Rng(seed).split(0xb0);
  Tally size, reg, dil;
  for (int i = 0; i < 10 * budget; ++i) {
    const Group g = pick_group(rng);
    const BohrSet b = random_bohr(g, rng);
    const std::string tag = g.to_string() + " rank " + std::to_string(b.rank());
    size.add(check_size_bound(b).holds && check_narrow_size_bound(b, 0.5).holds, tag);
    try {
      reg.add(is_regular(regularize(b)).regular, tag);
    } catch (const Error& e) {
      reg.add(false, tag + ": " + e.what());
    }
    const Rational tau(1 + static_cast<std::int64_t>(rng.below(8)), 8);
    const Subset lhs = dilate2(b.narrow(tau)).members();
    dil.add(lhs == dilate2(b).narrow(tau).members() && lhs == b.narrow(tau).members().dilate2(), tag);
  }
  const BohrSet z13 = BohrSet::build(Group::make({13}), {1}, 1.0);
  out.push_back(size.check("bohr.size_bounds"));
  out.push_back(reg.check("bohr.regular_radius"));
  out.push_back(dil.check("bohr.dilation_identity"));
  out.push_back({"bohr.z13_radius1", z13.size() == 5, "|B| = " + std::to_string(z13.size())});
}

void sampling_suite(std::vector<Check>& out, int budget, std::uint64_t seed) {
  Rng rng = Rng(seed).split(0x5a);
  std::size_t total = 0, passed = 0;
  for (int i = 0; i < 20 * budget; ++i) {
    const Group g = rng.bernoulli(0.5) ? Group::make({101}) : Group::make({3, 3, 3, 3});
    Subset a = random_subset(g, 0.1 + 0.4 * rng.uniform(), rng);
    Subset l = random_subset(g, 0.1 + 0.4 * rng.uniform(), rng);
    if (a.empty()) a = Subset::singleton(g, 0);
    if (l.empty()) l = Subset::singleton(g, 0);
    APConfig cfg;
    cfg.m = 1 + static_cast<int>(rng.below(2));
    cfg.epsilon = rng.bernoulli(0.5) ? 0.3 : 0.5;
    cfg.trials = 40;
    cfg.seed = rng.next();
    const std::vector<double> w(g.size(), 1.0 / static_cast<double>(g.size()));
    ++total;
    if (moment_estimate(a, l, cfg, w).pass) ++passed;
  }
  out.push_back({"sampling.moment_bound", passed * 100 >= total * 99,
                 std::to_string(passed) + "/" + std::to_string(total) + " within 3 sigma"});

  const Group f = Group::make({3, 3, 3, 3});
  std::vector<Index> h;
  for (Index x = 0; x < f.size(); ++x) {
    if (f.coords_of(x)[0] == 0) h.push_back(x);
  }
  const Subset hs(f, h);
  APConfig cfg;
  cfg.trials = 10;
  const MomentEstimate e = moment_estimate(hs, hs, cfg, std::vector<double>(f.size(), 1.0 / 81.0));
  out.push_back({"sampling.subgroup_zero", e.empirical == 0.0 && e.analytic == 0.0,
                 "empirical " + std::to_string(e.empirical) + " analytic " + std::to_string(e.analytic)});
}

void increment_suite(std::vector<Check>& out, int budget, const IncrementParams& params) {
  Rng rng = Rng(params.ap.seed).split(0x1c);
  Tally certs, bound, dens, scales, sweep;
  auto trace = [&](const Group& g, const Subset& a) {
    if (a.empty()) return;
    IncrementParams p = params;
    p.ap.seed = rng.next();
    const IterationTrace t = run_iteration(g, a, p);
    const std::string tag = g.to_string() + " |A|=" + std::to_string(a.size());
    certs.add(t.all_verified, tag);
    bound.add(t.within_bound, tag);
    dens.add(t.densities_increase, tag);
  };
  for (int i = 0; i < 5 * budget; ++i) {
    const std::int64_t n = 2 * static_cast<std::int64_t>(20 + rng.below(130)) + 1;
    const Group g = Group::make({n});
    trace(g, random_subset(g, 0.05 + 0.4 * rng.uniform(), rng));
    const Group f = Group::make({3, 3, 3, 3});
    trace(f, random_subset(f, 0.05 + 0.4 * rng.uniform(), rng));
  }
  {
    const Group cube = Group::make({3, 3, 3, 3, 3, 3});
    std::vector<Index> m;
    for (Index x = 0; x < cube.size(); ++x) {
      const Coords c = cube.coords_of(x);
      if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v < 2; })) m.push_back(x);
    }
    trace(cube, Subset(cube, m));
  }
  for (int i = 0; i < 10 * budget; ++i) {
    const Group g = Group::make({2 * static_cast<std::int64_t>(50 + rng.below(200)) + 1});
    const BohrSet b = regularize(random_bohr(g, rng));
    const Subset a = random_subset(g, 0.2 + 0.5 * rng.uniform(), rng).intersect(b.members());
    if (a.empty()) continue;
    const Rational alpha(BigInt(a.size()), BigInt(b.size()));
    const auto d = static_cast<std::int64_t>(b.rank());
    try {
      const BohrSet b1 = regularize(b.narrow(params.c_narrow * alpha / d));
      const BohrSet b2 = regularize(b1.narrow(params.c_narrow / d));
      two_scales(b, a, b1.members(), b2.members(), params);
      scales.add(true, "");
    } catch (const Error& e) {
      scales.add(false, g.to_string() + ": " + e.what());
    }
    const Rational lambda(1 + static_cast<std::int64_t>(rng.below(2)), 4);
    const Rational tau = exact_rational(params.c_dev) * lambda * lambda / d;
    const Subset inner = b.narrow(tau).members();
    Subset t = random_subset(g, 0.5, rng).intersect(inner);
    if (t.empty()) t = Subset::singleton(g, 0);
    const DeviationSweep s = deviation_sweep(b, a, t, tau, lambda, params);
    sweep.add(s.violations == 0, g.to_string());
  }
  out.push_back(certs.check("increment.certificates"));
  out.push_back(bound.check("increment.step_bound"));
  out.push_back(dens.check("increment.densities"));
  out.push_back(scales.check("increment.two_scales"));
  out.push_back(sweep.check("increment.deviation_sweep"));
}

void r3_suite(std::vector<Check>& out, int budget) {
  Tally t;
  for (int n = 1; n <= std::min(kR3MaxN, 12 + 4 * budget); ++n) {
    const R3Result r = r3_exact(n);
    t.add(r.agree && r.witness_ok, "N=" + std::to_string(n));
  }
  out.push_back(t.check("r3.cross_validation"));
  out.push_back({"r3.n5", r3_exact(5).value == 4, "r3(5) = " + std::to_string(r3_exact(5).value)});
}

}  // namespace

SuiteReport verify_suite(const std::string& which, int budget, const IncrementParams& params) {
  require(budget >= 1, ErrorKind::Parse, "budget must be >= 1");
  const std::vector<std::string> known = {"moments", "bohr", "sampling", "increment", "r3"};
  require(which == "all" || std::find(known.begin(), known.end(), which) != known.end(), ErrorKind::Parse,
          "unknown suite '" + which + "'");
  SuiteReport r;
  auto on = [&](const std::string& s) { return which == "all" || which == s; };
  if (on("moments")) moments_suite(r.checks, budget);
  if (on("bohr")) bohr_suite(r.checks, budget, params.ap.seed);
  if (on("sampling")) sampling_suite(r.checks, budget, params.ap.seed);
  if (on("increment")) increment_suite(r.checks, budget, params);
  if (on("r3")) r3_suite(r.checks, budget);
  std::sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
  return r;
}

Json suite_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks) checks.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"checks", std::move(checks)}, {"pass", r.pass}};
}

}  // namespace rothkit::cli
