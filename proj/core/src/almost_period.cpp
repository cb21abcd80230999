#include "rothkit/almost_period.hpp"

#include <algorithm>
#include <cmath>

#include "rothkit/error.hpp"
#include "rothkit/harmonic.hpp"

namespace rothkit {

namespace {

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

std::vector<std::int64_t> tuple_histogram(const Subset& a, std::size_t k, Rng& rng) {
  std::vector<std::int64_t> hist(a.group().size(), 0);
  for (std::size_t j = 0; j < k; ++j) ++hist[random_member(a, rng)];
  return hist;
}

std::vector<double> sampled_profile(const Subset& a, const Subset& l, std::size_t k, Rng& rng) {
  const Group& g = a.group();
  std::vector<std::int64_t> ind(g.size(), 0);
  for (const Index x : l.members()) ind[x] = 1;
  const auto counts = integer_convolution(g, tuple_histogram(a, k, rng), ind);
  std::vector<double> out(g.size());
  for (Index x = 0; x < g.size(); ++x) out[x] = static_cast<double>(counts[x]) / static_cast<double>(k);
  return out;
}

// sum_x w(x) |h(x + t) - g(x)|^p
double shifted_power_sum(const Group& G, const std::vector<double>& h, Index t,
                         const std::vector<double>& g, const std::vector<double>& w, int p) {
  double s = 0.0;
  for (Index x = 0; x < G.size(); ++x) {
    if (w[x] == 0.0) continue;
    s += w[x] * ipow(std::abs(h[G.add(x, t)] - g[x]), p);
  }
  return s;
}

double sum_power(const std::vector<double>& f, const std::vector<double>& w, int p) {
  double s = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) s += w[x] * ipow(f[x], p);
  return s;
}

}  // namespace

std::vector<double> mean_translate_profile(const Subset& a, const Subset& l) {
  require(!a.empty(), ErrorKind::Domain, "mu_A needs a nonempty A");
  const auto counts = sumset_counts(a, l);
  std::vector<double> out(counts.size());
  for (std::size_t x = 0; x < counts.size(); ++x) {
    out[x] = static_cast<double>(counts[x]) / static_cast<double>(a.size());
  }
  return out;
}

GFunc fluctuation(const Subset& a, const Subset& l) {
  auto g = mean_translate_profile(a, l);
  for (auto& v : g) v = v * (1.0 - v);
  return GFunc::from_real(a.group(), g);
}

GFunc sampled_convolution(const Subset& a, const Subset& l, std::size_t k, Rng& rng) {
  require_same_group(a.group(), l.group());
  require(k >= 1, ErrorKind::Domain, "sample length must be >= 1");
  require(!a.empty(), ErrorKind::Domain, "cannot sample from an empty A");
  return GFunc::from_real(a.group(), sampled_profile(a, l, k, rng));
}

GFunc sampled_convolution(const Subset& a, const Subset& l, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return sampled_convolution(a, l, k, rng);
}

double weighted_lp(const std::vector<double>& h, const std::vector<double>& w, double p) {
  require(h.size() == w.size(), ErrorKind::DimensionMismatch, "weight length mismatch");
  double s = 0.0;
  for (std::size_t x = 0; x < h.size(); ++x) s += w[x] * std::pow(std::abs(h[x]), p);
  return std::pow(s, 1.0 / p);
}

std::size_t sampling_length(int m, double epsilon, double constant) {
  require(m >= 1 && epsilon > 0.0, ErrorKind::Domain, "sampling length needs m >= 1, eps > 0");
  return static_cast<std::size_t>(std::ceil(constant * m / (epsilon * epsilon) - 1e-9));
}

MomentEstimate moment_estimate(const Subset& a, const Subset& l, const APConfig& cfg,
                               const std::vector<double>& weight) {
  require(cfg.trials > 0, ErrorKind::Domain, "moment_estimate needs trials >= 1");
  require(weight.size() == a.group().size(), ErrorKind::DimensionMismatch, "weight length != |G|");
  MomentEstimate out;
  out.m = cfg.m;
  out.epsilon = cfg.epsilon;
  out.trials = cfg.trials;
  out.seed = cfg.seed;
  out.k = cfg.k ? cfg.k : sampling_length(cfg.m, cfg.epsilon, cfg.sample_constant);

  const auto g = mean_translate_profile(a, l);
  std::vector<double> f(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) f[x] = g[x] * (1.0 - g[x]);
  const int m = cfg.m;
  out.analytic = ipow(cfg.epsilon, 2 * m) * sum_power(f, weight, m) +
                 ipow(cfg.epsilon, 4 * m - 2) * sum_power(f, weight, 1);

  const Rng base(cfg.seed);
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = base.split(trial);
    const auto h = sampled_profile(a, l, out.k, rng);
    const double v = shifted_power_sum(a.group(), h, 0, g, weight, 2 * m);
    sum += v;
    sum_sq += v * v;
  }
  const auto n = static_cast<double>(cfg.trials);
  out.empirical = sum / n;
  if (cfg.trials > 1) {
    const double var = std::max(0.0, (sum_sq - n * out.empirical * out.empirical) / (n - 1.0));
    out.std_error = std::sqrt(var / n);
  }
  out.pass = out.empirical <= out.analytic + 3.0 * out.std_error;
  return out;
}

InvarianceVerdict check_invariant_pair(const std::vector<double>& nu, const std::vector<double>& mu,
                                       const Subset& s) {
  const Group& G = s.group();
  require(nu.size() == G.size() && mu.size() == G.size(), ErrorKind::DimensionMismatch,
          "measure length != |G|");
  InvarianceVerdict v;
  for (const Index t : s.members()) {
    for (Index x = 0; x < G.size(); ++x) {
      if (nu[G.add(x, t)] > mu[x]) {
        v.invariant = false;
        v.t = t;
        v.x = x;
        return v;
      }
    }
  }
  return v;
}

InvarianceVerdict check_invariant_pair(const MeasurePair& pair) {
  return check_invariant_pair(pair.nu, pair.mu, pair.invariance);
}

std::vector<Index> capped_members(const Subset& s, std::size_t cap, Rng& rng, bool& sampled) {
  sampled = s.size() > cap;
  if (!sampled) return s.members();
  const auto picks =
      random_subset_of_size(Group::make({static_cast<std::int64_t>(s.size())}), cap, rng).members();
  std::vector<Index> out;
  out.reserve(cap);
  for (const Index i : picks) out.push_back(s.members()[i]);
  return out;
}

APSetReport almost_period_set(const Subset& a, const Subset& l, const Subset& s, const APConfig& cfg,
                              const MeasurePair& pair, int n) {
  const Group& G = a.group();
  require_same_group(G, l.group());
  require_same_group(G, s.group());
  require(n >= 1 && cfg.m >= 1, ErrorKind::Domain, "almost_period_set needs n, m >= 1");
  require(!a.empty() && !s.empty(), ErrorKind::Domain, "almost_period_set needs nonempty A and S");
  require(cfg.epsilon > 0.0 && cfg.epsilon < 1.0, ErrorKind::Domain, "epsilon must lie in (0,1)");
  require(cfg.ap_trials > 0, ErrorKind::Domain, "ap_trials must be >= 1");
  require(pair.nu.size() == G.size() && pair.mu.size() == G.size(), ErrorKind::DimensionMismatch,
          "measure length != |G|");

  const Subset window = iterated_sumset(difference_set(s, s), n);
  const auto inv = check_invariant_pair(pair.nu, pair.mu, window);
  require(inv.invariant, ErrorKind::Precondition, "measure pair is not (nS - nS)-invariant");

  APSetReport out;
  out.m = cfg.m;
  out.n = n;
  out.epsilon = cfg.epsilon;
  out.seed = cfg.seed;
  const int m = cfg.m;
  const auto g = mean_translate_profile(a, l);
  std::vector<double> f(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) f[x] = g[x] * (1.0 - g[x]);
  const double fm = sum_power(f, pair.mu, m);
  const double f1 = sum_power(f, pair.mu, 1);
  const double root = 1.0 / (2.0 * m);
  const double eps0 = cfg.epsilon / (2.0 * n);
  out.threshold = eps0 * std::pow(fm, root) + std::pow(eps0, 2.0 - 1.0 / m) * std::pow(f1, root);
  out.theorem_rhs = cfg.epsilon * std::pow(fm, root) +
                    std::pow(cfg.epsilon, 2.0 - 1.0 / m) * std::pow(f1, root) /
                        std::pow(static_cast<double>(n), 1.0 - 1.0 / m);
  out.chained_rhs = 2.0 * n * out.threshold;

  // Markov at level 0.99: the lemma at eps0 / 100^{1/2m} bounds 100 E X^{2m}.
  std::size_t k = cfg.k;
  if (k == 0) {
    k = sampling_length(m, eps0 / std::pow(100.0, root), cfg.sample_constant);
  }
  if (k > cfg.max_sample_length) {
    k = cfg.max_sample_length;
    out.k_capped = true;
  }
  out.k = k;
  out.doubling = static_cast<double>(sumset(s, a).size()) / static_cast<double>(a.size());
  out.density_bound = 0.99 * std::pow(out.doubling, -cfg.density_constant * m * n * n /
                                                         (cfg.epsilon * cfg.epsilon));

  const double good_level = ipow(out.threshold, 2 * m) * (1.0 + 1e-12);
  const Rng base(cfg.seed);
  std::vector<Index> best;
  bool found = false;
  for (std::size_t trial = 0; trial < cfg.ap_trials; ++trial) {
    Rng rng = base.split(trial);
    const auto h0 = sampled_profile(a, l, k, rng);
    // a = a' + s0 shifts the sampled profile: mu_a*1_L(x) = h0(x - s0).
    const Index s0 = random_member(s, rng);
    std::vector<Index> good;
    for (const Index t : s.members()) {
      if (shifted_power_sum(G, h0, G.sub(t, s0), g, pair.mu, 2 * m) <= good_level) good.push_back(t);
    }
    ++out.tuples_tried;
    if (!found || good.size() > best.size()) {
      best = std::move(good);
      found = true;
    }
    if (best.size() == s.size()) break;
  }
  if (best.empty()) {
    fail(ErrorKind::SamplingFailure, "no good tuple among " + std::to_string(out.tuples_tried) +
                                         " samples; retry with another seed");
  }
  out.periods = Subset(G, best);
  out.density_ratio = static_cast<double>(best.size()) / static_cast<double>(s.size());

  const Subset chain = iterated_sumset(difference_set(out.periods, out.periods), n);
  out.population = chain.size();
  Rng pick = base.split(0x7665726966ULL);
  const auto ts = capped_members(chain, cfg.verify_cap, pick, out.sampled);
  const double limit = std::min(out.theorem_rhs, out.chained_rhs) * (1.0 + 1e-9) + 1e-12;
  out.verified = true;
  for (const Index t : ts) {
    const double lhs = std::pow(shifted_power_sum(G, g, t, g, pair.nu, 2 * m), root);
    out.max_lhs = std::max(out.max_lhs, lhs);
    ++out.checked;
    if (lhs > limit && out.verified) {
      out.verified = false;
      out.violation = t;
    }
  }
  return out;
}

}  // namespace rothkit
