#include <algorithm>
#include <cmath>

#include "rothkit/almost_period.hpp"
#include "rothkit/error.hpp"
#include "rothkit/harmonic.hpp"

namespace rothkit {

namespace {

std::vector<double> indicator_vector(const Subset& s) {
  std::vector<double> v(s.group().size(), 0.0);
  for (const Index x : s.members()) v[x] = 1.0;
  return v;
}

// (E_{x in B} |h(x + t) - g(x)|^p)^{1/p}
double shifted_average_norm(const Subset& b, const std::vector<double>& h, Index t,
                            const std::vector<double>& g, double p) {
  const Group& G = b.group();
  double s = 0.0;
  for (const Index x : b.members()) s += std::pow(std::abs(h[G.add(x, t)] - g[x]), p);
  return std::pow(s / static_cast<double>(b.size()), 1.0 / p);
}

double average_power(const Subset& b, const std::vector<double>& f, double p) {
  double s = 0.0;
  for (const Index x : b.members()) s += std::pow(std::abs(f[x]), p);
  return s / static_cast<double>(b.size());
}

std::vector<double> real_part(const GFunc& f) { return f.real_values(); }

}  // namespace

LpRegularityCheck check_lp_regularity(const BohrSet& b, const std::vector<double>& f, double tau,
                                      double delta, double p) {
  require(f.size() == b.group().size(), ErrorKind::DimensionMismatch, "function length != |G|");
  require(tau >= 0.0 && tau <= 1.0 && p >= 1.0, ErrorKind::Domain, "need tau in [0,1], p >= 1");
  LpRegularityCheck out;
  const double d = static_cast<double>(std::max<std::size_t>(1, b.rank()));
  out.hypothesis = tau <= std::pow(delta, p) / (12.0 * d);
  const BohrSet inner = b.narrow(1.0 - tau);
  double full = 0.0, sup = 0.0;
  for (const Index x : b.members().members()) {
    full += std::pow(std::abs(f[x]), p);
    sup = std::max(sup, std::abs(f[x]));
  }
  double core = 0.0;
  for (const Index x : inner.members().members()) core += std::pow(std::abs(f[x]), p);
  out.lhs = std::pow(full, 1.0 / p);
  out.rhs = std::pow(core, 1.0 / p) + delta * sup * std::pow(static_cast<double>(b.size()), 1.0 / p);
  out.holds = out.lhs <= out.rhs * (1.0 + 1e-12) + 1e-15;
  return out;
}

BootstrapReport bohr_bootstrap(const Subset& a, const Subset& l, const BohrSet& b, const APConfig& cfg) {
  const Group& G = b.group();
  require_same_group(G, a.group());
  require_same_group(G, l.group());
  require(!a.empty() && !l.empty(), ErrorKind::Domain, "bohr_bootstrap needs nonempty A and L");
  require(cfg.epsilon > 0.0 && cfg.epsilon < 1.0 && cfg.delta > 0.0 && cfg.delta < 1.0,
          ErrorKind::Domain, "epsilon and delta must lie in (0,1)");
  require(is_regular(b).regular, ErrorKind::Precondition, "bohr_bootstrap needs a regular Bohr set");

  BootstrapReport out;
  const int m = cfg.m;
  const double p = 2.0 * m;
  out.eta = static_cast<double>(a.size()) / static_cast<double>(l.size());
  const double eta = std::min(1.0, out.eta);
  const double d = static_cast<double>(std::max<std::size_t>(1, b.rank()));
  // The Bohr-measure theorem is applied with delta / 2.
  const double half_delta = cfg.delta / 2.0;
  out.n = std::max(1, 2 * static_cast<int>(std::ceil(std::log(1.0 / (half_delta * eta)))));
  out.r = std::max(2 * out.n + 1,
                   static_cast<int>(std::ceil(cfg.r_constant * std::log(2.0 / (cfg.delta * eta)))));

  // r tau <= (delta/2)^{2m} / 12d makes the regularity transfer exact.
  const double tau0 = cfg.tau_constant * std::pow(half_delta, p) / (12.0 * d * out.r);
  out.b_tau = regularize(b.narrow(tau0));
  out.tau = to_double(out.b_tau->scale() / b.scale());
  const Subset& s = out.b_tau->members();
  out.doubling = static_cast<double>(sumset(a, s).size()) / static_cast<double>(a.size());

  const BohrSet inner = b.narrow(1.0 - out.r * out.tau);
  MeasurePair pair{indicator_vector(inner.members()), indicator_vector(b.members()), s};
  out.pair_invariant =
      check_invariant_pair(pair.nu, pair.mu, iterated_sumset(s, 2 * out.n + 1)).invariant;
  if (!out.pair_invariant) return out;

  APConfig sampling_cfg = cfg;
  sampling_cfg.epsilon = cfg.epsilon / 2.0;
  out.sampling = almost_period_set(a, l, s, sampling_cfg, pair, out.n);
  const Subset& t0 = out.sampling.periods;

  out.chang = chang_sanders(*out.b_tau, t0, 0.5, half_delta * std::sqrt(eta));
  out.t_set = out.chang.bprime;
  const BohrSet& t_set = *out.t_set;
  out.new_rank = t_set.rank() - out.b_tau->rank();

  const auto g = mean_translate_profile(a, l);
  std::vector<double> f(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) f[x] = g[x] * (1.0 - g[x]);
  const Subset& bm = b.members();
  const double fm = std::pow(average_power(bm, f, m), 1.0 / m);
  const double f1 = average_power(bm, f, 1.0);
  const double gm = std::pow(average_power(bm, g, m), 1.0 / m);
  const double g1 = average_power(bm, g, 1.0);
  const double eps = cfg.epsilon;
  out.rhs = eps * std::sqrt(fm) + std::pow(eps, 2.0 - 1.0 / m) * std::pow(f1, 1.0 / p) + cfg.delta;
  out.rhs_alt = eps * std::sqrt(gm) + std::pow(eps, 2.0 - 1.0 / m) * std::pow(g1, 1.0 / p) + cfg.delta;

  // g * sigma with sigma = mu_T0^{(n)} * mu_{-T0}^{(n)}, i.e. |mu_T0^|^{2n} on the dual.
  GFunc smooth_hat = dft(GFunc::from_real(G, g));
  const GFunc t0_hat = dft(GFunc::uniform(t0));
  for (Index i = 0; i < G.size(); ++i) smooth_hat[i] *= std::pow(std::norm(t0_hat[i]), out.n);
  const auto smooth = real_part(inverse_dft(smooth_hat));
  out.fourier_bound = half_delta;

  Rng pick = Rng(cfg.seed).split(0x626f6f74ULL);
  const auto ts = capped_members(t_set.members(), cfg.verify_cap, pick, out.sampled);
  const double limit = out.rhs * (1.0 + 1e-9) + 1e-12;
  std::vector<double> diff(G.size());
  out.verified = true;
  out.fourier_ok = true;
  out.transfer.holds = true;
  out.transfer.hypothesis = true;
  for (const Index t : ts) {
    const double lhs = shifted_average_norm(bm, g, t, g, p);
    out.max_lhs = std::max(out.max_lhs, lhs);
    ++out.checked;
    if (lhs > limit && out.verified) {
      out.verified = false;
      out.violation = t;
    }
    double sup = 0.0;
    for (Index x = 0; x < G.size(); ++x) {
      sup = std::max(sup, std::abs(smooth[G.add(x, t)] - smooth[x]));
      diff[x] = g[G.add(x, t)] - g[x];
    }
    out.fourier_sup = std::max(out.fourier_sup, sup);
    if (sup > out.fourier_bound * (1.0 + 1e-9) + 1e-12) out.fourier_ok = false;
    const auto tr = check_lp_regularity(b, diff, out.r * out.tau, half_delta, p);
    if (tr.lhs - tr.rhs >= out.transfer.lhs - out.transfer.rhs || out.checked == 1) {
      out.transfer.lhs = tr.lhs;
      out.transfer.rhs = tr.rhs;
    }
    out.transfer.holds = out.transfer.holds && tr.holds;
    out.transfer.hypothesis = out.transfer.hypothesis && tr.hypothesis;
  }

  const auto along_t = convolve(GFunc::from_real(G, g), GFunc::uniform(t_set.members()));
  const auto averaged = real_part(along_t);
  out.averaged_lhs = shifted_average_norm(bm, averaged, 0, g, p);
  out.averaged_ok = out.averaged_lhs <= limit;

  const double log_term = std::log(2.0 / (cfg.delta * eta));
  const double mu_s = static_cast<double>(s.size()) / static_cast<double>(out.b_tau->size());
  out.rank_bound = cfg.rank_constant * (m * log_term * log_term * std::log(2.0 * out.doubling) /
                                            (eps * eps) +
                                        std::log(1.0 / mu_s));
  const double dprime = static_cast<double>(std::max<std::size_t>(1, out.new_rank));
  out.radius_bound = b.radius() * out.tau * cfg.delta * std::sqrt(eta) / (d * d * dprime);
  return out;
}

}  // namespace rothkit
