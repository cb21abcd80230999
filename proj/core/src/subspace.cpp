#include <algorithm>
#include <cmath>

#include "rothkit/almost_period.hpp"
#include "rothkit/error.hpp"
#include "rothkit/finite_field.hpp"
#include "rothkit/harmonic.hpp"

namespace rothkit {

SubspaceReport subspace_ap(const Subset& a, const Subset& l, int p, double epsilon, const APConfig& cfg) {
  const Group& G = a.group();
  require_same_group(G, l.group());
  std::int64_t q = 0;
  require(is_elementary_abelian(G, q) && q % 2 == 1, ErrorKind::Unsupported,
          "subspace_ap needs F_q^n with q an odd prime");
  require(p >= 2 && p % 2 == 0, ErrorKind::Domain, "subspace_ap needs an even p >= 2");
  require(!a.empty() && !l.empty(), ErrorKind::Domain, "subspace_ap needs nonempty A and L");

  SubspaceReport out;
  APConfig c = cfg;
  c.m = p / 2;
  c.epsilon = epsilon;
  const Subset whole = Subset::full(G);
  const std::vector<double> flat(G.size(), 1.0 / static_cast<double>(G.size()));
  out.sampling = almost_period_set(a, l, whole, c, MeasurePair{flat, flat, whole}, 1);

  const Subset diffs = difference_set(out.sampling.periods, out.sampling.periods);
  const Spectrum spec = spectrum(GFunc::uniform(diffs), 0.5);
  auto v = annihilator(G, spec.characters);
  out.basis = std::move(v.basis);
  out.codimension = v.codimension;
  out.subspace = std::move(v.members);

  const double K = static_cast<double>(l.size()) / static_cast<double>(a.size());
  out.folds = static_cast<std::size_t>(
      std::max(1.0, std::ceil(cfg.fold_constant * std::log(2.0 * K / epsilon))));
  const auto g = mean_translate_profile(a, l);
  double half_norm = 0.0;
  for (const double x : g) half_norm += std::pow(x, p / 2.0);
  half_norm = std::pow(half_norm / static_cast<double>(G.size()), 2.0 / p);
  const double k = static_cast<double>(out.folds);
  out.rhs = 2.0 * k * epsilon * std::sqrt(half_norm) + 4.0 * k * epsilon * epsilon;

  Rng pick = Rng(cfg.seed).split(0x73756273ULL);
  const auto ts = capped_members(out.subspace, cfg.verify_cap, pick, out.sampled);
  const double limit = out.rhs * (1.0 + 1e-9) + 1e-12;
  out.verified = true;
  for (const Index t : ts) {
    double s = 0.0;
    for (Index x = 0; x < G.size(); ++x) s += std::pow(std::abs(g[G.add(x, t)] - g[x]), p);
    const double lhs = std::pow(s / static_cast<double>(G.size()), 1.0 / p);
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
