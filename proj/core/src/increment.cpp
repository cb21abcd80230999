#include "rothkit/increment.hpp"

#include <algorithm>
#include <cmath>

#include "rothkit/error.hpp"
#include "rothkit/finite_field.hpp"
#include "rothkit/harmonic.hpp"

namespace rothkit {

namespace {

Rational ratio(std::int64_t num, std::int64_t den) { return Rational(BigInt(num), BigInt(den)); }

Rational relative_density(const Subset& a, const Subset& b) {
  return ratio(static_cast<std::int64_t>(a.intersect(b).size()), static_cast<std::int64_t>(b.size()));
}

std::int64_t isize(const Subset& s) { return static_cast<std::int64_t>(s.size()); }

// sum_y h(y) u(x - y) for the two exact self-convolutions.
std::int64_t point_convolution(const Group& G, const std::vector<std::int64_t>& h,
                               const std::vector<std::int64_t>& u, Index x) {
  std::int64_t s = 0;
  for (Index y = 0; y < G.size(); ++y) {
    if (h[y] != 0) s += h[y] * u[G.sub(x, y)];
  }
  return s;
}

struct DeviationData {
  std::vector<std::int64_t> aa;  // 1_A*1_A
  std::vector<std::int64_t> tt;  // 1_T*1_T
  Rational alpha;
  Witness best;
  Rational level;
  bool conclusion = false;
};

DeviationData prepare_deviation(const BohrSet& b, const Subset& a, const Subset& t, const Rational& tau,
                                const Rational& lambda, const IncrementParams& params) {
  require_same_group(b.group(), a.group());
  require_same_group(b.group(), t.group());
  require(lambda >= 0 && lambda <= 1, ErrorKind::Domain, "lambda must lie in [0,1]");
  require(!a.empty() && !t.empty(), ErrorKind::Domain, "deviation lemma needs nonempty A and T");
  require(a.is_subset_of(b.members()), ErrorKind::Precondition, "A must lie inside B");
  const auto d = static_cast<std::int64_t>(std::max<std::size_t>(1, b.rank()));
  require(tau <= exact_rational(params.c_dev) * lambda * lambda / d, ErrorKind::Precondition,
          "tau exceeds c lambda^2 / rank(B)");
  require(t.is_subset_of(b.narrow(tau).members()), ErrorKind::Precondition, "T must lie inside B_tau");
  require(is_regular(b).regular, ErrorKind::Precondition, "deviation lemma needs a regular B");
  DeviationData out;
  out.aa = sumset_counts(a, a);
  out.tt = sumset_counts(t, t);
  out.alpha = ratio(isize(a), isize(b.members()));
  out.best = best_translate(a, t);
  out.level = (1 - 2 * lambda * lambda) * out.alpha;
  out.conclusion = out.best.density >= (1 + lambda) * out.alpha;
  return out;
}

Rational deviation_lhs(const Group& G, const DeviationData& d, const Subset& a, const Subset& t, Index x) {
  const std::int64_t w = point_convolution(G, d.aa, d.tt, x);
  return Rational(BigInt(w), BigInt(isize(a)) * BigInt(isize(t)) * BigInt(isize(t)));
}

void note(Certificate& c, const std::string& key, double value) { c.diagnostics.emplace_back(key, value); }

double average_power(const Subset& domain, const std::vector<double>& g, int p) {
  double s = 0.0;
  for (const Index x : domain.members()) s += std::pow(g[x], p);
  return s / static_cast<double>(domain.size());
}

}  // namespace

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Many3APs: return "Many3APs";
    case CertificateKind::Increment: return "Increment";
    case CertificateKind::Exhausted: return "Exhausted";
  }
  return "?";
}

std::string to_string(StructureKind kind) {
  return kind == StructureKind::Subspace ? "subspace" : "bohr";
}

Certificate Certificate::many_3aps(std::string branch, std::uint64_t count, Rational threshold,
                                   std::vector<Subset> sets) {
  Certificate c;
  c.kind = CertificateKind::Many3APs;
  c.branch = std::move(branch);
  c.count = count;
  c.threshold = std::move(threshold);
  c.sets = std::move(sets);
  return c;
}

Certificate Certificate::exhausted(std::string branch, std::string reason) {
  Certificate c;
  c.kind = CertificateKind::Exhausted;
  c.branch = std::move(branch);
  c.reason = std::move(reason);
  return c;
}

CertificateCheck verify_certificate(const Certificate& c) {
  CertificateCheck out;
  switch (c.kind) {
    case CertificateKind::Exhausted:
      out.ok = true;
      out.detail = "exhausted: " + c.reason;
      return out;
    case CertificateKind::Many3APs: {
      if (c.sets.size() != 3) {
        out.detail = "Many3APs needs three sets";
        return out;
      }
      const auto loop = count_3aps(c.sets[0], c.sets[1], c.sets[2], CountMethod::Loop);
      if (loop != c.count) {
        out.detail = "loop count " + std::to_string(loop) + " != claimed " + std::to_string(c.count);
        return out;
      }
      if (Rational(BigInt(loop)) < c.threshold) {
        out.detail = "count below threshold";
        return out;
      }
      out.ok = true;
      out.detail = "loop count " + std::to_string(loop) + " >= " + to_string(c.threshold);
      return out;
    }
    case CertificateKind::Increment: {
      if (!c.base || !c.structure || c.structure->empty()) {
        out.detail = "Increment needs A and a nonempty structure";
        return out;
      }
      const Subset& s = *c.structure;
      const Subset& a = *c.base;
      const Group& G = s.group();
      if (!(G == a.group()) || !s.contains(G.zero()) || !s.is_symmetric()) {
        out.detail = "structure must be a symmetric set containing 0";
        return out;
      }
      if (c.bohr && !(c.bohr->members() == s)) {
        out.detail = "Bohr set members disagree with the structure";
        return out;
      }
      if (c.structure_kind == StructureKind::Subspace && !c.subspace_basis.empty() &&
          !(span_mod(G, c.subspace_basis) == s)) {
        out.detail = "structure is not the span of its basis";
        return out;
      }
      std::int64_t hits = 0;
      for (const Index y : s.members()) {
        if (a.contains(G.add(c.x, y))) ++hits;
      }
      const Rational measured = ratio(hits, isize(s));
      if (measured != c.alpha_new) {
        out.detail = "recounted density " + to_string(measured) + " != claimed " + to_string(c.alpha_new);
        return out;
      }
      if (measured < c.factor * c.alpha) {
        out.detail = "density " + to_string(measured) + " below factor * alpha";
        return out;
      }
      out.ok = true;
      out.detail = "density " + to_string(measured) + " >= " + to_string(c.factor) + " * " +
                   to_string(c.alpha);
      return out;
    }
  }
  return out;
}

Witness best_translate(const Subset& a, const Subset& s) {
  require_same_group(a.group(), s.group());
  require(!s.empty(), ErrorKind::Domain, "structure must be nonempty");
  const auto counts = sumset_counts(a, s);
  Witness w;
  for (Index x = 0; x < counts.size(); ++x) {
    if (counts[x] > w.count) {
      w.count = counts[x];
      w.x = x;
    }
  }
  w.density = ratio(w.count, isize(s));
  return w;
}

Certificate increment_or_exhausted(std::string branch, const Subset& a, const Subset& s,
                                   std::optional<BohrSet> bohr, const Rational& alpha,
                                   const Rational& factor) {
  const Witness w = best_translate(a, s);
  if (w.density < factor * alpha) {
    Certificate c = Certificate::exhausted(
        std::move(branch), "measured " + to_string(w.density) + " < target " + to_string(factor) +
                               " * " + to_string(alpha));
    note(c, "measured", to_double(w.density));
    note(c, "target", to_double(factor * alpha));
    return c;
  }
  Certificate c;
  c.kind = CertificateKind::Increment;
  c.branch = std::move(branch);
  c.structure_kind = StructureKind::Bohr;
  c.structure = s;
  c.bohr = std::move(bohr);
  c.base = a;
  c.x = w.x;
  c.alpha = alpha;
  c.alpha_new = w.density;
  c.factor = factor;
  return c;
}

Certificate ff_dichotomy_step(const Subset& a, const IncrementParams& params) {
  const Group& G = a.group();
  std::int64_t q = 0;
  require(is_elementary_abelian(G, q) && q % 2 == 1, ErrorKind::Unsupported,
          "ff_dichotomy_step needs F_q^n with q an odd prime");
  require(params.m >= 1, ErrorKind::Domain, "m must be >= 1");
  require(!a.empty(), ErrorKind::Domain, "A must be nonempty");

  const Rational alpha = ratio(isize(a), static_cast<std::int64_t>(G.size()));
  const std::uint64_t count = count_3aps(a);
  const Rational threshold = alpha * isize(a) * isize(a) / 2;
  if (Rational(BigInt(count)) >= threshold) {
    return Certificate::many_3aps("ff", count, threshold, {a, a, a});
  }

  const auto g = mean_translate_profile(a, a);
  const int m = params.m;
  const double norm = std::pow(average_power(Subset::full(G), g, 2 * m), 1.0 / (2.0 * m));
  const double a_d = to_double(alpha);
  const bool large = norm >= 10.0 * a_d;
  const std::string branch = large ? "ff-large-norm" : "ff-small-norm";
  const int p = large ? 2 * m : 4 * m;
  const double eps = std::sqrt(a_d) / 100.0;
  const Rational target = large ? params.ff_large_target : params.ff_small_target;

  SubspaceReport sub;
  try {
    sub = subspace_ap(a, a, p, eps, params.ap);
  } catch (const Error& e) {
    Certificate c = Certificate::exhausted(branch, std::string("subspace construction failed: ") + e.what());
    note(c, "norm", norm);
    return c;
  }
  Certificate c = increment_or_exhausted(branch, a, sub.subspace, std::nullopt, alpha, target);
  c.structure_kind = StructureKind::Subspace;
  if (c.kind == CertificateKind::Increment) c.subspace_basis = sub.basis;
  note(c, "norm", norm);
  note(c, "epsilon", eps);
  note(c, "codimension", static_cast<double>(sub.codimension));
  note(c, "ap_verified", sub.verified ? 1.0 : 0.0);
  note(c, "ap_max_lhs", sub.max_lhs);
  note(c, "ap_rhs", sub.rhs);
  return c;
}

DeviationVerdict deviation_to_increment(const BohrSet& b, const Subset& a, const Subset& t,
                                        const Rational& tau, const Rational& lambda, Index x,
                                        const IncrementParams& params) {
  const DeviationData d = prepare_deviation(b, a, t, tau, lambda, params);
  require(b.narrow(tau).contains(x), ErrorKind::Precondition, "x must lie in B_tau");
  DeviationVerdict v;
  v.lhs = deviation_lhs(b.group(), d, a, t, x);
  v.hypothesis_level = d.level;
  v.hypothesis = v.lhs <= d.level;
  v.sup = d.best.density;
  v.witness = d.best.x;
  v.conclusion = d.conclusion;
  v.consistent = !v.hypothesis || v.conclusion;
  return v;
}

DeviationSweep deviation_sweep(const BohrSet& b, const Subset& a, const Subset& t, const Rational& tau,
                               const Rational& lambda, const IncrementParams& params) {
  const DeviationData d = prepare_deviation(b, a, t, tau, lambda, params);
  DeviationSweep out;
  out.increment_side = d.conclusion;
  const BohrSet inner = b.narrow(tau);
  for (const Index x : inner.members().members()) {
    ++out.points;
    if (deviation_lhs(b.group(), d, a, t, x) <= d.level) {
      ++out.hypothesis_hits;
      if (!d.conclusion) ++out.violations;
    }
  }
  return out;
}

TwoScalesResult two_scales(const BohrSet& b, const Subset& a, const Subset& b1, const Subset& b2,
                           const IncrementParams& params) {
  require(!a.empty() && !b1.empty() && !b2.empty(), ErrorKind::Domain, "two_scales needs nonempty sets");
  require(a.is_subset_of(b.members()), ErrorKind::Precondition, "A must lie inside B");
  require(is_regular(b).regular, ErrorKind::Precondition, "two_scales needs a regular B");
  const Rational alpha = relative_density(a, b.members());
  const auto d = static_cast<std::int64_t>(std::max<std::size_t>(1, b.rank()));
  const Subset narrowed = b.narrow(params.c_narrow * alpha / d).members();
  require(b1.is_subset_of(narrowed) && b2.is_subset_of(narrowed), ErrorKind::Precondition,
          "B' and B'' must lie inside B_{c alpha / d}");

  TwoScalesResult out;
  const Rational high = Rational(9, 8) * alpha;
  const Witness w1 = best_translate(a, b1);
  if (w1.density >= high) {
    out.which = 1;
    out.increment = w1;
    return out;
  }
  const Witness w2 = best_translate(a, b2);
  if (w2.density >= high) {
    out.which = 2;
    out.increment = w2;
    return out;
  }
  const auto c1 = sumset_counts(a, b1);
  const auto c2 = sumset_counts(a, b2);
  const Rational low = Rational(3, 4) * alpha;
  for (const Index x : b.members().members()) {
    const Rational v1 = ratio(c1[x], isize(b1));
    if (v1 < low) continue;
    const Rational v2 = ratio(c2[x], isize(b2));
    if (v2 < low) continue;
    out.dense_point = true;
    out.x = x;
    out.value1 = v1;
    out.value2 = v2;
    return out;
  }
  fail(ErrorKind::InternalConsistency, "two_scales: neither a dense point nor an increment was found");
}

Certificate two_set_dichotomy(const BohrSet& b, const Subset& a, const BohrSet& b_prime,
                              const Subset& a_prime, const IncrementParams& params) {
  require(!a.empty() && !a_prime.empty(), ErrorKind::Domain, "two_set_dichotomy needs nonempty sets");
  require(a.is_subset_of(b.members()), ErrorKind::Precondition, "A must lie inside B");
  const Subset doubled = a_prime.dilate2();
  require(doubled.is_subset_of(b_prime.members()), ErrorKind::Precondition, "2.A' must lie inside B'");
  require(is_regular(b).regular && is_regular(b_prime).regular, ErrorKind::Precondition,
          "two_set_dichotomy needs regular B and B'");

  const Rational alpha =
      std::min(relative_density(a, b.members()), relative_density(doubled, b_prime.members()));
  const std::uint64_t count = count_3aps(a, a_prime, a);
  const Rational threshold = alpha * isize(a) * isize(a_prime) / 4;
  if (Rational(BigInt(count)) >= threshold) {
    return Certificate::many_3aps("two-set", count, threshold, {a, a_prime, a});
  }

  const int m = params.m;
  const auto g = mean_translate_profile(a, a);
  const double norm = std::pow(average_power(b_prime.members(), g, 2 * m), 1.0 / (2.0 * m));
  const double a_d = to_double(alpha);
  const bool large = norm >= 10.0 * a_d;
  const std::string branch = large ? "two-set-large-norm" : "two-set-small-norm";

  APConfig cfg = params.ap;
  cfg.m = large ? m : 2 * m;
  cfg.epsilon = std::min(0.5, params.eps_constant * std::sqrt(a_d));
  cfg.delta = std::min(0.5, params.delta_constant * a_d);

  std::optional<BohrSet> t_set;
  std::string failure;
  bool bootstrap_verified = false;
  double bootstrap_lhs = 0.0, bootstrap_rhs = 0.0;
  try {
    const BootstrapReport rep = bohr_bootstrap(a, a, b_prime, cfg);
    t_set = rep.t_set;
    bootstrap_verified = rep.verified;
    bootstrap_lhs = rep.max_lhs;
    bootstrap_rhs = rep.rhs;
    if (!rep.pair_invariant) failure = "measure pair not invariant at desk scale";
  } catch (const Error& e) {
    failure = e.what();
  }

  std::optional<DeviationVerdict> deviation;
  if (!large && t_set) {
    // Deviation lemma with lambda = 1/2 at the point of 2.A' where the smoothed count dips lowest.
    const Rational lambda(1, 2);
    const auto d = static_cast<std::int64_t>(std::max<std::size_t>(1, b.rank()));
    const Rational tau = exact_rational(params.c_dev) * lambda * lambda / d;
    const Subset& t = t_set->members();
    if (t.is_subset_of(b.narrow(tau).members())) {
      const auto aa = sumset_counts(a, a);
      const auto tt = sumset_counts(t, t);
      const BohrSet inner = b.narrow(tau);
      std::optional<Index> lowest;
      std::int64_t low = 0;
      for (const Index x : doubled.members()) {
        if (!inner.contains(x)) continue;
        const std::int64_t w = point_convolution(b.group(), aa, tt, x);
        if (!lowest || w < low) {
          lowest = x;
          low = w;
        }
      }
      if (lowest) deviation = deviation_to_increment(b, a, t, tau, lambda, *lowest, params);
    }
  }

  auto decorate = [&](Certificate c) {
    note(c, "alpha", a_d);
    note(c, "norm", norm);
    note(c, "epsilon", cfg.epsilon);
    note(c, "delta", cfg.delta);
    note(c, "bootstrap_verified", bootstrap_verified ? 1.0 : 0.0);
    note(c, "bootstrap_max_lhs", bootstrap_lhs);
    note(c, "bootstrap_rhs", bootstrap_rhs);
    if (deviation) {
      note(c, "deviation_hypothesis", deviation->hypothesis ? 1.0 : 0.0);
      note(c, "deviation_conclusion", deviation->conclusion ? 1.0 : 0.0);
    }
    return c;
  };

  if (t_set) {
    Certificate c = increment_or_exhausted(branch, a, t_set->members(), t_set, alpha, params.two_set_target);
    if (c.kind == CertificateKind::Increment) return decorate(std::move(c));
  }
  // Otherwise B' itself may already carry the increment.
  Certificate c =
      increment_or_exhausted(branch, a, b_prime.members(), b_prime, alpha, params.two_set_target);
  if (c.kind != CertificateKind::Increment && !failure.empty()) c.reason += "; bootstrap: " + failure;
  return decorate(std::move(c));
}

}  // namespace rothkit
