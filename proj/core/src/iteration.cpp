#include <algorithm>

#include "rothkit/error.hpp"
#include "rothkit/harmonic.hpp"
#include "rothkit/increment.hpp"

namespace rothkit {

namespace {

Rational density_in(const Subset& a, const Subset& b) {
  return Rational(BigInt(a.intersect(b).size()), BigInt(b.size()));
}

}  // namespace

Certificate main_iterator_step(const BohrSet& b, const Subset& a, const IncrementParams& params) {
  require(!a.empty(), ErrorKind::Domain, "main_iterator_step needs a nonempty A");
  require(a.is_subset_of(b.members()), ErrorKind::Precondition, "A must lie inside B");
  require(is_regular(b).regular, ErrorKind::Precondition, "main_iterator_step needs a regular B");
  require(b.group().odd_order(), ErrorKind::Unsupported, "main_iterator_step needs odd order");

  // Recomputed on entry, so "increasing alpha if necessary" is automatic.
  const Rational alpha = density_in(a, b.members());
  const auto d = static_cast<std::int64_t>(std::max<std::size_t>(1, b.rank()));
  const BohrSet b1 = regularize(b.narrow(params.c_narrow * alpha / d));
  const BohrSet b2 = regularize(b1.narrow(params.c_narrow / d));

  const TwoScalesResult ts = two_scales(b, a, b1.members(), b2.members(), params);
  if (!ts.dense_point) {
    const BohrSet& hit = ts.which == 1 ? b1 : b2;
    return increment_or_exhausted("two-scales", a, hit.members(), hit, alpha, params.iterator_target);
  }

  // 1_A*mu_{B1}(x) = mu_{B1}((A - x) ∩ B1) since B1 is symmetric.
  const Subset shifted = a.translate(b.group().neg(ts.x));
  const Subset a1 = shifted.intersect(b1.members());
  const Subset a2 = shifted.intersect(b2.members());
  const std::uint64_t count = count_3aps(a1, a2, a1);
  const Rational threshold = Rational(3, 16) * alpha * a1.size() * a2.size();
  if (Rational(BigInt(count)) >= threshold) {
    return Certificate::many_3aps("main-iterator", count, threshold, {a1, a2, a1});
  }

  const BohrSet b_prime = dilate2(b2);
  Certificate inner = two_set_dichotomy(b1, a1, b_prime, a2, params);
  if (inner.kind != CertificateKind::Increment) return inner;
  // Lift back to A: 1_A*mu_T(x + y) >= 1_{A1}*mu_T(y), so 3/2 * 3/4 alpha is reached on A itself.
  Certificate lifted =
      increment_or_exhausted("main-iterator/" + inner.branch, a, *inner.structure, inner.bohr, alpha,
                             params.iterator_target);
  lifted.diagnostics = inner.diagnostics;
  return lifted;
}

std::size_t iteration_step_bound(const Rational& alpha) {
  require(alpha > 0 && alpha <= 1, ErrorKind::Domain, "alpha must lie in (0,1]");
  // Smallest k with (9/8)^k alpha >= 1, i.e. ceil(log_{9/8}(1/alpha)).
  std::size_t k = 0;
  Rational v = alpha;
  while (v < 1) {
    v *= Rational(9, 8);
    ++k;
  }
  return k + 1;
}

IterationTrace run_iteration(const Group& g, const Subset& a, const IncrementParams& params) {
  require_same_group(g, a.group());
  require(g.odd_order(), ErrorKind::Unsupported, "run_iteration needs a group of odd order");
  require(!a.empty(), ErrorKind::Domain, "run_iteration needs a nonempty A");

  IterationTrace trace;
  trace.group = g.to_string();
  trace.initial_alpha = Rational(BigInt(a.size()), BigInt(g.size()));
  trace.step_bound = iteration_step_bound(trace.initial_alpha);

  // B^(0) = Bohr({trivial}, 2) = G.
  BohrSet b = BohrSet::build(g, {g.zero()}, 2.0);
  Subset current = a;
  const Rng seeds(params.ap.seed);
  trace.all_verified = true;
  trace.densities_increase = true;

  for (std::size_t i = 0;; ++i) {
    IterationStep step;
    step.index = i;
    step.rank = b.rank();
    step.radius = b.radius();
    step.scale = b.scale();
    step.alpha = density_in(current, b.members());
    step.set_size = current.size();
    step.bohr_size = b.size();
    step.t_count = count_3aps(current);
    step.seed = seeds.split(i).key();
    step.bohr = b;

    if (i >= trace.step_bound) {
      step.certificate = Certificate::exhausted("run-iteration", "step bound reached");
    } else {
      IncrementParams local = params;
      local.ap.seed = step.seed;
      step.certificate = main_iterator_step(b, current, local);
    }
    step.verified = verify_certificate(step.certificate).ok;
    trace.all_verified = trace.all_verified && step.verified;

    if (!trace.steps.empty() && trace.steps.back().certificate.kind == CertificateKind::Increment &&
        step.alpha < params.iterator_target * trace.steps.back().alpha) {
      trace.densities_increase = false;
    }
    const Certificate cert = step.certificate;
    trace.steps.push_back(std::move(step));
    if (cert.kind != CertificateKind::Increment || !trace.steps.back().verified) {
      trace.outcome = cert.kind;
      break;
    }
    // A_{i+1} = (A_i - x) ∩ T, of density alpha' in T.
    current = current.translate(g.neg(cert.x)).intersect(*cert.structure);
    b = *cert.bohr;
  }
  trace.within_bound = trace.steps.size() <= trace.step_bound;
  return trace;
}

}  // namespace rothkit
