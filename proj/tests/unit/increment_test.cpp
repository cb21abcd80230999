#include <gtest/gtest.h>

#include <algorithm>

#include "rothkit/bohr.hpp"
#include "rothkit/error.hpp"
#include "rothkit/harmonic.hpp"
#include "rothkit/increment.hpp"
#include "rothkit/r3.hpp"
#include "rothkit/rng.hpp"

using namespace rothkit;

namespace {

BohrSet trivial_bohr(const Group& g) { return BohrSet::build(g, {g.zero()}, 2.0); }

Subset where(const Group& g, const std::function<bool(const Coords&)>& pred) {
  std::vector<Index> m;
  for (Index x = 0; x < g.size(); ++x) {
    if (pred(g.coords_of(x))) m.push_back(x);
  }
  return Subset(g, m);
}

Subset interval(const Group& g, std::int64_t lo, std::int64_t hi) {
  const auto n = static_cast<std::int64_t>(g.size());
  std::vector<Index> m;
  for (std::int64_t x = lo; x <= hi; ++x) m.push_back(static_cast<Index>(((x % n) + n) % n));
  return Subset(g, m);
}

}  // namespace

TEST(FiniteField, WholeSpaceHasEveryProgression) {
  const Group f = Group::make({3, 3, 3});
  const Certificate c = ff_dichotomy_step(Subset::full(f), IncrementParams{});
  EXPECT_EQ(c.kind, CertificateKind::Many3APs);
  EXPECT_EQ(c.count, 27u * 27u);
  EXPECT_TRUE(verify_certificate(c).ok);
}

TEST(FiniteField, AffineHyperplane) {
  const Group f = Group::make({3, 3, 3, 3});
  const Subset a = where(f, [](const Coords& c) { return c[1] == 1; });
  EXPECT_EQ(count_3aps(a, CountMethod::Loop), a.size() * a.size());
  const Certificate c = ff_dichotomy_step(a, IncrementParams{});
  EXPECT_EQ(c.kind, CertificateKind::Many3APs);
  EXPECT_EQ(c.count, a.size() * a.size());
  EXPECT_TRUE(verify_certificate(c).ok);
}

TEST(FiniteField, ProductSetCertificateVerifies) {
  const Group f = Group::make({3, 3, 3, 3, 3});
  const Subset a = where(f, [](const Coords& c) { return c[0] < 2 && c[1] < 2 && c[2] < 2; });
  IncrementParams p;
  p.ap.seed = 11;
  const Certificate c = ff_dichotomy_step(a, p);
  const CertificateCheck check = verify_certificate(c);
  EXPECT_TRUE(check.ok) << check.detail;
  if (c.kind == CertificateKind::Increment) {
    EXPECT_EQ(c.structure_kind, StructureKind::Subspace);
    EXPECT_GE(c.alpha_new, c.factor * c.alpha);
  }
}

TEST(Certificates, ExplicitIncrement) {
  const Group g = Group::make({101});
  const Subset a = interval(g, 10, 20);
  const Subset s = interval(g, -3, 3);
  const Rational alpha(11, 101);
  const Certificate c = increment_or_exhausted("test", a, s, std::nullopt, alpha, Rational(9, 8));
  ASSERT_EQ(c.kind, CertificateKind::Increment);
  EXPECT_EQ(c.alpha_new, 1);
  // smallest rank among the translates with (A - x) ∩ S = S
  EXPECT_EQ(c.x, 13u);
  EXPECT_TRUE(verify_certificate(c).ok);

  const Witness w = best_translate(a, s);
  EXPECT_EQ(w.count, 7);
  EXPECT_EQ(w.x, 13u);

  const Certificate none = increment_or_exhausted("test", a, s, std::nullopt, Rational(1), Rational(9, 8));
  EXPECT_EQ(none.kind, CertificateKind::Exhausted);
}

TEST(Certificates, TamperingIsDetected) {
  const Group g = Group::make({101});
  const Subset a = interval(g, 10, 20);
  const Subset s = interval(g, -3, 3);
  const Certificate good = increment_or_exhausted("test", a, s, std::nullopt, Rational(11, 101), Rational(9, 8));
  ASSERT_TRUE(verify_certificate(good).ok);

  Certificate moved = good;
  moved.x = g.add(good.x, 5);
  EXPECT_FALSE(verify_certificate(moved).ok);
  Certificate inflated = good;
  inflated.alpha = Rational(1);
  EXPECT_FALSE(verify_certificate(inflated).ok);
  Certificate lopsided = good;
  lopsided.structure = interval(g, 0, 3);
  EXPECT_FALSE(verify_certificate(lopsided).ok);

  const Subset b(g, {0, 1, 2});
  Certificate many = Certificate::many_3aps("test", count_3aps(b), Rational(1), {b, b, b});
  EXPECT_TRUE(verify_certificate(many).ok);
  many.count += 1;
  EXPECT_FALSE(verify_certificate(many).ok);
  Certificate high = Certificate::many_3aps("test", count_3aps(b), Rational(100), {b, b, b});
  EXPECT_FALSE(verify_certificate(high).ok);
}

TEST(Deviation, FullSetHypothesisFails) {
  const Group g = Group::make({101});
  const BohrSet b = regularize(BohrSet::build(g, {1}, 1.0));
  const Subset a = b.members();
  const Rational lambda(1, 4);
  IncrementParams p;
  const Rational tau = exact_rational(p.c_dev) * lambda * lambda;
  const Subset t = b.narrow(tau).members();
  const DeviationVerdict v = deviation_to_increment(b, a, t, tau, lambda, 0, p);
  EXPECT_FALSE(v.hypothesis);
  EXPECT_TRUE(v.consistent);
  EXPECT_EQ(v.sup, 1);
}

TEST(Deviation, Preconditions) {
  const Group g = Group::make({101});
  const BohrSet b = regularize(BohrSet::build(g, {1}, 1.0));
  const Rational lambda(1, 4);
  IncrementParams p;
  const Rational too_wide(1, 2);
  EXPECT_THROW(deviation_to_increment(b, b.members(), Subset::singleton(g, 0), too_wide, lambda, 0, p), Error);
  const Rational tau = exact_rational(p.c_dev) * lambda * lambda;
  EXPECT_THROW(deviation_to_increment(b, Subset::full(g), Subset::singleton(g, 0), tau, lambda, 0, p), Error);
  EXPECT_THROW(deviation_to_increment(b, b.members(), Subset(g, {0, 50}), tau, lambda, 0, p), Error);
}

TEST(Deviation, SweepFindsNoViolations) {
  Rng rng(1);
  IncrementParams p;
  for (int i = 0; i < 10; ++i) {
    const Group g = Group::make({static_cast<std::int64_t>(2 * (100 + rng.below(300)) + 1)});
    const BohrSet b = regularize(BohrSet::build(g, {1 + rng.below(g.size() - 1)}, 0.5 + rng.uniform()));
    Subset a = random_subset(g, 0.3 + 0.5 * rng.uniform(), rng).intersect(b.members());
    if (a.empty()) a = Subset::singleton(g, 0);
    const Rational lambda(1, 4);
    const Rational tau = exact_rational(p.c_dev) * lambda * lambda;
    const Subset t = b.narrow(tau).members();
    const DeviationSweep s = deviation_sweep(b, a, t, tau, lambda, p);
    EXPECT_EQ(s.violations, 0u);
    EXPECT_EQ(s.points, t.size());
  }
}

TEST(Deviation, PointwiseKeyInequality) {
  // 0 <= (1_B - F) * (1_B - F) = F*F - 2 F*1_B + 1_B*1_B for 0 <= F <= 1_B
  Rng rng(2);
  const Group g = Group::make({211});
  const BohrSet b = BohrSet::build(g, {3, 17}, 1.1);
  for (int trial = 0; trial < 10; ++trial) {
    GFunc f(g);
    for (Index x : b.members().members()) f[x] = rng.uniform();
    const GFunc one = GFunc::indicator(b.members());
    const GFunc lhs = convolve(one - f, one - f);
    const GFunc rhs = convolve(f, f) - convolve(f, one) * cplx(2, 0) + convolve(one, one);
    for (Index x = 0; x < g.size(); ++x) {
      EXPECT_GE(lhs.real(x), -1e-9);
      EXPECT_NEAR(lhs.real(x), rhs.real(x), 1e-9);
    }
  }
}

TEST(TwoScales, TrivialCase) {
  const Group g = Group::make({31});
  const BohrSet b = trivial_bohr(g);
  const Subset zero = Subset::singleton(g, 0);
  const TwoScalesResult r = two_scales(b, Subset::full(g), zero, zero, IncrementParams{});
  EXPECT_TRUE(r.dense_point || r.which != 0);
  if (r.dense_point) {
    EXPECT_EQ(r.value1, 1);
    EXPECT_EQ(r.value2, 1);
  }
}

TEST(TwoScales, ConcentratedSetIncrementsOnFirstScale) {
  const Group g = Group::make({1009});
  const BohrSet b = trivial_bohr(g);
  const Subset a = interval(g, 0, 10);
  const TwoScalesResult r = two_scales(b, a, interval(g, -5, 5), interval(g, -1, 1), IncrementParams{});
  EXPECT_FALSE(r.dense_point);
  EXPECT_EQ(r.which, 1);
  EXPECT_EQ(r.increment.density, 1);
}

TEST(TwoScales, RandomInstancesReturnVerifiedCase) {
  Rng rng(3);
  IncrementParams p;
  const Group g = Group::make({1009});
  for (int i = 0; i < 6; ++i) {
    const BohrSet b = regularize(BohrSet::build(g, {1 + rng.below(1008)}, 1.0 + rng.uniform()));
    Subset a = random_subset(g, 0.3, rng).intersect(b.members());
    if (a.empty()) continue;
    const Rational alpha(BigInt(a.size()), BigInt(b.size()));
    const BohrSet b1 = regularize(b.narrow(p.c_narrow * alpha));
    const BohrSet b2 = regularize(b1.narrow(p.c_narrow));
    const TwoScalesResult r = two_scales(b, a, b1.members(), b2.members(), p);
    if (r.dense_point) {
      EXPECT_TRUE(b.contains(r.x));
      const auto c1 = sumset_counts(a, b1.members());
      const auto c2 = sumset_counts(a, b2.members());
      EXPECT_EQ(r.value1, Rational(c1[r.x], static_cast<std::int64_t>(b1.size())));
      EXPECT_EQ(r.value2, Rational(c2[r.x], static_cast<std::int64_t>(b2.size())));
      EXPECT_GE(r.value1, Rational(3, 4) * alpha);
      EXPECT_GE(r.value2, Rational(3, 4) * alpha);
    } else {
      const Subset& s = r.which == 1 ? b1.members() : b2.members();
      EXPECT_EQ(r.increment.count, sumset_counts(a, s)[r.increment.x]);
      EXPECT_GE(r.increment.density, Rational(9, 8) * alpha);
    }
  }
}

TEST(TwoSet, WholeSetsGiveManyProgressions) {
  const Group g = Group::make({101});
  const BohrSet b = trivial_bohr(g);
  const Certificate c = two_set_dichotomy(b, Subset::full(g), b, Subset::full(g), IncrementParams{});
  EXPECT_EQ(c.kind, CertificateKind::Many3APs);
  EXPECT_TRUE(verify_certificate(c).ok);
}

TEST(MainIterator, FullDensityIsImmediate) {
  const Group g = Group::make({3, 3, 3});
  const Certificate c = main_iterator_step(trivial_bohr(g), Subset::full(g), IncrementParams{});
  EXPECT_EQ(c.kind, CertificateKind::Many3APs);
  EXPECT_TRUE(verify_certificate(c).ok);
}

TEST(MainIterator, ThresholdIsThreeSixteenths) {
  Rng rng(4);
  const Group g = Group::make({301});
  const BohrSet b = trivial_bohr(g);
  const Subset a = random_subset(g, 0.4, rng);
  const Certificate c = main_iterator_step(b, a, IncrementParams{});
  if (c.kind == CertificateKind::Many3APs && c.branch.find("main") != std::string::npos) {
    ASSERT_EQ(c.sets.size(), 3u);
    const Rational alpha(BigInt(a.size()), BigInt(b.size()));
    EXPECT_EQ(c.threshold, Rational(3, 16) * alpha * static_cast<std::int64_t>(c.sets[0].size()) *
                               static_cast<std::int64_t>(c.sets[1].size()));
    EXPECT_EQ(c.count, count_3aps(c.sets[0], c.sets[1], c.sets[2], CountMethod::Loop));
  }
  EXPECT_TRUE(verify_certificate(c).ok);
}

TEST(Iteration, StepBound) {
  EXPECT_EQ(iteration_step_bound(Rational(1)), 1u);
  // (9/8)^k >= 2 first at k = 6
  EXPECT_EQ(iteration_step_bound(Rational(1, 2)), 7u);
}

TEST(Iteration, WholeGroupSingleStep) {
  const Group g = Group::make({101});
  const IterationTrace t = run_iteration(g, Subset::full(g), IncrementParams{});
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.outcome, CertificateKind::Many3APs);
  EXPECT_TRUE(t.all_verified);
  EXPECT_TRUE(t.within_bound);
}

TEST(Iteration, SquaresModPrime) {
  const Group g = Group::make({101});
  std::vector<Index> sq;
  for (Index x = 0; x < 101; ++x) sq.push_back(x * x % 101);
  const Subset a(g, sq);
  const IterationTrace t = run_iteration(g, a, IncrementParams{});
  EXPECT_EQ(t.outcome, CertificateKind::Many3APs);
  EXPECT_TRUE(t.all_verified);
  EXPECT_EQ(t.steps.front().t_count, count_3aps(a, CountMethod::Loop));
}

TEST(Iteration, ProgressionFreeWitness) {
  for (int n : {12, 20}) {
    const R3Result r = r3_exact(n);
    const Subset a = embed_interval(r.witness, n);
    EXPECT_EQ(count_3aps(a, CountMethod::Loop), a.size());
    const IterationTrace t = run_iteration(a.group(), a, IncrementParams{});
    EXPECT_TRUE(t.outcome == CertificateKind::Exhausted || t.outcome == CertificateKind::Many3APs);
    EXPECT_TRUE(t.all_verified);
    EXPECT_TRUE(t.within_bound);
    EXPECT_EQ(t.steps.front().t_count, a.size());
  }
}

TEST(Iteration, TranslationInvariantFirstStep) {
  Rng rng(5);
  const Group g = Group::make({211});
  const Subset a = random_subset(g, 0.25, rng);
  const IterationTrace t0 = run_iteration(g, a, IncrementParams{});
  const IterationTrace t1 = run_iteration(g, a.translate(37), IncrementParams{});
  EXPECT_EQ(t0.steps.front().t_count, t1.steps.front().t_count);
  EXPECT_EQ(t0.steps.front().alpha, t1.steps.front().alpha);
}

TEST(Iteration, RandomTracesAreSound) {
  Rng rng(6);
  for (int i = 0; i < 12; ++i) {
    const Group g = i % 2 ? Group::make({3, 3, 3, 3}) : Group::make({static_cast<std::int64_t>(2 * (20 + rng.below(400)) + 1)});
    const Subset a = random_subset(g, 0.05 + 0.5 * rng.uniform(), rng);
    if (a.empty()) continue;
    IncrementParams p;
    p.ap.seed = rng.next();
    const IterationTrace t = run_iteration(g, a, p);
    EXPECT_TRUE(t.all_verified) << g.to_string();
    EXPECT_TRUE(t.within_bound) << g.to_string();
    EXPECT_TRUE(t.densities_increase) << g.to_string();
    EXPECT_LE(t.steps.size(), t.step_bound);
    for (const IterationStep& s : t.steps) EXPECT_TRUE(verify_certificate(s.certificate).ok);
  }
}

TEST(Iteration, CapSetIncrementsThenTerminates) {
  const Group g = Group::make({3, 3, 3, 3, 3, 3});
  const Subset a = where(g, [](const Coords& c) {
    return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v < 2; });
  });
  EXPECT_EQ(count_3aps(a, CountMethod::Loop), a.size());
  const IterationTrace t = run_iteration(g, a, IncrementParams{});
  EXPECT_TRUE(t.all_verified);
  EXPECT_TRUE(t.within_bound);
  EXPECT_TRUE(t.densities_increase);
  for (std::size_t i = 1; i < t.steps.size(); ++i) EXPECT_GT(t.steps[i].alpha, t.steps[i - 1].alpha);
}
