#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rothkit/almost_period.hpp"
#include "rothkit/bohr.hpp"
#include "rothkit/rational.hpp"
#include "rothkit/subset.hpp"

namespace rothkit {

enum class CertificateKind { Many3APs, Increment, Exhausted };
enum class StructureKind { Subspace, Bohr };

std::string to_string(CertificateKind kind);
std::string to_string(StructureKind kind);

struct Certificate {
  CertificateKind kind = CertificateKind::Exhausted;
  std::string branch;  // which step produced it

  // Many3APs: T(sets[0], sets[1], sets[2]) = count >= threshold.
  std::uint64_t count = 0;
  Rational threshold;
  std::vector<Subset> sets;

  // Increment: mu_S((A - x) ∩ S) = alpha_new >= factor * alpha for the structure S.
  StructureKind structure_kind = StructureKind::Bohr;
  std::optional<Subset> structure;
  std::optional<BohrSet> bohr;
  std::vector<Coords> subspace_basis;
  std::optional<Subset> base;  // A
  Index x = 0;
  Rational alpha;
  Rational alpha_new;
  Rational factor;

  // Exhausted (and free-form diagnostics for every kind).
  std::string reason;
  std::vector<std::pair<std::string, double>> diagnostics;

  static Certificate many_3aps(std::string branch, std::uint64_t count, Rational threshold,
                               std::vector<Subset> sets);
  static Certificate exhausted(std::string branch, std::string reason);
};

struct CertificateCheck {
  bool ok = false;
  std::string detail;
};

// Independent re-verification: loop 3AP count, or exact density recount.
CertificateCheck verify_certificate(const Certificate& c);

struct Witness {
  Index x = 0;
  std::int64_t count = 0;  // |A ∩ (x - S)|
  Rational density;        // count / |S|
};

// argmax_x 1_A*mu_S(x), ties to the smallest rank.
Witness best_translate(const Subset& a, const Subset& s);

// Increment certificate if the best translate reaches factor * alpha, else Exhausted.
Certificate increment_or_exhausted(std::string branch, const Subset& a, const Subset& s,
                                   std::optional<BohrSet> bohr, const Rational& alpha,
                                   const Rational& factor);

struct IncrementParams {
  int m = 2;
  // B^(1) = B_{c alpha / d}, B^(2) = B^(1)_{c / d}; 1/384 makes the two-scales averaging exact.
  Rational c_narrow{1, 384};
  // tau <= c_dev lambda^2 / rank(B) in the deviation lemma.
  double c_dev = 1.0 / 240.0;
  // epsilon = eps_constant alpha^{1/2}, delta = delta_constant alpha in the Bohr branches.
  // Much smaller values leave the sampled almost-period search empty at |G| <= 2000.
  double eps_constant = 0.5;
  double delta_constant = 0.5;
  Rational ff_small_target{5, 4};
  Rational ff_large_target{5};
  Rational two_set_target{3, 2};
  Rational iterator_target{9, 8};
  APConfig ap;
};

// One step of the finite-field argument on A ⊂ F_q^n.
Certificate ff_dichotomy_step(const Subset& a, const IncrementParams& params);

struct DeviationVerdict {
  Rational lhs;              // mu_A*1_A*mu_T*mu_T(x)
  Rational hypothesis_level; // (1 - 2 lambda^2) alpha
  bool hypothesis = false;   // lhs <= hypothesis_level
  Rational sup;              // ||1_A*mu_T||_inf
  Index witness = 0;
  bool conclusion = false;   // sup >= (1 + lambda) alpha
  bool consistent = false;   // hypothesis implies conclusion
};

// Deviation-to-increment lemma at a point x ∈ B_tau, with T ⊂ B_tau.
DeviationVerdict deviation_to_increment(const BohrSet& b, const Subset& a, const Subset& t,
                                        const Rational& tau, const Rational& lambda, Index x,
                                        const IncrementParams& params);

struct DeviationSweep {
  std::size_t points = 0;
  std::size_t hypothesis_hits = 0;
  std::size_t violations = 0;
  bool increment_side = false;
};
// Runs the lemma at every x ∈ B_tau.
DeviationSweep deviation_sweep(const BohrSet& b, const Subset& a, const Subset& t, const Rational& tau,
                               const Rational& lambda, const IncrementParams& params);

struct TwoScalesResult {
  bool dense_point = false;  // case 1
  Index x = 0;
  Rational value1, value2;   // 1_A*mu_{B'}(x), 1_A*mu_{B''}(x) as relative densities
  int which = 0;             // case 2: 1 for B', 2 for B''
  Witness increment;
};

// Bourgain's two-scales lemma by exhaustive search; throws InternalConsistency
// if neither case is found.
TwoScalesResult two_scales(const BohrSet& b, const Subset& a, const Subset& b1, const Subset& b2,
                           const IncrementParams& params);

// Two-set dichotomy for A ⊂ B and 2.A' ⊂ B'; alpha = min(mu_B(A), mu_B'(2.A')).
Certificate two_set_dichotomy(const BohrSet& b, const Subset& a, const BohrSet& b_prime,
                              const Subset& a_prime, const IncrementParams& params);

Certificate main_iterator_step(const BohrSet& b, const Subset& a, const IncrementParams& params);

struct IterationStep {
  std::size_t index = 0;
  std::size_t rank = 0;
  double radius = 0.0;
  Rational scale;
  Rational alpha;
  std::size_t set_size = 0;
  std::size_t bohr_size = 0;
  std::uint64_t t_count = 0;  // T(A_i)
  std::uint64_t seed = 0;
  std::optional<BohrSet> bohr;
  Certificate certificate;
  bool verified = false;
};

struct IterationTrace {
  std::string group;
  Rational initial_alpha;
  std::size_t step_bound = 0;  // ceil(log_{9/8}(1/alpha)) + 1
  std::vector<IterationStep> steps;
  bool all_verified = false;
  bool densities_increase = false;
  bool within_bound = false;
  CertificateKind outcome = CertificateKind::Exhausted;
};

std::size_t iteration_step_bound(const Rational& alpha);
IterationTrace run_iteration(const Group& g, const Subset& a, const IncrementParams& params);

}  // namespace rothkit
