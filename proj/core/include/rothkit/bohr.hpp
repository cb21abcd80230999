#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "rothkit/group.hpp"
#include "rothkit/harmonic.hpp"
#include "rothkit/rational.hpp"
#include "rothkit/subset.hpp"

namespace rothkit {

// Membership tolerance: x is in Bohr(Gamma, rho) iff r(x) <= rho + kBohrGuard,
// so ties on an entry radius resolve to membership.
inline constexpr double kBohrGuard = 1e-9;

// Entry radii r(x) = max_{gamma in Gamma} |gamma(x) - 1| for every x in G,
// shared by all narrowings of one frequency set.
class EntryProfile {
 public:
  EntryProfile(const Group& g, const std::vector<Index>& freqs);

  const std::vector<double>& radii() const { return radii_; }
  // Ascending copy of radii().
  const std::vector<double>& sorted() const { return sorted_; }
  // #{x : r(x) <= radius + kBohrGuard}
  std::size_t count_within(double radius) const;
  // #{x : r(x) < radius + kBohrGuard}
  std::size_t count_below(double radius) const;

 private:
  std::vector<double> radii_;
  std::vector<double> sorted_;
};

class BohrSet {
 public:
  // Bohr(Gamma, rho) with Gamma given as character ranks (deduplicated).
  static BohrSet build(const Group& g, std::vector<Index> freqs, double radius);
  // Radius stored as root_radius * scale with an exact rational scale.
  static BohrSet build(const Group& g, std::vector<Index> freqs, double root_radius, Rational scale);

  const Group& group() const { return members_.group(); }
  const std::vector<Index>& frequencies() const { return freqs_; }
  std::size_t rank() const { return freqs_.size(); }
  double radius() const { return radius_; }
  double root_radius() const { return root_radius_; }
  const Rational& scale() const { return scale_; }
  const Subset& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index x) const { return members_.contains(x); }
  const EntryProfile& profile() const { return *profile_; }
  double entry_radius(Index x) const { return profile_->radii()[x]; }

  // B_tau = Bohr(Gamma, tau rho); tau > 1 is allowed.
  BohrSet narrow(const Rational& tau) const;
  BohrSet narrow(double tau) const { return narrow(exact_rational(tau)); }
  // |B_tau| without materializing the set.
  std::size_t size_at(double tau) const;

  // B' <= B: Lambda ⊇ Gamma and radius' <= radius.
  bool is_sub_bohr_of(const BohrSet& other) const;

 private:
  BohrSet(Subset members, std::vector<Index> freqs, double root_radius, Rational scale,
          std::shared_ptr<const EntryProfile> profile);

  Subset members_;
  std::vector<Index> freqs_;
  double root_radius_;
  Rational scale_;
  double radius_;
  std::shared_ptr<const EntryProfile> profile_;
};

struct RegularityVerdict {
  bool regular = true;
  // A tau with |tau| <= 1/12d at which the two-sided bound fails.
  std::optional<double> witness_tau;
  std::size_t witness_size = 0;
  std::size_t base_size = 0;
};

// Exact test of 1 - 12d|tau| <= |B_{1+tau}|/|B| <= 1 + 12d|tau| on the closed
// window |tau| <= 1/12d, evaluated at every breakpoint of the step function.
// Rank 0 is regular by convention.
RegularityVerdict is_regular(const BohrSet& b);
RegularityVerdict is_regular_at(const EntryProfile& profile, std::size_t rank, double radius);

// Some tau in [1/2, 1] with B_tau regular; throws NoRegularRadius otherwise.
Rational find_regular_radius(const BohrSet& b);
// B_{tau*} for tau* = find_regular_radius(b).
BohrSet regularize(const BohrSet& b);

// 2.B = Bohr(Gamma^{1/2}, rho); odd order only.
BohrSet dilate2(const BohrSet& b);

struct SizeBoundCheck {
  double lhs = 0.0;  // actual size (or ratio)
  double rhs = 0.0;  // lower bound
  bool holds = true;
};

// |B| >= (rho / 2 pi)^d |G| for rho <= 2.
SizeBoundCheck check_size_bound(const BohrSet& b);
// |B_tau| >= (tau / 2)^{3d} |B| for tau in [0, 1].
SizeBoundCheck check_narrow_size_bound(const BohrSet& b, double tau);

struct ChangSandersConstants {
  double lambda_constant = 1.0;  // |Lambda| <= C delta^-2 log(2/mu_B(X))
  double radius_constant = 1.0;  // rho' >= c rho nu delta^2 / (d^2 log(2/mu_B(X)))
};

struct ChangSandersResult {
  std::vector<Index> lambda;      // dissociated characters added to Gamma
  std::vector<Index> leftovers;   // spectrum elements outside the +-1 span (cap hit)
  std::size_t max_word_length = 0;
  double radius_prime = 0.0;      // radius before regularization
  Spectrum large_spectrum;
  std::optional<BohrSet> bprime;  // regular, <= B
  double relative_density = 0.0;  // mu_B(X)
  double lambda_bound = 0.0;
  double radius_bound = 0.0;
  bool verified = false;
};

// Constructive local Chang lemma: Lambda is a greedily extracted dissociated
// subset of Spec_delta(mu_X), and B' = Bohr(Gamma ∪ Lambda, rho') is chosen so
// that |1 - gamma(t)| <= nu for every gamma in Spec_delta(mu_X), t in B'. The
// conclusion is re-verified exhaustively; failure throws InternalConsistency.
ChangSandersResult chang_sanders(const BohrSet& b, const Subset& x, double delta, double nu,
                                 const ChangSandersConstants& constants = {});

// True when no nontrivial {-1,0,1}-combination of the characters vanishes.
bool is_dissociated(const Group& g, const std::vector<Index>& chars);

}  // namespace rothkit
