#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rothkit/bohr.hpp"
#include "rothkit/gfunc.hpp"
#include "rothkit/rng.hpp"
#include "rothkit/subset.hpp"

namespace rothkit {

struct APConfig {
  int m = 2;
  // Sample length; 0 means derive it from m and epsilon.
  std::size_t k = 0;
  double epsilon = 0.5;
  double delta = 0.2;
  // Monte Carlo trials for moment estimates.
  std::size_t trials = 200;
  // Candidate tuples drawn when extracting an almost-period set.
  std::size_t ap_trials = 16;
  std::uint64_t seed = 1;
  // k >= sample_constant * m / eps^2 in the sampling lemma.
  double sample_constant = 4.0;
  // Exponent constant in |T| >= 0.99 K^{-C m n^2 / eps^2} (reported only).
  double density_constant = 1.0;
  // r >= C log(2 / delta eta) in the Bohr bootstrap.
  double r_constant = 3.0;
  // Scales the admissible tau of the bootstrap; 1 keeps every step rigorous.
  double tau_constant = 1.0;
  // Implied constant for the rank bound d' (reported only).
  double rank_constant = 1.0;
  // Fourier folds k ~ C log(2K/eps) in the subspace route.
  double fold_constant = 1.0;
  std::size_t max_sample_length = std::size_t{1} << 20;
  std::size_t verify_cap = 10000;
};

// mu_A*1_L(x) = |A ∩ (x - L)| / |A|, from an exact integer convolution.
std::vector<double> mean_translate_profile(const Subset& a, const Subset& l);
// f = mu_A*1_L (1 - mu_A*1_L); 0 <= f <= 1/4.
GFunc fluctuation(const Subset& a, const Subset& l);

// mu_a*1_L for a uniform tuple a in A^k, computed as (histogram of a)*1_L.
GFunc sampled_convolution(const Subset& a, const Subset& l, std::size_t k, Rng& rng);
GFunc sampled_convolution(const Subset& a, const Subset& l, std::size_t k, std::uint64_t seed);

// ||h||_{L^p(w)} = (sum_x w(x) |h(x)|^p)^{1/p}
double weighted_lp(const std::vector<double>& h, const std::vector<double>& w, double p);

struct MomentEstimate {
  int m = 0;
  std::size_t k = 0;
  double epsilon = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double empirical = 0.0;  // mean of ||mu_a*1_L - mu_A*1_L||^{2m}_{L^{2m}(mu)}
  double std_error = 0.0;
  double analytic = 0.0;   // eps^{2m} ||f||^m_{L^m(mu)} + eps^{4m-2} ||f||_{L^1(mu)}
  bool pass = false;       // empirical <= analytic + 3 std_error
};

// Monte Carlo estimate of the sampling-lemma moment; cfg.k = 0 selects
// k = ceil(sample_constant m / eps^2).
MomentEstimate moment_estimate(const Subset& a, const Subset& l, const APConfig& cfg,
                               const std::vector<double>& weight);
std::size_t sampling_length(int m, double epsilon, double constant);

// (nu, mu) is S-invariant when nu(x + t) <= mu(x) for all x and t in S.
struct MeasurePair {
  std::vector<double> nu;
  std::vector<double> mu;
  Subset invariance;
};

struct InvarianceVerdict {
  bool invariant = true;
  std::optional<Index> t;
  std::optional<Index> x;
};

InvarianceVerdict check_invariant_pair(const MeasurePair& pair);
InvarianceVerdict check_invariant_pair(const std::vector<double>& nu, const std::vector<double>& mu,
                                       const Subset& s);

struct APSetReport {
  Subset periods{Group::make({1})};  // T
  int m = 0;
  int n = 1;
  double epsilon = 0.0;
  std::size_t k = 0;
  bool k_capped = false;
  std::size_t tuples_tried = 0;
  double threshold = 0.0;        // goodness threshold at eps0 = eps / 2n
  double doubling = 0.0;         // K = |S + A| / |A|
  double density_ratio = 0.0;    // |T| / |S|
  double density_bound = 0.0;    // 0.99 K^{-C m n^2 / eps^2}
  double theorem_rhs = 0.0;
  double chained_rhs = 0.0;      // 2 n * threshold
  double max_lhs = 0.0;
  std::size_t checked = 0;
  std::size_t population = 0;    // |n(T - T)|
  bool sampled = false;          // population exceeded verify_cap
  std::optional<Index> violation;
  bool verified = false;
  std::uint64_t seed = 0;
};

// Sampled almost-period set T ⊂ S whose n-fold difference set is verified
// against the L^{2m}(nu) bound. Throws SamplingFailure if no tuple is good.
APSetReport almost_period_set(const Subset& a, const Subset& l, const Subset& s, const APConfig& cfg,
                              const MeasurePair& pair, int n);

// ||F||_{l^p(B)} <= ||F||_{l^p(B_{1-tau})} + delta ||F||_{l^inf(B)} |B|^{1/p}
struct LpRegularityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool hypothesis = false;  // tau <= delta^p / 12d
  bool holds = false;
};
LpRegularityCheck check_lp_regularity(const BohrSet& b, const std::vector<double>& f, double tau,
                                      double delta, double p);

struct BootstrapReport {
  std::optional<BohrSet> t_set;   // T <= B_tau
  std::optional<BohrSet> b_tau;
  double eta = 0.0;
  int n = 0;
  int r = 0;
  double tau = 0.0;
  double doubling = 0.0;
  bool pair_invariant = false;
  APSetReport sampling;
  ChangSandersResult chang;
  std::size_t new_rank = 0;       // d'
  double rank_bound = 0.0;
  double radius_bound = 0.0;
  double rhs = 0.0;               // eps ||f||^{1/2}_{L^m(B)} + eps^{2-1/m} ||f||^{1/2m}_{L^1(B)} + delta
  double rhs_alt = 0.0;           // same with mu_A*1_L in place of f
  double max_lhs = 0.0;
  double averaged_lhs = 0.0;      // ||g*mu_T - g||_{L^{2m}(B)}
  bool averaged_ok = false;
  double fourier_sup = 0.0;       // max_t ||tau_t(g*sigma) - g*sigma||_inf
  double fourier_bound = 0.0;
  bool fourier_ok = false;
  LpRegularityCheck transfer;     // worst t, on B vs B_{1 - r tau}
  std::size_t checked = 0;
  bool sampled = false;
  std::optional<Index> violation;
  bool verified = false;
};

// Almost-periods relative to a regular Bohr set, assembled from sampling,
// Fourier smoothing and Chang-Sanders, then verified translate by translate.
BootstrapReport bohr_bootstrap(const Subset& a, const Subset& l, const BohrSet& b, const APConfig& cfg);

struct SubspaceReport {
  std::vector<Coords> basis;      // basis of V
  std::size_t codimension = 0;
  Subset subspace{Group::make({1})};
  APSetReport sampling;
  std::size_t folds = 0;          // k in the Fourier step
  double rhs = 0.0;               // 2k eps ||g||^{1/2}_{p/2} + 4k eps^2
  double max_lhs = 0.0;
  std::size_t checked = 0;
  bool sampled = false;
  std::optional<Index> violation;
  bool verified = false;
};

// Subspace route over F_q^n: V = Spec_{1/2}(mu_{T-T})^perp.
SubspaceReport subspace_ap(const Subset& a, const Subset& l, int p, double epsilon, const APConfig& cfg);

// Members of s, or a uniform sample of `cap` of them (sorted) when larger.
std::vector<Index> capped_members(const Subset& s, std::size_t cap, Rng& rng, bool& sampled);

}  // namespace rothkit
