#include "rothkit/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rothkit/error.hpp"

namespace rothkit {

namespace {

std::vector<Index> normalize_freqs(const Group& g, std::vector<Index> freqs) {
  for (const Index f : freqs) require(f < g.size(), ErrorKind::Domain, "character rank out of range");
  std::sort(freqs.begin(), freqs.end());
  freqs.erase(std::unique(freqs.begin(), freqs.end()), freqs.end());
  return freqs;
}

Subset members_within(const Group& g, const EntryProfile& p, double radius) {
  std::vector<std::uint8_t> mask(g.size(), 0);
  const auto& r = p.radii();
  for (Index x = 0; x < g.size(); ++x) mask[x] = r[x] <= radius + kBohrGuard ? 1 : 0;
  return Subset::from_mask(g, mask);
}

}  // namespace

EntryProfile::EntryProfile(const Group& g, const std::vector<Index>& freqs)
    : radii_(g.size(), 0.0) {
  const auto L = g.exponent();
  const auto& orders = g.orders();
  const auto& strides = g.strides();
  std::vector<std::int64_t> cache(static_cast<std::size_t>(L) / 2 + 1, -1);
  std::vector<double> dist(static_cast<std::size_t>(L) / 2 + 1, -1.0);
  for (const Index gamma : freqs) {
    const auto w = g.phase_weights(gamma);
    for (Index x = 0; x < g.size(); ++x) {
      __int128 num = 0;
      for (std::size_t j = 0; j < orders.size(); ++j) {
        const auto c = static_cast<std::int64_t>((x / strides[j]) % static_cast<Index>(orders[j]));
        num += static_cast<__int128>(w[j]) * c;
      }
      auto n = static_cast<std::int64_t>(num % L);
      const auto red = static_cast<std::size_t>(std::min(n, L - n));
      if (dist[red] < 0.0) dist[red] = Phase{static_cast<std::int64_t>(red), L}.distance_from_one();
      radii_[x] = std::max(radii_[x], dist[red]);
    }
  }
  sorted_ = radii_;
  std::sort(sorted_.begin(), sorted_.end());
}

std::size_t EntryProfile::count_within(double radius) const {
  return static_cast<std::size_t>(
      std::upper_bound(sorted_.begin(), sorted_.end(), radius + kBohrGuard) - sorted_.begin());
}

std::size_t EntryProfile::count_below(double radius) const {
  return static_cast<std::size_t>(
      std::lower_bound(sorted_.begin(), sorted_.end(), radius + kBohrGuard) - sorted_.begin());
}

BohrSet::BohrSet(Subset members, std::vector<Index> freqs, double root_radius, Rational scale,
                 std::shared_ptr<const EntryProfile> profile)
    : members_(std::move(members)),
      freqs_(std::move(freqs)),
      root_radius_(root_radius),
      scale_(std::move(scale)),
      radius_(root_radius_ * to_double(scale_)),
      profile_(std::move(profile)) {}

BohrSet BohrSet::build(const Group& g, std::vector<Index> freqs, double radius) {
  return build(g, std::move(freqs), radius, Rational(1));
}

BohrSet BohrSet::build(const Group& g, std::vector<Index> freqs, double root_radius, Rational scale) {
  require(root_radius >= 0.0 && scale >= 0, ErrorKind::Domain, "Bohr radius must be >= 0");
  freqs = normalize_freqs(g, std::move(freqs));
  auto profile = std::make_shared<const EntryProfile>(g, freqs);
  const double radius = root_radius * to_double(scale);
  Subset members = members_within(g, *profile, radius);
  return BohrSet(std::move(members), std::move(freqs), root_radius, std::move(scale), std::move(profile));
}

BohrSet BohrSet::narrow(const Rational& tau) const {
  require(tau >= 0, ErrorKind::Domain, "narrowing factor must be >= 0");
  Rational scale = scale_ * tau;
  const double radius = root_radius_ * to_double(scale);
  Subset members = members_within(group(), *profile_, radius);
  return BohrSet(std::move(members), freqs_, root_radius_, std::move(scale), profile_);
}

std::size_t BohrSet::size_at(double tau) const { return profile_->count_within(tau * radius_); }

bool BohrSet::is_sub_bohr_of(const BohrSet& other) const {
  if (!(group() == other.group())) return false;
  return std::includes(freqs_.begin(), freqs_.end(), other.freqs_.begin(), other.freqs_.end()) &&
         radius_ <= other.radius_;
}

RegularityVerdict is_regular_at(const EntryProfile& profile, std::size_t rank, double radius) {
  RegularityVerdict v;
  v.base_size = profile.count_within(radius);
  if (rank == 0 || radius <= 0.0) return v;
  const long double d12 = 12.0L * static_cast<long double>(rank);
  const long double window = 1.0L / d12;
  const long double base = static_cast<long double>(v.base_size);
  const auto& sorted = profile.sorted();
  // Breakpoint in radius-space for an entry radius e is e - guard.
  const long double lo = static_cast<long double>(radius) * (1.0L - window);
  const long double hi = static_cast<long double>(radius) * (1.0L + window);
  const auto first = std::lower_bound(sorted.begin(), sorted.end(),
                                      static_cast<double>(lo) + kBohrGuard * 0.5);
  for (auto it = first; it != sorted.end(); ++it) {
    const long double bp = static_cast<long double>(*it) - kBohrGuard;
    if (bp > hi) break;
    if (bp <= lo) continue;
    const long double tau = bp / radius - 1.0L;
    if (bp > radius) {
      // |B_{1+tau}| just after the jump must stay below 1 + 12 d tau.
      const auto n = profile.count_within(static_cast<double>(bp));
      if (static_cast<long double>(n) > base * (1.0L + d12 * tau)) {
        v.regular = false;
        v.witness_tau = static_cast<double>(tau);
        v.witness_size = n;
        return v;
      }
    } else {
      // Left limit at the jump must stay above 1 - 12 d |tau|.
      const auto n = profile.count_below(static_cast<double>(bp));
      if (static_cast<long double>(n) < base * (1.0L + d12 * tau)) {
        v.regular = false;
        // Any tau slightly left of the jump witnesses the violation.
        const long double gap = std::max(1e-15L, (bp - lo) / radius * 1e-6L);
        v.witness_tau = static_cast<double>(tau - gap);
        v.witness_size = n;
        return v;
      }
    }
  }
  return v;
}

RegularityVerdict is_regular(const BohrSet& b) {
  return is_regular_at(b.profile(), b.rank(), b.radius());
}

Rational find_regular_radius(const BohrSet& b) {
  const double rho = b.radius();
  if (b.rank() == 0 || rho <= 0.0) return Rational(1);
  const auto regular_at = [&](double tau) { return is_regular_at(b.profile(), b.rank(), tau * rho).regular; };
  if (regular_at(1.0)) return Rational(1);

  // Flat intervals of the step function R -> |Bohr(Gamma, R)| over [rho/2, rho].
  std::vector<double> cuts{rho / 2.0};
  for (const double e : b.profile().sorted()) {
    const double bp = e - kBohrGuard;
    if (bp > rho / 2.0 && bp < rho) cuts.push_back(bp);
  }
  cuts.push_back(rho);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  struct Candidate {
    double flatness;
    double tau;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    candidates.push_back({(cuts[i + 1] - cuts[i]) / mid, mid / rho});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& c) { return a.flatness > c.flatness; });
  for (const auto& c : candidates) {
    if (c.tau >= 0.5 && c.tau <= 1.0 && regular_at(c.tau)) return exact_rational(c.tau);
  }
  constexpr int kGrid = 4096;
  for (int i = kGrid; i >= 0; --i) {
    const double tau = 0.5 + 0.5 * static_cast<double>(i) / kGrid;
    if (regular_at(tau)) return exact_rational(tau);
  }
  fail(ErrorKind::NoRegularRadius, "no regular radius in [1/2, 1] for a rank-" +
                                       std::to_string(b.rank()) + " Bohr set");
}

BohrSet regularize(const BohrSet& b) { return b.narrow(find_regular_radius(b)); }

BohrSet dilate2(const BohrSet& b) {
  const Group& g = b.group();
  require(g.odd_order(), ErrorKind::Unsupported, "2.B needs a group of odd order");
  std::vector<Index> roots;
  roots.reserve(b.rank());
  for (const Index gamma : b.frequencies()) roots.push_back(g.half(gamma));
  return BohrSet::build(g, std::move(roots), b.root_radius(), b.scale());
}

SizeBoundCheck check_size_bound(const BohrSet& b) {
  SizeBoundCheck c;
  c.lhs = static_cast<double>(b.size());
  const double rho = std::min(b.radius(), 2.0);
  c.rhs = std::pow(rho / (2.0 * std::numbers::pi), static_cast<double>(b.rank())) *
          static_cast<double>(b.group().size());
  c.holds = c.lhs >= c.rhs * (1.0 - 1e-12);
  return c;
}

SizeBoundCheck check_narrow_size_bound(const BohrSet& b, double tau) {
  require(tau >= 0.0 && tau <= 1.0, ErrorKind::Domain, "narrowing bound needs tau in [0,1]");
  SizeBoundCheck c;
  c.lhs = static_cast<double>(b.size_at(tau));
  c.rhs = std::pow(tau / 2.0, 3.0 * static_cast<double>(b.rank())) * static_cast<double>(b.size());
  c.holds = c.lhs >= c.rhs * (1.0 - 1e-12);
  return c;
}

}  // namespace rothkit
