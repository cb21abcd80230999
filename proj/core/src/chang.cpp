#include <algorithm>
#include <cmath>

#include "rothkit/bohr.hpp"
#include "rothkit/error.hpp"

namespace rothkit {

namespace {

constexpr std::uint8_t kUnreached = 0xff;

// weight[y] = least number of nonzero coefficients in a {-1,0,1}-combination
// of the characters added so far that equals y.
class SignedSpan {
 public:
  explicit SignedSpan(const Group& g) : g_(g), weight_(g.size(), kUnreached) { weight_[0] = 0; }

  std::uint8_t weight(Index y) const { return weight_[y]; }

  void add(Index lambda) {
    std::vector<std::uint8_t> next = weight_;
    for (Index y = 0; y < weight_.size(); ++y) {
      if (weight_[y] == kUnreached) continue;
      const auto w = static_cast<std::uint8_t>(weight_[y] + 1);
      const Index up = g_.add(y, lambda);
      const Index down = g_.sub(y, lambda);
      next[up] = std::min(next[up], w);
      next[down] = std::min(next[down], w);
    }
    weight_ = std::move(next);
  }

 private:
  const Group& g_;
  std::vector<std::uint8_t> weight_;
};

}  // namespace

bool is_dissociated(const Group& g, const std::vector<Index>& chars) {
  SignedSpan span(g);
  for (const Index c : chars) {
    // c already in the span means c = sum e_i l_i, a vanishing combination.
    if (span.weight(c) != kUnreached) return false;
    span.add(c);
  }
  return true;
}

ChangSandersResult chang_sanders(const BohrSet& b, const Subset& x, double delta, double nu,
                                 const ChangSandersConstants& constants) {
  const Group& g = b.group();
  require_same_group(g, x.group());
  require(!x.empty(), ErrorKind::Domain, "chang_sanders needs a nonempty X");
  require(delta > 0.0 && delta <= 1.0 && nu > 0.0 && nu <= 1.0, ErrorKind::Domain,
          "chang_sanders needs delta, nu in (0,1]");

  ChangSandersResult out;
  out.large_spectrum = spectrum(GFunc::uniform(x), delta);
  // X is meant to lie in B; fall back to |X|/|B| if it misses B entirely.
  auto inside = x.intersect(b.members()).size();
  if (inside == 0) inside = x.size();
  out.relative_density = std::min(1.0, static_cast<double>(inside) / static_cast<double>(b.size()));

  const auto cap = static_cast<std::size_t>(
      std::max(1.0, std::floor(2.0 * std::log2(static_cast<double>(g.size())))));
  SignedSpan span(g);
  for (const Index gamma : out.large_spectrum.characters) {
    if (gamma == 0 || span.weight(gamma) != kUnreached) continue;
    if (out.lambda.size() < cap) {
      out.lambda.push_back(gamma);
      span.add(gamma);
    } else {
      out.leftovers.push_back(gamma);
    }
  }
  for (const Index gamma : out.large_spectrum.characters) {
    const auto w = span.weight(gamma);
    const std::size_t len = w == kUnreached ? 1 : w;
    out.max_word_length = std::max(out.max_word_length, len);
  }

  std::vector<Index> freqs = b.frequencies();
  freqs.insert(freqs.end(), out.lambda.begin(), out.lambda.end());
  freqs.insert(freqs.end(), out.leftovers.begin(), out.leftovers.end());
  out.radius_prime = b.radius();
  if (out.max_word_length > 0) {
    out.radius_prime = std::min(out.radius_prime, nu / static_cast<double>(out.max_word_length));
  }
  out.bprime = regularize(BohrSet::build(g, std::move(freqs), out.radius_prime));

  // |gamma(t) - 1| <= sum over the word of |lambda_i(t) - 1|, each within the guard band.
  const double slack = static_cast<double>(std::max<std::size_t>(1, out.max_word_length)) * kBohrGuard;
  for (const Index gamma : out.large_spectrum.characters) {
    for (const Index t : out.bprime->members().members()) {
      if (g.phase(gamma, t).distance_from_one() > nu + slack) {
        fail(ErrorKind::InternalConsistency, "Chang-Sanders conclusion fails at character " +
                                                 std::to_string(gamma) + ", t = " + std::to_string(t));
      }
    }
  }
  out.verified = true;

  const double log_term = std::log(2.0 / out.relative_density);
  const double d = static_cast<double>(std::max<std::size_t>(1, b.rank()));
  out.lambda_bound = constants.lambda_constant * log_term / (delta * delta);
  out.radius_bound = constants.radius_constant * b.radius() * nu * delta * delta / (d * d * log_term);
  return out;
}

}  // namespace rothkit
