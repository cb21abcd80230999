#include "rothkit/harmonic.hpp"

#include <algorithm>
#include <cmath>

#include "rothkit/error.hpp"

namespace rothkit {

namespace {

constexpr double kIntegralTolerance = 1e-6;

void checked_add(std::uint64_t& acc, std::uint64_t v) {
  if (__builtin_add_overflow(acc, v, &acc)) fail(ErrorKind::InternalConsistency, "3AP count overflow");
}

}  // namespace

GFunc dft(const GFunc& f) {
  GFunc out = f;
  group_fft(out.group(), out.values(), false);
  return out;
}

GFunc inverse_dft(const GFunc& fhat) {
  GFunc out = fhat;
  group_fft(out.group(), out.values(), true);
  out *= 1.0 / static_cast<double>(out.size());
  return out;
}

GFunc convolve(const GFunc& f, const GFunc& g, ConvolutionMethod method) {
  require_same_group(f.group(), g.group());
  const Group& G = f.group();
  if (method == ConvolutionMethod::Naive) {
    GFunc out(G);
    for (Index y = 0; y < G.size(); ++y) {
      const cplx fy = f[y];
      if (fy == cplx{0.0, 0.0}) continue;
      for (Index x = 0; x < G.size(); ++x) out[x] += fy * g[G.sub(x, y)];
    }
    return out;
  }
  GFunc fh = dft(f);
  const GFunc gh = dft(g);
  for (Index i = 0; i < fh.size(); ++i) fh[i] *= gh[i];
  return inverse_dft(fh);
}

std::vector<std::int64_t> integer_convolution(const Group& g, const std::vector<std::int64_t>& f,
                                              const std::vector<std::int64_t>& h) {
  require(f.size() == g.size() && h.size() == g.size(), ErrorKind::DimensionMismatch,
          "integer convolution operands must have length |G|");
  std::vector<cplx> fv(f.begin(), f.end());
  std::vector<cplx> hv(h.begin(), h.end());
  const GFunc conv = convolve(GFunc(g, std::move(fv)), GFunc(g, std::move(hv)));
  std::vector<std::int64_t> out(g.size());
  for (Index x = 0; x < g.size(); ++x) {
    const double v = conv[x].real();
    const double r = std::round(v);
    require(std::abs(v - r) <= kIntegralTolerance && std::abs(conv[x].imag()) <= kIntegralTolerance,
            ErrorKind::InternalConsistency, "integer convolution drifted from an integer");
    out[x] = static_cast<std::int64_t>(r);
  }
  return out;
}

std::vector<std::int64_t> sumset_counts(const Subset& a, const Subset& b) {
  require_same_group(a.group(), b.group());
  std::vector<std::int64_t> fa(a.group().size(), 0), fb(a.group().size(), 0);
  for (const Index x : a.members()) fa[x] = 1;
  for (const Index x : b.members()) fb[x] = 1;
  return integer_convolution(a.group(), fa, fb);
}

double weighted_power_sum(const GFunc& f, const std::vector<double>& weight, double p) {
  require(weight.size() == f.size(), ErrorKind::DimensionMismatch, "weight length != |G|");
  require(p >= 1.0 && std::isfinite(p), ErrorKind::Domain, "weighted norms need finite p >= 1");
  double s = 0.0;
  for (Index x = 0; x < f.size(); ++x) {
    if (weight[x] == 0.0) continue;
    s += weight[x] * std::pow(std::abs(f[x]), p);
  }
  return s;
}

double weighted_norm(const GFunc& f, const std::vector<double>& weight, double p) {
  return std::pow(weighted_power_sum(f, weight, p), 1.0 / p);
}

double norm(const GFunc& f, const Subset& domain, double p, NormMode mode) {
  require_same_group(f.group(), domain.group());
  require(p >= 1.0, ErrorKind::Domain, "norm exponent must be >= 1");
  if (mode == NormMode::Average) {
    require(!domain.empty(), ErrorKind::Domain, "average norm over an empty domain");
  }
  if (std::isinf(p)) {
    double m = 0.0;
    for (const Index x : domain.members()) m = std::max(m, std::abs(f[x]));
    return m;
  }
  double s = 0.0;
  for (const Index x : domain.members()) s += std::pow(std::abs(f[x]), p);
  if (mode == NormMode::Average) s /= static_cast<double>(domain.size());
  return std::pow(s, 1.0 / p);
}

double norm(const GFunc& f, double p, NormMode mode) {
  return norm(f, Subset::full(f.group()), p, mode);
}

cplx inner(const GFunc& f, const GFunc& g) {
  require_same_group(f.group(), g.group());
  cplx s{0.0, 0.0};
  for (Index x = 0; x < f.size(); ++x) s += f[x] * std::conj(g[x]);
  return s;
}

bool Spectrum::contains(Index gamma) const {
  return std::binary_search(characters.begin(), characters.end(), gamma);
}

Spectrum spectrum_from_transform(const GFunc& transform, double delta) {
  require(delta > 0.0 && delta <= 1.0, ErrorKind::Domain, "spectrum threshold must lie in (0,1]");
  Spectrum s;
  s.threshold = delta;
  // A relative slack of 1e-12 absorbs rounding in |muhat(0)| = 1.
  for (Index i = 0; i < transform.size(); ++i) {
    if (std::abs(transform[i]) >= delta - 1e-12) s.characters.push_back(i);
  }
  return s;
}

Spectrum spectrum(const GFunc& measure, double delta) {
  double total = 0.0;
  for (const auto v : measure.values()) {
    require(v.real() >= -1e-12 && std::abs(v.imag()) <= 1e-12, ErrorKind::Domain,
            "spectrum needs a nonnegative measure");
    total += v.real();
  }
  require(std::abs(total - 1.0) <= 1e-9, ErrorKind::Domain, "spectrum needs a probability measure");
  return spectrum_from_transform(dft(measure), delta);
}

std::uint64_t count_3aps(const Subset& a, const Subset& b, const Subset& c, CountMethod method) {
  require_same_group(a.group(), b.group());
  require_same_group(a.group(), c.group());
  const Group& g = a.group();
  std::uint64_t total = 0;
  if (method == CountMethod::Loop) {
    for (const Index x : a.members()) {
      for (const Index y : b.members()) {
        if (c.contains(g.sub(g.twice(y), x))) checked_add(total, 1);
      }
    }
    return total;
  }
  // sum_{y in B} 1_A*1_C(2y); equals <1_A*1_C, 1_{2.B}> when doubling is injective.
  const auto conv = sumset_counts(a, c);
  for (const Index y : b.members()) checked_add(total, static_cast<std::uint64_t>(conv[g.twice(y)]));
  return total;
}

}  // namespace rothkit
