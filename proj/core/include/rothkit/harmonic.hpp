#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "rothkit/gfunc.hpp"
#include "rothkit/subset.hpp"

namespace rothkit {

enum class ConvolutionMethod { Fft, Naive };

// f*g(x) = sum_y f(y) g(x - y)
GFunc convolve(const GFunc& f, const GFunc& g, ConvolutionMethod method = ConvolutionMethod::Fft);

// Forward transform fhat(gamma) = sum_x f(x) conj(gamma(x)); the result is
// indexed by character rank.
GFunc dft(const GFunc& f);
// f(x) = E_gamma fhat(gamma) gamma(x)
GFunc inverse_dft(const GFunc& fhat);

// Exact integer convolution via FFT; every output is checked to lie within
// 1e-6 of an integer before rounding.
std::vector<std::int64_t> integer_convolution(const Group& g, const std::vector<std::int64_t>& f,
                                              const std::vector<std::int64_t>& h);
// 1_A*1_B(x) = |A ∩ (x - B)|, exact.
std::vector<std::int64_t> sumset_counts(const Subset& a, const Subset& b);

enum class NormMode { Sum, Average };
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// ||f||_{l^p(B)} (Sum) or ||f||_{L^p(B)} (Average); p = kInfinity gives the max.
double norm(const GFunc& f, const Subset& domain, double p, NormMode mode);
// Whole-group shorthand: ||f||_p = ||f||_{L^p(G)}.
double norm(const GFunc& f, double p, NormMode mode = NormMode::Average);
// ||f||_{L^p(w)} = (sum_x w(x) |f(x)|^p)^{1/p} for a nonnegative weight w.
double weighted_norm(const GFunc& f, const std::vector<double>& weight, double p);
// sum_x w(x) |f(x)|^p
double weighted_power_sum(const GFunc& f, const std::vector<double>& weight, double p);

// <f, g> = sum_x f(x) conj(g(x))
cplx inner(const GFunc& f, const GFunc& g);

struct Spectrum {
  double threshold = 1.0;
  std::vector<Index> characters;  // sorted ranks
  bool contains(Index gamma) const;
};

// Spec_delta(mu) = {gamma : |muhat(gamma)| >= delta} for a probability measure mu.
Spectrum spectrum(const GFunc& measure, double delta);
// Same, for a precomputed transform.
Spectrum spectrum_from_transform(const GFunc& transform, double delta);

enum class CountMethod { Convolution, Loop };

// T(A,B,C) = #{(x,y,z) in A x B x C : x + z = 2y}, trivial progressions included.
std::uint64_t count_3aps(const Subset& a, const Subset& b, const Subset& c,
                         CountMethod method = CountMethod::Convolution);
inline std::uint64_t count_3aps(const Subset& a, CountMethod method = CountMethod::Convolution) {
  return count_3aps(a, a, a, method);
}

}  // namespace rothkit
