#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "rothkit/group.hpp"

namespace rothkit {

using cplx = std::complex<double>;

// One-dimensional DFT of arbitrary length n:
//   out[k] = sum_j in[j] * exp(-2 pi i j k / n)          (forward)
// Mixed-radix Cooley-Tukey over the prime factorization; prime lengths up to
// kNaivePrimeLimit use a direct O(p^2) transform, larger primes use Bluestein.
class Fft1d {
 public:
  static constexpr std::size_t kNaivePrimeLimit = 64;

  explicit Fft1d(std::size_t n);
  ~Fft1d();
  Fft1d(const Fft1d&) = delete;
  Fft1d& operator=(const Fft1d&) = delete;

  std::size_t length() const { return n_; }
  const std::vector<std::size_t>& factors() const { return factors_; }

  // Strided in-place forward transform; `inverse` flips the sign of the
  // exponent (no 1/n scaling).
  void transform(cplx* data, std::size_t stride, bool inverse) const;

 private:
  struct Bluestein;

  void recurse(const cplx* in, std::size_t in_stride, cplx* out, std::size_t n, std::size_t tw_step,
               std::size_t level, bool inverse) const;
  cplx twiddle(std::size_t k, bool inverse) const;

  std::size_t n_;
  std::vector<std::size_t> factors_;
  std::vector<cplx> roots_;  // exp(-2 pi i k / n)
  std::unique_ptr<Bluestein> bluestein_;
};

// Shared, lazily built plan for length n.
std::shared_ptr<const Fft1d> fft_plan(std::size_t n);

// Multi-dimensional transform over a product of cyclic groups in row-major
// mixed-radix layout.
void group_fft(const Group& g, std::span<cplx> data, bool inverse);

}  // namespace rothkit
