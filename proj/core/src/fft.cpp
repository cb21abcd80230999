#include "rothkit/fft.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "rothkit/error.hpp"

namespace rothkit {

namespace {

std::vector<std::size_t> factorize(std::size_t n) {
  std::vector<std::size_t> f;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      f.push_back(p);
      n /= p;
    }
  }
  if (n > 1) f.push_back(n);
  // Largest factor last: it becomes the leaf, where Bluestein applies.
  std::sort(f.begin(), f.end());
  return f;
}

cplx unit_root(std::size_t k, std::size_t n, double sign) {
  // Reduce to the nearest half-turn so the angle stays small.
  double r = static_cast<double>(k % n);
  if (2 * (k % n) > n) r -= static_cast<double>(n);
  const double a = sign * 2.0 * std::numbers::pi * r / static_cast<double>(n);
  return {std::cos(a), std::sin(a)};
}

// In-place iterative radix-2 transform; n must be a power of two.
void radix2(std::vector<cplx>& a, const std::vector<cplx>& roots, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx w = roots[k * step];
        if (inverse) w = std::conj(w);
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

}  // namespace

struct Fft1d::Bluestein {
  std::size_t p;
  std::size_t m;
  std::vector<cplx> chirp;      // exp(-i pi j^2 / p)
  std::vector<cplx> kernel_fft; // FFT of conj(chirp) wrapped to length m
  std::vector<cplx> roots;      // radix-2 roots of length m

  explicit Bluestein(std::size_t len) : p(len) {
    m = 1;
    while (m < 2 * p - 1) m <<= 1;
    chirp.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
      // j^2 mod 2p keeps the angle exact.
      const std::size_t e = static_cast<std::size_t>((static_cast<unsigned __int128>(j) * j) % (2 * p));
      double r = static_cast<double>(e);
      if (e > p) r -= 2.0 * static_cast<double>(p);
      const double a = -std::numbers::pi * r / static_cast<double>(p);
      chirp[j] = {std::cos(a), std::sin(a)};
    }
    roots.resize(m / 2);
    for (std::size_t k = 0; k < m / 2; ++k) roots[k] = unit_root(k, m, -1.0);
    std::vector<cplx> b(m, cplx{0.0, 0.0});
    b[0] = std::conj(chirp[0]);
    for (std::size_t j = 1; j < p; ++j) b[j] = b[m - j] = std::conj(chirp[j]);
    radix2(b, roots, false);
    kernel_fft = std::move(b);
  }

  void run(const cplx* in, std::size_t in_stride, cplx* out, bool inverse) const {
    std::vector<cplx> a(m, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < p; ++j) {
      const cplx c = inverse ? std::conj(chirp[j]) : chirp[j];
      a[j] = in[j * in_stride] * c;
    }
    radix2(a, roots, false);
    for (std::size_t k = 0; k < m; ++k) {
      a[k] *= inverse ? std::conj(kernel_fft[(m - k) % m]) : kernel_fft[k];
    }
    radix2(a, roots, true);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < p; ++k) {
      const cplx c = inverse ? std::conj(chirp[k]) : chirp[k];
      out[k] = a[k] * scale * c;
    }
  }
};

Fft1d::Fft1d(std::size_t n) : n_(n) {
  require(n >= 1, ErrorKind::Domain, "FFT length must be positive");
  factors_ = factorize(n);
  roots_.resize(n);
  for (std::size_t k = 0; k < n; ++k) roots_[k] = unit_root(k, n, -1.0);
  if (!factors_.empty() && factors_.back() > kNaivePrimeLimit) {
    bluestein_ = std::make_unique<Bluestein>(factors_.back());
  }
}

Fft1d::~Fft1d() = default;

cplx Fft1d::twiddle(std::size_t k, bool inverse) const {
  const cplx w = roots_[k % n_];
  return inverse ? std::conj(w) : w;
}

void Fft1d::recurse(const cplx* in, std::size_t in_stride, cplx* out, std::size_t n,
                    std::size_t tw_step, std::size_t level, bool inverse) const {
  if (n == 1) {
    out[0] = in[0];
    return;
  }
  const std::size_t p = factors_[level];
  if (level + 1 == factors_.size()) {
    // Prime leaf of length n == p.
    if (bluestein_ && p == bluestein_->p) {
      bluestein_->run(in, in_stride, out, inverse);
      return;
    }
    for (std::size_t k = 0; k < n; ++k) {
      cplx acc{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) acc += in[j * in_stride] * twiddle((j * k % n) * tw_step, inverse);
      out[k] = acc;
    }
    return;
  }
  const std::size_t m = n / p;
  for (std::size_t r = 0; r < p; ++r) {
    recurse(in + r * in_stride, in_stride * p, out + r * m, m, tw_step * p, level + 1, inverse);
  }
  std::vector<cplx> t(p);
  std::vector<cplx> y(p);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t r = 0; r < p; ++r) t[r] = out[r * m + k] * twiddle((r * k) * tw_step, inverse);
    for (std::size_t q = 0; q < p; ++q) {
      cplx acc{0.0, 0.0};
      for (std::size_t r = 0; r < p; ++r) acc += t[r] * twiddle(((r * q) % p) * m * tw_step, inverse);
      y[q] = acc;
    }
    for (std::size_t q = 0; q < p; ++q) out[k + q * m] = y[q];
  }
}

void Fft1d::transform(cplx* data, std::size_t stride, bool inverse) const {
  if (n_ == 1) return;
  std::vector<cplx> in(n_);
  for (std::size_t j = 0; j < n_; ++j) in[j] = data[j * stride];
  std::vector<cplx> out(n_);
  recurse(in.data(), 1, out.data(), n_, 1, 0, inverse);
  for (std::size_t j = 0; j < n_; ++j) data[j * stride] = out[j];
}

std::shared_ptr<const Fft1d> fft_plan(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const Fft1d>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const Fft1d>(n);
  return slot;
}

void group_fft(const Group& g, std::span<cplx> data, bool inverse) {
  require(data.size() == g.size(), ErrorKind::DimensionMismatch, "FFT buffer length != |G|");
  const auto& orders = g.orders();
  const auto& strides = g.strides();
  for (std::size_t axis = 0; axis < orders.size(); ++axis) {
    const auto n = static_cast<std::size_t>(orders[axis]);
    if (n == 1) continue;
    const auto plan = fft_plan(n);
    const std::size_t stride = strides[axis];
    const std::size_t block = stride * n;
    for (std::size_t base = 0; base < data.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        plan->transform(data.data() + base + off, stride, inverse);
      }
    }
  }
}

}  // namespace rothkit
