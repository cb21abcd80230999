#pragma once

#include <cstdint>
#include <vector>

#include "rothkit/subset.hpp"

namespace rothkit {

// Counter-based generator: output i is a SplitMix64 finalizer applied to
// key + i * golden. split(s) derives an independent stream, so trials can be
// seeded by index and replayed in any order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t key() const { return key_; }
  std::uint64_t next();
  // Uniform on [0, n), n >= 1 (Lemire's nearly-divisionless method).
  std::uint64_t below(std::uint64_t n);
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  bool bernoulli(double p) { return uniform() < p; }
  Rng split(std::uint64_t stream) const;

  static std::uint64_t mix(std::uint64_t z);

 private:
  struct FromKey {};
  Rng(FromKey, std::uint64_t key) : key_(key) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Each element kept independently with probability density.
Subset random_subset(const Group& g, double density, Rng& rng);
// Exactly `size` distinct elements, uniformly.
Subset random_subset_of_size(const Group& g, std::size_t size, Rng& rng);
// Uniform element of a nonempty set.
Index random_member(const Subset& s, Rng& rng);

}  // namespace rothkit
