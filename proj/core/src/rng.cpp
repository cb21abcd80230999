#include "rothkit/rng.hpp"

#include <algorithm>

#include "rothkit/error.hpp"

namespace rothkit {

std::uint64_t Rng::mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * counter_++); }

std::uint64_t Rng::below(std::uint64_t n) {
  require(n >= 1, ErrorKind::Domain, "Rng::below needs n >= 1");
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rng Rng::split(std::uint64_t stream) const {
  return Rng(FromKey{}, mix(key_ ^ mix(stream + 0x3c6ef372fe94f82bULL)));
}

Subset random_subset(const Group& g, double density, Rng& rng) {
  require(density >= 0.0 && density <= 1.0, ErrorKind::Domain, "density must lie in [0,1]");
  std::vector<std::uint8_t> mask(g.size(), 0);
  for (auto& bit : mask) bit = rng.bernoulli(density) ? 1 : 0;
  return Subset::from_mask(g, mask);
}

Subset random_subset_of_size(const Group& g, std::size_t size, Rng& rng) {
  require(size <= g.size(), ErrorKind::Domain, "subset larger than the group");
  // Partial Fisher-Yates on the rank array.
  std::vector<Index> pool(g.size());
  for (Index i = 0; i < pool.size(); ++i) pool[i] = i;
  for (std::size_t i = 0; i < size; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return Subset(g, std::move(pool));
}

Index random_member(const Subset& s, Rng& rng) {
  require(!s.empty(), ErrorKind::Domain, "random_member of an empty set");
  return s.members()[rng.below(s.size())];
}

}  // namespace rothkit
