#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rothkit {

// Mixed-radix rank of an element (or character) in its group; the canonical
// array index and serialization of that element.
using Index = std::size_t;
using Coords = std::vector<std::int64_t>;

struct Element {
  Coords coords;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// Characters of a product of cyclic groups are coordinate vectors in the
// (isomorphic) dual: gamma(x) = exp(2 pi i sum_j gamma_j x_j / N_j).
struct Character {
  Coords coords;
  friend auto operator<=>(const Character&, const Character&) = default;
};

// The exact phase theta = num/den in [0, 1) of gamma(x) = exp(2 pi i theta).
struct Phase {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // |gamma(x) - 1| = 2 |sin(pi theta)|, evaluated on the reduced angle.
  double distance_from_one() const;
  std::complex<double> value() const;
};

class Group {
 public:
  static Group make(std::vector<std::int64_t> orders);
  // "N1xN2x...xNr"; a bare "N" is the cyclic group Z/N.
  static Group parse(std::string_view spec);

  std::string to_string() const;

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t dimension() const { return orders_.size(); }
  Index size() const { return size_; }
  bool odd_order() const { return odd_; }
  bool is_cyclic() const { return orders_.size() == 1; }
  // Least common multiple of the factor orders; denominator of every phase.
  std::int64_t exponent() const { return exponent_; }

  Index index_of(const Coords& coords) const;
  Index index_of(const Element& x) const { return index_of(x.coords); }
  Index index_of(const Character& g) const { return index_of(g.coords); }
  Coords coords_of(Index i) const;
  Element element_at(Index i) const { return Element{coords_of(i)}; }
  Character character_at(Index i) const { return Character{coords_of(i)}; }

  Index zero() const { return 0; }
  Index add(Index a, Index b) const;
  Index sub(Index a, Index b) const;
  Index neg(Index a) const;
  Index twice(Index a) const;
  // Unique y with 2y = a; odd order only.
  Index half(Index a) const;

  Phase phase(const Character& gamma, const Element& x) const;
  Phase phase(Index gamma, Index x) const;
  // Per-coordinate multipliers w_j = gamma_j * (exponent / N_j), so that the
  // phase numerator is sum_j w_j x_j mod exponent.
  std::vector<std::int64_t> phase_weights(Index gamma) const;

  const std::vector<Index>& strides() const { return strides_; }

  friend bool operator==(const Group& a, const Group& b) { return a.orders_ == b.orders_; }

 private:
  Group() = default;

  std::vector<std::int64_t> orders_;
  std::vector<Index> strides_;
  Index size_ = 1;
  std::int64_t exponent_ = 1;
  bool odd_ = true;
};

std::complex<double> char_eval(const Group& g, const Character& gamma, const Element& x);
Element double_element(const Group& g, const Element& x);
// The unique delta with delta^2 = gamma; throws Unsupported on even order.
Character sqrt_character(const Group& g, const Character& gamma);

void require_same_group(const Group& a, const Group& b);

}  // namespace rothkit
