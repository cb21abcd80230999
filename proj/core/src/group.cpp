#include "rothkit/group.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "rothkit/error.hpp"

namespace rothkit {

namespace {

constexpr Index kMaxGroupSize = Index{1} << 32;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

}  // namespace

double Phase::distance_from_one() const {
  const std::int64_t r = std::min(num, den - num);
  return 2.0 * std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(den));
}

std::complex<double> Phase::value() const {
  // Reduce to (-1/2, 1/2] before scaling so large denominators keep precision.
  std::int64_t r = num;
  if (2 * r > den) r -= den;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

Group Group::make(std::vector<std::int64_t> orders) {
  require(!orders.empty(), ErrorKind::InvalidGroup, "group needs at least one cyclic factor");
  Group g;
  g.orders_ = std::move(orders);
  g.strides_.assign(g.orders_.size(), 1);
  for (std::size_t j = g.orders_.size(); j-- > 0;) {
    const auto n = g.orders_[j];
    require(n >= 1, ErrorKind::InvalidGroup, "cyclic factor orders must be >= 1");
    g.strides_[j] = g.size_;
    require(g.size_ <= kMaxGroupSize / static_cast<Index>(n), ErrorKind::InvalidGroup,
            "group too large");
    g.size_ *= static_cast<Index>(n);
    g.exponent_ = std::lcm(g.exponent_, n);
    if (n % 2 == 0) g.odd_ = false;
  }
  return g;
}

Group Group::parse(std::string_view spec) {
  std::vector<std::int64_t> orders;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto next = spec.find_first_of("xX", pos);
    if (next == std::string_view::npos) next = spec.size();
    const auto token = spec.substr(pos, next - pos);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    require(ec == std::errc{} && ptr == token.data() + token.size() && !token.empty(),
            ErrorKind::Parse, "bad group spec '" + std::string(spec) + "'");
    orders.push_back(value);
    pos = next + 1;
  }
  return make(std::move(orders));
}

std::string Group::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    if (j) out += 'x';
    out += std::to_string(orders_[j]);
  }
  return out;
}

Index Group::index_of(const Coords& coords) const {
  require(coords.size() == orders_.size(), ErrorKind::DimensionMismatch,
          "coordinate vector has wrong length for group " + to_string());
  Index idx = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    auto c = coords[j] % orders_[j];
    if (c < 0) c += orders_[j];
    idx += static_cast<Index>(c) * strides_[j];
  }
  return idx;
}

Coords Group::coords_of(Index i) const {
  Coords c(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    c[j] = static_cast<std::int64_t>((i / strides_[j]) % static_cast<Index>(orders_[j]));
  }
  return c;
}

Index Group::add(Index a, Index b) const {
  if (is_cyclic()) {
    const Index s = a + b;
    return s >= size_ ? s - size_ : s;
  }
  Index out = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const Index n = static_cast<Index>(orders_[j]);
    Index s = (a / strides_[j]) % n + (b / strides_[j]) % n;
    if (s >= n) s -= n;
    out += s * strides_[j];
  }
  return out;
}

Index Group::neg(Index a) const {
  if (is_cyclic()) return a == 0 ? 0 : size_ - a;
  Index out = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const Index n = static_cast<Index>(orders_[j]);
    const Index c = (a / strides_[j]) % n;
    out += (c == 0 ? 0 : n - c) * strides_[j];
  }
  return out;
}

Index Group::sub(Index a, Index b) const { return add(a, neg(b)); }

Index Group::twice(Index a) const { return add(a, a); }

Index Group::half(Index a) const {
  require(odd_, ErrorKind::Unsupported, "halving needs a group of odd order");
  Index out = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const auto n = orders_[j];
    const auto c = static_cast<std::int64_t>((a / strides_[j]) % static_cast<Index>(n));
    // (n + 1) / 2 is the inverse of 2 modulo odd n.
    out += static_cast<Index>(mulmod(c, (n + 1) / 2, n)) * strides_[j];
  }
  return out;
}

Phase Group::phase(const Character& gamma, const Element& x) const {
  require(gamma.coords.size() == orders_.size() && x.coords.size() == orders_.size(),
          ErrorKind::DimensionMismatch, "character/element dimension mismatch");
  return phase(index_of(gamma), index_of(x));
}

std::vector<std::int64_t> Group::phase_weights(Index gamma) const {
  std::vector<std::int64_t> w(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const auto n = orders_[j];
    const auto c = static_cast<std::int64_t>((gamma / strides_[j]) % static_cast<Index>(n));
    w[j] = c * (exponent_ / n);
  }
  return w;
}

Phase Group::phase(Index gamma, Index x) const {
  std::int64_t num = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const auto n = orders_[j];
    const auto g = static_cast<std::int64_t>((gamma / strides_[j]) % static_cast<Index>(n));
    const auto c = static_cast<std::int64_t>((x / strides_[j]) % static_cast<Index>(n));
    num = (num + mulmod(mulmod(g, c, n), exponent_ / n, exponent_)) % exponent_;
  }
  return Phase{num, exponent_};
}

std::complex<double> char_eval(const Group& g, const Character& gamma, const Element& x) {
  return g.phase(gamma, x).value();
}

Element double_element(const Group& g, const Element& x) {
  return g.element_at(g.twice(g.index_of(x)));
}

Character sqrt_character(const Group& g, const Character& gamma) {
  require(g.odd_order(), ErrorKind::Unsupported, "square roots of characters need odd order");
  return g.character_at(g.half(g.index_of(gamma)));
}

void require_same_group(const Group& a, const Group& b) {
  require(a == b, ErrorKind::GroupMismatch, a.to_string() + " vs " + b.to_string());
}

}  // namespace rothkit
