#include "rothkit/gfunc.hpp"

#include <algorithm>
#include <cmath>

#include "rothkit/error.hpp"

namespace rothkit {

GFunc::GFunc(Group group) : group_(std::move(group)), values_(group_.size(), cplx{0.0, 0.0}) {}

GFunc::GFunc(Group group, std::vector<cplx> values)
    : group_(std::move(group)), values_(std::move(values)) {
  require(values_.size() == group_.size(), ErrorKind::DimensionMismatch,
          "function table length != |G|");
}

GFunc GFunc::from_real(const Group& group, const std::vector<double>& values) {
  require(values.size() == group.size(), ErrorKind::DimensionMismatch,
          "function table length != |G|");
  std::vector<cplx> v(values.begin(), values.end());
  return GFunc(group, std::move(v));
}

GFunc GFunc::constant(const Group& group, cplx c) {
  return GFunc(group, std::vector<cplx>(group.size(), c));
}

GFunc GFunc::delta(const Group& group, Index x) {
  GFunc f(group);
  f.values_.at(x) = 1.0;
  return f;
}

GFunc GFunc::indicator(const Subset& a) {
  GFunc f(a.group());
  for (const Index x : a.members()) f.values_[x] = 1.0;
  return f;
}

GFunc GFunc::uniform(const Subset& a) {
  require(!a.empty(), ErrorKind::Domain, "uniform measure on the empty set");
  GFunc f(a.group());
  const double w = 1.0 / static_cast<double>(a.size());
  for (const Index x : a.members()) f.values_[x] = w;
  return f;
}

std::vector<double> GFunc::real_values() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [](cplx v) { return v.real(); });
  return out;
}

cplx GFunc::sum() const {
  cplx s{0.0, 0.0};
  for (const auto v : values_) s += v;
  return s;
}

double GFunc::max_abs() const {
  double m = 0.0;
  for (const auto v : values_) m = std::max(m, std::abs(v));
  return m;
}

GFunc GFunc::translate(Index t) const {
  GFunc out(group_);
  for (Index x = 0; x < values_.size(); ++x) out.values_[x] = values_[group_.add(x, t)];
  return out;
}

GFunc GFunc::reflect() const {
  GFunc out(group_);
  for (Index x = 0; x < values_.size(); ++x) out.values_[x] = values_[group_.neg(x)];
  return out;
}

GFunc GFunc::conj() const {
  GFunc out(*this);
  for (auto& v : out.values_) v = std::conj(v);
  return out;
}

GFunc& GFunc::operator+=(const GFunc& o) {
  require_same_group(group_, o.group_);
  for (Index x = 0; x < values_.size(); ++x) values_[x] += o.values_[x];
  return *this;
}

GFunc& GFunc::operator-=(const GFunc& o) {
  require_same_group(group_, o.group_);
  for (Index x = 0; x < values_.size(); ++x) values_[x] -= o.values_[x];
  return *this;
}

GFunc& GFunc::operator*=(cplx c) {
  for (auto& v : values_) v *= c;
  return *this;
}

GFunc GFunc::pointwise(const GFunc& o) const {
  require_same_group(group_, o.group_);
  GFunc out(group_);
  for (Index x = 0; x < values_.size(); ++x) out.values_[x] = values_[x] * o.values_[x];
  return out;
}

}  // namespace rothkit
