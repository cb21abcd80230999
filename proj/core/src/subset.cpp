#include "rothkit/subset.hpp"

#include <algorithm>

#include "rothkit/error.hpp"

namespace rothkit {

Subset::Subset(Group group) : group_(std::move(group)), mask_(group_.size(), 0) {}

Subset::Subset(Group group, std::vector<Index> members)
    : group_(std::move(group)), mask_(group_.size(), 0) {
  for (const Index x : members) {
    require(x < group_.size(), ErrorKind::Domain, "element rank out of range");
    mask_[x] = 1;
  }
  members_.reserve(members.size());
  for (Index x = 0; x < mask_.size(); ++x) {
    if (mask_[x]) members_.push_back(x);
  }
}

Subset Subset::full(const Group& group) {
  std::vector<std::uint8_t> mask(group.size(), 1);
  return from_mask(group, mask);
}

Subset Subset::singleton(const Group& group, Index x) { return Subset(group, {x}); }

Subset Subset::from_mask(const Group& group, const std::vector<std::uint8_t>& mask) {
  require(mask.size() == group.size(), ErrorKind::DimensionMismatch, "mask length != |G|");
  Subset s(group);
  for (Index x = 0; x < mask.size(); ++x) {
    if (mask[x]) {
      s.mask_[x] = 1;
      s.members_.push_back(x);
    }
  }
  return s;
}

double Subset::density() const {
  return static_cast<double>(members_.size()) / static_cast<double>(group_.size());
}

Subset Subset::translate(Index t) const {
  std::vector<std::uint8_t> m(group_.size(), 0);
  for (const Index x : members_) m[group_.add(x, t)] = 1;
  return from_mask(group_, m);
}

Subset Subset::negate() const {
  std::vector<std::uint8_t> m(group_.size(), 0);
  for (const Index x : members_) m[group_.neg(x)] = 1;
  return from_mask(group_, m);
}

Subset Subset::dilate2() const {
  std::vector<std::uint8_t> m(group_.size(), 0);
  for (const Index x : members_) m[group_.twice(x)] = 1;
  return from_mask(group_, m);
}

Subset Subset::intersect(const Subset& other) const {
  require_same_group(group_, other.group_);
  std::vector<std::uint8_t> m(group_.size(), 0);
  for (const Index x : members_) m[x] = other.mask_[x];
  return from_mask(group_, m);
}

Subset Subset::unite(const Subset& other) const {
  require_same_group(group_, other.group_);
  auto m = mask_;
  for (const Index x : other.members_) m[x] = 1;
  return from_mask(group_, m);
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_group(group_, other.group_);
  return std::all_of(members_.begin(), members_.end(),
                     [&](Index x) { return other.mask_[x] != 0; });
}

bool Subset::is_symmetric() const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Index x) { return mask_[group_.neg(x)] != 0; });
}

Subset sumset(const Subset& a, const Subset& b) {
  require_same_group(a.group(), b.group());
  const Group& g = a.group();
  std::vector<std::uint8_t> m(g.size(), 0);
  for (const Index x : a.members()) {
    for (const Index y : b.members()) m[g.add(x, y)] = 1;
  }
  return Subset::from_mask(g, m);
}

Subset difference_set(const Subset& a, const Subset& b) { return sumset(a, b.negate()); }

Subset iterated_sumset(const Subset& s, int n) {
  require(n >= 1, ErrorKind::Domain, "iterated sumset needs n >= 1");
  Subset out = s;
  for (int i = 1; i < n; ++i) out = sumset(out, s);
  return out;
}

}  // namespace rothkit
