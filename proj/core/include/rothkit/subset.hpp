#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rothkit/group.hpp"

namespace rothkit {

// A subset of a finite abelian group: sorted member ranks plus a membership
// mask for O(1) lookup.
class Subset {
 public:
  explicit Subset(Group group);
  Subset(Group group, std::vector<Index> members);

  static Subset full(const Group& group);
  static Subset singleton(const Group& group, Index x);
  static Subset from_mask(const Group& group, const std::vector<std::uint8_t>& mask);

  const Group& group() const { return group_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Index x) const { return mask_[x] != 0; }
  const std::vector<Index>& members() const { return members_; }
  const std::vector<std::uint8_t>& mask() const { return mask_; }
  double density() const;

  // A + t
  Subset translate(Index t) const;
  Subset negate() const;
  // {2x : x in A}
  Subset dilate2() const;
  Subset intersect(const Subset& other) const;
  Subset unite(const Subset& other) const;
  bool is_subset_of(const Subset& other) const;
  bool is_symmetric() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.group_ == b.group_ && a.members_ == b.members_;
  }

 private:
  Group group_;
  std::vector<Index> members_;
  std::vector<std::uint8_t> mask_;
};

// A + B as a set.
Subset sumset(const Subset& a, const Subset& b);
// A - B as a set.
Subset difference_set(const Subset& a, const Subset& b);
// n-fold iterated sumset S + ... + S (n >= 1).
Subset iterated_sumset(const Subset& s, int n);

}  // namespace rothkit
