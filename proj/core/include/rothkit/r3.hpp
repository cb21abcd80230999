#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rothkit/subset.hpp"

namespace rothkit {

inline constexpr int kR3MaxN = 64;

struct R3Search {
  int value = 0;
  std::vector<std::int64_t> witness;  // ascending, inside {1..N}
  std::uint64_t nodes = 0;
};

// Branch-and-bound: r3(n) for n = 1..N in turn, each search seeded by the
// previous value and pruned with r3 of the remaining interval.
R3Search r3_branch_bound(int n);
// Plain bitmask depth-first search with a forbidden-element mask.
R3Search r3_bitmask(int n);

struct R3Result {
  int n = 0;
  int value = 0;
  std::vector<std::int64_t> witness;
  std::vector<std::string> methods;
  int branch_bound_value = 0;
  int bitmask_value = 0;
  bool agree = false;
  bool witness_ok = false;  // 3AP-free by loop and of size value
};

// Both algorithms; throws Budget for N > kR3MaxN and InternalConsistency on disagreement.
R3Result r3_exact(int n);

// No x < y < z in the set with x + z = 2y (loop check).
bool is_3ap_free(const std::vector<std::int64_t>& set);
// #{(x, y, z) in A^3 : x + z = 2y} over the integers, trivial ones included.
std::uint64_t count_integer_3aps(const std::vector<std::int64_t>& set);

// A ⊂ {1..N} mapped into Z/(2N+1) by x -> x.
Subset embed_interval(const std::vector<std::int64_t>& set, std::int64_t n);

}  // namespace rothkit
