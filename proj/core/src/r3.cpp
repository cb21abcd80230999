#include "rothkit/r3.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "rothkit/error.hpp"

namespace rothkit {

namespace {

struct BranchBound {
  int target = 0;
  std::vector<int> best;  // r3 of {1..i}, filled for i < current n
  std::vector<std::int64_t> chosen;
  std::vector<std::int64_t> found;
  std::vector<char> in;
  std::uint64_t nodes = 0;

  bool fits(std::int64_t x) const {
    // chosen holds only elements above x; reject x whenever x + z = 2y.
    for (const std::int64_t y : chosen) {
      const std::int64_t z = 2 * y - x;
      if (z > y && z < static_cast<std::int64_t>(in.size()) && in[z]) return false;
    }
    return true;
  }

  // Elements are decided from i downwards; 1 must end up chosen.
  bool search(std::int64_t i) {
    ++nodes;
    const int have = static_cast<int>(chosen.size());
    if (have == target) {
      if (in[1]) {
        found = chosen;
        return true;
      }
      return false;
    }
    if (i < 1 || have + best[i] < target) return false;
    if (fits(i)) {
      chosen.push_back(i);
      in[i] = 1;
      if (search(i - 1)) return true;
      chosen.pop_back();
      in[i] = 0;
    }
    if (i == 1) return false;
    return search(i - 1);
  }
};

struct Bitmask {
  int n = 0;
  int best = 0;
  std::uint64_t best_set = 0;
  std::uint64_t nodes = 0;

  // bit k stands for k + 1; forbidden collects 2y - x for chosen x < y.
  void search(int next, std::uint64_t chosen, std::uint64_t forbidden, int size) {
    ++nodes;
    if (size > best) {
      best = size;
      best_set = chosen;
    }
    if (next >= n) return;
    const std::uint64_t range = (n >= 64 ? ~0ULL : ((1ULL << n) - 1)) & ~((1ULL << next) - 1);
    const std::uint64_t open = range & ~forbidden;
    if (size + std::popcount(open) <= best) return;
    for (int k = next; k < n; ++k) {
      if (forbidden >> k & 1ULL) continue;
      std::uint64_t f = forbidden;
      for (std::uint64_t c = chosen; c; c &= c - 1) {
        const int j = std::countr_zero(c);
        const int z = 2 * k - j;
        if (z < n) f |= 1ULL << z;
      }
      search(k + 1, chosen | (1ULL << k), f, size + 1);
      if (k + 1 >= 64) return;
      const std::uint64_t rest = range & ~((1ULL << (k + 1)) - 1) & ~forbidden;
      if (size + std::popcount(rest) <= best) return;
    }
  }
};

void check_n(int n) {
  require(n >= 1, ErrorKind::Domain, "N must be >= 1");
  require(n <= kR3MaxN, ErrorKind::Budget,
          "N = " + std::to_string(n) + " exceeds the exact-search budget; use N <= " +
              std::to_string(kR3MaxN));
}

}  // namespace

R3Search r3_branch_bound(int n) {
  check_n(n);
  BranchBound bb;
  bb.best.assign(n + 1, 0);
  std::vector<std::int64_t> witness{1};
  bb.best[1] = 1;
  std::uint64_t nodes = 1;
  for (int m = 2; m <= n; ++m) {
    // Any set beating r3(m-1) must use both 1 and m.
    bb.target = bb.best[m - 1] + 1;
    bb.chosen = {m};
    bb.in.assign(m + 1, 0);
    bb.in[m] = 1;
    bb.found.clear();
    bb.nodes = 0;
    if (bb.search(m - 1)) {
      bb.best[m] = bb.target;
      witness = bb.found;
    } else {
      bb.best[m] = bb.best[m - 1];
    }
    nodes += bb.nodes;
  }
  R3Search out;
  out.value = bb.best[n];
  std::sort(witness.begin(), witness.end());
  out.witness = witness;
  out.nodes = nodes;
  return out;
}

R3Search r3_bitmask(int n) {
  check_n(n);
  Bitmask bm;
  bm.n = n;
  bm.search(0, 0, 0, 0);
  R3Search out;
  out.value = bm.best;
  for (std::uint64_t c = bm.best_set; c; c &= c - 1) out.witness.push_back(std::countr_zero(c) + 1);
  out.nodes = bm.nodes;
  return out;
}

R3Result r3_exact(int n) {
  const R3Search a = r3_branch_bound(n);
  const R3Search b = r3_bitmask(n);
  R3Result out;
  out.n = n;
  out.branch_bound_value = a.value;
  out.bitmask_value = b.value;
  out.agree = a.value == b.value;
  out.methods = {"branch-and-bound", "bitmask"};
  require(out.agree, ErrorKind::InternalConsistency,
          "r3 algorithms disagree at N = " + std::to_string(n));
  out.value = a.value;
  out.witness = a.witness;
  out.witness_ok = is_3ap_free(a.witness) && is_3ap_free(b.witness) &&
                   static_cast<int>(a.witness.size()) == a.value &&
                   static_cast<int>(b.witness.size()) == b.value;
  return out;
}

bool is_3ap_free(const std::vector<std::int64_t>& set) {
  const std::set<std::int64_t> s(set.begin(), set.end());
  for (auto x = s.begin(); x != s.end(); ++x) {
    for (auto y = std::next(x); y != s.end(); ++y) {
      if (s.count(2 * *y - *x)) return false;
    }
  }
  return true;
}

std::uint64_t count_integer_3aps(const std::vector<std::int64_t>& set) {
  const std::set<std::int64_t> s(set.begin(), set.end());
  std::uint64_t count = 0;
  for (const std::int64_t x : s) {
    for (const std::int64_t y : s) {
      if (s.count(2 * y - x)) ++count;
    }
  }
  return count;
}

Subset embed_interval(const std::vector<std::int64_t>& set, std::int64_t n) {
  require(n >= 1, ErrorKind::Domain, "N must be >= 1");
  const Group g = Group::make({2 * n + 1});
  std::vector<Index> members;
  for (const std::int64_t x : set) {
    require(x >= 1 && x <= n, ErrorKind::Domain,
            "element " + std::to_string(x) + " outside {1.." + std::to_string(n) + "}");
    members.push_back(static_cast<Index>(x));
  }
  return Subset(g, std::move(members));
}

}  // namespace rothkit
