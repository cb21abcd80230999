#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "rothkit/error.hpp"
#include "rothkit/harmonic.hpp"
#include "rothkit/moments.hpp"
#include "rothkit/r3.hpp"
#include "rothkit/serialize.hpp"

using namespace rothkit;

namespace {

MomentPoly poly(std::vector<Rational> c) { return MomentPoly{std::move(c)}; }

// Brute force over all subsets of {1..n}.
int r3_brute(int n) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::int64_t> s;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i + 1);
    }
    if (static_cast<int>(s.size()) > best && is_3ap_free(s)) best = static_cast<int>(s.size());
  }
  return best;
}

}  // namespace

TEST(Stirling, Conventions) {
  EXPECT_EQ(assoc_stirling2(0, 0), 1);
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(assoc_stirling2(r, 0), 0);
}

TEST(Stirling, KnownValues) {
  EXPECT_EQ(assoc_stirling2(4, 2), 3);
  EXPECT_EQ(assoc_stirling2(6, 3), 15);
  EXPECT_EQ(assoc_stirling2_enumerated(4, 2), 3);
  EXPECT_EQ(assoc_stirling2_enumerated(6, 3), 15);
}

TEST(Stirling, RecurrenceMatchesEnumeration) {
  for (int r = 0; r <= 10; ++r) {
    for (int k = 0; k <= r; ++k) EXPECT_EQ(assoc_stirling2(r, k), assoc_stirling2_enumerated(r, k)) << r << "," << k;
  }
}

TEST(NuPolynomial, SmallOrders) {
  EXPECT_EQ(nu_polynomial(2), poly({0, 1}));
  EXPECT_EQ(nu_polynomial(4), poly({0, 1, 3}));
  EXPECT_EQ(nu_polynomial(6), poly({0, 1, 25, 15}));
  for (int r = 0; r <= 20; ++r) EXPECT_EQ(nu_polynomial(r), nu_polynomial_stirling(r)) << r;
}

TEST(CentralMoments, KnownValues) {
  for (const Rational& p : {Rational(1, 10), Rational(1, 3), Rational(7, 9)}) {
    for (std::int64_t n : {1, 5, 17}) {
      EXPECT_EQ(central_moment({n, p}, 1, MomentMethod::Recurrence), 0);
      EXPECT_EQ(central_moment({n, p}, 1, MomentMethod::Direct), 0);
    }
    // n = 1: E(X - p)^4 = q p^4 + p q^4
    const Rational q = 1 - p;
    EXPECT_EQ(central_moment({1, p}, 4, MomentMethod::Recurrence), p * q * (p * p * p + q * q * q));
  }
  EXPECT_EQ(central_moment({2, Rational(1, 2)}, 2, MomentMethod::Direct), Rational(1, 2));
  EXPECT_EQ(central_moment({2, Rational(1, 2)}, 2, MomentMethod::Recurrence), Rational(1, 2));
}

TEST(CentralMoments, RecurrenceEqualsDirectSum) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (int k = 1; k <= 9; ++k) {
      const BinomialSpec spec{n, Rational(k, 10)};
      const auto rec = central_moments(spec, 10);
      for (int r = 0; r <= 10; ++r) EXPECT_EQ(rec[r], central_moment(spec, r, MomentMethod::Direct));
    }
  }
}

TEST(CentralMoments, NonNegativeAndBelowNuForSmallP) {
  for (std::int64_t n = 1; n <= 40; n += 3) {
    for (int k = 1; k <= 5; ++k) {
      const BinomialSpec spec{n, Rational(k, 10)};
      const auto mu = central_moments(spec, 16);
      for (int r = 0; r <= 16; ++r) {
        EXPECT_GE(mu[r], 0);
        if (r >= 2) EXPECT_LE(mu[r], nu_polynomial(r)(spec.npq()));
      }
    }
  }
}

TEST(MomentBound, EdgeEqualityAndDegenerate) {
  const BoundReport edge = moment_bound_report({4, Rational(1, 2)}, 1);
  EXPECT_EQ(edge.lhs, 1);
  EXPECT_EQ(edge.rhs_lower, 1);
  EXPECT_TRUE(edge.pass);
  for (const Rational& p : {Rational(0), Rational(1)}) {
    const BoundReport r = moment_bound_report({6, p}, 3);
    EXPECT_EQ(r.lhs, 0);
    EXPECT_TRUE(r.pass);
  }
}

TEST(MomentBound, Grid) {
  for (std::int64_t n = 1; n <= 64; n += 7) {
    for (int k = 1; k <= 5; ++k) {
      for (int m = 1; m <= 5; ++m) EXPECT_TRUE(moment_bound_report({n, Rational(k, 10)}, m).pass);
    }
  }
}

TEST(NuBound, Grid) {
  EXPECT_TRUE(nu_bound_report(3, 0).pass);
  EXPECT_EQ(nu_bound_report(3, 0).lhs, 0);
  const BoundReport one = nu_bound_report(1, Rational(5, 2));
  EXPECT_EQ(one.lhs, Rational(5, 2));
  EXPECT_EQ(one.rhs_lower, Rational(5, 2));
  for (int m = 1; m <= 8; ++m) {
    for (const Rational& x : {Rational(1, 4), Rational(1), Rational(4), Rational(16)}) {
      EXPECT_TRUE(nu_bound_report(m, x).pass) << m;
    }
  }
}

TEST(R3, SmallValues) {
  EXPECT_EQ(r3_exact(1).value, 1);
  EXPECT_EQ(r3_exact(1).witness, std::vector<std::int64_t>{1});
  const R3Result five = r3_exact(5);
  EXPECT_EQ(five.value, 4);
  EXPECT_TRUE(is_3ap_free(five.witness));
  EXPECT_TRUE(is_3ap_free({1, 2, 4, 5}));
}

TEST(R3, MatchesBruteForce) {
  for (int n = 1; n <= 16; ++n) {
    const R3Result r = r3_exact(n);
    EXPECT_EQ(r.value, r3_brute(n)) << n;
    EXPECT_TRUE(r.agree);
    EXPECT_TRUE(r.witness_ok);
    EXPECT_EQ(r3_branch_bound(n).value, r3_bitmask(n).value);
  }
}

TEST(R3, AlgorithmsAgreeAtTwenty) {
  const R3Result r = r3_exact(20);
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.branch_bound_value, r.bitmask_value);
  EXPECT_EQ(static_cast<int>(r.witness.size()), r.value);
}

TEST(R3, BudgetEnforced) { EXPECT_THROW(r3_exact(kR3MaxN + 1), Error); }

TEST(Embedding, IntervalCounts) {
  for (std::int64_t n : {1, 5, 12}) {
    std::vector<std::int64_t> all;
    for (std::int64_t x = 1; x <= n; ++x) all.push_back(x);
    const Subset s = embed_interval(all, n);
    EXPECT_EQ(s.group().size(), static_cast<Index>(2 * n + 1));
    EXPECT_EQ(count_3aps(s), count_integer_3aps(all));
    EXPECT_EQ(count_3aps(s, CountMethod::Loop), count_integer_3aps(all));
  }
}

TEST(Embedding, WitnessHasOnlyTrivialProgressions) {
  for (int n : {8, 14, 20}) {
    const R3Result r = r3_exact(n);
    const Subset s = embed_interval(r.witness, n);
    EXPECT_EQ(count_3aps(s, CountMethod::Loop), s.size());
  }
  const Subset empty = embed_interval({}, 6);
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(count_3aps(empty), 0u);
}

TEST(SetFiles, RoundTrip) {
  const Group g = Group::make({3, 5});
  const Subset s(g, {0, 4, 7, 14});
  const SetFile back = parse_set_text(format_set_file(s));
  EXPECT_EQ(back.set, s);
  EXPECT_FALSE(back.integers);

  const SetFile ints = parse_set_text("# comment\nintegers 9\n1\n3\n\n9\n");
  EXPECT_TRUE(ints.integers);
  EXPECT_EQ(ints.values, (std::vector<std::int64_t>{1, 3, 9}));
  EXPECT_EQ(ints.set, embed_interval({1, 3, 9}, 9));
}

TEST(SetFiles, ReadFromDisk) {
  const std::string path = testing::TempDir() + "rothkit_set.txt";
  {
    std::ofstream out(path);
    out << "group 3x3\n0,1\n2,2\n";
  }
  const SetFile f = read_set_file(path);
  EXPECT_EQ(f.set.size(), 2u);
  EXPECT_TRUE(f.set.contains(f.set.group().index_of(Coords{2, 2})));
  std::remove(path.c_str());
  EXPECT_THROW(read_set_file(path), Error);
}

TEST(SetFiles, ParseErrors) {
  EXPECT_THROW(parse_set_text("0\n1\n"), Error);
  EXPECT_THROW(parse_set_text("group 7\n8\n"), Error);
  EXPECT_THROW(parse_set_text("group 3x3\n1\n"), Error);
  EXPECT_THROW(parse_set_text("group 0\n"), Error);
  EXPECT_THROW(parse_set_text("integers 4\n5\n"), Error);
  EXPECT_THROW(parse_set_text("group 7\nabc\n"), Error);
}

TEST(Json, ElementsAndSubsets) {
  const Group c = Group::make({7});
  EXPECT_EQ(element_json(c, 5), Json(5));
  const Group f = Group::make({3, 3});
  EXPECT_EQ(element_json(f, f.index_of(Coords{1, 2})), Json::array({1, 2}));
  const Json j = subset_json(Subset(c, {1, 2}));
  EXPECT_EQ(j["size"], 2);
}
