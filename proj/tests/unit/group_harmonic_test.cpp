#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "rothkit/error.hpp"
#include "rothkit/group.hpp"
#include "rothkit/harmonic.hpp"
#include "rothkit/rng.hpp"

using namespace rothkit;

namespace {

GFunc random_function(const Group& g, Rng& rng) {
  GFunc f(g);
  for (Index x = 0; x < g.size(); ++x) f[x] = cplx(2 * rng.uniform() - 1, 2 * rng.uniform() - 1);
  return f;
}

double max_diff(const GFunc& a, const GFunc& b) {
  double d = 0.0;
  for (Index x = 0; x < a.size(); ++x) d = std::max(d, std::abs(a[x] - b[x]));
  return d;
}

}  // namespace

TEST(Group, SizesAndParity) {
  EXPECT_EQ(Group::make({5}).size(), 5u);
  EXPECT_TRUE(Group::make({5}).odd_order());
  EXPECT_EQ(Group::make({3, 3, 3}).size(), 27u);
  EXPECT_TRUE(Group::make({3, 3, 3}).odd_order());
  EXPECT_EQ(Group::make({4, 6}).size(), 24u);
  EXPECT_FALSE(Group::make({4, 6}).odd_order());
}

TEST(Group, ParseAndPrint) {
  EXPECT_EQ(Group::parse("3x3x9").to_string(), "3x3x9");
  EXPECT_EQ(Group::parse("401"), Group::make({401}));
  EXPECT_THROW(Group::parse("3xfoo"), Error);
  EXPECT_THROW(Group::make({0}), Error);
}

TEST(Group, RankRoundTrip) {
  const Group g = Group::make({3, 5, 7});
  for (Index i = 0; i < g.size(); ++i) EXPECT_EQ(g.index_of(g.coords_of(i)), i);
}

TEST(Group, CharacterValues) {
  const Group z4 = Group::make({4});
  const cplx v = char_eval(z4, Character{{1}}, Element{{2}});
  EXPECT_NEAR(v.real(), -1.0, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);

  const Group z9 = Group::make({9});
  for (Index x = 0; x < 9; ++x) EXPECT_NEAR(std::abs(char_eval(z9, Character{{0}}, z9.element_at(x)) - 1.0), 0, 1e-15);

  // exp(2 pi i / 5) to eight digits
  const cplx w = char_eval(Group::make({5}), Character{{1}}, Element{{1}});
  EXPECT_NEAR(w.real(), 0.30901699, 1e-8);
  EXPECT_NEAR(w.imag(), 0.95105652, 1e-8);
}

TEST(Group, Doubling) {
  const Group z7 = Group::make({7});
  EXPECT_EQ(double_element(z7, Element{{5}}).coords, Coords{3});
  EXPECT_EQ(double_element(Group::make({5}), Element{{0}}).coords, Coords{0});
  EXPECT_EQ(double_element(Group::make({3, 3}), Element{{1, 2}}).coords, (Coords{2, 1}));
}

TEST(Group, SquareRootOfCharacter) {
  EXPECT_EQ(sqrt_character(Group::make({5}), Character{{1}}).coords, Coords{3});
  EXPECT_EQ(sqrt_character(Group::make({9}), Character{{7}}).coords, Coords{8});
  const Group f = Group::make({3, 3, 5});
  EXPECT_EQ(sqrt_character(f, Character{{0, 0, 0}}).coords, (Coords{0, 0, 0}));
  EXPECT_THROW(sqrt_character(Group::make({4}), Character{{1}}), Error);
}

TEST(Group, DoublingIsBijectionOnOddGroups) {
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{1}, {3}, {15}, {3, 3, 3, 3}, {5, 25}, {2001}}) {
    const Group g = Group::make(orders);
    std::set<Index> image;
    for (Index x = 0; x < g.size(); ++x) {
      image.insert(g.twice(x));
      EXPECT_EQ(g.twice(g.half(x)), x);
    }
    EXPECT_EQ(image.size(), g.size()) << g.to_string();
  }
}

TEST(Harmonic, DeltaIsConvolutionIdentity) {
  Rng rng(1);
  const Group g = Group::make({12});
  const GFunc h = random_function(g, rng);
  EXPECT_LT(max_diff(convolve(GFunc::delta(g, 0), h), h), 1e-12);
}

TEST(Harmonic, TwoElementSumsetCount) {
  const Group g = Group::make({5});
  const Subset a(g, {0, 1});
  const GFunc c = convolve(GFunc::indicator(a), GFunc::indicator(a));
  const std::vector<double> want = {1, 2, 1, 0, 0};
  for (Index x = 0; x < 5; ++x) EXPECT_NEAR(c.real(x), want[x], 1e-12);
  const auto counts = sumset_counts(a, a);
  EXPECT_EQ(counts, (std::vector<std::int64_t>{1, 2, 1, 0, 0}));
}

TEST(Harmonic, FftMatchesNaive) {
  Rng rng(2);
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{360}, {1009}, {3, 3, 3, 3, 3, 3}, {2, 6, 10}}) {
    const Group g = Group::make(orders);
    const GFunc f = random_function(g, rng);
    const GFunc h = random_function(g, rng);
    const GFunc slow = convolve(f, h, ConvolutionMethod::Naive);
    EXPECT_LE(max_diff(convolve(f, h, ConvolutionMethod::Fft), slow), 1e-9 * slow.max_abs()) << g.to_string();
  }
}

TEST(Harmonic, TransformOfUniformAndDelta) {
  const Group g = Group::make({3, 9});
  const GFunc u = dft(GFunc::uniform(Subset::full(g)));
  EXPECT_NEAR(std::abs(u[0] - cplx(1, 0)), 0.0, 1e-12);
  for (Index c = 1; c < g.size(); ++c) EXPECT_NEAR(std::abs(u[c]), 0.0, 1e-12);
  const GFunc d = dft(GFunc::delta(g, 0));
  for (Index c = 0; c < g.size(); ++c) EXPECT_NEAR(std::abs(d[c] - cplx(1, 0)), 0.0, 1e-12);
}

TEST(Harmonic, ConvolutionTheoremAndInversion) {
  Rng rng(3);
  const Group g = Group::make({7, 9});
  const GFunc f = random_function(g, rng);
  const GFunc h = random_function(g, rng);
  EXPECT_LT(max_diff(dft(convolve(f, h)), dft(f).pointwise(dft(h))), 1e-9);
  EXPECT_LT(max_diff(inverse_dft(dft(f)), f), 1e-12);
}

TEST(Harmonic, ConvolutionCommutesAndAssociates) {
  Rng rng(4);
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{31}, {3, 3, 3}, {4, 6}}) {
    const Group g = Group::make(orders);
    const GFunc a = random_function(g, rng), b = random_function(g, rng), c = random_function(g, rng);
    EXPECT_LT(max_diff(convolve(a, b), convolve(b, a)), 1e-9);
    EXPECT_LT(max_diff(convolve(convolve(a, b), c), convolve(a, convolve(b, c))), 1e-9);
  }
}

TEST(Harmonic, NormsOfConstants) {
  const Group g = Group::make({11});
  const Subset b(g, {0, 1, 2, 10});
  const GFunc f = GFunc::constant(g, cplx(-3, 0));
  for (double p : {1.0, 2.0, 4.0}) {
    EXPECT_NEAR(norm(f, b, p, NormMode::Sum), 3.0 * std::pow(4.0, 1.0 / p), 1e-12);
    EXPECT_NEAR(norm(f, b, p, NormMode::Average), 3.0, 1e-12);
  }
}

TEST(Harmonic, AverageNormsNestInP) {
  Rng rng(5);
  const Group g = Group::make({50});
  for (int trial = 0; trial < 20; ++trial) {
    const GFunc f = random_function(g, rng);
    const Subset dom = random_subset(g, 0.5, rng).unite(Subset::singleton(g, 0));
    double prev = 0.0;
    for (double p : {1.0, 2.0, 4.0, 8.0}) {
      const double v = norm(f, dom, p, NormMode::Average);
      EXPECT_GE(v, prev - 1e-12);
      prev = v;
    }
    EXPECT_DOUBLE_EQ(norm(f, dom, kInfinity, NormMode::Average), [&] {
      double m = 0.0;
      for (Index x : dom.members()) m = std::max(m, std::abs(f[x]));
      return m;
    }());
  }
}

TEST(Harmonic, SpectrumExtremes) {
  const Group g = Group::make({15});
  EXPECT_EQ(spectrum(GFunc::uniform(Subset::full(g)), 0.1).characters, std::vector<Index>{0});
  EXPECT_EQ(spectrum(GFunc::delta(g, 0), 0.9).characters.size(), g.size());
}

TEST(Harmonic, SpectrumOfBohrLikeSetMatchesDirectTable) {
  const Group g = Group::make({101});
  const Subset t(g, {0, 1, 2, 3, 98, 99, 100});
  const GFunc hat = dft(GFunc::uniform(t));
  const double delta = 0.4;
  std::vector<Index> want;
  for (Index c = 0; c < g.size(); ++c) {
    cplx s = 0;
    for (Index x : t.members()) s += std::conj(char_eval(g, g.character_at(c), g.element_at(x)));
    if (std::abs(s) / 7.0 >= delta) want.push_back(c);
    EXPECT_NEAR(std::abs(hat[c] - s / 7.0), 0.0, 1e-12);
  }
  EXPECT_EQ(spectrum(GFunc::uniform(t), delta).characters, want);
}

TEST(Counting, KnownValues) {
  const Group z5 = Group::make({5});
  EXPECT_EQ(count_3aps(Subset::full(z5)), 25u);
  const Group z7 = Group::make({7});
  EXPECT_EQ(count_3aps(Subset(z7, {0, 1, 2})), 5u);
  EXPECT_EQ(count_3aps(Subset(z7, {0, 1, 2}), CountMethod::Loop), 5u);
  EXPECT_EQ(count_3aps(Subset::singleton(z7, 4)), 1u);
}

TEST(Counting, ConvolutionMatchesLoop) {
  Rng rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const Group g = trial % 2 ? Group::make({3, 3, 3, 3}) : Group::make({static_cast<std::int64_t>(20 + trial)});
    const Subset a = random_subset(g, rng.uniform(), rng);
    const Subset b = random_subset(g, rng.uniform(), rng);
    const Subset c = random_subset(g, rng.uniform(), rng);
    EXPECT_EQ(count_3aps(a, b, c), count_3aps(a, b, c, CountMethod::Loop));
  }
}

TEST(Subsets, BasicOperations) {
  const Group g = Group::make({7});
  const Subset a(g, {3, 1, 1, 5});
  EXPECT_EQ(a.members(), (std::vector<Index>{1, 3, 5}));
  EXPECT_EQ(a.translate(3).members(), (std::vector<Index>{1, 4, 6}));
  EXPECT_EQ(a.negate().members(), (std::vector<Index>{2, 4, 6}));
  EXPECT_EQ(a.dilate2().members(), (std::vector<Index>{2, 3, 6}));
  EXPECT_TRUE(Subset(g, {0, 2, 5}).is_symmetric());
  EXPECT_EQ(sumset(Subset(g, {0, 1}), Subset(g, {0, 1})).members(), (std::vector<Index>{0, 1, 2}));
}
