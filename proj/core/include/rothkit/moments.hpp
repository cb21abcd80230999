#pragma once

#include <cstdint>
#include <vector>

#include "rothkit/rational.hpp"

namespace rothkit {

// Exact polynomial in one variable; coeffs[i] multiplies x^i.
struct MomentPoly {
  std::vector<Rational> coeffs;

  std::size_t degree() const;
  Rational operator()(const Rational& x) const;
  friend bool operator==(const MomentPoly& a, const MomentPoly& b);
};

BigInt binomial(std::int64_t n, std::int64_t k);

// {{r, k}}: partitions of an r-set into k blocks of size >= 2, by recurrence.
BigInt assoc_stirling2(int r, int k);
// Same count by enumerating set partitions (small r only).
BigInt assoc_stirling2_enumerated(int r, int k);

// nu_0 = 1, nu_1 = 0, nu_r = x sum_{j <= r-2} C(r-1, j) nu_j
MomentPoly nu_polynomial(int r);
// sum_k {{r, k}} x^k
MomentPoly nu_polynomial_stirling(int r);

struct BinomialSpec {
  std::int64_t n = 1;
  Rational p{1, 2};

  Rational q() const { return 1 - p; }
  Rational npq() const { return n * p * q(); }
};

enum class MomentMethod { Direct, Recurrence };

// mu_r = E (X - np)^r for X ~ Bin(n, p), exact.
Rational central_moment(const BinomialSpec& spec, int r, MomentMethod method);
// mu_0..mu_rmax by the recurrence.
std::vector<Rational> central_moments(const BinomialSpec& spec, int rmax);

// Partial Taylor sum of e^x for x >= 0: a rational lower bound.
Rational exp_lower_bound(const Rational& x, int terms = 60);

struct BoundReport {
  Rational lhs;
  // Rational lower bound of the right side; lhs <= rhs_lower certifies the inequality.
  Rational rhs_lower;
  double rhs = 0.0;
  bool pass = false;
};

// E|X - np|^{2m} <= m max(m^{2m-1} npq, e^{m-1} (m npq)^m)
BoundReport moment_bound_report(const BinomialSpec& spec, int m);
// E|Z - p|^{2m} <= delta^m (pq)^m + delta^{2m-1} pq with Z = X/n; needs n >= 4m/delta.
BoundReport scaled_moment_report(const BinomialSpec& spec, int m, const Rational& delta);
// nu_{2m}(x) <= m max(e^{m-1} (mx)^m, m^{2m-1} x)
BoundReport nu_bound_report(int m, const Rational& x);

// Coefficients of (q e^{-tp} + p e^{tq})^n up to t^order, exactly.
std::vector<Rational> mgf_coefficients(const BinomialSpec& spec, int order);
// sum_{k <= order} mu_k t^k / k! equals the truncated generating function at t.
bool mgf_matches(const BinomialSpec& spec, int order, const Rational& t);

}  // namespace rothkit
