#include "rothkit/moments.hpp"

#include <algorithm>
#include <functional>

#include "rothkit/error.hpp"

namespace rothkit {

namespace {

Rational rpow(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Rows 0..rmax of the recurrence table, columns 0..rmax.
std::vector<std::vector<BigInt>> stirling_table(int rmax) {
  std::vector<std::vector<BigInt>> s(rmax + 1, std::vector<BigInt>(rmax + 1, 0));
  s[0][0] = 1;
  for (int r = 1; r <= rmax; ++r) {
    for (int k = 1; k <= r; ++k) {
      BigInt acc = 0;
      for (int j = 0; j <= r - 2; ++j) acc += binomial(r - 1, j) * s[j][k - 1];
      s[r][k] = acc;
    }
  }
  return s;
}

void trim(MomentPoly& p) {
  while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
}

}  // namespace

std::size_t MomentPoly::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] != 0) return i;
  }
  return 0;
}

Rational MomentPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

bool operator==(const MomentPoly& a, const MomentPoly& b) {
  const auto n = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational ca = i < a.coeffs.size() ? a.coeffs[i] : Rational(0);
    const Rational cb = i < b.coeffs.size() ? b.coeffs[i] : Rational(0);
    if (ca != cb) return false;
  }
  return true;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::int64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

BigInt assoc_stirling2(int r, int k) {
  require(r >= 0 && k >= 0, ErrorKind::Domain, "Stirling indices must be >= 0");
  if (k > r) return 0;
  return stirling_table(r)[r][k];
}

BigInt assoc_stirling2_enumerated(int r, int k) {
  require(r >= 0 && k >= 0, ErrorKind::Domain, "Stirling indices must be >= 0");
  require(r <= 16, ErrorKind::Budget, "partition enumeration is limited to r <= 16");
  // Restricted growth strings; prune when the open singletons cannot be filled.
  std::vector<int> sizes;
  BigInt count = 0;
  std::function<void(int)> place = [&](int element) {
    const int blocks = static_cast<int>(sizes.size());
    int deficit = 0;
    for (const int s : sizes) deficit += s < 2 ? 2 - s : 0;
    if (deficit > r - element) return;
    if (element == r) {
      if (blocks == k) ++count;
      return;
    }
    for (int b = 0; b < blocks; ++b) {
      ++sizes[b];
      place(element + 1);
      --sizes[b];
    }
    if (blocks < k) {
      sizes.push_back(1);
      place(element + 1);
      sizes.pop_back();
    }
  };
  place(0);
  return count;
}

MomentPoly nu_polynomial(int r) {
  require(r >= 0, ErrorKind::Domain, "nu_r needs r >= 0");
  std::vector<MomentPoly> nu(r + 1);
  nu[0].coeffs = {Rational(1)};
  if (r >= 1) nu[1].coeffs = {Rational(0)};
  for (int s = 2; s <= r; ++s) {
    MomentPoly sum;
    sum.coeffs.assign(s / 2 + 1, Rational(0));
    for (int j = 0; j <= s - 2; ++j) {
      const Rational c(binomial(s - 1, j));
      for (std::size_t i = 0; i < nu[j].coeffs.size(); ++i) sum.coeffs[i] += c * nu[j].coeffs[i];
    }
    // Multiply by x.
    sum.coeffs.insert(sum.coeffs.begin(), Rational(0));
    trim(sum);
    nu[s] = std::move(sum);
  }
  return nu[r];
}

MomentPoly nu_polynomial_stirling(int r) {
  require(r >= 0, ErrorKind::Domain, "nu_r needs r >= 0");
  const auto table = stirling_table(r);
  MomentPoly p;
  for (int k = 0; k <= r; ++k) p.coeffs.emplace_back(table[r][k]);
  trim(p);
  return p;
}

std::vector<Rational> central_moments(const BinomialSpec& spec, int rmax) {
  require(rmax >= 0, ErrorKind::Domain, "moment order must be >= 0");
  std::vector<Rational> mu(rmax + 2, Rational(0));
  mu[0] = 1;
  const Rational npq = spec.npq();
  for (int r = 2; r <= rmax; ++r) {
    Rational a = 0, b = 0;
    for (int j = 0; j <= r - 2; ++j) {
      const Rational c(binomial(r - 1, j));
      a += c * mu[j];
      b += c * mu[j + 1];
    }
    mu[r] = npq * a - spec.p * b;
  }
  mu.resize(rmax + 1);
  return mu;
}

Rational central_moment(const BinomialSpec& spec, int r, MomentMethod method) {
  require(spec.n >= 1, ErrorKind::Domain, "binomial n must be >= 1");
  require(spec.p >= 0 && spec.p <= 1, ErrorKind::Domain, "binomial p must lie in [0,1]");
  require(r >= 0, ErrorKind::Domain, "moment order must be >= 0");
  if (method == MomentMethod::Recurrence) return central_moments(spec, r)[r];
  const Rational q = spec.q();
  const Rational np = spec.n * spec.p;
  Rational acc = 0;
  for (std::int64_t j = 0; j <= spec.n; ++j) {
    acc += Rational(binomial(spec.n, j)) * rpow(spec.p, static_cast<int>(j)) *
           rpow(q, static_cast<int>(spec.n - j)) * rpow(Rational(j) - np, r);
  }
  return acc;
}

Rational exp_lower_bound(const Rational& x, int terms) {
  require(x >= 0, ErrorKind::Domain, "exp_lower_bound needs x >= 0");
  Rational term = 1, sum = 1;
  for (int j = 1; j <= terms; ++j) {
    term = term * x / j;
    sum += term;
  }
  return sum;
}

BoundReport moment_bound_report(const BinomialSpec& spec, int m) {
  require(m >= 1, ErrorKind::Domain, "moment bound needs m >= 1");
  BoundReport out;
  out.lhs = central_moment(spec, 2 * m, MomentMethod::Recurrence);
  const Rational npq = spec.npq();
  const Rational mm(m);
  const Rational first = rpow(mm, 2 * m - 1) * npq;
  const Rational second = exp_lower_bound(Rational(m - 1)) * rpow(mm * npq, m);
  out.rhs_lower = mm * std::max(first, second);
  out.rhs = static_cast<double>(m) *
            std::max(to_double(first), std::exp(static_cast<double>(m - 1)) * to_double(rpow(mm * npq, m)));
  out.pass = out.lhs <= out.rhs_lower;
  return out;
}

BoundReport scaled_moment_report(const BinomialSpec& spec, int m, const Rational& delta) {
  require(m >= 1, ErrorKind::Domain, "moment bound needs m >= 1");
  require(delta > 0 && delta <= 1, ErrorKind::Domain, "delta must lie in (0,1]");
  require(Rational(spec.n) * delta >= 4 * m, ErrorKind::Precondition, "scaled bound needs n >= 4m/delta");
  BoundReport out;
  out.lhs = central_moment(spec, 2 * m, MomentMethod::Recurrence) / rpow(Rational(spec.n), 2 * m);
  const Rational pq = spec.p * spec.q();
  out.rhs_lower = rpow(delta, m) * rpow(pq, m) + rpow(delta, 2 * m - 1) * pq;
  out.rhs = to_double(out.rhs_lower);
  out.pass = out.lhs <= out.rhs_lower;
  return out;
}

BoundReport nu_bound_report(int m, const Rational& x) {
  require(m >= 1, ErrorKind::Domain, "nu bound needs m >= 1");
  require(x >= 0, ErrorKind::Domain, "nu bound needs x >= 0");
  BoundReport out;
  out.lhs = nu_polynomial(2 * m)(x);
  const Rational mm(m);
  const Rational first = exp_lower_bound(Rational(m - 1)) * rpow(mm * x, m);
  const Rational second = rpow(mm, 2 * m - 1) * x;
  out.rhs_lower = mm * std::max(first, second);
  out.rhs = static_cast<double>(m) *
            std::max(std::exp(static_cast<double>(m - 1)) * to_double(rpow(mm * x, m)), to_double(second));
  out.pass = out.lhs <= out.rhs_lower;
  return out;
}

std::vector<Rational> mgf_coefficients(const BinomialSpec& spec, int order) {
  require(order >= 0, ErrorKind::Domain, "order must be >= 0");
  const Rational q = spec.q();
  // One factor: q e^{-tp} + p e^{tq}.
  std::vector<Rational> base(order + 1);
  for (int j = 0; j <= order; ++j) {
    const Rational inv_fact(BigInt(1), factorial(j));
    base[j] = (q * rpow(-spec.p, j) + spec.p * rpow(q, j)) * inv_fact;
  }
  std::vector<Rational> acc(order + 1, Rational(0));
  acc[0] = 1;
  for (std::int64_t i = 0; i < spec.n; ++i) {
    std::vector<Rational> next(order + 1, Rational(0));
    for (int a = 0; a <= order; ++a) {
      if (acc[a] == 0) continue;
      for (int b = 0; a + b <= order; ++b) next[a + b] += acc[a] * base[b];
    }
    acc = std::move(next);
  }
  return acc;
}

bool mgf_matches(const BinomialSpec& spec, int order, const Rational& t) {
  const auto coeffs = mgf_coefficients(spec, order);
  const auto mu = central_moments(spec, order);
  Rational lhs = 0, rhs = 0, tk = 1;
  bool same = true;
  for (int k = 0; k <= order; ++k) {
    const Rational scaled = mu[k] / Rational(factorial(k));
    same = same && scaled == coeffs[k];
    lhs += scaled * tk;
    rhs += coeffs[k] * tk;
    tk *= t;
  }
  return same && lhs == rhs;
}

}  // namespace rothkit
