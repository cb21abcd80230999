#pragma once

#include <complex>
#include <vector>

#include "rothkit/fft.hpp"
#include "rothkit/group.hpp"
#include "rothkit/subset.hpp"

namespace rothkit {

// A complex-valued function on a finite abelian group, stored by element rank.
// The same type carries Fourier transforms, indexed by character rank.
class GFunc {
 public:
  explicit GFunc(Group group);
  GFunc(Group group, std::vector<cplx> values);

  static GFunc from_real(const Group& group, const std::vector<double>& values);
  static GFunc constant(const Group& group, cplx c);
  static GFunc delta(const Group& group, Index x);
  // 1_A
  static GFunc indicator(const Subset& a);
  // mu_A = 1_A / |A|
  static GFunc uniform(const Subset& a);

  const Group& group() const { return group_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }
  cplx operator[](Index x) const { return values_[x]; }
  cplx& operator[](Index x) { return values_[x]; }
  double real(Index x) const { return values_[x].real(); }
  std::vector<double> real_values() const;

  cplx sum() const;
  double max_abs() const;

  // (tau_t f)(x) = f(x + t)
  GFunc translate(Index t) const;
  // x -> f(-x)
  GFunc reflect() const;
  GFunc conj() const;

  GFunc& operator+=(const GFunc& o);
  GFunc& operator-=(const GFunc& o);
  GFunc& operator*=(cplx c);
  friend GFunc operator+(GFunc a, const GFunc& b) { return a += b; }
  friend GFunc operator-(GFunc a, const GFunc& b) { return a -= b; }
  friend GFunc operator*(GFunc a, cplx c) { return a *= c; }
  GFunc pointwise(const GFunc& o) const;

 private:
  Group group_;
  std::vector<cplx> values_;
};

}  // namespace rothkit
