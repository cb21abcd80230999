#include "rothkit/rational.hpp"

#include <cmath>

#include "rothkit/error.hpp"

namespace rothkit {

Rational exact_rational(double x) {
  require(std::isfinite(x), ErrorKind::Domain, "cannot convert a non-finite double");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an integer.
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rational q{BigInt(scaled)};
  exp -= 53;
  if (exp >= 0) {
    q *= Rational(BigInt(1) << exp);
  } else {
    q /= Rational(BigInt(1) << (-exp));
  }
  return q;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad rational '" + text + "'");
  }
}

}  // namespace rothkit
