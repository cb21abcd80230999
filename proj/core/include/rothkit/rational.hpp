#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rothkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Every finite double is a dyadic rational; this conversion is exact.
Rational exact_rational(double x);
double to_double(const Rational& q);
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace rothkit
