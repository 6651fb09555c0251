#ifndef TRIGROUP_RATIONAL_HPP
#define TRIGROUP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace trigroup {

// Exact rational scalar used for polynomial coefficients, point evaluation
// and threshold comparisons. Backed by boost::multiprecision; everything in
// this project that claims exactness goes through this type.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Every finite double is a dyadic rational; the conversion is exact.
Rational rational_from_double(double x);

// Nearest-double approximation (used only for display, never for proofs).
double rational_to_double_approx(const Rational& q);

std::string rational_to_string(const Rational& q);

} // namespace trigroup

#endif
