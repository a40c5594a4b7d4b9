#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

/// Arbitrary-precision integer used for tableau counts and polynomial
/// coefficients.  Combinatorial counts grow fast; fixed-width integers
/// would overflow silently.
using Int = boost::multiprecision::cpp_int;

/// Exact rational used for spectra, inequalities and oracle evaluation.
/// Feasibility is decided by exact linear inequalities; floating point
/// would corrupt boundary cases.
using Rational = boost::multiprecision::cpp_rational;

} // namespace schubert
