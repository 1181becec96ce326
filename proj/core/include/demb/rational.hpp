#ifndef DEMB_RATIONAL_HPP
#define DEMB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace demb {

// Exact arbitrary-precision scalars. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", "p", or a plain decimal such as "1.25" (sign allowed).
// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(const std::string& s);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

// Exact square root when q is a perfect square of a rational, else nullopt.
std::optional<Rational> exact_sqrt(const Rational& q);

// Display form of r = sqrt(t): the exact root when it exists ("2", "3/2"),
// otherwise the symbolic string "sqrt(p/q)".
std::string sqrt_display(const Rational& t);

double to_double(const Rational& q);

}  // namespace demb

#endif
