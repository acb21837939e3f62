#ifndef ASMBLY_RATIONAL_HPP
#define ASMBLY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace asmbly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/** Parses "p", "p/q" or a decimal literal like "1.25" into an exact rational. */
Rational parse_rational(const std::string& text);

/** Renders as "p/q", or just "p" for integral values. No whitespace. */
std::string rational_to_string(const Rational& r);

}  // namespace asmbly

#endif
